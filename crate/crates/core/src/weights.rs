//! Dominant integral weights of `gl(n)`, the rho shift, parity and bead
//! diagrams.
//!
//! A weight is stored densely as `n` integers `(λ_1, …, λ_n)`; negative
//! entries are ordinary. Its diagram places `n` beads on the integer line at
//! the positions `λ_i + n - i`.

use std::fmt;

use crate::error::{Error, Result};

/// `ρ = (n-1, n-2, …, 0)`.
pub fn rho(n: usize) -> Vec<i64> {
    (0..n).map(|i| (n - 1 - i) as i64).collect()
}

/// Parity of an arbitrary integral weight: `⌈Σλ_i / 2⌉ mod 2`.
pub fn parity_of(entries: &[i64]) -> u8 {
    let sum: i64 = entries.iter().sum();
    (sum + 1).div_euclid(2).rem_euclid(2) as u8
}

/// `(-1)^p` as an `i64`.
pub(crate) fn sign_of_parity(p: u8) -> i64 {
    if p.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A weakly decreasing sequence of integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(entries));
        }
        Ok(DominantWeight(entries))
    }

    pub fn zero(n: usize) -> Self {
        DominantWeight(vec![0; n])
    }

    /// `a·(1, …, 1)`, the weight of the `a`-th power of the supertrace
    /// character.
    pub fn constant(n: usize, a: i64) -> Self {
        DominantWeight(vec![a; n])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn parity(&self) -> u8 {
        parity_of(&self.0)
    }

    /// The weight shifted by `a·(1, …, 1)`.
    pub fn shifted(&self, a: i64) -> Self {
        DominantWeight(self.0.iter().map(|x| x + a).collect())
    }

    /// `λ + δ·ε_i` if the result stays dominant.
    pub fn moved(&self, i: usize, delta: i64) -> Option<Self> {
        let mut entries = self.0.clone();
        entries[i] += delta;
        DominantWeight::new(entries).ok()
    }

    pub fn to_diagram(&self) -> WeightDiagram {
        let n = self.0.len();
        let beads = self
            .0
            .iter()
            .enumerate()
            .map(|(i, x)| x + (n - 1 - i) as i64)
            .collect();
        WeightDiagram { beads }
    }

    pub fn from_diagram(diagram: &WeightDiagram) -> Self {
        diagram.to_weight()
    }

    /// The dominance order `λ ≤ μ`, which for this choice of positive roots
    /// holds iff `λ_i ≥ μ_i` for every `i`.
    pub fn dominance_le(&self, other: &DominantWeight) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Bead positions `λ̄_1 > λ̄_2 > … > λ̄_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightDiagram {
    beads: Vec<i64>,
}

impl WeightDiagram {
    /// Builds a diagram from bead positions in any order.
    pub fn new(mut beads: Vec<i64>) -> Result<Self> {
        beads.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(w) = beads.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::BeadCollision(w[0]));
        }
        Ok(WeightDiagram { beads })
    }

    pub fn beads(&self) -> &[i64] {
        &self.beads
    }

    pub fn arity(&self) -> usize {
        self.beads.len()
    }

    pub fn has_bead(&self, position: i64) -> bool {
        self.bead_index(position).is_some()
    }

    /// Index `i` (0-based) with `λ̄_i = position`.
    pub fn bead_index(&self, position: i64) -> Option<usize> {
        self.beads
            .binary_search_by(|probe| position.cmp(probe))
            .ok()
    }

    pub fn to_weight(&self) -> DominantWeight {
        let n = self.beads.len();
        DominantWeight(
            self.beads
                .iter()
                .enumerate()
                .map(|(i, b)| b - (n - 1 - i) as i64)
                .collect(),
        )
    }

    /// Renders the window `[lo, hi]` with `•` for beads and `∘` elsewhere.
    pub fn render(&self, lo: i64, hi: i64) -> String {
        (lo..=hi)
            .map(|p| if self.has_bead(p) { '•' } else { '∘' })
            .collect()
    }
}

/// All dominant weights of length `n` whose beads lie in `[lo, hi]`.
pub fn weights_with_beads_in(n: usize, lo: i64, hi: i64) -> Vec<DominantWeight> {
    let mut out = Vec::new();
    let mut beads = Vec::with_capacity(n);
    fn rec(n: usize, lo: i64, top: i64, beads: &mut Vec<i64>, out: &mut Vec<DominantWeight>) {
        if beads.len() == n {
            out.push(
                WeightDiagram {
                    beads: beads.clone(),
                }
                .to_weight(),
            );
            return;
        }
        let remaining = (n - beads.len()) as i64;
        let mut b = top;
        while b - remaining + 1 >= lo {
            beads.push(b);
            rec(n, lo, b - 1, beads, out);
            beads.pop();
            b -= 1;
        }
    }
    rec(n, lo, hi, &mut beads, &mut out);
    out
}
