//! Euler characteristics of line bundles on flag supervarieties `G/Q`,
//! where `Q` is the parabolic defined by a weight `γ`.
//!
//! `E(λ) = V^{-1} Σ_w sgn(w) w(x^{λ+ρ} Π_{α∈Δ_1(r)} (1 - x^{-α}))` is
//! evaluated without summing over `S_n`: each monomial of the numerator is
//! straightened to `± a_{μ+ρ}`, which contributes `± s_μ`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::{straighten_alternant, LaurentPoly, Straightened};
use crate::schur::SchurExpansion;
use crate::weights::rho;

/// Root data of the parabolic subalgebra attached to `γ`, with respect to
/// the scalar product `(ε_i, ε_j) = δ_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicDatum {
    pub gamma: Vec<i64>,
    /// Pairs `(i, j)` (0-based) for the even radical roots `ε_i - ε_j`.
    pub even_radical: Vec<(usize, usize)>,
    /// Odd radical roots, as coordinate vectors in the `ε` basis.
    pub odd_radical: Vec<Vec<i64>>,
    /// Indices grouped by equal entries of `γ`, in order of first occurrence.
    pub blocks: Vec<Vec<usize>>,
}

impl ParabolicDatum {
    pub fn arity(&self) -> usize {
        self.gamma.len()
    }
}

/// Roots `α` of `p(n)` with `(α, γ) > 0`.
pub fn radical_roots(gamma: &[i64]) -> ParabolicDatum {
    let n = gamma.len();
    let mut even_radical = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && gamma[i] > gamma[j] {
                even_radical.push((i, j));
            }
        }
    }
    let mut odd_radical = Vec::new();
    // Δ(g_1) = {ε_i + ε_j : i ≤ j}
    for i in 0..n {
        for j in i..n {
            if gamma[i] + gamma[j] > 0 {
                let mut root = vec![0; n];
                root[i] += 1;
                root[j] += 1;
                odd_radical.push(root);
            }
        }
    }
    // Δ(g_{-1}) = {-ε_i - ε_j : i < j}
    for i in 0..n {
        for j in i + 1..n {
            if gamma[i] + gamma[j] < 0 {
                let mut root = vec![0; n];
                root[i] = -1;
                root[j] = -1;
                odd_radical.push(root);
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (i, g) in gamma.iter().enumerate() {
        match blocks.iter_mut().find(|b| gamma[b[0]] == *g) {
            Some(b) => b.push(i),
            None => blocks.push(vec![i]),
        }
    }
    ParabolicDatum {
        gamma: gamma.to_vec(),
        even_radical,
        odd_radical,
        blocks,
    }
}

/// `λ(h ∩ [k, k]) = 0`: the Levi contains `ε_i - ε_j` when `γ_i = γ_j` and
/// `±(ε_i + ε_j)` when `γ_i = -γ_j`; each such pair brackets into
/// `E_ii - E_jj`, so `λ_i = λ_j` is required.
pub fn levi_compatible(lambda: &[i64], gamma: &[i64]) -> bool {
    let n = gamma.len();
    lambda.len() == n
        && (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let linked = gamma[i] == gamma[j] || gamma[i] == -gamma[j];
                !linked || lambda[i] == lambda[j]
            })
        })
}

/// `E(λ)` in both the Schur basis and as a Laurent polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerCharacteristic {
    pub schur: SchurExpansion,
    pub poly: LaurentPoly,
}

/// The numerator `x^{λ+ρ} Π_{α∈Δ_1(r)} (1 - x^{-α})`.
pub fn euler_numerator(lambda: &[i64], datum: &ParabolicDatum) -> LaurentPoly {
    let n = datum.arity();
    let top: Vec<i64> = lambda.iter().zip(rho(n)).map(|(a, b)| a + b).collect();
    let mut numer = LaurentPoly::monomial(top, 1);
    for root in &datum.odd_radical {
        let neg: Vec<i64> = root.iter().map(|x| -x).collect();
        let factor = LaurentPoly::one(n) - LaurentPoly::monomial(neg, 1);
        numer = &numer * &factor;
    }
    numer
}

pub fn euler_characteristic(lambda: &[i64], gamma: &[i64]) -> Result<EulerCharacteristic> {
    if lambda.len() != gamma.len() {
        return Err(Error::ArityMismatch {
            expected: gamma.len(),
            found: lambda.len(),
        });
    }
    if !levi_compatible(lambda, gamma) {
        return Err(Error::LeviIncompatible {
            lambda: lambda.to_vec(),
            gamma: gamma.to_vec(),
        });
    }
    let datum = radical_roots(gamma);
    let numer = euler_numerator(lambda, &datum);
    let mut schur = SchurExpansion::new(gamma.len());
    for (e, c) in numer.terms() {
        if let Straightened::Term { sign, weight } = straighten_alternant(e.as_slice()) {
            schur.add(weight, c * BigInt::from(sign));
        }
    }
    let poly = schur.to_laurent();
    Ok(EulerCharacteristic { schur, poly })
}

/// `γ_k = -Σ_{l>2k} ε_l` and `λ = a Σ_{i≤2k} ε_i`, the data whose Euler
/// characteristic maps to `sch∇_{n-2k}(0)` under `ds_n^{(k)}`.
pub fn thin_kac_preimage_data(n: usize, k: usize, a: i64) -> (Vec<i64>, Vec<i64>) {
    let gamma = (0..n).map(|l| if l >= 2 * k { -1 } else { 0 }).collect();
    let lambda = (0..n).map(|i| if i < 2 * k { a } else { 0 }).collect();
    (lambda, gamma)
}
