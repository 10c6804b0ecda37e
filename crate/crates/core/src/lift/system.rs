//! The linear system cut out by `J_n` membership and a prescribed `ds_n`
//! image on a window of monomial orbit sums, and its exact row echelon form.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Window;

type SparseRow = Vec<(usize, BigRational)>;

/// `(ν, d)`: the coefficient of `x^ν t^d` in `f|_{x_{n-1} = t, x_n = t^{-1}}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct RowKey {
    pub nu: Vec<i64>,
    pub d: i64,
}

/// Dominant weights of arity `n` with entries in `[-B, B]` (and degree
/// within the cap), ordered by preference: smaller `max |μ_i|` first, then
/// smaller `Σ |μ_i|`, then graded-lex descending.
pub(crate) fn window_columns(n: usize, window: &Window) -> Vec<Vec<i64>> {
    let b = window.bound;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, hi: i64, lo: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in (lo..=hi).rev() {
            cur.push(v);
            rec(n, v, lo, cur, out);
            cur.pop();
        }
    }
    rec(n, b, -b, &mut cur, &mut out);
    if let Some(cap) = window.degree_cap {
        out.retain(|mu| mu.iter().sum::<i64>().abs() <= cap);
    }
    out.sort_by_key(|mu| {
        let max = mu.iter().map(|x| x.abs()).max().unwrap_or(0);
        let l1: i64 = mu.iter().map(|x| x.abs()).sum();
        let deg: i64 = mu.iter().sum();
        (max, l1, Reverse(deg), Reverse(mu.clone()))
    });
    out
}

/// Rows met by the orbit sum `m_μ`: remove a pair `μ_i ≥ μ_j` and record
/// the rest together with `d = μ_i - μ_j`.
pub(crate) fn row_keys_of(mu: &[i64]) -> Vec<RowKey> {
    let n = mu.len();
    let mut keys = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let nu: Vec<i64> = mu
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != i && *l != j)
                .map(|(_, v)| *v)
                .collect();
            keys.push(RowKey {
                nu,
                d: mu[i] - mu[j],
            });
        }
    }
    keys.sort();
    keys.dedup();
    keys
}

struct PivotRow {
    /// Starts with `(pivot, 1)`.
    entries: SparseRow,
    /// Which combination of the `d = 0` rows this row is.
    combo: SparseRow,
}

/// Row echelon form of the window system, with pivots taken at the most
/// preferred column of each row. Stores enough to solve for any right hand
/// side supported on the `d = 0` rows.
pub(crate) struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, PivotRow>,
    /// Combinations of `d = 0` rows that reduce to zero; a right hand side
    /// is consistent iff it is annihilated by all of them.
    conditions: Vec<SparseRow>,
}

fn axpy(x: &SparseRow, a: &BigRational, y: &SparseRow) -> SparseRow {
    // x - a*y, both sorted by index
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(a * &y[j].1)));
            j += 1;
        } else {
            let v = &x[i].1 - a * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Echelon {
    /// `rows[r]` lists the columns of row `r` (all entries are 1);
    /// `rhs_slot[r]` is its index among the right hand side rows, if any.
    pub(crate) fn build(ncols: usize, rows: &[Vec<usize>], rhs_slot: &[Option<usize>]) -> Self {
        let mut ech = Echelon {
            ncols,
            pivots: BTreeMap::new(),
            conditions: Vec::new(),
        };
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by_key(|&r| {
            (
                rows[r].last().copied().unwrap_or(usize::MAX),
                rows[r].len(),
                r,
            )
        });
        for r in order {
            let entries: SparseRow = rows[r].iter().map(|&c| (c, BigRational::one())).collect();
            let combo: SparseRow = rhs_slot[r]
                .map(|s| vec![(s, BigRational::one())])
                .unwrap_or_default();
            ech.insert(entries, combo);
        }
        ech
    }

    fn insert(&mut self, mut entries: SparseRow, mut combo: SparseRow) {
        loop {
            let Some((c, v)) = entries.first().cloned() else {
                if !combo.is_empty() {
                    self.conditions.push(combo);
                }
                return;
            };
            match self.pivots.get(&c) {
                Some(p) => {
                    entries = axpy(&entries, &v, &p.entries);
                    combo = axpy(&combo, &v, &p.combo);
                }
                None => {
                    let inv = v.recip();
                    for e in entries.iter_mut().chain(combo.iter_mut()) {
                        e.1 = &e.1 * &inv;
                    }
                    self.pivots.insert(c, PivotRow { entries, combo });
                    return;
                }
            }
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub(crate) fn is_pivot(&self, c: usize) -> bool {
        self.pivots.contains_key(&c)
    }

    /// The basic solution with every free column at zero, or `None` if the
    /// right hand side is inconsistent.
    pub(crate) fn solve(
        &self,
        rhs: &HashMap<usize, BigInt>,
    ) -> Option<BTreeMap<usize, BigRational>> {
        let eval = |combo: &SparseRow| -> BigRational {
            let mut acc = BigRational::zero();
            for (s, a) in combo {
                if let Some(v) = rhs.get(s) {
                    acc += a * BigRational::from_integer(v.clone());
                }
            }
            acc
        };
        if self.conditions.iter().any(|c| !eval(c).is_zero()) {
            return None;
        }
        let mut x: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (&c, row) in self.pivots.iter().rev() {
            let mut v = eval(&row.combo);
            for (j, a) in &row.entries[1..] {
                if let Some(xj) = x.get(j) {
                    v -= a * xj;
                }
            }
            if !v.is_zero() {
                x.insert(c, v);
            }
        }
        Some(x)
    }

    /// Primitive integer kernel vector with a 1 at the free column `free`
    /// and zeros at the other free columns.
    pub(crate) fn kernel_vector(&self, free: usize) -> BTreeMap<usize, BigInt> {
        let mut x: BTreeMap<usize, BigRational> = BTreeMap::new();
        x.insert(free, BigRational::one());
        for (&c, row) in self.pivots.range(..free).rev() {
            let mut v = BigRational::zero();
            for (j, a) in &row.entries[1..] {
                if let Some(xj) = x.get(j) {
                    v -= a * xj;
                }
            }
            if !v.is_zero() {
                x.insert(c, v);
            }
        }
        to_primitive(&x)
    }

    pub(crate) fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.is_pivot(*c)).collect()
    }
}

/// Clears denominators and divides out the content; the first entry is
/// made positive.
pub(crate) fn to_primitive(x: &BTreeMap<usize, BigRational>) -> BTreeMap<usize, BigInt> {
    use num_integer::Integer;
    let lcm = x.values().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut ints: BTreeMap<usize, BigInt> = x
        .iter()
        .map(|(k, v)| {
            (
                *k,
                (v * BigRational::from_integer(lcm.clone())).to_integer(),
            )
        })
        .collect();
    let g = ints.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let flip = ints
        .values()
        .next()
        .map(|v| v.is_negative())
        .unwrap_or(false);
    if !g.is_zero() {
        for v in ints.values_mut() {
            *v = &*v / &g;
            if flip {
                *v = -&*v;
            }
        }
    }
    ints
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preference_order() {
        let cols = window_columns(2, &Window::new(1));
        assert_eq!(cols[0], vec![0, 0]);
        assert_eq!(cols[1], vec![1, 0]);
        assert_eq!(cols[2], vec![0, -1]);
        assert_eq!(cols.len(), 6);
        let capped = window_columns(2, &Window::new(2).with_degree_cap(0));
        assert!(capped.iter().all(|m| m[0] + m[1] == 0));
    }

    #[test]
    fn row_keys() {
        let keys = row_keys_of(&[1, 1, 0]);
        assert_eq!(
            keys,
            vec![RowKey { nu: vec![0], d: 0 }, RowKey { nu: vec![1], d: 1 }]
        );
    }

    #[test]
    fn small_echelon() {
        // x0 + x1 = a, x1 + x2 = 0, x0 - ... ; rows as 0/1 column lists
        let rows = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
        let ech = Echelon::build(3, &rows, &[Some(0), None, None]);
        assert_eq!(ech.rank(), 3);
        let x = ech.solve(&HashMap::from([(0, BigInt::from(2))])).unwrap();
        assert_eq!(x.get(&0), Some(&BigRational::from_integer(1.into())));
        assert_eq!(x.get(&1), Some(&BigRational::from_integer(1.into())));
        assert_eq!(x.get(&2), Some(&BigRational::from_integer((-1).into())));

        let rows = vec![vec![0, 1], vec![0, 1]];
        let ech = Echelon::build(2, &rows, &[Some(0), None]);
        assert!(ech.solve(&HashMap::from([(0, BigInt::from(1))])).is_none());
        assert_eq!(ech.free_columns(), vec![1]);
        let k = ech.kernel_vector(1);
        assert_eq!(
            k,
            BTreeMap::from([(0, BigInt::from(1)), (1, BigInt::from(-1))])
        );
    }
}
