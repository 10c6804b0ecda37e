//! Integral solutions of `A x = b` by unimodular column operations, which
//! bring `A` to a lower echelon (Hermite) form `H = A U`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

type SparseInt = BTreeMap<usize, BigInt>;

#[derive(Clone)]
struct Column {
    /// Entries of `A U` in this column, by row.
    a: SparseInt,
    /// The matching column of `U`.
    u: SparseInt,
}

fn combine(x: &SparseInt, p: &BigInt, y: &SparseInt, q: &BigInt) -> SparseInt {
    // p*x + q*y
    let mut out = SparseInt::new();
    for (k, v) in x {
        out.insert(*k, v * p);
    }
    for (k, v) in y {
        let slot = out.entry(*k).or_default();
        *slot += v * q;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn col_op(c1: &Column, p: &BigInt, c2: &Column, q: &BigInt) -> Column {
    Column {
        a: combine(&c1.a, p, &c2.a, q),
        u: combine(&c1.u, p, &c2.u, q),
    }
}

/// Some `x ∈ ℤ^ncols` with `A x = b`, or `None` when there is none.
/// `rows[r]` lists the nonzero entries `(column, value)` of row `r`.
pub(crate) fn solve_integral(
    ncols: usize,
    rows: &[Vec<(usize, BigInt)>],
    b: &[BigInt],
) -> Option<SparseInt> {
    let mut cols: Vec<Column> = (0..ncols)
        .map(|c| Column {
            a: SparseInt::new(),
            u: SparseInt::from([(c, BigInt::one())]),
        })
        .collect();
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row {
            if !v.is_zero() {
                cols[*c].a.insert(r, v.clone());
            }
        }
    }

    // Echelon: after step `r`, columns `0..next` have leading rows
    // `lead[0] < lead[1] < …` and the remaining columns vanish on rows ≤ r.
    let mut next = 0usize;
    let mut lead: Vec<usize> = Vec::new();
    for r in 0..rows.len() {
        loop {
            let nonzero: Vec<usize> = (next..ncols)
                .filter(|&c| cols[c].a.contains_key(&r))
                .collect();
            if nonzero.is_empty() {
                break;
            }
            // move the smallest entry into position `next`
            let best = *nonzero
                .iter()
                .min_by_key(|&&c| (cols[c].a[&r].abs(), c))
                .expect("nonempty");
            cols.swap(next, best);
            if nonzero.len() == 1 || nonzero.iter().all(|&c| c == best) {
                break;
            }
            let pivot = cols[next].a[&r].clone();
            let mut done = true;
            for c in next + 1..ncols {
                let Some(v) = cols[c].a.get(&r).cloned() else {
                    continue;
                };
                let q = v.div_floor(&pivot);
                let updated = col_op(&cols[c], &BigInt::one(), &cols[next], &-q);
                cols[c] = updated;
                if cols[c].a.contains_key(&r) {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if next < ncols && cols[next].a.contains_key(&r) {
            if cols[next].a[&r].is_negative() {
                let neg = col_op(&cols[next], &-BigInt::one(), &cols[next], &BigInt::zero());
                cols[next] = neg;
            }
            lead.push(r);
            next += 1;
        }
    }

    // Forward substitution on `H y = b`.
    let mut y: Vec<BigInt> = Vec::with_capacity(next);
    let mut residual: Vec<BigInt> = b.to_vec();
    for (k, &r) in lead.iter().enumerate() {
        let h = &cols[k].a[&r];
        let (q, rem) = residual[r].div_rem(h);
        if !rem.is_zero() {
            return None;
        }
        for (row, v) in &cols[k].a {
            residual[*row] -= v * &q;
        }
        y.push(q);
    }
    if residual.iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = SparseInt::new();
    for (k, yk) in y.iter().enumerate() {
        if yk.is_zero() {
            continue;
        }
        for (c, v) in &cols[k].u {
            *x.entry(*c).or_default() += v * yk;
        }
    }
    x.retain(|_, v| !v.is_zero());
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(m: &[&[i64]]) -> Vec<Vec<(usize, BigInt)>> {
        m.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0)
                    .map(|(c, v)| (c, BigInt::from(*v)))
                    .collect()
            })
            .collect()
    }

    fn check(m: &[&[i64]], b: &[i64]) -> Option<SparseInt> {
        let bb: Vec<BigInt> = b.iter().map(|v| BigInt::from(*v)).collect();
        let x = solve_integral(m[0].len(), &rows(m), &bb)?;
        for (r, row) in m.iter().enumerate() {
            let lhs: BigInt = row
                .iter()
                .enumerate()
                .map(|(c, v)| BigInt::from(*v) * x.get(&c).cloned().unwrap_or_default())
                .sum();
            assert_eq!(lhs, bb[r]);
        }
        Some(x)
    }

    #[test]
    fn bezout() {
        assert!(check(&[&[2, 3]], &[1]).is_some());
        assert!(check(&[&[6, 10, 15]], &[1]).is_some());
    }

    #[test]
    fn no_integral_solution() {
        assert!(check(&[&[2, 4]], &[1]).is_none());
        assert!(check(&[&[1, 1], &[1, -1]], &[1, 0]).is_none());
    }

    #[test]
    fn inconsistent() {
        assert!(check(&[&[1, 1], &[1, 1]], &[1, 2]).is_none());
    }

    #[test]
    fn larger_system() {
        assert!(check(
            &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[1, 0, 0, 1]],
            &[3, 5, 4, 2]
        )
        .is_some());
        assert!(check(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]], &[1, 1, 1]).is_none());
    }
}
