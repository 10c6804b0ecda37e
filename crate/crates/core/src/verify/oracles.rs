//! Reference computations that avoid the library's own shortcuts: literal
//! determinants, literal products and literal Weyl-group sums.

use num_bigint::BigInt;

use crate::laurent::{permutations, LaurentPoly};
use crate::weights::{rho, DominantWeight};

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &[Vec<LaurentPoly>], arity: usize) -> LaurentPoly {
    fn rec(m: &[Vec<LaurentPoly>], row: usize, cols: &mut Vec<usize>, arity: usize) -> LaurentPoly {
        if cols.is_empty() {
            return LaurentPoly::one(arity);
        }
        let mut acc = LaurentPoly::zero(arity);
        for k in 0..cols.len() {
            let c = cols.remove(k);
            let minor = rec(m, row + 1, cols, arity);
            cols.insert(k, c);
            let term = &m[row][c] * &minor;
            if k % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        acc
    }
    let mut cols: Vec<usize> = (0..m.len()).collect();
    rec(m, 0, &mut cols, arity)
}

fn alternant_matrix(top: &[i64]) -> Vec<Vec<LaurentPoly>> {
    let n = top.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = vec![0; n];
                    e[i] = top[j];
                    LaurentPoly::monomial(e, 1)
                })
                .collect()
        })
        .collect()
}

/// `det(x_i^{n-j}) = Π_{i<j}(x_i - x_j)`, expanded.
pub fn vandermonde_det(n: usize) -> LaurentPoly {
    laplace_det(&alternant_matrix(&rho(n)), n)
}

/// `s_λ = det(x_i^{λ_j + n - j}) / det(x_i^{n - j})`.
pub fn bialternant(weight: &DominantWeight) -> LaurentPoly {
    let n = weight.arity();
    let top: Vec<i64> = weight
        .entries()
        .iter()
        .zip(rho(n))
        .map(|(a, b)| a + b)
        .collect();
    let numer = laplace_det(&alternant_matrix(&top), n);
    numer
        .exact_divide(&vandermonde_det(n))
        .expect("an alternant is divisible by the Vandermonde determinant")
}

/// `Π_{i<j}(1 - x_i x_j)` as the signed sum over subsets of pairs.
pub fn odd_root_product_by_subsets(n: usize) -> LaurentPoly {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = LaurentPoly::zero(n);
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut e = vec![0; n];
        for (b, (i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                e[*i] += 1;
                e[*j] += 1;
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        out += &LaurentPoly::monomial(e, sign);
    }
    out
}

/// `sch∇(λ) = (-1)^{p(λ)} R_{-1} s_λ` from the oracles above.
pub fn thin_kac_oracle(weight: &DominantWeight) -> LaurentPoly {
    let sign = if weight.parity() == 0 { 1 } else { -1 };
    (&odd_root_product_by_subsets(weight.arity()) * &bialternant(weight)).scale(&BigInt::from(sign))
}

/// `Σ_{w ∈ S_m} sgn(w) x^{w(ρ)}`.
pub fn alternating_rho_sum(m: usize) -> LaurentPoly {
    let r = rho(m);
    let mut out = LaurentPoly::zero(m);
    for (perm, sign) in permutations(m) {
        let mut e = vec![0; m];
        for (i, p) in perm.iter().enumerate() {
            e[*p] = r[i];
        }
        out += &LaurentPoly::monomial(e, sign);
    }
    out
}
