//! Schur Laurent polynomials, Schur-basis expansion and the two denominator
//! products `R_{-1} = Π_{i<j}(1 - x_i x_j)` and `V = Π_{i<j}(x_i - x_j)`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::laurent::{permutations, ExponentVector, LaurentPoly};
use crate::weights::{rho, DominantWeight};

/// A finite integer combination `Σ c_λ s_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    arity: usize,
    coeffs: BTreeMap<DominantWeight, BigInt>,
}

impl SchurExpansion {
    pub fn new(arity: usize) -> Self {
        SchurExpansion {
            arity,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_coeffs<I>(arity: usize, items: I) -> Result<Self>
    where
        I: IntoIterator<Item = (DominantWeight, BigInt)>,
    {
        let mut out = SchurExpansion::new(arity);
        for (w, c) in items {
            if w.arity() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: w.arity(),
                });
            }
            out.add(w, c);
        }
        Ok(out)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DominantWeight, &BigInt)> + '_ {
        self.coeffs.iter()
    }

    pub fn get(&self, weight: &DominantWeight) -> BigInt {
        self.coeffs.get(weight).cloned().unwrap_or_default()
    }

    pub(crate) fn add(&mut self, weight: DominantWeight, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(weight.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&weight);
        }
    }

    /// `Σ c_λ s_λ` as a Laurent polynomial, computed as one antisymmetric
    /// numerator `Σ c_λ a_{λ+ρ}` divided by the Vandermonde product.
    pub fn to_laurent(&self) -> LaurentPoly {
        let n = self.arity;
        let r = rho(n);
        let perms = permutations(n);
        let mut numer = LaurentPoly::zero(n);
        for (w, c) in &self.coeffs {
            let shifted: Vec<i64> = w.entries().iter().zip(&r).map(|(a, b)| a + b).collect();
            let e = ExponentVector::new(shifted);
            for (perm, sign) in &perms {
                numer.add_term(e.permuted(perm), c * sign);
            }
        }
        divide_by_vandermonde(&numer).expect("alternants are divisible by the Vandermonde product")
    }
}

/// `R_{-1} = Π_{1≤i<j≤n} (1 - x_i x_j)`.
pub fn odd_root_product(n: usize) -> LaurentPoly {
    let mut out = LaurentPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            let mut e = vec![0; n];
            e[i] = 1;
            e[j] = 1;
            let factor = LaurentPoly::one(n) - LaurentPoly::monomial(e, 1);
            out = &out * &factor;
        }
    }
    out
}

/// `V = Π_{1≤i<j≤n} (x_i - x_j) = e^ρ R_0`.
pub fn vandermonde(n: usize) -> LaurentPoly {
    let mut out = LaurentPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            out = &out * &(LaurentPoly::var(n, i) - LaurentPoly::var(n, j));
        }
    }
    out
}

/// `(R_{-1}, V)`.
pub fn denominators(n: usize) -> (LaurentPoly, LaurentPoly) {
    (odd_root_product(n), vandermonde(n))
}

/// Divides by `V` one linear factor at a time.
pub fn divide_by_vandermonde(f: &LaurentPoly) -> Result<LaurentPoly> {
    let n = f.arity();
    let mut q = f.clone();
    for i in 0..n {
        for j in i + 1..n {
            let factor = LaurentPoly::var(n, i) - LaurentPoly::var(n, j);
            q = q.exact_divide(&factor)?;
        }
    }
    Ok(q)
}

/// The Schur Laurent polynomial `s_λ`, the character of the `gl(n)`-module
/// of highest weight `λ`.
pub fn schur_poly(weight: &DominantWeight) -> LaurentPoly {
    let n = weight.arity();
    if n == 0 {
        return LaurentPoly::one(0);
    }
    let last = weight.entries()[n - 1];
    let partition = weight.shifted(-last);
    let mut expansion = SchurExpansion::new(n);
    expansion.add(partition, BigInt::from(1));
    expansion.to_laurent().shift(&vec![last; n])
}

/// Writes a symmetric polynomial in the Schur basis by repeatedly removing
/// the graded-lex leading monomial `x^λ`, which is the leading monomial of
/// `s_λ`.
pub fn schur_expand(f: &LaurentPoly) -> Result<SchurExpansion> {
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = f.arity();
    let mut rest = f.clone();
    let mut out = SchurExpansion::new(n);
    let mut cache: HashMap<DominantWeight, LaurentPoly> = HashMap::new();
    while let Some((e, c)) = rest.leading_term() {
        let weight = DominantWeight::new(e.as_slice().to_vec())
            .expect("leading monomial of a symmetric polynomial is dominant");
        let c = c.clone();
        let s = cache
            .entry(weight.clone())
            .or_insert_with(|| schur_poly(&weight));
        rest -= &s.scale(&c);
        out.add(weight, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    fn poly(n: usize, terms: &[(&[i64], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), *c))).unwrap()
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_poly(&w(&[0, 0, 0])), LaurentPoly::one(3));
        assert_eq!(
            schur_poly(&w(&[1, 0])),
            poly(2, &[(&[1, 0], 1), (&[0, 1], 1)])
        );
        assert_eq!(
            schur_poly(&w(&[1, -1])),
            poly(2, &[(&[1, -1], 1), (&[0, 0], 1), (&[-1, 1], 1)])
        );
        assert_eq!(schur_poly(&w(&[])), LaurentPoly::one(0));
        assert_eq!(schur_poly(&w(&[-3])), LaurentPoly::monomial(vec![-3], 1));
    }

    #[test]
    fn schur_of_column_is_elementary() {
        // s_{(1,1,0)} = e_2
        let e2 = poly(3, &[(&[1, 1, 0], 1), (&[1, 0, 1], 1), (&[0, 1, 1], 1)]);
        assert_eq!(schur_poly(&w(&[1, 1, 0])), e2);
    }

    #[test]
    fn expand_examples() {
        let e = schur_expand(&LaurentPoly::one(2)).unwrap();
        assert_eq!(
            e.iter().collect::<Vec<_>>(),
            vec![(&w(&[0, 0]), &BigInt::from(1))]
        );

        let e = schur_expand(&poly(2, &[(&[1, 0], 1), (&[0, 1], 1)])).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.get(&w(&[1, 0])), BigInt::from(1));

        let e = schur_expand(&poly(2, &[(&[2, 0], 1), (&[0, 2], 1)])).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.get(&w(&[2, 0])), BigInt::from(1));
        assert_eq!(e.get(&w(&[1, 1])), BigInt::from(-1));

        assert_eq!(
            schur_expand(&poly(2, &[(&[1, 0], 1)])),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn denominator_examples() {
        assert_eq!(denominators(1), (LaurentPoly::one(1), LaurentPoly::one(1)));
        assert_eq!(denominators(0), (LaurentPoly::one(0), LaurentPoly::one(0)));
        let (r, v) = denominators(2);
        assert_eq!(r, poly(2, &[(&[0, 0], 1), (&[1, 1], -1)]));
        assert_eq!(v, poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]));

        let (r, v) = denominators(3);
        let f = |i: usize, j: usize| {
            let mut e = vec![0; 3];
            e[i] = 1;
            e[j] = 1;
            LaurentPoly::one(3) - LaurentPoly::monomial(e, 1)
        };
        assert_eq!(r, f(0, 1) * f(0, 2) * f(1, 2));
        assert!(r.is_symmetric());
        assert!(v.is_antisymmetric());
    }

    #[test]
    fn roundtrip_small_window() {
        for n in 1..=3usize {
            for lam in crate::weights::weights_with_beads_in(n, -3, n as i64 + 2) {
                let s = schur_poly(&lam);
                assert!(s.is_symmetric());
                let e = schur_expand(&s).unwrap();
                assert_eq!(e.len(), 1, "{lam:?}");
                assert_eq!(e.get(&lam), BigInt::from(1));
            }
        }
    }
}
