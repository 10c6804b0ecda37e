//! Supercharacters of thin Kac modules `∇(λ)` and the induced action of
//! translation functors on their classes.
//!
//! The class of `Π∇(λ)` is `-[∇(λ)]`, so a [`KClass`] is just an integer
//! combination of the symbols `[∇(λ)]`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::schur::{odd_root_product, SchurExpansion};
use crate::weights::{sign_of_parity, DominantWeight};

/// `Σ c_λ [∇(λ)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClass {
    arity: usize,
    coeffs: BTreeMap<DominantWeight, BigInt>,
}

impl KClass {
    pub fn zero(arity: usize) -> Self {
        KClass {
            arity,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis class `[∇(λ)]`.
    pub fn basis(weight: DominantWeight) -> Self {
        let mut out = KClass::zero(weight.arity());
        out.add(weight, BigInt::from(1));
        out
    }

    pub fn from_coeffs<I>(arity: usize, items: I) -> Result<Self>
    where
        I: IntoIterator<Item = (DominantWeight, BigInt)>,
    {
        let mut out = KClass::zero(arity);
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

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
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

    pub fn add_class(&mut self, other: &KClass) {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        for (w, c) in &other.coeffs {
            self.add(w.clone(), c.clone());
        }
    }

    pub fn scaled(&self, k: &BigInt) -> KClass {
        let mut out = KClass::zero(self.arity);
        for (w, c) in &self.coeffs {
            out.add(w.clone(), c * k);
        }
        out
    }

    /// `Σ c_λ sch∇(λ) = R_{-1} · Σ c_λ (-1)^{p(λ)} s_λ`.
    pub fn supercharacter(&self) -> LaurentPoly {
        let schur = self.to_signed_schur();
        &odd_root_product(self.arity) * &schur.to_laurent()
    }

    /// The Schur expansion of `supercharacter() / R_{-1}`.
    pub fn to_signed_schur(&self) -> SchurExpansion {
        SchurExpansion::from_coeffs(
            self.arity,
            self.coeffs
                .iter()
                .map(|(w, c)| (w.clone(), c * sign_of_parity(w.parity()))),
        )
        .expect("weights share the class arity")
    }

    /// Inverse of [`KClass::to_signed_schur`].
    pub fn from_signed_schur(expansion: &SchurExpansion) -> KClass {
        KClass::from_coeffs(
            expansion.arity(),
            expansion
                .iter()
                .map(|(w, c)| (w.clone(), c * sign_of_parity(w.parity()))),
        )
        .expect("weights share the expansion arity")
    }
}

/// `sch∇(λ) = (-1)^{p(λ)} R_{-1} s_λ`.
pub fn sch_thin_kac(weight: &DominantWeight) -> LaurentPoly {
    KClass::basis(weight.clone()).supercharacter()
}

/// Supercharacter of the standard module: even weights `ε_i`, odd weights
/// `-ε_i`, i.e. `Σ x_i - Σ x_i^{-1}`.
pub fn sch_standard(n: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero(n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        out += &LaurentPoly::monomial(e.clone(), 1);
        e[i] = -1;
        out += &LaurentPoly::monomial(e, -1);
    }
    out
}

/// Which of the two normalizations of the translation functor to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Translation {
    /// `Θ'_k`.
    #[default]
    Plain,
    /// `Θ_k = Π^k Θ'_k`, which multiplies every class by `(-1)^k`.
    ParityShifted,
}

/// Action of `Θ'_k` on a combination of thin Kac classes.
///
/// For each basis class, the bead at position `k` (if any) moves to `k + 1`
/// when that spot is free, giving `μ''`, and to `k - 1` when that spot is
/// free, giving `μ'`. The image is
/// `(-1)^{p(λ)+p(μ'')}[∇(μ'')] - (-1)^{p(λ)+p(μ')}[∇(μ')]` restricted to the
/// legal moves; these signs make `Σ_k Θ'_k` agree with `- ⊗ V` on
/// supercharacters.
pub fn theta_prime(k: i64, class: &KClass, variant: Translation) -> KClass {
    let mut out = KClass::zero(class.arity());
    for (weight, c) in class.iter() {
        let diagram = weight.to_diagram();
        let Some(i) = diagram.bead_index(k) else {
            continue;
        };
        let p = weight.parity();
        if !diagram.has_bead(k + 1) {
            let target = weight
                .moved(i, 1)
                .expect("free right neighbour keeps dominance");
            let s = sign_of_parity(p + target.parity());
            out.add(target, c * s);
        }
        if !diagram.has_bead(k - 1) {
            let target = weight
                .moved(i, -1)
                .expect("free left neighbour keeps dominance");
            let s = sign_of_parity(p + target.parity());
            out.add(target, -(c * s));
        }
    }
    match variant {
        Translation::ParityShifted if k.rem_euclid(2) == 1 => out.scaled(&BigInt::from(-1)),
        _ => out,
    }
}

/// Positions `k` where `Θ'_k` can be nonzero on `class`.
pub fn active_positions(class: &KClass) -> Vec<i64> {
    let mut ks: Vec<i64> = class
        .iter()
        .flat_map(|(w, _)| w.to_diagram().beads().to_vec())
        .collect();
    ks.sort_unstable();
    ks.dedup();
    ks
}

/// Tensoring with the `a`-th power of the supertrace representation:
/// `[∇(μ)] ↦ (-1)^{p(μ)+p(μ+a𝟙)} [∇(μ + a𝟙)]`.
pub fn supertrace_twist(class: &KClass, a: i64) -> KClass {
    let mut out = KClass::zero(class.arity());
    for (weight, c) in class.iter() {
        let target = weight.shifted(a);
        let s = sign_of_parity(weight.parity() + target.parity());
        out.add(target, c * s);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::weights_with_beads_in;

    fn w(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    fn poly(n: usize, terms: &[(&[i64], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), *c))).unwrap()
    }

    fn class(n: usize, items: &[(&[i64], i64)]) -> KClass {
        KClass::from_coeffs(n, items.iter().map(|(e, c)| (w(e), BigInt::from(*c)))).unwrap()
    }

    #[test]
    fn supercharacter_examples() {
        assert_eq!(
            sch_thin_kac(&w(&[0, 0])),
            poly(2, &[(&[0, 0], 1), (&[1, 1], -1)])
        );
        assert_eq!(sch_thin_kac(&w(&[0, 0, 0])), odd_root_product(3));
        for k in -3..=3i64 {
            let sign = if crate::weights::parity_of(&[k]) == 0 {
                1
            } else {
                -1
            };
            assert_eq!(sch_thin_kac(&w(&[k])), LaurentPoly::monomial(vec![k], sign));
        }
        let expected =
            -(poly(2, &[(&[0, 0], 1), (&[1, 1], -1)]) * poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(sch_thin_kac(&w(&[1, 0])), expected);
    }

    #[test]
    fn standard_examples() {
        assert_eq!(sch_standard(1), poly(1, &[(&[1], 1), (&[-1], -1)]));
        assert_eq!(
            sch_standard(2),
            poly(
                2,
                &[(&[1, 0], 1), (&[0, 1], 1), (&[-1, 0], -1), (&[0, -1], -1)]
            )
        );
        assert!(sch_standard(2).substitute_pair(0, 1).unwrap().is_zero());
    }

    #[test]
    fn theta_examples() {
        let out = theta_prime(0, &class(1, &[(&[0], 1)]), Translation::Plain);
        assert_eq!(out, class(1, &[(&[1], -1), (&[-1], -1)]));
        assert_eq!(
            out.supercharacter(),
            sch_thin_kac(&w(&[0])) * sch_standard(1)
        );

        let out = theta_prime(0, &class(2, &[(&[0, 0], 1)]), Translation::Plain);
        assert_eq!(out, class(2, &[(&[0, -1], -1)]));

        assert!(theta_prime(5, &class(2, &[(&[0, 0], 1)]), Translation::Plain).is_zero());
    }

    #[test]
    fn theta_case_one_and_four() {
        // beads {1, 0}: k = 1 has a free right neighbour only
        let out = theta_prime(1, &class(2, &[(&[0, 0], 1)]), Translation::Plain);
        assert_eq!(out.len(), 1);
        assert_eq!(out.iter().next().unwrap().0, &w(&[1, 0]));
        // beads {2, 1, 0}: k = 1 is blocked on both sides
        assert!(theta_prime(1, &class(3, &[(&[0, 0, 0], 1)]), Translation::Plain).is_zero());
    }

    #[test]
    fn parity_shifted_variant() {
        let c = class(2, &[(&[0, 0], 1)]);
        assert_eq!(
            theta_prime(1, &c, Translation::ParityShifted),
            theta_prime(1, &c, Translation::Plain).scaled(&BigInt::from(-1))
        );
        assert_eq!(
            theta_prime(0, &c, Translation::ParityShifted),
            theta_prime(0, &c, Translation::Plain)
        );
    }

    #[test]
    fn tensor_identity_small() {
        for n in 1..=3usize {
            for lam in weights_with_beads_in(n, -2, n as i64 + 1) {
                let c = KClass::basis(lam.clone());
                let mut total = KClass::zero(n);
                for k in active_positions(&c) {
                    total.add_class(&theta_prime(k, &c, Translation::Plain));
                }
                assert_eq!(
                    total.supercharacter(),
                    sch_thin_kac(&lam) * sch_standard(n),
                    "{lam:?}"
                );
            }
        }
    }

    #[test]
    fn twist_examples() {
        let c = class(2, &[(&[0, 0], 1), (&[3, -1], 2)]);
        assert_eq!(supertrace_twist(&c, 0), c);
        assert_eq!(
            supertrace_twist(&class(2, &[(&[0, 0], 1)]), 1),
            class(2, &[(&[1, 1], -1)])
        );
        assert_eq!(
            supertrace_twist(&class(1, &[(&[2], 1)]), -2),
            class(1, &[(&[0], -1)])
        );
        assert_eq!(supertrace_twist(&supertrace_twist(&c, 3), -3), c);
        assert_eq!(
            supertrace_twist(&c, 2).supercharacter(),
            c.supercharacter() * LaurentPoly::supertrace_power(2, 2)
        );
    }
}
