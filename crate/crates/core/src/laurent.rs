//! Sparse Laurent polynomials in `n` variables over arbitrary-precision
//! integers.
//!
//! Terms are kept in a `BTreeMap` keyed by [`ExponentVector`], whose `Ord` is
//! graded lexicographic: total degree first, then the exponent of `x_1`, then
//! `x_2`, and so on. The last key of the map is therefore the leading
//! monomial, which is what exact division and Schur peeling consume.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::weights::{rho, DominantWeight};

/// Exponents of `x_1, …, x_n` in a Laurent monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(exps: Vec<i64>) -> Self {
        ExponentVector(exps)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    fn plus(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn minus(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Image under the variable permutation `x_i ↦ x_{perm[i]}`.
    pub fn permuted(&self, perm: &[usize]) -> ExponentVector {
        let mut out = vec![0; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            out[perm[i]] = e;
        }
        ExponentVector(out)
    }

    /// Entries sorted into weakly decreasing order.
    pub fn sorted_desc(&self) -> Vec<i64> {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

impl From<&[i64]> for ExponentVector {
    fn from(v: &[i64]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// An element of `Z[x_1^{±1}, …, x_n^{±1}]` in canonical sparse form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    arity: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl LaurentPoly {
    pub fn zero(arity: usize) -> Self {
        LaurentPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigInt::one())
    }

    pub fn constant(arity: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(ExponentVector::zeros(arity), c)
    }

    pub fn monomial(exps: impl Into<ExponentVector>, coef: impl Into<BigInt>) -> Self {
        let exps = exps.into();
        let coef = coef.into();
        let mut terms = BTreeMap::new();
        let arity = exps.arity();
        if !coef.is_zero() {
            terms.insert(exps, coef);
        }
        LaurentPoly { arity, terms }
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Self::monomial(e, 1)
    }

    /// `x_1 x_2 ⋯ x_n` raised to the power `a`.
    pub fn supertrace_power(arity: usize, a: i64) -> Self {
        Self::monomial(vec![a; arity], 1)
    }

    /// Collects `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, E, C>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, C)>,
        E: Into<ExponentVector>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero(arity);
        for (e, c) in terms {
            let e = e.into();
            if e.arity() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: e.arity(),
                });
            }
            p.add_term(e, c.into());
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms
            .get(&ExponentVector(exps.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// The constant term as an integer, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.0.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Largest absolute exponent appearing anywhere.
    pub fn max_abs_exponent(&self) -> i64 {
        self.terms
            .keys()
            .flat_map(|e| e.0.iter().map(|x| x.abs()))
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, exps: ExponentVector, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &LaurentPoly) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(other)?;
        let mut acc: HashMap<ExponentVector, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *acc.entry(ea.plus(eb)).or_default() += ca * cb;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPoly {
            arity: self.arity,
            terms,
        })
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        if k.is_zero() {
            return LaurentPoly::zero(self.arity);
        }
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Multiplication by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> LaurentPoly {
        assert_eq!(shift.len(), self.arity, "shift has the wrong length");
        let s = ExponentVector(shift.to_vec());
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.plus(&s), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one(self.arity);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Image under `x_i ↦ x_{perm[i]}`.
    pub fn permuted(&self, perm: &[usize]) -> LaurentPoly {
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.permuted(perm), c.clone()))
                .collect(),
        }
    }

    /// `Σ_{w ∈ S_n} sgn(w) · w(f)`.
    pub fn antisymmetrize(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.arity);
        for (perm, sign) in permutations(self.arity) {
            for (e, c) in &self.terms {
                out.add_term(e.permuted(&perm), c * sign);
            }
        }
        out
    }

    /// Invariance under every adjacent transposition, hence under all of
    /// `S_n`.
    pub fn is_symmetric(&self) -> bool {
        (0..self.arity.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut swapped = e.0.clone();
                swapped.swap(i, i + 1);
                self.terms.get(&ExponentVector(swapped)) == Some(c)
            })
        })
    }

    /// Whether each adjacent transposition maps `f` to `-f`.
    pub fn is_antisymmetric(&self) -> bool {
        (0..self.arity.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut swapped = e.0.clone();
                swapped.swap(i, i + 1);
                self.terms.get(&ExponentVector(swapped)) == Some(&-c)
            })
        })
    }

    /// Exact quotient `f / g` in the Laurent ring.
    ///
    /// Leading terms are peeled off in graded-lex order. A quotient monomial
    /// must lie in the box `[min_f - min_g, max_f - max_g]` coordinate-wise,
    /// which bounds the search and detects non-divisibility.
    pub fn exact_divide(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(divisor)?;
        let (lead_exp, lead_coef) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.arity));
        }
        let (f_lo, f_hi) = self.exponent_box();
        let (g_lo, g_hi) = divisor.exponent_box();
        let lo: Vec<i64> = f_lo.iter().zip(&g_lo).map(|(a, b)| a - b).collect();
        let hi: Vec<i64> = f_hi.iter().zip(&g_hi).map(|(a, b)| a - b).collect();

        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((e, c)) = rem.pop_last() {
            let qe = e.minus(lead_exp);
            let in_box =
                qe.0.iter()
                    .zip(lo.iter().zip(&hi))
                    .all(|(x, (l, h))| l <= x && x <= h);
            if !in_box {
                return Err(Error::NotDivisible);
            }
            let (qc, r) = c.div_rem(lead_coef);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (ge, gc) in divisor.terms.iter().rev().skip(1) {
                let key = qe.plus(ge);
                let delta = &qc * gc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quot.insert(qe, qc);
        }
        Ok(LaurentPoly {
            arity: self.arity,
            terms: quot,
        })
    }

    /// Coordinate-wise minimum and maximum exponents. Must not be called on
    /// the zero polynomial.
    fn exponent_box(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = vec![i64::MAX; self.arity];
        let mut hi = vec![i64::MIN; self.arity];
        for e in self.terms.keys() {
            for (k, &x) in e.0.iter().enumerate() {
                lo[k] = lo[k].min(x);
                hi[k] = hi[k].max(x);
            }
        }
        (lo, hi)
    }

    /// Specializes `x_i = t`, `x_j = t^{-1}` (0-based indices) and keeps the
    /// remaining variables in their original order.
    pub fn substitute_pair(&self, i: usize, j: usize) -> Result<TSlice> {
        if self.arity < 2 || i == j || i >= self.arity || j >= self.arity {
            return Err(Error::BadIndices {
                i,
                j,
                arity: self.arity,
            });
        }
        let mut terms: BTreeMap<(i64, ExponentVector), BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            let t = e.0[i] - e.0[j];
            let rest: Vec<i64> =
                e.0.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i && k != j)
                    .map(|(_, &x)| x)
                    .collect();
            let slot = terms.entry((t, ExponentVector(rest))).or_default();
            *slot += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(TSlice {
            base_arity: self.arity,
            pair: (i, j),
            terms,
        })
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[n={}]({})", self.arity, self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> =
                e.0.iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(i, &x)| {
                        if x == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("x{}^{}", i + 1, x)
                        }
                    })
                    .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if mono.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("arity mismatch")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$checked(&rhs).expect("arity mismatch")
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$checked(rhs).expect("arity mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c);
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// `f|_{x_i = t, x_j = t^{-1}}` as a polynomial in `t` whose coefficients are
/// Laurent polynomials in the remaining `n - 2` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSlice {
    base_arity: usize,
    pair: (usize, usize),
    terms: BTreeMap<(i64, ExponentVector), BigInt>,
}

impl TSlice {
    pub fn base_arity(&self) -> usize {
        self.base_arity
    }

    pub fn pair(&self) -> (usize, usize) {
        self.pair
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &ExponentVector, &BigInt)> + '_ {
        self.terms.iter().map(|((t, e), c)| (*t, e, c))
    }

    pub fn is_t_independent(&self) -> bool {
        self.terms.keys().all(|(t, _)| *t == 0)
    }

    /// The term with the largest `t`-exponent among those with nonzero
    /// `t`-exponent.
    pub fn t_dependent_witness(&self) -> Option<(i64, &ExponentVector)> {
        self.terms
            .keys()
            .filter(|(t, _)| *t != 0)
            .max_by_key(|(t, _)| *t)
            .map(|(t, e)| (*t, e))
    }

    /// Coefficient of `t^k`, as a polynomial in the `n - 2` remaining
    /// variables.
    pub fn t_coefficient(&self, k: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.base_arity - 2);
        for ((t, e), c) in &self.terms {
            if *t == k {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }
}

impl Mul<&TSlice> for &TSlice {
    type Output = TSlice;
    fn mul(self, rhs: &TSlice) -> TSlice {
        assert_eq!(self.base_arity, rhs.base_arity, "arity mismatch");
        let mut acc: HashMap<(i64, ExponentVector), BigInt> = HashMap::new();
        for ((ta, ea), ca) in &self.terms {
            for ((tb, eb), cb) in &rhs.terms {
                *acc.entry((ta + tb, ea.plus(eb))).or_default() += ca * cb;
            }
        }
        TSlice {
            base_arity: self.base_arity,
            pair: self.pair,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// All permutations of `0..n` together with their signs. Heap's algorithm
/// changes one transposition per step, so the sign alternates.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = vec![(perm.clone(), 1)];
    let mut c = vec![0usize; n];
    let mut sign = 1;
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            out.push((perm.clone(), sign));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// `m_λ`: the sum of the distinct monomials in the `S_n`-orbit of `x^λ`.
pub fn monomial_orbit_sum(weight: &[i64]) -> LaurentPoly {
    let mut exps = weight.to_vec();
    exps.sort_unstable();
    let mut out = LaurentPoly::zero(weight.len());
    loop {
        out.add_term(ExponentVector(exps.clone()), BigInt::one());
        if !next_permutation(&mut exps) {
            break;
        }
    }
    out
}

/// Lexicographic successor of a multiset permutation.
fn next_permutation(v: &mut [i64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Result of rewriting an alternant `a_ν` as `± a_{λ+ρ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Straightened {
    Zero,
    Term { sign: i64, weight: DominantWeight },
}

/// Rewrites `a_ν = Σ_w sgn(w) x^{w(ν)}` as `sign · a_{λ+ρ}` with `λ`
/// dominant, or reports that it vanishes (repeated entries).
pub fn straighten_alternant(nu: &[i64]) -> Straightened {
    let n = nu.len();
    let mut v = nu.to_vec();
    // Insertion sort into strictly decreasing order, counting transpositions.
    let mut sign = 1;
    for i in 1..n {
        let mut j = i;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return Straightened::Zero;
        }
    }
    let shifted = v.iter().zip(rho(n)).map(|(a, r)| a - r).collect();
    Straightened::Term {
        sign,
        weight: DominantWeight::new(shifted).expect("strictly decreasing minus rho is dominant"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(n: usize, terms: &[(&[i64], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), *c))).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = poly(1, &[(&[0], 1), (&[1], 1)]);
        let b = poly(1, &[(&[0], 1), (&[1], -1)]);
        assert_eq!(&a * &b, poly(1, &[(&[0], 1), (&[2], -1)]));
    }

    #[test]
    fn odd_root_product_rank_two() {
        let f = poly(2, &[(&[0, 0], 1), (&[1, 1], -1)]);
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.coeff(&[1, 1]), BigInt::from(-1));
    }

    #[test]
    fn inverse_monomial() {
        let a = LaurentPoly::monomial(vec![1, 1], 1);
        let b = LaurentPoly::monomial(vec![-1, -1], 1);
        assert_eq!(&a * &b, LaurentPoly::one(2));
    }

    #[test]
    fn arity_mismatch() {
        let a = LaurentPoly::one(2);
        let b = LaurentPoly::one(3);
        assert_eq!(
            a.checked_add(&b),
            Err(Error::ArityMismatch {
                expected: 2,
                found: 3
            })
        );
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn zero_coefficients_pruned() {
        let a = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(poly(2, &[(&[1, 0], 2), (&[1, 0], -2)]).num_terms(), 0);
    }

    #[test]
    fn arity_zero_is_the_integers() {
        let a = LaurentPoly::constant(0, 6);
        let b = LaurentPoly::constant(0, -7);
        assert_eq!((&a * &b).as_constant(), Some(BigInt::from(-42)));
    }

    #[test]
    fn slice_examples() {
        let s = LaurentPoly::monomial(vec![1, 1], 1)
            .substitute_pair(0, 1)
            .unwrap();
        assert_eq!(s.terms().count(), 1);
        assert!(s.is_t_independent());
        assert_eq!(s.t_coefficient(0), LaurentPoly::one(0));

        let s = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)])
            .substitute_pair(0, 1)
            .unwrap();
        let ts: Vec<i64> = s.terms().map(|(t, _, _)| t).collect();
        assert_eq!(ts, vec![-1, 1]);
        assert_eq!(s.t_dependent_witness().unwrap().0, 1);

        let s = LaurentPoly::monomial(vec![1, 0, 1], 1)
            .substitute_pair(0, 1)
            .unwrap();
        let items: Vec<(i64, Vec<i64>)> = s
            .terms()
            .map(|(t, e, _)| (t, e.as_slice().to_vec()))
            .collect();
        assert_eq!(items, vec![(1, vec![1])]);
    }

    #[test]
    fn slice_bad_indices() {
        let f = LaurentPoly::one(3);
        assert!(matches!(
            f.substitute_pair(1, 1),
            Err(Error::BadIndices { .. })
        ));
        assert!(matches!(
            f.substitute_pair(0, 3),
            Err(Error::BadIndices { .. })
        ));
        assert!(matches!(
            LaurentPoly::one(1).substitute_pair(0, 1),
            Err(Error::BadIndices { .. })
        ));
    }

    #[test]
    fn division_examples() {
        let f = poly(1, &[(&[0], 1), (&[2], -1)]);
        let g = poly(1, &[(&[0], 1), (&[1], -1)]);
        assert_eq!(
            f.exact_divide(&g).unwrap(),
            poly(1, &[(&[0], 1), (&[1], 1)])
        );

        let r = poly(2, &[(&[0, 0], 1), (&[1, 1], -1)]);
        let s = poly(2, &[(&[1, 0], -1), (&[0, 1], -1)]);
        assert_eq!((&r * &s).exact_divide(&r).unwrap(), s);

        let f = poly(1, &[(&[0], 1), (&[1], 1)]);
        assert_eq!(f.exact_divide(&g), Err(Error::NotDivisible));
        assert_eq!(
            f.exact_divide(&LaurentPoly::zero(1)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn division_needs_negative_quotient_exponents() {
        let f = poly(1, &[(&[0], 1), (&[1], -1)]);
        let g = poly(1, &[(&[1], 1), (&[2], -1)]);
        assert_eq!(
            f.exact_divide(&g).unwrap(),
            LaurentPoly::monomial(vec![-1], 1)
        );
        let two = LaurentPoly::constant(1, 2);
        assert_eq!(
            LaurentPoly::constant(1, 3).exact_divide(&two),
            Err(Error::NotDivisible)
        );
    }

    #[test]
    fn symmetry_examples() {
        assert!(poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]).is_symmetric());
        assert!(!poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]).is_symmetric());
        assert!(poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]).is_antisymmetric());
        assert_eq!(
            monomial_orbit_sum(&[2, 1]),
            poly(2, &[(&[2, 1], 1), (&[1, 2], 1)])
        );
        assert_eq!(monomial_orbit_sum(&[1, 1, 0]).num_terms(), 3);
        assert_eq!(monomial_orbit_sum(&[]), LaurentPoly::one(0));
    }

    #[test]
    fn straighten_examples() {
        let zero = DominantWeight::zero(2);
        assert_eq!(
            straighten_alternant(&[1, 0]),
            Straightened::Term {
                sign: 1,
                weight: zero.clone()
            }
        );
        assert_eq!(
            straighten_alternant(&[0, 1]),
            Straightened::Term {
                sign: -1,
                weight: zero
            }
        );
        assert_eq!(straighten_alternant(&[1, 1]), Straightened::Zero);
        assert_eq!(straighten_alternant(&[0, 2, 0]), Straightened::Zero);
    }

    #[test]
    fn permutation_signs() {
        for n in 0..6 {
            let perms = permutations(n);
            assert_eq!(perms.len(), (1..=n).product::<usize>().max(1));
            for (p, s) in &perms {
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                assert_eq!(*s, if inversions % 2 == 0 { 1 } else { -1 });
            }
        }
    }

    #[test]
    fn display_is_readable() {
        let f = poly(2, &[(&[0, 0], 1), (&[1, 1], -1), (&[-1, 0], 3)]);
        assert_eq!(f.to_string(), "-x1*x2 + 1 + 3*x1^-1");
    }
}
