//! The Duflo–Serganova homomorphism `ds_n : J_n → J_{n-2}` realized as the
//! evaluation `x_{n-1} = t, x_n = t^{-1}`, together with membership in
//! `J_n`, the thin Kac decomposition of its kernel, the kernel filtration and
//! the quotients describing `SP(n)` and `sp(n)`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::laurent::{ExponentVector, LaurentPoly};
use crate::schur::{odd_root_product, schur_expand};
use crate::thinkac::KClass;

/// Outcome of testing `f ∈ J_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipReport {
    pub symmetric: bool,
    pub t_independent: bool,
    /// A `t`-dependent term of the slice `f|_{x_1 = t, x_2 = t^{-1}}`.
    pub witness: Option<(i64, ExponentVector)>,
}

impl MembershipReport {
    pub fn is_member(&self) -> bool {
        self.symmetric && self.t_independent
    }
}

/// `f ∈ J_n`: symmetric, and `f|_{x_1 = t, x_2 = t^{-1}}` does not depend on
/// `t`. By symmetry the pair `(1, 2)` stands for every pair.
pub fn membership(f: &LaurentPoly) -> MembershipReport {
    let symmetric = f.is_symmetric();
    if f.arity() < 2 {
        return MembershipReport {
            symmetric,
            t_independent: true,
            witness: None,
        };
    }
    let slice = f.substitute_pair(0, 1).expect("arity is at least two");
    let witness = slice.t_dependent_witness().map(|(t, e)| (t, e.clone()));
    MembershipReport {
        symmetric,
        t_independent: witness.is_none(),
        witness,
    }
}

/// `ds_n(f) = f|_{x_{n-1} = t, x_n = t^{-1}}`, with `t` dropped.
pub fn ds_eval(f: &LaurentPoly) -> Result<LaurentPoly> {
    let n = f.arity();
    if n < 2 {
        return Err(Error::BadRank {
            rank: n,
            reason: "ds needs at least two variables",
        });
    }
    let slice = f.substitute_pair(n - 2, n - 1)?;
    if let Some((t_exp, _)) = slice.t_dependent_witness() {
        return Err(Error::NotMember { t_exp });
    }
    Ok(slice.t_coefficient(0))
}

/// `ds_n^{(k)} = ds_{n-2k+2} ∘ ⋯ ∘ ds_n`.
pub fn ds_power(f: &LaurentPoly, k: usize) -> Result<LaurentPoly> {
    if 2 * k > f.arity() {
        return Err(Error::BadRank {
            rank: f.arity(),
            reason: "ds power exceeds half the rank",
        });
    }
    let mut out = f.clone();
    for _ in 0..k {
        out = ds_eval(&out)?;
    }
    Ok(out)
}

/// Writes an element of `ker ds_n` as `Σ c_λ sch∇(λ)`.
pub fn kernel_decompose(f: &LaurentPoly) -> Result<KClass> {
    let n = f.arity();
    if n < 2 {
        return Err(Error::BadRank {
            rank: n,
            reason: "ds needs at least two variables",
        });
    }
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    match ds_eval(f) {
        Ok(image) if image.is_zero() => {}
        Ok(_) | Err(Error::NotMember { .. }) => return Err(Error::NotInKernel),
        Err(e) => return Err(e),
    }
    let quotient = f.exact_divide(&odd_root_product(n))?;
    let expansion = schur_expand(&quotient)?;
    Ok(KClass::from_signed_schur(&expansion))
}

/// Least `k` with `ds_n^{(k)}(f) = 0`; elements that survive down to rank 0
/// or 1 get `⌊n/2⌋ + 1`.
pub fn filtration_level(f: &LaurentPoly) -> Result<usize> {
    let report = membership(f);
    if !report.symmetric {
        return Err(Error::NotSymmetric);
    }
    if let Some((t_exp, _)) = report.witness {
        return Err(Error::NotMember { t_exp });
    }
    let top = f.arity() / 2;
    let mut current = f.clone();
    for k in 0..=top {
        if current.is_zero() {
            return Ok(k);
        }
        if k < top {
            current = ds_eval(&current)?;
        }
    }
    Ok(top + 1)
}

/// Target ring of [`quotient_reduce`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quotient {
    /// `J_n / (x_1⋯x_n - 1)`, the supercharacters of `sp(n)`.
    SpAlgebra,
    /// `J_n / ((x_1⋯x_n - 1)(x_1⋯x_n + 1))`, the supercharacters of `SP(n)`.
    SpGroup,
}

/// Canonical representative modulo the relation on `e_n = x_1⋯x_n`: every
/// monomial `x^μ` is replaced by `x^{μ - s𝟙}`, where `s` is the smallest
/// entry of `μ` (for `SpAlgebra`) or the largest even number not above it
/// (for `SpGroup`).
pub fn quotient_reduce(f: &LaurentPoly, which: Quotient) -> Result<LaurentPoly> {
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = f.arity();
    if n == 0 {
        return Ok(f.clone());
    }
    let mut out = LaurentPoly::zero(n);
    for (e, c) in f.terms() {
        let min = *e.as_slice().iter().min().expect("arity is positive");
        let s = match which {
            Quotient::SpAlgebra => min,
            Quotient::SpGroup => 2 * Integer::div_floor(&min, &2),
        };
        let reduced: Vec<i64> = e.as_slice().iter().map(|x| x - s).collect();
        out.add_term(ExponentVector::new(reduced), c.clone());
    }
    Ok(out)
}

/// `ds` taken at the pair `(i, j)` (0-based) instead of the last two
/// variables; surviving variables keep their relative order.
pub fn ds_at_pair(f: &LaurentPoly, i: usize, j: usize) -> Result<LaurentPoly> {
    let slice = f.substitute_pair(i, j)?;
    if let Some((t_exp, _)) = slice.t_dependent_witness() {
        return Err(Error::NotMember { t_exp });
    }
    Ok(slice.t_coefficient(0))
}
