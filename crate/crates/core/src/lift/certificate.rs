use crate::dsmap::{ds_eval, kernel_decompose, membership};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::thinkac::KClass;

use super::Lifter;

/// One rank of a certificate: `element = lift + Σ c_λ sch∇(λ)`, where
/// `ds(lift)` is the element one rank down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankRecord {
    pub rank: usize,
    pub element: LaurentPoly,
    pub lift: LaurentPoly,
    pub kernel: KClass,
}

/// Records from the top rank down, then the element of `J_0 = ℤ` or
/// `J_1 = ℤ[x_1^{±1}]` at the bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub records: Vec<RankRecord>,
    pub bottom: LaurentPoly,
}

impl Certificate {
    pub fn rank(&self) -> usize {
        self.records
            .first()
            .map(|r| r.rank)
            .unwrap_or(self.bottom.arity())
    }

    /// Replays the certificate bottom-up from the bottom element, the lifts
    /// and the kernel coefficients alone.
    pub fn reconstruct(&self) -> LaurentPoly {
        let mut value = self.bottom.clone();
        for rec in self.records.iter().rev() {
            value = &rec.lift + &rec.kernel.supercharacter();
        }
        value
    }

    /// Checks every rank: the lift is in `J_m` and maps onto the element
    /// below, and lift plus kernel part is the recorded element.
    pub fn verify(&self) -> Result<LaurentPoly> {
        let mut below = self.bottom.clone();
        if below.arity() > 1 {
            return Err(Error::BrokenCertificate(format!(
                "bottom element has arity {}",
                below.arity()
            )));
        }
        for rec in self.records.iter().rev() {
            if rec.rank != below.arity() + 2 || rec.element.arity() != rec.rank {
                return Err(Error::BrokenCertificate(format!(
                    "rank {} out of sequence",
                    rec.rank
                )));
            }
            if !membership(&rec.lift).is_member() {
                return Err(Error::BrokenCertificate(format!(
                    "lift at rank {} is not in J",
                    rec.rank
                )));
            }
            if ds_eval(&rec.lift)? != below {
                return Err(Error::BrokenCertificate(format!(
                    "ds of the lift at rank {} misses the element below",
                    rec.rank
                )));
            }
            let value = &rec.lift + &rec.kernel.supercharacter();
            if value != rec.element {
                return Err(Error::BrokenCertificate(format!(
                    "rank {} does not reassemble",
                    rec.rank
                )));
            }
            below = value;
        }
        Ok(below)
    }
}

/// Peel-and-lift certificate for `f ∈ J_n` using the default window cap.
pub fn certify(f: &LaurentPoly) -> Result<Certificate> {
    Lifter::default().certify(f)
}

pub(super) fn certify_with(lifter: &mut Lifter, f: &LaurentPoly) -> Result<Certificate> {
    let report = membership(f);
    if !report.symmetric {
        return Err(Error::NotSymmetric);
    }
    if let Some((t_exp, _)) = report.witness {
        return Err(Error::NotMember { t_exp });
    }
    let mut records = Vec::new();
    let mut current = f.clone();
    while current.arity() >= 2 {
        let n = current.arity();
        let h = ds_eval(&current)?;
        let lift = lifter.lift(&h, n)?;
        let rest = &current - &lift;
        let kernel = if rest.is_zero() {
            KClass::zero(n)
        } else {
            kernel_decompose(&rest)?
        };
        records.push(RankRecord {
            rank: n,
            element: current,
            lift,
            kernel,
        });
        current = h;
    }
    Ok(Certificate {
        records,
        bottom: current,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thinkac::sch_thin_kac;
    use crate::weights::DominantWeight;
    use num_bigint::BigInt;

    fn w(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn thin_kac_is_pure_kernel() {
        let f = sch_thin_kac(&w(&[0, 0]));
        let cert = certify(&f).unwrap();
        assert_eq!(cert.records.len(), 1);
        assert!(cert.records[0].lift.is_zero());
        assert_eq!(cert.records[0].kernel, KClass::basis(w(&[0, 0])));
        assert!(cert.bottom.is_zero());
        assert_eq!(cert.verify().unwrap(), f);
    }

    #[test]
    fn one_is_pure_lift() {
        let cert = certify(&LaurentPoly::one(2)).unwrap();
        assert_eq!(cert.bottom, LaurentPoly::one(0));
        assert_eq!(cert.records[0].lift, LaurentPoly::one(2));
        assert!(cert.records[0].kernel.is_zero());
    }

    #[test]
    fn supertrace_sum() {
        let f = LaurentPoly::from_terms(2, [(vec![1, 1], 1), (vec![-1, -1], 1)]).unwrap();
        let cert = certify(&f).unwrap();
        assert_eq!(cert.bottom, LaurentPoly::constant(0, 2));
        assert_eq!(cert.records[0].lift, LaurentPoly::constant(2, 2));
        let k = &cert.records[0].kernel;
        assert_eq!(k.len(), 2);
        assert_eq!(k.get(&w(&[-1, -1])), BigInt::from(-1));
        assert_eq!(k.get(&w(&[0, 0])), BigInt::from(-1));
        assert_eq!(cert.reconstruct(), f);
    }

    #[test]
    fn deeper_ranks() {
        let f =
            &LaurentPoly::monomial(vec![1, 1, 1, 1, 1], 1) + &sch_thin_kac(&w(&[1, 0, 0, 0, -1]));
        let cert = certify(&f).unwrap();
        assert_eq!(
            cert.records.iter().map(|r| r.rank).collect::<Vec<_>>(),
            vec![5, 3]
        );
        assert_eq!(cert.bottom, LaurentPoly::monomial(vec![1], 1));
        assert_eq!(cert.verify().unwrap(), f);
        assert_eq!(cert.reconstruct(), f);
    }

    #[test]
    fn rejects_non_members() {
        let f = LaurentPoly::from_terms(2, [(vec![1, 0], 1), (vec![0, 1], 1)]).unwrap();
        assert!(matches!(certify(&f), Err(Error::NotMember { .. })));
    }

    #[test]
    fn tampering_is_detected() {
        let f = LaurentPoly::from_terms(2, [(vec![1, 1], 1), (vec![-1, -1], 1)]).unwrap();
        let mut cert = certify(&f).unwrap();
        cert.records[0].kernel = KClass::zero(2);
        assert!(matches!(cert.verify(), Err(Error::BrokenCertificate(_))));
    }
}
