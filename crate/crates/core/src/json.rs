//! JSON forms of polynomials, expansions, classes, membership reports and
//! certificates. Coefficients are decimal strings; integer literals are
//! also accepted on input.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::dsmap::MembershipReport;
use crate::laurent::LaurentPoly;
use crate::lift::{Certificate, RankRecord};
use crate::schur::SchurExpansion;
use crate::thinkac::KClass;
use crate::weights::DominantWeight;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Coef(BigInt);

impl Serialize for Coef {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Coef {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
        }
        match Raw::deserialize(d)? {
            Raw::Str(s) => BigInt::from_str(s.trim())
                .map(Coef)
                .map_err(|_| D::Error::custom(format!("bad coefficient {s:?}"))),
            Raw::Int(i) => Ok(Coef(BigInt::from(i))),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermWire {
    exp: Vec<i64>,
    coef: Coef,
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    n: usize,
    terms: Vec<TermWire>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyWire {
            n: self.arity(),
            terms: self
                .terms()
                .map(|(e, c)| TermWire {
                    exp: e.as_slice().to_vec(),
                    coef: Coef(c.clone()),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = PolyWire::deserialize(d)?;
        LaurentPoly::from_terms(wire.n, wire.terms.into_iter().map(|t| (t.exp, t.coef.0)))
            .map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct WeightCoef {
    weight: Vec<i64>,
    coef: Coef,
}

fn weight_coefs<'a>(
    items: impl Iterator<Item = (&'a DominantWeight, &'a BigInt)>,
) -> Vec<WeightCoef> {
    items
        .map(|(w, c)| WeightCoef {
            weight: w.entries().to_vec(),
            coef: Coef(c.clone()),
        })
        .collect()
}

fn parse_weight_coefs<E: serde::de::Error>(
    items: Vec<WeightCoef>,
) -> Result<Vec<(DominantWeight, BigInt)>, E> {
    items
        .into_iter()
        .map(|wc| {
            DominantWeight::new(wc.weight)
                .map(|w| (w, wc.coef.0))
                .map_err(E::custom)
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct SchurWire {
    n: usize,
    coeffs: Vec<WeightCoef>,
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SchurWire {
            n: self.arity(),
            coeffs: weight_coefs(self.iter()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = SchurWire::deserialize(d)?;
        let items = parse_weight_coefs::<D::Error>(wire.coeffs)?;
        SchurExpansion::from_coeffs(wire.n, items).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct KClassWire {
    n: usize,
    basis: String,
    coeffs: Vec<WeightCoef>,
}

const THIN_KAC_BASIS: &str = "thinkac";

impl Serialize for KClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        KClassWire {
            n: self.arity(),
            basis: THIN_KAC_BASIS.to_string(),
            coeffs: weight_coefs(self.iter()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for KClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = KClassWire::deserialize(d)?;
        if wire.basis != THIN_KAC_BASIS {
            return Err(D::Error::custom(format!("unknown basis {:?}", wire.basis)));
        }
        let items = parse_weight_coefs::<D::Error>(wire.coeffs)?;
        KClass::from_coeffs(wire.n, items).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct WitnessWire {
    t_exp: i64,
    exp: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct MembershipWire {
    member: bool,
    symmetric: bool,
    t_independent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessWire>,
}

impl Serialize for MembershipReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MembershipWire {
            member: self.is_member(),
            symmetric: self.symmetric,
            t_independent: self.t_independent,
            witness: self.witness.as_ref().map(|(t, e)| WitnessWire {
                t_exp: *t,
                exp: e.as_slice().to_vec(),
            }),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MembershipReport {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = MembershipWire::deserialize(d)?;
        Ok(MembershipReport {
            symmetric: wire.symmetric,
            t_independent: wire.t_independent,
            witness: wire.witness.map(|w| (w.t_exp, w.exp.into())),
        })
    }
}

/// One rank per nesting level; the innermost level has no lift.
#[derive(Serialize, Deserialize)]
struct CertWire {
    rank: usize,
    element: LaurentPoly,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lift: Option<LaurentPoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kernel: Option<KClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    below: Option<Box<CertWire>>,
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut wire = CertWire {
            rank: self.bottom.arity(),
            element: self.bottom.clone(),
            lift: None,
            kernel: None,
            below: None,
        };
        for rec in self.records.iter().rev() {
            wire = CertWire {
                rank: rec.rank,
                element: rec.element.clone(),
                lift: Some(rec.lift.clone()),
                kernel: Some(rec.kernel.clone()),
                below: Some(Box::new(wire)),
            };
        }
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Certificate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let mut wire = CertWire::deserialize(d)?;
        let mut records = Vec::new();
        loop {
            match (wire.lift, wire.kernel, wire.below) {
                (Some(lift), Some(kernel), Some(below)) => {
                    records.push(RankRecord {
                        rank: wire.rank,
                        element: wire.element,
                        lift,
                        kernel,
                    });
                    wire = *below;
                }
                (None, None, None) => {
                    return Ok(Certificate {
                        records,
                        bottom: wire.element,
                    })
                }
                _ => {
                    return Err(D::Error::custom(format!(
                        "rank {} needs all of lift, kernel and below, or none",
                        wire.rank
                    )))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsmap::membership;
    use crate::lift::certify;

    #[test]
    fn poly_wire_format() {
        let f = LaurentPoly::from_terms(2, [(vec![0, 0], 1), (vec![1, 1], -1)]).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"terms":[{"exp":[0,0],"coef":"1"},{"exp":[1,1],"coef":"-1"}]}"#
        );
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), f);
        let g: LaurentPoly = serde_json::from_str(
            r#"{"n":1,"terms":[{"exp":[2],"coef":3},{"exp":[2],"coef":"-3"}]}"#,
        )
        .unwrap();
        assert!(g.is_zero());
        assert!(
            serde_json::from_str::<LaurentPoly>(r#"{"n":2,"terms":[{"exp":[1],"coef":"1"}]}"#)
                .is_err()
        );
        assert!(
            serde_json::from_str::<LaurentPoly>(r#"{"n":1,"terms":[{"exp":[1],"coef":"x"}]}"#)
                .is_err()
        );
    }

    #[test]
    fn big_coefficients_survive() {
        let big = BigInt::from_str("123456789012345678901234567890").unwrap();
        let f = LaurentPoly::constant(1, big);
        let back: LaurentPoly = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn classes_and_reports() {
        let k = KClass::basis(DominantWeight::new(vec![1, -1]).unwrap()).scaled(&BigInt::from(-2));
        let s = serde_json::to_string(&k).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"basis":"thinkac","coeffs":[{"weight":[1,-1],"coef":"-2"}]}"#
        );
        assert_eq!(serde_json::from_str::<KClass>(&s).unwrap(), k);
        assert!(serde_json::from_str::<KClass>(
            r#"{"n":2,"basis":"thinkac","coeffs":[{"weight":[0,1],"coef":"1"}]}"#
        )
        .is_err());

        let x = LaurentPoly::from_terms(2, [(vec![1, 0], 1), (vec![0, 1], 1)]).unwrap();
        let v = serde_json::to_value(membership(&x)).unwrap();
        assert_eq!(v["member"], false);
        assert_eq!(v["witness"]["t_exp"], 1);
        let back: MembershipReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, membership(&x));
    }

    #[test]
    fn certificate_roundtrip() {
        let f = LaurentPoly::from_terms(3, [(vec![1, 1, 1], 1)]).unwrap();
        let cert = certify(&f).unwrap();
        let s = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&s).unwrap();
        assert_eq!(back, cert);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["rank"], 3);
        assert_eq!(v["below"]["rank"], 1);
        assert!(v["below"].get("lift").is_none());
    }
}
