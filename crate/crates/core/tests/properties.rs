use num_bigint::BigInt;
use proptest::prelude::*;

use perisym::dsmap::{ds_eval, kernel_decompose, membership, quotient_reduce, Quotient};
use perisym::laurent::{straighten_alternant, Straightened};
use perisym::lift::{lift, window_basis, Window};
use perisym::schur::{schur_expand, SchurExpansion};
use perisym::thinkac::supertrace_twist;
use perisym::weights::{parity_of, rho, WeightDiagram};
use perisym::{DominantWeight, KClass, LaurentPoly};

fn poly(n: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, n), -5i64..=5), 0..6)
        .prop_map(move |terms| LaurentPoly::from_terms(n, terms).unwrap())
}

fn nonzero_poly(n: usize) -> impl Strategy<Value = LaurentPoly> {
    poly(n).prop_filter("nonzero", |p| !p.is_zero())
}

fn weight(n: usize) -> impl Strategy<Value = DominantWeight> {
    prop::collection::vec(-4i64..=4, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        DominantWeight::new(v).unwrap()
    })
}

fn class(n: usize) -> impl Strategy<Value = KClass> {
    prop::collection::vec((weight(n), -4i64..=4), 0..4).prop_map(move |items| {
        KClass::from_coeffs(n, items.into_iter().map(|(w, c)| (w, BigInt::from(c)))).unwrap()
    })
}

fn symmetrize(f: &LaurentPoly) -> LaurentPoly {
    let n = f.arity();
    let mut out = LaurentPoly::zero(n);
    for (perm, _) in perisym::laurent::permutations(n) {
        out += &f.permuted(&perm);
    }
    out
}

/// Random members of `J_n` from the window spanning set.
fn member(n: usize) -> impl Strategy<Value = LaurentPoly> {
    let basis = window_basis(n, Window::new(2));
    let len = basis.len();
    prop::collection::vec((0..len, -3i64..=3), 1..4).prop_map(move |picks| {
        let mut f = LaurentPoly::zero(n);
        for (i, c) in picks {
            f += &basis[i].scale(&BigInt::from(c));
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_has_no_zero_terms(p in poly(3)) {
        prop_assert!(p.terms().all(|(_, c)| *c != BigInt::from(0)));
        let exps: Vec<_> = p.terms().map(|(e, _)| e.clone()).collect();
        prop_assert!(exps.windows(2).all(|w| w[0] < w[1]));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn division_undoes_multiplication(f in poly(2), g in nonzero_poly(2)) {
        let fg = &f * &g;
        prop_assert_eq!(fg.exact_divide(&g).unwrap(), f);
    }

    #[test]
    fn slices_are_multiplicative(f in poly(3), g in poly(3)) {
        let lhs = (&f * &g).substitute_pair(0, 2).unwrap();
        let rhs = &f.substitute_pair(0, 2).unwrap() * &g.substitute_pair(0, 2).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn straightening_matches_antisymmetrization(nu in prop::collection::vec(-4i64..=4, 1..=4)) {
        let n = nu.len();
        let a_nu = LaurentPoly::monomial(nu.clone(), 1).antisymmetrize();
        match straighten_alternant(&nu) {
            Straightened::Zero => prop_assert!(a_nu.is_zero()),
            Straightened::Term { sign, weight } => {
                let top: Vec<i64> = weight.entries().iter().zip(rho(n)).map(|(a, b)| a + b).collect();
                let a_top = LaurentPoly::monomial(top, sign).antisymmetrize();
                prop_assert_eq!(a_nu, a_top);
            }
        }
    }

    #[test]
    fn parity_is_rounded_half_sum(v in prop::collection::vec(-20i64..=20, 0..5)) {
        let s: i64 = v.iter().sum();
        let ceil_half = if s >= 0 { (s + 1) / 2 } else { -((-s) / 2) };
        prop_assert_eq!(i64::from(parity_of(&v)), ceil_half.rem_euclid(2));
    }

    #[test]
    fn diagrams_roundtrip(w in weight(4)) {
        let d = w.to_diagram();
        prop_assert!(d.beads().windows(2).all(|p| p[0] > p[1]));
        prop_assert_eq!(DominantWeight::from_diagram(&d), w.clone());
        prop_assert_eq!(WeightDiagram::new(d.beads().to_vec()).unwrap(), d);
    }

    #[test]
    fn ds_is_a_ring_homomorphism(f in member(3), g in member(3)) {
        let (df, dg) = (ds_eval(&f).unwrap(), ds_eval(&g).unwrap());
        prop_assert_eq!(ds_eval(&(&f + &g)).unwrap(), &df + &dg);
        prop_assert_eq!(ds_eval(&(&f * &g)).unwrap(), &df * &dg);
        prop_assert!(membership(&(&f * &g)).is_member());
    }

    #[test]
    fn twist_is_invertible_and_multiplicative(c in class(2), a in -3i64..=3) {
        prop_assert_eq!(supertrace_twist(&supertrace_twist(&c, a), -a), c.clone());
        prop_assert_eq!(
            supertrace_twist(&c, a).supercharacter(),
            &c.supercharacter() * &LaurentPoly::supertrace_power(2, a)
        );
    }

    #[test]
    fn kernel_decomposition_inverts_supercharacter(c in class(3)) {
        prop_assert_eq!(kernel_decompose(&c.supercharacter()).unwrap(), c);
    }

    #[test]
    fn schur_expansion_roundtrips(items in prop::collection::vec((weight(3), -4i64..=4), 0..4)) {
        let e = SchurExpansion::from_coeffs(3, items.into_iter().map(|(w, c)| (w, BigInt::from(c)))).unwrap();
        prop_assert_eq!(schur_expand(&e.to_laurent()).unwrap(), e);
    }

    #[test]
    fn quotients_are_idempotent(f in poly(2)) {
        let f = symmetrize(&f);
        for which in [Quotient::SpAlgebra, Quotient::SpGroup] {
            let q = quotient_reduce(&f, which).unwrap();
            prop_assert_eq!(quotient_reduce(&q, which).unwrap(), q);
        }
    }

    #[test]
    fn lifting_is_deterministic_and_correct(h in member(1)) {
        let a = lift(&h, 3, 12).unwrap();
        let b = lift(&h, 3, 12).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(membership(&a).is_member());
        prop_assert_eq!(ds_eval(&a).unwrap(), h);
    }

    #[test]
    fn json_roundtrip(p in poly(3), c in class(2)) {
        let back: LaurentPoly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        prop_assert_eq!(back, p);
        let back: KClass = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        prop_assert_eq!(back, c);
    }
}
