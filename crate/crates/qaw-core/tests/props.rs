//! Structural properties of the arithmetic and ring layers on randomized
//! inputs: field axioms for the rationals, ring axioms and the operator ↔
//! polynomial action compatibility for the skew ring.

use std::str::FromStr;
use std::sync::Arc;

use proptest::prelude::*;

use qaw_core::{q_commutator, qpoch, sample_point, LaurentPoly, Profile, Rat, SkewLaurentOp};

fn rat() -> impl Strategy<Value = Rat> {
    (-999i64..=999, 1i64..=999).prop_map(|(n, d)| Rat::new(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

type OpTerms = Vec<(i64, i64, Rat)>;

fn op_terms() -> impl Strategy<Value = OpTerms> {
    proptest::collection::vec(((-2i64..=2), (-2i64..=2), rat()), 0..=4)
}

fn poly_terms() -> impl Strategy<Value = Vec<(i64, Rat)>> {
    proptest::collection::vec(((-3i64..=3), rat()), 0..=4)
}

fn build_op(p: &Arc<qaw_core::ParamPoint>, terms: &OpTerms) -> SkewLaurentOp {
    let mut op = SkewLaurentOp::zero(p);
    for (j, k, c) in terms {
        op = op + SkewLaurentOp::monomial(p, *j, *k, c.clone());
    }
    op
}

fn build_poly(terms: &[(i64, Rat)]) -> LaurentPoly {
    terms.iter().cloned().collect()
}

proptest! {
    #[test]
    fn rat_field_axioms(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + Rat::zero(), a.clone());
        prop_assert_eq!(&a * Rat::one(), a.clone());
        prop_assert_eq!(&a - &a, Rat::zero());
    }

    #[test]
    fn rat_division_inverts(a in rat(), b in nonzero_rat()) {
        prop_assert_eq!((&a / &b) * &b, a.clone());
        prop_assert_eq!(&b * &b.inv(), Rat::one());
    }

    #[test]
    fn rat_display_parse_round_trip(a in rat()) {
        prop_assert_eq!(Rat::from_str(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn rat_pow_laws(a in nonzero_rat(), e1 in -6i64..=6, e2 in -6i64..=6) {
        prop_assert_eq!(a.pow(e1) * a.pow(e2), a.pow(e1 + e2));
        prop_assert_eq!(a.pow(e1).pow(e2), a.pow(e1 * e2));
        prop_assert_eq!(a.pow(-e1), a.pow(e1).inv());
    }

    #[test]
    fn rat_sqrt_of_square(a in rat()) {
        prop_assert_eq!(a.pow(2).sqrt_exact(), Some(a.abs()));
    }

    #[test]
    fn qpoch_recurrence(a in rat(), q in rat(), n in 0u32..=6) {
        prop_assert_eq!(
            qpoch(&a, &q, n + 1),
            qpoch(&a, &q, n) * (Rat::one() - &a * q.pow(n as i64))
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn op_ring_axioms(ta in op_terms(), tb in op_terms(), tc in op_terms()) {
        let p = Arc::new(sample_point(1, Profile::General));
        let a = build_op(&p, &ta);
        let b = build_op(&p, &tb);
        let c = build_op(&p, &tc);
        let i = SkewLaurentOp::identity(&p);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!((&a + &b) * &c, &a * &c + &b * &c);
        prop_assert_eq!(&a * &i, a.clone());
        prop_assert_eq!(&i * &a, a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn op_application_is_a_module_action(ta in op_terms(), tb in op_terms(), tf in poly_terms()) {
        let p = Arc::new(sample_point(2, Profile::General));
        let a = build_op(&p, &ta);
        let b = build_op(&p, &tb);
        let f = build_poly(&tf);
        // composition in the ring matches composition of actions
        prop_assert_eq!((&a * &b).apply(&f), a.apply(&b.apply(&f)));
        prop_assert_eq!((&a + &b).apply(&f), a.apply(&f) + b.apply(&f));
    }

    #[test]
    fn q_commutator_antisymmetry(ta in op_terms(), tb in op_terms(), qq in nonzero_rat()) {
        let p = Arc::new(sample_point(3, Profile::General));
        let a = build_op(&p, &ta);
        let b = build_op(&p, &tb);
        prop_assert_eq!(
            q_commutator(&a, &b, &qq),
            -q_commutator(&b, &a, &qq.inv())
        );
    }

    #[test]
    fn poly_ring_axioms(tf in poly_terms(), tg in poly_terms(), th in poly_terms()) {
        let f = build_poly(&tf);
        let g = build_poly(&tg);
        let h = build_poly(&th);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!((&f * &g) * &h, &f * (&g * &h));
        prop_assert_eq!(&f * (&g + &h), &f * &g + &f * &h);
        prop_assert!((&f - &f).is_zero());
    }
}
