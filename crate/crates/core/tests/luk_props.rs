use std::collections::BTreeSet;

use paraprob::gen;
use paraprob::luk::{dual_model, measure_of};
use paraprob::{eval_pm, Dialect, ExtensionKind, LukValue, OuterFormula, PairValue, Rational};
use proptest::prelude::*;

fn unit() -> impl Strategy<Value = LukValue> {
    (1i64..13).prop_flat_map(|d| (0..=d).prop_map(move |n| LukValue::new(Rational::new(n.into(), d.into())).unwrap()))
}

fn one_zero() -> PairValue {
    PairValue::new(LukValue::one(), LukValue::zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn derived_operations_match_definitions(a in unit(), b in unit()) {
        prop_assert_eq!(a.plus(&b), a.neg().implies(&b));
        prop_assert_eq!(a.strong(&b), a.implies(&b.neg()).neg());
        prop_assert_eq!(a.minus(&b), a.strong(&b.neg()));
        prop_assert_eq!(LukValue::max(&a, &b), a.implies(&b).implies(&b));
        prop_assert_eq!(LukValue::min(&a, &b), LukValue::max(&a.neg(), &b.neg()).neg());
        prop_assert_eq!(a.iff(&b), LukValue::min(&a.implies(&b), &b.implies(&a)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn measures_partition_and_bridge(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let vars = gen::vars(3);
        let m = gen::model(&mut rng, &vars, 5);
        let w = gen::weights(&mut rng, &m);
        let f = gen::bd_formula(&mut rng, &vars, 3);
        let mu = |k| measure_of(&m, &w, &f, k).unwrap();
        use ExtensionKind::*;
        prop_assert_eq!(mu(B) + mu(D) + mu(C) + mu(U), Rational::from_integer(1.into()));
        prop_assert_eq!(mu(Plus), mu(B) + mu(C));
        prop_assert_eq!(mu(Minus), mu(D) + mu(C));
    }

    #[test]
    fn dual_model_swaps_and_complements(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let vars = gen::vars(2);
        let f = gen::outer_formula(&mut rng, Dialect::Pm, &vars, 4, 2);
        let m = gen::model(&mut rng, &vars, 4);
        let w = gen::weights(&mut rng, &m);
        // the dual must cover every variable of f, so make sure m mentions them
        let covered: BTreeSet<String> = m.variables();
        prop_assume!(f.props().is_subset(&covered));
        let e = eval_pm(&m, &w, &f).unwrap();
        let (dm, dw) = dual_model(&m, &w).unwrap();
        prop_assert_eq!(eval_pm(&dm, &dw, &f).unwrap(), PairValue::new(e.falsity.neg(), e.truth.neg()));
    }

    #[test]
    fn commutation_identities_evaluate_to_one_zero(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let vars = gen::vars(2);
        let a = gen::outer_formula(&mut rng, Dialect::Pm, &vars, 2, 1);
        let b = gen::outer_formula(&mut rng, Dialect::Pm, &vars, 2, 1);
        let m = gen::model(&mut rng, &vars, 4);
        let w = gen::weights(&mut rng, &m);
        let nt = |x: OuterFormula| x.luk_neg().par_neg();
        let identities = [
            nt(a.clone().par_neg()).iff(a.clone().luk_neg().par_neg().par_neg()),
            nt(a.clone().luk_neg()).iff(nt(a.clone()).luk_neg()),
            nt(a.clone().delta()).iff(nt(a.clone()).delta()),
            nt(a.clone().implies(b.clone())).iff(nt(a.clone()).implies(nt(b.clone()))),
        ];
        for f in identities {
            prop_assert_eq!(eval_pm(&m, &w, &f).unwrap(), one_zero(), "{}", f);
        }
    }
}
