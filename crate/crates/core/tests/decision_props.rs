mod common;

use std::collections::BTreeSet;

use common::{recheck_four, recheck_pm};
use paraprob::decision::{entailment_formula, star_transform};
use paraprob::gen;
use paraprob::{
    decide_entails_four, decide_sat_four, decide_sat_pm, decide_valid_four, decide_valid_pm,
    eval_four, eval_pm, nnf, parse_outer, BdModel, DecideOptions, Dialect, LukValue, OuterFormula,
    PairValue, Verdict, World,
};
use proptest::prelude::*;

fn one_zero() -> PairValue {
    PairValue::new(LukValue::one(), LukValue::zero())
}

/// Adds `p*` with the supports of `¬p` for every starred `p`.
fn extend_with_stars(m: &BdModel, stars: &[(String, String)]) -> BdModel {
    let worlds = m
        .worlds()
        .iter()
        .map(|w| {
            let mut out: World = w.clone();
            for (p, s) in stars {
                if w.minus.contains(p) {
                    out.plus.insert(s.clone());
                }
                if w.plus.contains(p) {
                    out.minus.insert(s.clone());
                }
            }
            out
        })
        .collect();
    BdModel::new(worlds).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn star_transform_is_a_renaming(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let vars = gen::vars(2);
        let f = nnf(&gen::outer_formula(&mut rng, Dialect::Pm, &vars, 3, 3));
        let (starred, map) = star_transform(&f).unwrap();
        let m = gen::model(&mut rng, &vars, 4);
        let w = gen::weights(&mut rng, &m);
        let stars: Vec<(String, String)> = map.stars.clone().into_iter().collect();
        let ext = extend_with_stars(&m, &stars);
        prop_assert_eq!(eval_pm(&m, &w, &f).unwrap(), eval_pm(&ext, &w, &starred).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn pm_verdicts_hold_up(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let vars = gen::vars(2);
        let f = gen::outer_formula(&mut rng, Dialect::Pm, &vars, 3, 1);
        let opts = DecideOptions::default();
        let v = decide_valid_pm(&f, &opts).unwrap();
        prop_assert_eq!(recheck_pm(&f, &v), Ok(()));
        if v == Verdict::Valid {
            for _ in 0..50 {
                let m = gen::model(&mut rng, &vars, 4);
                let w = gen::weights(&mut rng, &m);
                prop_assert_eq!(eval_pm(&m, &w, &f).unwrap(), one_zero(), "{}", f);
            }
        }
        let s = decide_sat_pm(&f, &opts).unwrap();
        prop_assert_eq!(recheck_pm(&f, &s), Ok(()));
        // valid formulas are satisfiable
        prop_assert!(v != Verdict::Valid || s.is_positive());
        let strict = DecideOptions { require_e2_zero: true, ..DecideOptions::default() };
        let z = decide_sat_pm(&f, &strict).unwrap();
        if let Some(w) = z.witness() {
            prop_assert_eq!(eval_pm(&w.model, &w.weights, &f).unwrap(), one_zero());
        }
        prop_assert!(!z.is_positive() || s.is_positive());
    }

    #[test]
    fn four_verdicts_hold_up(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let vars = gen::vars(2);
        let f = gen::outer_formula(&mut rng, Dialect::Four, &vars, 3, 1);
        let opts = DecideOptions::default();
        let v = decide_valid_four(&f, &opts).unwrap();
        prop_assert_eq!(recheck_four(&f, &v), Ok(()));
        if v == Verdict::Valid {
            for _ in 0..50 {
                let m = gen::model(&mut rng, &vars, 4);
                let w = gen::weights(&mut rng, &m);
                prop_assert!(eval_four(&m, &w, &f).unwrap().is_one(), "{}", f);
            }
        }
        let s = decide_sat_four(&f, &opts).unwrap();
        prop_assert_eq!(recheck_four(&f, &s), Ok(()));
    }

    // Entailment against a random search for countermodels.
    #[test]
    fn entailment_has_no_sampled_countermodel(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let vars = gen::vars(2);
        let premises: Vec<OuterFormula> =
            (0..2).map(|_| gen::outer_formula(&mut rng, Dialect::Four, &vars, 1, 1)).collect();
        let goal = gen::outer_formula(&mut rng, Dialect::Four, &vars, 2, 1);
        let v = decide_entails_four(&premises, &goal, &DecideOptions::default()).unwrap();
        match &v {
            Verdict::Valid => {
                for _ in 0..100 {
                    let m = gen::model(&mut rng, &vars, 3);
                    let w = gen::weights(&mut rng, &m);
                    let all_one = premises.iter().all(|g| eval_four(&m, &w, g).unwrap().is_one());
                    prop_assert!(!all_one || eval_four(&m, &w, &goal).unwrap().is_one());
                }
            }
            Verdict::Invalid(w) => {
                for g in &premises {
                    prop_assert!(eval_four(&w.model, &w.weights, g).unwrap().is_one());
                }
                prop_assert!(!eval_four(&w.model, &w.weights, &goal).unwrap().is_one());
            }
            other => prop_assert!(false, "unexpected verdict {}", other.label()),
        }
    }
}

#[test]
fn constructed_validities_are_one_zero_everywhere() {
    let mut rng = gen::rng(11);
    let vars = gen::vars(2);
    let opts = DecideOptions::default();
    for _ in 0..10 {
        let a = gen::outer_formula(&mut rng, Dialect::Pm, &vars, 2, 1);
        let b = gen::outer_formula(&mut rng, Dialect::Pm, &vars, 1, 1);
        for f in [
            a.clone().implies(a.clone()),
            a.clone().strong(b.clone()).implies(a.clone()),
            a.clone().delta().implies(a.clone()),
            a.clone().par_neg().par_neg().iff(a.clone()),
        ] {
            assert_eq!(decide_valid_pm(&f, &opts).unwrap(), Verdict::Valid, "{f}");
            for _ in 0..1000 {
                let m = gen::model(&mut rng, &vars, 4);
                let w = gen::weights(&mut rng, &m);
                assert_eq!(eval_pm(&m, &w, &f).unwrap(), one_zero(), "{f}");
            }
        }
    }
}

#[test]
fn entailment_reduces_to_a_delta_implication() {
    let p = parse_outer("Bl{p}", Dialect::Four).unwrap();
    let g = parse_outer("Bl{p} (+) Cf{p}", Dialect::Four).unwrap();
    assert_eq!(entailment_formula(&[p.clone()], &g), p.clone().delta().implies(g.clone()));
    let opts = DecideOptions::default();
    assert_eq!(decide_entails_four(&[p.clone()], &g, &opts).unwrap(), Verdict::Valid);
    assert!(matches!(decide_entails_four(&[g], &p, &opts).unwrap(), Verdict::Invalid(_)));
}

#[test]
fn variable_cap_is_a_resource_error() {
    let names: Vec<String> = (0..5).map(|i| format!("v{i}")).collect();
    let body = names.join(" & ");
    let f = parse_outer(&format!("Pr{{{body}}}"), Dialect::Pm).unwrap();
    let opts = DecideOptions { max_vars: 4, ..DecideOptions::default() };
    assert!(decide_valid_pm(&f, &opts).unwrap_err().is_resource_cap());
    let used: BTreeSet<String> = f.props();
    assert_eq!(used.len(), 5);
}
