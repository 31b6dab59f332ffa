use std::collections::BTreeMap;

use paraprob::bd::{eval_supports, Belnap};
use paraprob::gen;
use paraprob::hilbert::bd_formulas;
use paraprob::{bd_entails, extension, BdFormula, BdModel, ExtensionKind, World};
use proptest::prelude::*;

/// Every model with one or two worlds over `vars`.
fn small_models(vars: &[String]) -> Vec<BdModel> {
    let worlds: Vec<Vec<Belnap>> = (0..1usize << (2 * vars.len()))
        .map(|code| (0..vars.len()).map(|i| Belnap::ALL[(code >> (2 * i)) & 3]).collect())
        .collect();
    let world = |id: &str, vals: &[Belnap]| {
        let mut w = World::new(id);
        for (p, v) in vars.iter().zip(vals) {
            let (t, f) = v.supports();
            if t {
                w.plus.insert(p.clone());
            }
            if f {
                w.minus.insert(p.clone());
            }
        }
        w
    };
    let mut out = Vec::new();
    for a in &worlds {
        out.push(BdModel::new(vec![world("w0", a)]).unwrap());
        for b in &worlds {
            out.push(BdModel::new(vec![world("w0", a), world("w1", b)]).unwrap());
        }
    }
    out
}

/// Entailment as preservation of both supports across all worlds of all
/// small models.
fn entails_by_models(models: &[BdModel], f: &BdFormula, g: &BdFormula) -> bool {
    models.iter().all(|m| {
        m.support_table(f)
            .into_iter()
            .zip(m.support_table(g))
            .all(|((tf, ff), (tg, fg))| (!tf || tg) && (!fg || ff))
    })
}

#[test]
fn one_world_reduction() {
    let vars = gen::vars(2);
    let models = small_models(&vars);
    let pool = bd_formulas(&vars, 1);
    for f in &pool {
        for g in &pool {
            assert_eq!(bd_entails(f, g).unwrap(), entails_by_models(&models, f, g), "{f} |= {g}");
        }
    }
}

#[test]
fn no_bd_tautologies_or_contradictions() {
    let vars = gen::vars(1);
    for f in bd_formulas(&vars, 3) {
        let mut seen = [false; 2];
        for v in Belnap::ALL {
            let val = BTreeMap::from([("p", v)]);
            let (t, _) = eval_supports(&f, &|p| val[p]);
            seen[usize::from(t)] = true;
        }
        assert!(seen[0] && seen[1], "{f} has a constant truth support");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn de_morgan(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let vars = gen::vars(3);
        let m = gen::model(&mut rng, &vars, 5);
        let f = gen::bd_formula(&mut rng, &vars, 3);
        let g = gen::bd_formula(&mut rng, &vars, 3);
        for kind in ExtensionKind::ALL {
            prop_assert_eq!(
                extension(&m, &f.clone().and(g.clone()).neg(), kind),
                extension(&m, &f.clone().neg().or(g.clone().neg()), kind)
            );
        }
    }

    #[test]
    fn parts_partition_the_worlds(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let vars = gen::vars(2);
        let m = gen::model(&mut rng, &vars, 6);
        let f = gen::bd_formula(&mut rng, &vars, 3);
        let mut all: Vec<String> = ExtensionKind::PARTS
            .into_iter()
            .flat_map(|k| extension(&m, &f, k))
            .collect();
        all.sort();
        let ids: Vec<String> = m.world_ids().map(str::to_string).collect();
        prop_assert_eq!(all, ids);
    }
}
