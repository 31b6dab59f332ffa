//! Seeded random formulas, models and weights.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bd::{BdModel, World};
use crate::luk::{LukValue, PairValue, WorldWeights};
use crate::rational::Rational;
use crate::syntax::{BdFormula, BinOp, Dialect, Modality, OuterFormula, UnaryOp};

pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn vars(n: usize) -> Vec<String> {
    const NAMES: [&str; 6] = ["p", "q", "r", "s", "t", "v"];
    (0..n)
        .map(|i| NAMES.get(i).map_or_else(|| format!("p{i}"), |s| s.to_string()))
        .collect()
}

/// A BD formula of connective depth at most `depth`.
pub fn bd_formula(rng: &mut GenRng, vars: &[String], depth: usize) -> BdFormula {
    if depth == 0 || rng.gen_bool(0.3) {
        return BdFormula::var(vars.choose(rng).expect("nonempty vocabulary").clone());
    }
    match rng.gen_range(0..3) {
        0 => bd_formula(rng, vars, depth - 1).neg(),
        1 => bd_formula(rng, vars, depth - 1).and(bd_formula(rng, vars, depth - 1)),
        _ => bd_formula(rng, vars, depth - 1).or(bd_formula(rng, vars, depth - 1)),
    }
}

/// An outer formula of connective depth at most `depth` in `dialect`, with
/// bodies of depth at most `bd_depth`. Plain Ł formulas use atoms `a`,
/// `b`, `c`.
pub fn outer_formula(
    rng: &mut GenRng,
    dialect: Dialect,
    vars: &[String],
    depth: usize,
    bd_depth: usize,
) -> OuterFormula {
    if depth == 0 || rng.gen_bool(0.25) {
        return match dialect {
            Dialect::Pm => OuterFormula::modal(Modality::Pr, bd_formula(rng, vars, bd_depth)),
            Dialect::Four => OuterFormula::modal(
                *Modality::FOUR.choose(rng).expect("four"),
                bd_formula(rng, vars, bd_depth),
            ),
            Dialect::PlainLuk => OuterFormula::atom(*["a", "b", "c"].choose(rng).expect("atoms")),
        };
    }
    let sub = |rng: &mut GenRng| outer_formula(rng, dialect, vars, depth - 1, bd_depth);
    let unary: &[UnaryOp] = match dialect {
        Dialect::Four => &[UnaryOp::LukNeg, UnaryOp::Delta],
        _ => &[UnaryOp::ParNeg, UnaryOp::LukNeg, UnaryOp::Delta],
    };
    if rng.gen_bool(0.35) {
        let op = *unary.choose(rng).expect("unary");
        OuterFormula::unary(op, sub(rng))
    } else {
        let op = *BinOp::ALL.choose(rng).expect("binary");
        let a = sub(rng);
        OuterFormula::bin(op, a, sub(rng))
    }
}

/// A rational in `[0,1]` with denominator dividing `denom`.
pub fn unit_rational(rng: &mut GenRng, denom: i64) -> Rational {
    Rational::new(BigInt::from(rng.gen_range(0..=denom)), BigInt::from(denom))
}

pub fn pair_value(rng: &mut GenRng, denom: i64) -> PairValue {
    PairValue::new(
        LukValue::new(unit_rational(rng, denom)).expect("unit"),
        LukValue::new(unit_rational(rng, denom)).expect("unit"),
    )
}

/// A model with `1..=max_worlds` worlds, each variable independently one of
/// the four Belnap values at each world.
pub fn model(rng: &mut GenRng, vars: &[String], max_worlds: usize) -> BdModel {
    let n = rng.gen_range(1..=max_worlds);
    let worlds = (0..n)
        .map(|i| {
            let mut w = World::new(format!("w{i}"));
            for p in vars {
                if rng.gen_bool(0.5) {
                    w.plus.insert(p.clone());
                }
                if rng.gen_bool(0.5) {
                    w.minus.insert(p.clone());
                }
            }
            w
        })
        .collect();
    BdModel::new(worlds).expect("distinct ids")
}

/// Random weights with small denominators; some worlds may get weight 0.
pub fn weights(rng: &mut GenRng, model: &BdModel) -> WorldWeights {
    let raw: Vec<i64> = loop {
        let raw: Vec<i64> = model.worlds().iter().map(|_| rng.gen_range(0..=6)).collect();
        if raw.iter().sum::<i64>() > 0 {
            break raw;
        }
    };
    let total: i64 = raw.iter().sum();
    let map: BTreeMap<String, Rational> = model
        .world_ids()
        .zip(raw)
        .map(|(id, r)| (id.to_string(), Rational::new(r.into(), total.into())))
        .collect();
    WorldWeights::new(model, map).expect("normalised")
}
