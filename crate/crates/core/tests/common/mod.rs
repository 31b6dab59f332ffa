#![allow(dead_code)]

pub mod fm;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use paraprob::decision::{abstract_atoms, star_transform};
use paraprob::gen::GenRng;
use paraprob::hilbert::bd_formulas;
use paraprob::lp::{AffineTerm, LinConstraint, LinVar, Relation};
use paraprob::{
    eval_four, eval_pm, nnf, to_pm, BinOp, Modality, OuterFormula, Rational, UnaryOp, Verdict,
};
use rand::Rng;

pub const EXAMPLE_ONE: &str = "\
world w0 { +p -p }
world w1 { -p -q }
weight w0 2/3
weight w1 1/3
";

/// A random system over at most `max_vars` variables with at most
/// `max_rows` rows of one to three terms each.
pub fn random_system(rng: &mut GenRng, max_vars: usize, max_rows: usize) -> Vec<LinConstraint> {
    let n = rng.gen_range(1..=max_vars);
    let m = rng.gen_range(1..=max_rows);
    (0..m)
        .map(|_| {
            let mut t = AffineTerm::constant(Rational::new(
                BigInt::from(rng.gen_range(-4..=4)),
                BigInt::from(rng.gen_range(1..=2)),
            ));
            for _ in 0..rng.gen_range(1..=3) {
                let v = LinVar(format!("x{}", rng.gen_range(0..n)));
                let mut c = 0;
                while c == 0 {
                    c = rng.gen_range(-3..=3);
                }
                t.add_term(&v, &Rational::from_integer(c.into()));
            }
            let rel = match rng.gen_range(0..20) {
                0..=2 => Relation::Eq,
                3..=10 => Relation::Lt,
                _ => Relation::Le,
            };
            LinConstraint::new(t, rel, AffineTerm::default())
        })
        .collect()
}

#[derive(Debug, Clone)]
enum Shape {
    Leaf,
    Unary(UnaryOp, Box<Shape>),
    Bin(BinOp, Box<Shape>, Box<Shape>),
}

/// Every connective shape of depth exactly `d`.
fn exact_shapes(d: usize, unary: &[UnaryOp]) -> Vec<Shape> {
    if d == 0 {
        return vec![Shape::Leaf];
    }
    let below: Vec<Shape> = (0..d).flat_map(|k| exact_shapes(k, unary)).collect();
    let top = exact_shapes(d - 1, unary);
    let depth = |s: &Shape| -> usize {
        fn go(s: &Shape) -> usize {
            match s {
                Shape::Leaf => 0,
                Shape::Unary(_, a) => 1 + go(a),
                Shape::Bin(_, a, b) => 1 + go(a).max(go(b)),
            }
        }
        go(s)
    };
    let mut out = Vec::new();
    for op in unary {
        for s in &top {
            out.push(Shape::Unary(*op, Box::new(s.clone())));
        }
    }
    for op in BinOp::ALL {
        for a in &below {
            for b in &below {
                if depth(a).max(depth(b)) == d - 1 {
                    out.push(Shape::Bin(op, Box::new(a.clone()), Box::new(b.clone())));
                }
            }
        }
    }
    out
}

fn fill(s: &Shape, atoms: &[OuterFormula], next: &mut usize) -> OuterFormula {
    match s {
        Shape::Leaf => {
            let a = atoms[*next % atoms.len()].clone();
            *next += 1;
            a
        }
        Shape::Unary(op, a) => OuterFormula::unary(*op, fill(a, atoms, next)),
        Shape::Bin(op, a, b) => {
            let x = fill(a, atoms, next);
            OuterFormula::bin(*op, x, fill(b, atoms, next))
        }
    }
}

/// Outer formulas of connective depth at most 2 over probability atoms whose
/// bodies are the BD formulas of depth at most 1 on {p, q}: every shape,
/// leaves filled round-robin from the atom pool, then every `stride`-th
/// formula kept.
pub fn capped_family(modalities: &[Modality], unary: &[UnaryOp], stride: usize) -> Vec<OuterFormula> {
    let vars = vec!["p".to_string(), "q".to_string()];
    let bodies = bd_formulas(&vars, 1);
    let atoms: Vec<OuterFormula> = bodies
        .iter()
        .flat_map(|b| modalities.iter().map(move |m| OuterFormula::modal(*m, b.clone())))
        .collect();
    let shapes: Vec<Shape> = (0..=2).flat_map(|d| exact_shapes(d, unary)).collect();
    let mut next = 0;
    let all: Vec<OuterFormula> = shapes.iter().map(|s| fill(s, &atoms, &mut next)).collect();
    let mut seen = BTreeSet::new();
    all.into_iter()
        .step_by(stride.max(1))
        .filter(|f| seen.insert(f.clone()))
        .collect()
}

/// Number of distinct probability atoms the decision pipeline sees.
pub fn abstracted_atom_count(f: &OuterFormula) -> usize {
    let (starred, _) = star_transform(&nnf(f)).expect("nnf output is ¬-free");
    abstract_atoms(&starred).expect("Pr atoms only").1.bodies.len()
}

/// Re-evaluates a PM witness: invalid means truth below 1, sat means truth 1.
/// Also checks the world count against `atoms + 1`.
pub fn recheck_pm(f: &OuterFormula, v: &Verdict) -> Result<(), String> {
    let Some(w) = v.witness() else { return Ok(()) };
    let e = eval_pm(&w.model, &w.weights, f).map_err(|e| e.to_string())?;
    let ok = match v {
        Verdict::Invalid(_) => !e.truth.is_one(),
        _ => e.truth.is_one(),
    };
    if !ok {
        return Err(format!("witness for `{f}` evaluates to {e}"));
    }
    let n = abstracted_atom_count(f);
    if w.model.worlds().len() > n + 1 {
        return Err(format!(
            "witness for `{f}` has {} worlds for {n} atoms",
            w.model.worlds().len()
        ));
    }
    Ok(())
}

pub fn recheck_four(f: &OuterFormula, v: &Verdict) -> Result<(), String> {
    let Some(w) = v.witness() else { return Ok(()) };
    let e = eval_four(&w.model, &w.weights, f).map_err(|e| e.to_string())?;
    let ok = match v {
        Verdict::Invalid(_) => !e.is_one(),
        _ => e.is_one(),
    };
    if !ok {
        return Err(format!("witness for `{f}` evaluates to {e}"));
    }
    let n = abstracted_atom_count(&to_pm(f).map_err(|e| e.to_string())?);
    if w.model.worlds().len() > n + 1 {
        return Err(format!(
            "witness for `{f}` has {} worlds for {n} atoms",
            w.model.worlds().len()
        ));
    }
    Ok(())
}
