//! Validity and satisfiability for the ±-probability and four-probability
//! logics.
//!
//! The pipeline pushes outer `¬` into the probability atoms, replaces each
//! negated BD literal `¬p` by a fresh variable, abstracts every atom to a
//! propositional `qᵢ`, and runs the constraint tableau with extra rows
//! forcing the `qᵢ` values to come from one probability over classical
//! valuations of the (starred) variables. Any open branch yields a model.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::bd::{negation_normal_form, BdModel, World};
use crate::embed::{nnf, to_pm};
use crate::error::{Error, Result};
use crate::lp::{vertex_solution, AffineTerm, Assignment, Bounds, Feasibility, LinConstraint, LinVar, VarBounds};
use crate::luk::{eval_four, eval_pm, WorldWeights};
use crate::rational::Rational;
use crate::syntax::{check_dialect, BdFormula, Dialect, Modality, OuterFormula};
use crate::tableau::{atom_var, run, satisfiability_root, validity_root, Side, TableauOptions, TableauResult};

/// Default cap on starred variables for the exhaustive coherence system.
pub const DEFAULT_MAX_VARS: usize = 12;

/// `p ↦ p*` for every variable occurring negated in some body.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StarMap {
    pub stars: BTreeMap<String, String>,
}

impl StarMap {
    pub fn star_of(&self, p: &str) -> Option<&str> {
        self.stars.get(p).map(String::as_str)
    }
}

fn star_body(f: &BdFormula, stars: &BTreeMap<String, String>) -> BdFormula {
    match f {
        BdFormula::Var(_) => f.clone(),
        BdFormula::Neg(g) => match &**g {
            BdFormula::Var(p) => BdFormula::Var(stars[p].clone()),
            _ => unreachable!("body not in negation normal form"),
        },
        BdFormula::And(a, b) => star_body(a, stars).and(star_body(b, stars)),
        BdFormula::Or(a, b) => star_body(a, stars).or(star_body(b, stars)),
    }
}

fn negated_vars(f: &BdFormula, out: &mut BTreeSet<String>) {
    match f {
        BdFormula::Var(_) => {}
        BdFormula::Neg(g) => {
            if let BdFormula::Var(p) = &**g {
                out.insert(p.clone());
            }
        }
        BdFormula::And(a, b) | BdFormula::Or(a, b) => {
            negated_vars(a, out);
            negated_vars(b, out);
        }
    }
}

/// Puts every body in BD negation normal form and renames each negative
/// literal `¬p` to the positive variable `p*` (`pSTAR`, lengthened until
/// it is fresh).
pub fn star_transform(f: &OuterFormula) -> Result<(OuterFormula, StarMap)> {
    if f.contains_par_neg() {
        return Err(Error::Malformed("star transform needs a ¬-free outer formula".into()));
    }
    let normal = f.map_atoms(&mut |a| match a {
        OuterFormula::Modal(m, body) => OuterFormula::modal(*m, negation_normal_form(body)),
        other => other.clone(),
    });
    let taken = normal.props();
    let mut negated = BTreeSet::new();
    normal.for_each_atom(&mut |a| {
        if let OuterFormula::Modal(_, body) = a {
            negated_vars(body, &mut negated);
        }
    });
    let mut used: BTreeSet<String> = taken.clone();
    let mut stars = BTreeMap::new();
    for p in negated {
        let mut name = format!("{p}STAR");
        while used.contains(&name) {
            name.push_str("STAR");
        }
        used.insert(name.clone());
        stars.insert(p, name);
    }
    let out = normal.map_atoms(&mut |a| match a {
        OuterFormula::Modal(m, body) => OuterFormula::modal(*m, star_body(body, &stars)),
        other => other.clone(),
    });
    Ok((out, StarMap { stars }))
}

/// Distinct modal atoms replaced by propositional atoms `q1, q2, …` in order
/// of first occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomAbstraction {
    pub bodies: Vec<BdFormula>,
}

impl AtomAbstraction {
    pub fn name(i: usize) -> String {
        format!("q{}", i + 1)
    }

    /// The LP variable holding the value of `qᵢ`.
    pub fn z(i: usize) -> LinVar {
        atom_var(&OuterFormula::atom(Self::name(i)), Side::One)
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for b in &self.bodies {
            b.collect_props(&mut out);
        }
        out
    }
}

pub fn abstract_atoms(f: &OuterFormula) -> Result<(OuterFormula, AtomAbstraction)> {
    let mut bodies: Vec<BdFormula> = Vec::new();
    let mut bad = None;
    let out = f.map_atoms(&mut |a| match a {
        OuterFormula::Modal(Modality::Pr, body) => {
            let i = bodies.iter().position(|b| b == body).unwrap_or_else(|| {
                bodies.push(body.clone());
                bodies.len() - 1
            });
            OuterFormula::atom(AtomAbstraction::name(i))
        }
        other => {
            bad = Some(other.clone());
            other.clone()
        }
    });
    if let Some(a) = bad {
        return Err(Error::Malformed(format!("cannot abstract atom `{a}`")));
    }
    Ok((out, AtomAbstraction { bodies }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoherenceMode {
    /// Every classical valuation of the variables.
    Exhaustive { max_vars: usize },
    /// Only the given valuations (each the set of true variables).
    SparseGuess(Vec<BTreeSet<String>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherenceSystem {
    pub variables: Vec<String>,
    pub valuations: Vec<BTreeSet<String>>,
    /// `coefficients[i][k]`: body `i` is true under valuation `k`.
    pub coefficients: Vec<Vec<bool>>,
    pub constraints: Vec<LinConstraint>,
}

impl CoherenceSystem {
    pub fn u(valuation: &BTreeSet<String>) -> LinVar {
        let names: Vec<&str> = valuation.iter().map(String::as_str).collect();
        LinVar(format!("u{{{}}}", names.join(",")))
    }

    pub fn bounds(&self) -> Bounds {
        self.valuations
            .iter()
            .map(|v| (Self::u(v), VarBounds::nonnegative()))
            .collect()
    }
}

fn classical(f: &BdFormula, v: &BTreeSet<String>) -> bool {
    match f {
        BdFormula::Var(p) => v.contains(p),
        BdFormula::Neg(g) => !classical(g, v),
        BdFormula::And(a, b) => classical(a, v) && classical(b, v),
        BdFormula::Or(a, b) => classical(a, v) || classical(b, v),
    }
}

pub fn build_coherence(atoms: &AtomAbstraction, mode: &CoherenceMode) -> Result<CoherenceSystem> {
    let variables: Vec<String> = atoms.variables().into_iter().collect();
    let valuations: Vec<BTreeSet<String>> = match mode {
        CoherenceMode::Exhaustive { max_vars } => {
            if variables.len() > *max_vars {
                return Err(Error::TooManyVariables {
                    found: variables.len(),
                    cap: *max_vars,
                });
            }
            (0u64..1 << variables.len())
                .map(|mask| {
                    variables
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| mask >> k & 1 == 1)
                        .map(|(_, p)| p.clone())
                        .collect()
                })
                .collect()
        }
        CoherenceMode::SparseGuess(list) => list.clone(),
    };
    let coefficients: Vec<Vec<bool>> = atoms
        .bodies
        .iter()
        .map(|b| valuations.iter().map(|v| classical(b, v)).collect())
        .collect();
    let sum = |pick: &dyn Fn(usize) -> bool| {
        valuations
            .iter()
            .enumerate()
            .filter(|(k, _)| pick(*k))
            .fold(AffineTerm::default(), |t, (_, v)| t.plus(&AffineTerm::var(CoherenceSystem::u(v))))
    };
    let mut constraints = vec![LinConstraint::eq(
        sum(&|_| true),
        AffineTerm::constant(Rational::one()),
    )];
    for (i, row) in coefficients.iter().enumerate() {
        constraints.push(LinConstraint::eq(
            sum(&|k| row[k]),
            AffineTerm::var(AtomAbstraction::z(i)),
        ));
    }
    Ok(CoherenceSystem {
        variables,
        valuations,
        coefficients,
        constraints,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub model: BdModel,
    pub weights: WorldWeights,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Witness),
    Sat(Witness),
    Unsat,
}

impl Verdict {
    /// Valid or Sat.
    pub fn is_positive(&self) -> bool {
        matches!(self, Verdict::Valid | Verdict::Sat(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Invalid(w) | Verdict::Sat(w) => Some(w),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Valid => "VALID",
            Verdict::Invalid(_) => "INVALID",
            Verdict::Sat(_) => "SAT",
            Verdict::Unsat => "UNSAT",
        }
    }
}

#[derive(Debug, Clone)]
pub struct DecideOptions {
    pub max_vars: usize,
    pub max_nodes: usize,
    /// Satisfiability additionally demands a falsity value of 0.
    pub require_e2_zero: bool,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            max_vars: DEFAULT_MAX_VARS,
            max_nodes: 200_000,
            require_e2_zero: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Goal {
    Valid,
    Sat,
}

/// The abstracted problem and the data needed to read a model back.
struct Prepared {
    abstracted: OuterFormula,
    stars: StarMap,
    coherence: CoherenceSystem,
}

fn prepare(f: &OuterFormula, opts: &DecideOptions) -> Result<Prepared> {
    let (starred, stars) = star_transform(&nnf(f))?;
    let (abstracted, atoms) = abstract_atoms(&starred)?;
    let coherence = build_coherence(
        &atoms,
        &CoherenceMode::Exhaustive {
            max_vars: opts.max_vars,
        },
    )?;
    Ok(Prepared {
        abstracted,
        stars,
        coherence,
    })
}

/// Worlds are the valuations with positive weight in a basic solution of
/// the coherence rows at the branch's atom values; stars fold back into
/// falsity support.
fn assemble(p: &Prepared, x: &Assignment) -> Result<Witness> {
    let fixed: Vec<LinConstraint> = p
        .coherence
        .constraints
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i == 0 {
                return c.clone();
            }
            let z = AtomAbstraction::z(i - 1);
            let val = x.get(&z).cloned().unwrap_or_else(Rational::zero);
            LinConstraint::eq(c.lhs.clone(), AffineTerm::constant(val))
        })
        .collect();
    let Feasibility::Feasible(u) = vertex_solution(&fixed) else {
        return Err(Error::Malformed("coherence rows infeasible at an open branch".into()));
    };
    let unstar: BTreeMap<&str, &str> = p
        .stars
        .stars
        .iter()
        .map(|(a, b)| (b.as_str(), a.as_str()))
        .collect();
    let mut worlds = Vec::new();
    let mut weights = BTreeMap::new();
    for v in &p.coherence.valuations {
        let w = u.get(&CoherenceSystem::u(v)).cloned().unwrap_or_else(Rational::zero);
        if w.is_zero() {
            continue;
        }
        let id = format!("w{}", worlds.len());
        let mut world = World::new(id.clone());
        for var in v {
            match unstar.get(var.as_str()) {
                Some(orig) => world.minus.insert(orig.to_string()),
                None => world.plus.insert(var.clone()),
            };
        }
        worlds.push(world);
        weights.insert(id, w);
    }
    let model = BdModel::new(worlds)?;
    let weights = WorldWeights::new(&model, weights)?;
    Ok(Witness { model, weights })
}

fn decide(f: &OuterFormula, goal: Goal, opts: &DecideOptions) -> Result<(Verdict, usize)> {
    let p = prepare(f, opts)?;
    let root = match goal {
        Goal::Valid => validity_root(&p.abstracted),
        Goal::Sat => satisfiability_root(&p.abstracted),
    };
    let topts = TableauOptions {
        max_nodes: opts.max_nodes,
        prune: true,
        stop_at_open: true,
        background: p.coherence.constraints.clone(),
        bounds: p.coherence.bounds(),
        dump: false,
    };
    let run = run(root, &topts)?;
    let verdict = match (&run.result, goal) {
        (TableauResult::Closed(_), Goal::Valid) => Verdict::Valid,
        (TableauResult::Closed(_), Goal::Sat) => Verdict::Unsat,
        (TableauResult::Open(_, x), Goal::Valid) => Verdict::Invalid(assemble(&p, x)?),
        (TableauResult::Open(_, x), Goal::Sat) => Verdict::Sat(assemble(&p, x)?),
    };
    Ok((verdict, run.branches))
}

fn check_pm_witness(f: &OuterFormula, v: &Verdict, e2_zero: bool) -> Result<()> {
    let Some(w) = v.witness() else { return Ok(()) };
    let e = eval_pm(&w.model, &w.weights, f)?;
    let ok = match v {
        Verdict::Invalid(_) => !e.truth.is_one(),
        _ => e.truth.is_one() && (!e2_zero || e.falsity.value().is_zero()),
    };
    assert!(ok, "witness for `{f}` evaluates to {e}");
    Ok(())
}

fn check_four_witness(f: &OuterFormula, v: &Verdict) -> Result<()> {
    let Some(w) = v.witness() else { return Ok(()) };
    let e = eval_four(&w.model, &w.weights, f)?;
    let ok = match v {
        Verdict::Invalid(_) => !e.is_one(),
        _ => e.is_one(),
    };
    assert!(ok, "witness for `{f}` evaluates to {e}");
    Ok(())
}

/// Validity: the truth coordinate is 1 in every measured model.
pub fn decide_valid_pm(f: &OuterFormula, opts: &DecideOptions) -> Result<Verdict> {
    check_dialect(f, Dialect::Pm)?;
    let (v, _) = decide(f, Goal::Valid, opts)?;
    check_pm_witness(f, &v, false)?;
    Ok(v)
}

/// Satisfiability: some measured model gives truth coordinate 1 (and
/// falsity 0 with `require_e2_zero`).
pub fn decide_sat_pm(f: &OuterFormula, opts: &DecideOptions) -> Result<Verdict> {
    check_dialect(f, Dialect::Pm)?;
    let target = if opts.require_e2_zero {
        // e2(f) = 0 iff e1(∼¬f) = 1
        f.clone().strong(f.clone().par_neg().luk_neg())
    } else {
        f.clone()
    };
    let (v, _) = decide(&target, Goal::Sat, opts)?;
    check_pm_witness(f, &v, opts.require_e2_zero)?;
    Ok(v)
}

pub fn decide_valid_four(f: &OuterFormula, opts: &DecideOptions) -> Result<Verdict> {
    check_dialect(f, Dialect::Four)?;
    let (v, _) = decide(&to_pm(f)?, Goal::Valid, opts)?;
    check_four_witness(f, &v)?;
    Ok(v)
}

pub fn decide_sat_four(f: &OuterFormula, opts: &DecideOptions) -> Result<Verdict> {
    check_dialect(f, Dialect::Four)?;
    let (v, _) = decide(&to_pm(f)?, Goal::Sat, opts)?;
    check_four_witness(f, &v)?;
    Ok(v)
}

/// `Δγ₁ ⊙ … ⊙ Δγₖ → α`, or `α` alone for no premises.
pub fn entailment_formula(premises: &[OuterFormula], goal: &OuterFormula) -> OuterFormula {
    let mut it = premises.iter().map(|g| g.clone().delta());
    match it.next() {
        None => goal.clone(),
        Some(first) => it.fold(first, |acc, g| acc.strong(g)).implies(goal.clone()),
    }
}

/// Finite entailment in the four-probability logic. A countermodel makes
/// every premise 1 and the goal less than 1.
pub fn decide_entails_four(
    premises: &[OuterFormula],
    goal: &OuterFormula,
    opts: &DecideOptions,
) -> Result<Verdict> {
    for g in premises {
        check_dialect(g, Dialect::Four)?;
    }
    let v = decide_valid_four(&entailment_formula(premises, goal), opts)?;
    if let Some(w) = v.witness() {
        for g in premises {
            assert!(eval_four(&w.model, &w.weights, g)?.is_one());
        }
        assert!(!eval_four(&w.model, &w.weights, goal)?.is_one());
    }
    Ok(v)
}
