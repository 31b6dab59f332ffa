//! Outer negation normal form and the translations between the
//! ±-probability and four-probability languages.

use std::fmt;

use crate::bd::negation_normal_form;
use crate::error::{Error, Result};
use crate::syntax::{check_dialect, BdFormula, BinOp, Dialect, Modality, OuterFormula, UnaryOp};

/// Rewrites that push the paraconsistent negation `¬` towards the atoms.
///
/// The first five are the core system; the remaining ones cover the
/// connectives that are definable from `∼`, `Δ` and `→`, and agree with
/// what the core rules give on the expanded definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NnfRule {
    /// `¬Prφ ⇝ Pr¬φ`
    Atom,
    /// `¬¬α ⇝ α`
    DoubleNeg,
    /// `¬∼α ⇝ ∼¬α`
    LukNeg,
    /// `¬(α→α') ⇝ ∼(¬α'→¬α)`
    Implies,
    /// `¬Δα ⇝ ∼Δ∼¬α`
    Delta,
    /// `¬(α∨α') ⇝ ¬α∧¬α'`
    Or,
    /// `¬(α∧α') ⇝ ¬α∨¬α'`
    And,
    /// `¬(α⊕α') ⇝ ¬α⊙¬α'`
    Plus,
    /// `¬(α⊙α') ⇝ ¬α⊕¬α'`
    Strong,
    /// `¬(α⊖α') ⇝ ¬α'→¬α`
    Minus,
    /// `¬(α↔α') ⇝ ∼(¬α↔¬α')`
    Iff,
}

impl NnfRule {
    pub fn name(self) -> &'static str {
        match self {
            NnfRule::Atom => "neg-atom",
            NnfRule::DoubleNeg => "neg-neg",
            NnfRule::LukNeg => "neg-luk",
            NnfRule::Implies => "neg-imp",
            NnfRule::Delta => "neg-delta",
            NnfRule::Or => "neg-or",
            NnfRule::And => "neg-and",
            NnfRule::Plus => "neg-plus",
            NnfRule::Strong => "neg-strong",
            NnfRule::Minus => "neg-minus",
            NnfRule::Iff => "neg-iff",
        }
    }
}

/// One rewrite: the rule and the position it fired at, as a child-index
/// path from the root (0 = only/left child, 1 = right child).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: NnfRule,
    pub position: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationTrace {
    pub input: OuterFormula,
    pub output: OuterFormula,
    pub steps: Vec<TraceStep>,
}

impl fmt::Display for TranslationTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "input:  {}", self.input)?;
        for s in &self.steps {
            let pos: Vec<String> = s.position.iter().map(|i| i.to_string()).collect();
            writeln!(f, "  {} at [{}]", s.rule.name(), pos.join("."))?;
        }
        write!(f, "output: {}", self.output)
    }
}

/// Fires one rule at the root of `f`, if any applies.
fn rewrite_root(f: &OuterFormula) -> Option<(NnfRule, OuterFormula)> {
    let OuterFormula::Unary(UnaryOp::ParNeg, g) = f else {
        return None;
    };
    let neg = |x: &OuterFormula| x.clone().par_neg();
    Some(match &**g {
        OuterFormula::Modal(Modality::Pr, body) => (
            NnfRule::Atom,
            OuterFormula::modal(Modality::Pr, body.clone().neg()),
        ),
        OuterFormula::Modal(..) | OuterFormula::Atom(_) => return None,
        OuterFormula::Unary(UnaryOp::ParNeg, a) => (NnfRule::DoubleNeg, (**a).clone()),
        OuterFormula::Unary(UnaryOp::LukNeg, a) => (NnfRule::LukNeg, neg(a).luk_neg()),
        OuterFormula::Unary(UnaryOp::Delta, a) => {
            (NnfRule::Delta, neg(a).luk_neg().delta().luk_neg())
        }
        OuterFormula::Bin(op, a, b) => {
            let (na, nb) = (neg(a), neg(b));
            match op {
                BinOp::Implies => (NnfRule::Implies, nb.implies(na).luk_neg()),
                BinOp::Or => (NnfRule::Or, OuterFormula::bin(BinOp::And, na, nb)),
                BinOp::And => (NnfRule::And, OuterFormula::bin(BinOp::Or, na, nb)),
                BinOp::Plus => (NnfRule::Plus, na.strong(nb)),
                BinOp::Strong => (NnfRule::Strong, na.plus(nb)),
                BinOp::Minus => (NnfRule::Minus, nb.implies(na)),
                BinOp::Iff => (NnfRule::Iff, na.iff(nb).luk_neg()),
            }
        }
    })
}

fn nnf_at(f: OuterFormula, path: &mut Vec<usize>, steps: &mut Vec<TraceStep>) -> OuterFormula {
    let mut f = f;
    while let Some((rule, g)) = rewrite_root(&f) {
        steps.push(TraceStep {
            rule,
            position: path.clone(),
        });
        f = g;
    }
    match f {
        OuterFormula::Unary(op, g) => {
            path.push(0);
            let g = nnf_at(*g, path, steps);
            path.pop();
            OuterFormula::unary(op, g)
        }
        OuterFormula::Bin(op, a, b) => {
            path.push(0);
            let a = nnf_at(*a, path, steps);
            path.pop();
            path.push(1);
            let b = nnf_at(*b, path, steps);
            path.pop();
            OuterFormula::bin(op, a, b)
        }
        atom => atom,
    }
}

/// Negation normal form with the list of rewrites that produced it.
pub fn nnf_traced(f: &OuterFormula) -> TranslationTrace {
    let mut steps = Vec::new();
    let output = nnf_at(f.clone(), &mut Vec::new(), &mut steps);
    TranslationTrace {
        input: f.clone(),
        output,
        steps,
    }
}

/// Pushes every outer `¬` into the bodies of the probability atoms. BD-level
/// negations are left alone.
pub fn nnf(f: &OuterFormula) -> OuterFormula {
    nnf_traced(f).output
}

fn subterm_mut<'a>(f: &'a mut OuterFormula, path: &[usize]) -> Option<&'a mut OuterFormula> {
    let Some((&i, rest)) = path.split_first() else {
        return Some(f);
    };
    match (f, i) {
        (OuterFormula::Unary(_, g), 0) => subterm_mut(g, rest),
        (OuterFormula::Bin(_, a, _), 0) => subterm_mut(a, rest),
        (OuterFormula::Bin(_, _, b), 1) => subterm_mut(b, rest),
        _ => None,
    }
}

/// Re-applies recorded steps to the trace input, checking that each rule
/// fires where the trace says it did.
pub fn replay(input: &OuterFormula, steps: &[TraceStep]) -> Result<OuterFormula> {
    let mut f = input.clone();
    for (k, step) in steps.iter().enumerate() {
        let at = subterm_mut(&mut f, &step.position)
            .ok_or_else(|| Error::Malformed(format!("step {k}: no subterm at that position")))?;
        match rewrite_root(at) {
            Some((rule, g)) if rule == step.rule => *at = g,
            _ => {
                return Err(Error::Malformed(format!(
                    "step {k}: rule {} does not apply",
                    step.rule.name()
                )))
            }
        }
    }
    Ok(f)
}

/// Puts the body of every modal atom into BD negation normal form.
pub fn nnf_bodies(f: &OuterFormula) -> OuterFormula {
    f.map_atoms(&mut |a| match a {
        OuterFormula::Modal(m, body) => OuterFormula::modal(*m, negation_normal_form(body)),
        other => other.clone(),
    })
}

/// `Pr φ ↦ Bl φ ⊕ Cf φ`, homomorphic elsewhere.
pub fn to_four(f: &OuterFormula) -> Result<OuterFormula> {
    check_dialect(f, Dialect::Pm)?;
    if f.contains_par_neg() {
        return Err(Error::Dialect {
            dialect: Dialect::Four.name(),
            message: "ParNeg present; apply nnf first".into(),
        });
    }
    Ok(f.map_atoms(&mut |a| match a {
        OuterFormula::Modal(Modality::Pr, body) => OuterFormula::modal(Modality::Bl, body.clone())
            .plus(OuterFormula::modal(Modality::Cf, body.clone())),
        other => other.clone(),
    }))
}

fn contradiction(body: &BdFormula) -> BdFormula {
    body.clone().and(body.clone().neg())
}

/// Expresses each four-valued modality with `Pr`, homomorphic elsewhere.
pub fn to_pm(f: &OuterFormula) -> Result<OuterFormula> {
    check_dialect(f, Dialect::Four)?;
    let pr = |b: BdFormula| OuterFormula::modal(Modality::Pr, b);
    Ok(f.map_atoms(&mut |a| match a {
        OuterFormula::Modal(m, body) => match m {
            Modality::Bl => pr(body.clone()).minus(pr(contradiction(body))),
            Modality::Db => pr(body.clone().neg()).minus(pr(contradiction(body))),
            Modality::Cf => pr(contradiction(body)),
            Modality::Uc => pr(body.clone().or(body.clone().neg())).luk_neg(),
            Modality::Pr => a.clone(),
        },
        other => other.clone(),
    }))
}
