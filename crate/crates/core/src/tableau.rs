//! Constraint tableaux for Ł²_Δ over opaque atoms.
//!
//! A label `φ ≤s i` / `φ ≥s i` bounds coordinate `s` of the value of `φ` by
//! an affine term. Rules decompose `¬`, `∼`, `Δ` and `→`, plus direct
//! rules for `∨`, `∧` and `↔` (whose definitions repeat an argument); the
//! remaining connectives are unfolded through their definitions first. A saturated
//! branch is closed when its atom constraints have no solution.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lp::{feasible, AffineTerm, Assignment, Bounds, Feasibility, LinConstraint, LinVar, VarBounds};
use crate::luk::{eval_pair, LukValue, PairValue};
use crate::rational::Rational;
use crate::syntax::{BinOp, OuterFormula, UnaryOp};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    One,
    Two,
}

impl Side {
    fn swap(self) -> Side {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }

    fn digit(self) -> char {
        match self {
            Side::One => '1',
            Side::Two => '2',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    Le,
    Ge,
}

impl Dir {
    fn flip(self) -> Dir {
        match self {
            Dir::Le => Dir::Ge,
            Dir::Ge => Dir::Le,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabelledFormula {
    pub formula: OuterFormula,
    pub side: Side,
    pub dir: Dir,
    pub bound: AffineTerm,
}

impl LabelledFormula {
    pub fn new(formula: OuterFormula, side: Side, dir: Dir, bound: AffineTerm) -> Self {
        LabelledFormula {
            formula,
            side,
            dir,
            bound,
        }
    }

    fn with(&self, formula: OuterFormula, side: Side, dir: Dir, bound: AffineTerm) -> Self {
        LabelledFormula::new(formula, side, dir, bound)
    }
}

impl fmt::Display for LabelledFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.dir {
            Dir::Le => "<=",
            Dir::Ge => ">=",
        };
        write!(f, "{} {op}{} {}", self.formula, self.side.digit(), self.bound)
    }
}

/// LP variable holding coordinate `side` of an atom's value.
pub fn atom_var(atom: &OuterFormula, side: Side) -> LinVar {
    match side {
        Side::One => LinVar(format!("xL:{atom}")),
        Side::Two => LinVar(format!("xR:{atom}")),
    }
}

/// The linear constraint an atomic label stands for.
pub fn tau(lf: &LabelledFormula) -> Result<LinConstraint> {
    if !lf.formula.is_atomic() {
        return Err(Error::Malformed(format!("τ of non-atomic label {lf}")));
    }
    let x = AffineTerm::var(atom_var(&lf.formula, lf.side));
    Ok(match lf.dir {
        Dir::Le => LinConstraint::le(x, lf.bound.clone()),
        Dir::Ge => LinConstraint::ge(x, lf.bound.clone()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    /// Labels with their processed flag.
    pub labelled: Vec<(LabelledFormula, bool)>,
    pub numeric: Vec<LinConstraint>,
    pub fresh: usize,
}

impl Branch {
    pub fn new(labels: Vec<LabelledFormula>, numeric: Vec<LinConstraint>) -> Self {
        Branch {
            labelled: labels.into_iter().map(|l| (l, false)).collect(),
            numeric,
            fresh: 0,
        }
    }

    /// Atomic labels translated, followed by the numeric constraints.
    pub fn system(&self) -> Vec<LinConstraint> {
        self.labelled
            .iter()
            .filter(|(l, _)| l.formula.is_atomic())
            .map(|(l, _)| tau(l).expect("atomic"))
            .chain(self.numeric.iter().cloned())
            .collect()
    }

    pub fn is_saturated(&self) -> bool {
        self.labelled
            .iter()
            .all(|(l, done)| *done || l.formula.is_atomic())
    }

    fn next(&self) -> Option<usize> {
        let pending = |branching: bool| {
            self.labelled.iter().position(|(l, done)| {
                !done && !l.formula.is_atomic() && is_branching(l) == branching
            })
        };
        pending(false).or_else(|| pending(true))
    }

    fn push(&mut self, alt: Alternative) {
        self.labelled.extend(alt.labels.into_iter().map(|l| (l, false)));
        self.numeric.extend(alt.numeric);
    }
}

/// One conclusion set of a rule.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Alternative {
    pub labels: Vec<LabelledFormula>,
    pub numeric: Vec<LinConstraint>,
}

fn is_branching(lf: &LabelledFormula) -> bool {
    match &lf.formula {
        OuterFormula::Unary(UnaryOp::Delta, _) => true,
        OuterFormula::Bin(BinOp::Implies | BinOp::And, ..) => {
            matches!((lf.side, lf.dir), (Side::One, Dir::Le) | (Side::Two, Dir::Ge))
        }
        OuterFormula::Bin(BinOp::Or | BinOp::Iff, ..) => {
            matches!((lf.side, lf.dir), (Side::One, Dir::Ge) | (Side::Two, Dir::Le))
        }
        _ => false,
    }
}

/// Unfolds a derived connective one level. The tableau itself only
/// unfolds `⊕`, `⊙` and `⊖` this way.
pub fn desugar(op: BinOp, a: &OuterFormula, b: &OuterFormula) -> Option<OuterFormula> {
    let (a, b) = (a.clone(), b.clone());
    Some(match op {
        BinOp::Implies => return None,
        BinOp::Or => a.implies(b.clone()).implies(b),
        BinOp::And => OuterFormula::bin(BinOp::Or, a.luk_neg(), b.luk_neg()).luk_neg(),
        BinOp::Plus => a.luk_neg().implies(b),
        BinOp::Strong => a.implies(b.luk_neg()).luk_neg(),
        BinOp::Minus => a.strong(b.luk_neg()),
        BinOp::Iff => a.clone().implies(b.clone()).strong(b.implies(a)),
    })
}

fn konst(r: Rational) -> AffineTerm {
    AffineTerm::constant(r)
}

fn one() -> AffineTerm {
    konst(Rational::one())
}

fn zero() -> AffineTerm {
    konst(Rational::zero())
}

/// The conclusions of the rule whose premise is `lf`, or `None` for an
/// atomic label. `fresh` numbers the new bound variables.
pub fn conclusions(lf: &LabelledFormula, fresh: &mut usize) -> Option<Vec<Alternative>> {
    let i = &lf.bound;
    let alt = |labels: Vec<LabelledFormula>, numeric: Vec<LinConstraint>| Alternative { labels, numeric };
    let mut new_j = || {
        *fresh += 1;
        AffineTerm::var(LinVar(format!("j{fresh}")))
    };
    Some(match &lf.formula {
        OuterFormula::Modal(..) | OuterFormula::Atom(_) => return None,
        OuterFormula::Unary(UnaryOp::ParNeg, g) => vec![alt(
            vec![lf.with((**g).clone(), lf.side.swap(), lf.dir, i.clone())],
            vec![],
        )],
        OuterFormula::Unary(UnaryOp::LukNeg, g) => vec![alt(
            vec![lf.with((**g).clone(), lf.side, lf.dir.flip(), one().minus(i))],
            vec![],
        )],
        OuterFormula::Unary(UnaryOp::Delta, g) => {
            let g = (**g).clone();
            let j = new_j();
            let (trivial, inner, side_cond) = match (lf.side, lf.dir) {
                (Side::One, Dir::Ge) => (
                    LinConstraint::le(i.clone(), zero()),
                    Dir::Ge,
                    LinConstraint::ge(j.clone(), one()),
                ),
                (Side::One, Dir::Le) => (
                    LinConstraint::ge(i.clone(), one()),
                    Dir::Le,
                    LinConstraint::lt(j.clone(), one()),
                ),
                (Side::Two, Dir::Le) => (
                    LinConstraint::ge(i.clone(), one()),
                    Dir::Le,
                    LinConstraint::le(j.clone(), zero()),
                ),
                (Side::Two, Dir::Ge) => (
                    LinConstraint::le(i.clone(), zero()),
                    Dir::Ge,
                    LinConstraint::gt(j.clone(), zero()),
                ),
            };
            vec![
                alt(vec![], vec![trivial]),
                alt(vec![lf.with(g, lf.side, inner, j)], vec![side_cond]),
            ]
        }
        OuterFormula::Bin(BinOp::Implies, a, b) => {
            let (a, b) = ((**a).clone(), (**b).clone());
            let j = new_j();
            match (lf.side, lf.dir) {
                (Side::One, Dir::Le) => vec![
                    alt(vec![], vec![LinConstraint::ge(i.clone(), one())]),
                    alt(
                        vec![
                            lf.with(a, Side::One, Dir::Ge, one().minus(i).plus(&j)),
                            lf.with(b, Side::One, Dir::Le, j.clone()),
                        ],
                        vec![LinConstraint::le(j, i.clone())],
                    ),
                ],
                (Side::Two, Dir::Le) => vec![alt(
                    vec![
                        lf.with(a, Side::Two, Dir::Ge, j.clone()),
                        lf.with(b, Side::Two, Dir::Le, i.plus(&j)),
                    ],
                    vec![],
                )],
                (Side::One, Dir::Ge) => vec![alt(
                    vec![
                        lf.with(a, Side::One, Dir::Le, one().minus(i).plus(&j)),
                        lf.with(b, Side::One, Dir::Ge, j),
                    ],
                    vec![],
                )],
                (Side::Two, Dir::Ge) => vec![
                    alt(vec![], vec![LinConstraint::le(i.clone(), zero())]),
                    alt(
                        vec![
                            lf.with(a, Side::Two, Dir::Le, j.clone()),
                            lf.with(b, Side::Two, Dir::Ge, i.plus(&j)),
                        ],
                        vec![LinConstraint::le(j, one().minus(i))],
                    ),
                ],
            }
        }
        // max/min have direct rules: unfolding them would copy an argument.
        OuterFormula::Bin(op @ (BinOp::Or | BinOp::And), a, b) => {
            let (a, b) = ((**a).clone(), (**b).clone());
            // is this the coordinate where the connective is a max?
            let is_max = (*op == BinOp::Or) == (lf.side == Side::One);
            let both = is_max == (lf.dir == Dir::Le);
            let la = lf.with(a, lf.side, lf.dir, i.clone());
            let lb = lf.with(b, lf.side, lf.dir, i.clone());
            if both {
                vec![alt(vec![la, lb], vec![])]
            } else {
                vec![alt(vec![la], vec![]), alt(vec![lb], vec![])]
            }
        }
        // 1 − |x − y| on side one, |x − y| on side two
        OuterFormula::Bin(BinOp::Iff, a, b) => {
            let (a, b) = ((**a).clone(), (**b).clone());
            let s = lf.side;
            // Distance ≥ d: one argument sits at j, the other at least d above
            // it. `j + d ≤ 1` keeps every ≥-bound at most 1, which the Δ and
            // → rules rely on.
            let far = |d: AffineTerm, j: AffineTerm| {
                let top = LinConstraint::le(j.plus(&d), one());
                vec![
                    alt(
                        vec![lf.with(a.clone(), s, Dir::Ge, j.plus(&d)), lf.with(b.clone(), s, Dir::Le, j.clone())],
                        vec![top.clone()],
                    ),
                    alt(
                        vec![lf.with(b.clone(), s, Dir::Ge, j.plus(&d)), lf.with(a.clone(), s, Dir::Le, j.clone())],
                        vec![top],
                    ),
                ]
            };
            // distance ≤ d
            let near = |d: AffineTerm, j: AffineTerm, k: AffineTerm| {
                vec![alt(
                    vec![
                        lf.with(a.clone(), s, Dir::Le, j.clone()),
                        lf.with(b.clone(), s, Dir::Ge, j.minus(&d)),
                        lf.with(b.clone(), s, Dir::Le, k.clone()),
                        lf.with(a.clone(), s, Dir::Ge, k.minus(&d)),
                    ],
                    vec![],
                )]
            };
            match (s, lf.dir) {
                (Side::One, Dir::Le) => far(one().minus(i), new_j()),
                (Side::One, Dir::Ge) => {
                    let j = new_j();
                    near(one().minus(i), j, new_j())
                }
                (Side::Two, Dir::Ge) => far(i.clone(), new_j()),
                (Side::Two, Dir::Le) => {
                    let j = new_j();
                    near(i.clone(), j, new_j())
                }
            }
        }
        OuterFormula::Bin(op, a, b) => {
            let g = desugar(*op, a, b).expect("derived connective");
            vec![alt(vec![lf.with(g, lf.side, lf.dir, i.clone())], vec![])]
        }
    })
}

/// Expands the label at `index`, marking it processed in every successor.
pub fn apply_rule(branch: &Branch, index: usize) -> Result<Vec<Branch>> {
    let (lf, done) = branch
        .labelled
        .get(index)
        .ok_or_else(|| Error::Malformed(format!("no label at index {index}")))?;
    if *done {
        return Err(Error::Malformed(format!("label {lf} already processed")));
    }
    let mut fresh = branch.fresh;
    let alts = conclusions(lf, &mut fresh)
        .ok_or_else(|| Error::Malformed(format!("no rule applies to atomic label {lf}")))?;
    Ok(alts
        .into_iter()
        .map(|alt| {
            let mut b = branch.clone();
            b.labelled[index].1 = true;
            b.fresh = fresh;
            b.push(alt);
            b
        })
        .collect())
}

pub fn validity_root(f: &OuterFormula) -> Branch {
    let c = AffineTerm::named("c");
    Branch::new(
        vec![LabelledFormula::new(f.clone(), Side::One, Dir::Le, c.clone())],
        vec![LinConstraint::lt(c, one())],
    )
}

pub fn satisfiability_root(f: &OuterFormula) -> Branch {
    let c = AffineTerm::named("c");
    Branch::new(
        vec![LabelledFormula::new(f.clone(), Side::One, Dir::Ge, c.clone())],
        vec![LinConstraint::ge(c, one())],
    )
}

#[derive(Debug, Clone)]
pub struct TableauOptions {
    /// Cap on labels and constraints created over the whole run.
    pub max_nodes: usize,
    /// Check feasibility at every split and drop dead alternatives early.
    pub prune: bool,
    /// Stop at the first open branch.
    pub stop_at_open: bool,
    /// Constraints added to every branch's system.
    pub background: Vec<LinConstraint>,
    /// Bounds overriding the default `[0,1]`.
    pub bounds: Bounds,
    pub dump: bool,
}

impl Default for TableauOptions {
    fn default() -> Self {
        TableauOptions {
            max_nodes: 200_000,
            prune: false,
            stop_at_open: true,
            background: Vec::new(),
            bounds: Bounds::new(),
            dump: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableauResult {
    /// Every branch's system, each infeasible.
    Closed(Vec<Vec<LinConstraint>>),
    Open(Branch, Assignment),
}

impl TableauResult {
    pub fn is_closed(&self) -> bool {
        matches!(self, TableauResult::Closed(_))
    }
}

#[derive(Debug, Clone)]
pub struct TableauRun {
    pub result: TableauResult,
    pub dump: Option<String>,
    pub nodes: usize,
    pub branches: usize,
}

struct Runner<'a> {
    opts: &'a TableauOptions,
    nodes: usize,
    branches: usize,
    dump: Option<String>,
    closed: Vec<Vec<LinConstraint>>,
    open: Option<(Branch, Assignment)>,
    side_one_only: bool,
}

impl Runner<'_> {
    fn line(&mut self, depth: usize, text: impl fmt::Display) {
        if let Some(d) = &mut self.dump {
            let _ = writeln!(d, "{}{}", "  ".repeat(depth), text);
        }
    }

    fn count(&mut self, alt: &Alternative) -> Result<()> {
        self.nodes += alt.labels.len() + alt.numeric.len();
        if self.nodes > self.opts.max_nodes {
            return Err(Error::Budget(format!(
                "tableau exceeded {} nodes",
                self.opts.max_nodes
            )));
        }
        if self.side_one_only {
            debug_assert!(alt.labels.iter().all(|l| l.side == Side::One));
        }
        Ok(())
    }

    fn log_alt(&mut self, depth: usize, alt: &Alternative) {
        if self.dump.is_none() {
            return;
        }
        for l in &alt.labels {
            self.line(depth, l);
        }
        for c in &alt.numeric {
            self.line(depth, c);
        }
    }

    fn check(&self, b: &Branch) -> (Vec<LinConstraint>, Feasibility) {
        let mut system = b.system();
        system.extend(self.opts.background.iter().cloned());
        let mut bounds = Bounds::new();
        for c in &system {
            for v in c.vars() {
                let vb = self.opts.bounds.get(&v).cloned().unwrap_or_else(VarBounds::unit);
                bounds.insert(v, vb);
            }
        }
        let verdict = feasible(&system, &bounds);
        (system, verdict)
    }

    fn done(&self) -> bool {
        self.opts.stop_at_open && self.open.is_some()
    }

    fn explore(&mut self, mut b: Branch, depth: usize) -> Result<()> {
        while let Some(k) = b.next() {
            let mut fresh = b.fresh;
            let alts = conclusions(&b.labelled[k].0, &mut fresh).expect("non-atomic");
            b.labelled[k].1 = true;
            b.fresh = fresh;
            if alts.len() == 1 {
                let alt = alts.into_iter().next().expect("one alternative");
                self.count(&alt)?;
                self.log_alt(depth, &alt);
                b.push(alt);
                continue;
            }
            let n = alts.len();
            for (idx, alt) in alts.into_iter().enumerate() {
                self.count(&alt)?;
                self.line(depth, format_args!("branch {}/{n}:", idx + 1));
                self.log_alt(depth + 1, &alt);
                let mut child = if idx + 1 == n { std::mem::replace(&mut b, Branch::new(vec![], vec![])) } else { b.clone() };
                child.push(alt);
                if self.opts.prune {
                    let (system, verdict) = self.check(&child);
                    if verdict == Feasibility::Infeasible {
                        self.branches += 1;
                        self.line(depth + 1, "=> closed (pruned)");
                        self.closed.push(system);
                        continue;
                    }
                }
                self.explore(child, depth + 1)?;
                if self.done() {
                    return Ok(());
                }
            }
            return Ok(());
        }
        self.branches += 1;
        let (system, verdict) = self.check(&b);
        match verdict {
            Feasibility::Infeasible => {
                self.line(depth, "=> closed");
                self.closed.push(system);
            }
            Feasibility::Feasible(x) => {
                if self.dump.is_some() {
                    let xs: Vec<String> = x.iter().map(|(v, r)| format!("{v}={r}")).collect();
                    self.line(depth, format_args!("=> open: {}", xs.join(", ")));
                }
                if self.open.is_none() {
                    self.open = Some((b, x));
                }
            }
        }
        Ok(())
    }
}

/// Expands `root` to saturation and checks every branch.
pub fn run(root: Branch, opts: &TableauOptions) -> Result<TableauRun> {
    let side_one_only = root
        .labelled
        .iter()
        .all(|(l, _)| l.side == Side::One && !l.formula.contains_par_neg());
    let mut r = Runner {
        opts,
        nodes: root.labelled.len() + root.numeric.len(),
        branches: 0,
        dump: opts.dump.then(String::new),
        closed: Vec::new(),
        open: None,
        side_one_only,
    };
    let root_alt = Alternative {
        labels: root.labelled.iter().map(|(l, _)| l.clone()).collect(),
        numeric: root.numeric.clone(),
    };
    r.log_alt(0, &root_alt);
    r.explore(root, 0)?;
    let result = match r.open {
        Some((b, x)) => TableauResult::Open(b, x),
        None => TableauResult::Closed(r.closed),
    };
    Ok(TableauRun {
        result,
        dump: r.dump,
        nodes: r.nodes,
        branches: r.branches,
    })
}

/// Expands every branch of `root` without consulting the LP.
pub fn saturate(root: Branch, max_nodes: usize) -> Result<Vec<Branch>> {
    let mut out = Vec::new();
    let mut stack = vec![root];
    let mut nodes = 0usize;
    while let Some(b) = stack.pop() {
        match b.next() {
            None => out.push(b),
            Some(k) => {
                for s in apply_rule(&b, k)?.into_iter().rev() {
                    nodes += s.labelled.len() - b.labelled.len() + s.numeric.len() - b.numeric.len();
                    if nodes > max_nodes {
                        return Err(Error::Budget(format!("tableau exceeded {max_nodes} nodes")));
                    }
                    stack.push(s);
                }
            }
        }
    }
    Ok(out)
}

/// Pair values of the atoms of `f` read off an LP assignment; missing
/// coordinates default to 0.
pub fn atom_valuation(f: &OuterFormula, x: &Assignment) -> Result<BTreeMap<OuterFormula, PairValue>> {
    let read = |v: LinVar| LukValue::new(x.get(&v).cloned().unwrap_or_else(Rational::zero));
    f.atoms()
        .into_iter()
        .map(|a| {
            let p = PairValue::new(read(atom_var(&a, Side::One))?, read(atom_var(&a, Side::Two))?);
            Ok((a, p))
        })
        .collect()
}

pub fn eval_with(f: &OuterFormula, vals: &BTreeMap<OuterFormula, PairValue>) -> Result<PairValue> {
    eval_pair(f, &mut |a| {
        vals.get(a)
            .cloned()
            .ok_or_else(|| Error::Malformed(format!("no value for atom `{a}`")))
    })
}

/// Tableau validity in Ł²_Δ (first coordinate identically 1). An open
/// result carries a refuting assignment, already checked by evaluation.
pub fn prove_luk_valid(f: &OuterFormula, opts: &TableauOptions) -> Result<TableauResult> {
    let run = run(validity_root(f), opts)?;
    if let TableauResult::Open(_, x) = &run.result {
        let v = eval_with(f, &atom_valuation(f, x)?)?;
        assert!(!v.truth.is_one(), "open branch does not refute {f}");
    }
    Ok(run.result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::syntax::{parse_outer, Dialect};

    fn luk(s: &str) -> OuterFormula {
        parse_outer(s, Dialect::PlainLuk).unwrap()
    }

    fn label(f: &str, side: Side, dir: Dir, bound: AffineTerm) -> LabelledFormula {
        LabelledFormula::new(luk(f), side, dir, bound)
    }

    #[test]
    fn single_rules() {
        let i = AffineTerm::named("i");
        let mut fresh = 0;
        let alts = conclusions(&label("~a", Side::One, Dir::Le, i.clone()), &mut fresh).unwrap();
        assert_eq!(alts.len(), 1);
        assert_eq!(alts[0].labels, vec![label("a", Side::One, Dir::Ge, one().minus(&i))]);

        let alts = conclusions(&label("!a", Side::One, Dir::Le, i.clone()), &mut fresh).unwrap();
        assert_eq!(alts.len(), 2);
        assert_eq!(alts[0].numeric, vec![LinConstraint::ge(i.clone(), one())]);
        let j = AffineTerm::named("j1");
        assert_eq!(alts[1].labels, vec![label("a", Side::One, Dir::Le, j.clone())]);
        assert_eq!(alts[1].numeric, vec![LinConstraint::lt(j, one())]);

        let alts = conclusions(&label("a -> b", Side::One, Dir::Ge, i.clone()), &mut fresh).unwrap();
        let j = AffineTerm::named("j2");
        assert_eq!(
            alts[0].labels,
            vec![
                label("a", Side::One, Dir::Le, one().minus(&i).plus(&j)),
                label("b", Side::One, Dir::Ge, j),
            ]
        );
        assert!(conclusions(&label("a", Side::One, Dir::Ge, i), &mut fresh).is_none());
    }

    #[test]
    fn tau_examples() {
        let c = tau(&label("a", Side::One, Dir::Le, konst(rat(2, 3)))).unwrap();
        assert_eq!(c.to_string(), "xL:a <= 2/3");
        let c = tau(&label("a", Side::Two, Dir::Ge, AffineTerm::named("j"))).unwrap();
        assert_eq!(c.to_string(), "j <= xR:a");
        assert!(tau(&label("~a", Side::One, Dir::Le, zero())).is_err());
    }

    #[test]
    fn saturate_examples() {
        let closed = |b: &Branch| {
            let opts = TableauOptions::default();
            let r = Runner {
                opts: &opts,
                nodes: 0,
                branches: 0,
                dump: None,
                closed: vec![],
                open: None,
                side_one_only: true,
            };
            r.check(b).1 == Feasibility::Infeasible
        };
        let bs = saturate(validity_root(&luk("a -> a")), 1000).unwrap();
        assert_eq!(bs.len(), 2);
        assert!(bs.iter().all(closed));

        let bs = saturate(validity_root(&luk("a")), 1000).unwrap();
        assert_eq!(bs.len(), 1);
        assert!(!closed(&bs[0]));

        let root = Branch::new(vec![label("!a", Side::One, Dir::Ge, one())], vec![]);
        let bs = saturate(root, 1000).unwrap();
        assert_eq!(bs.len(), 2);
        assert!(closed(&bs[0]));
        assert!(!closed(&bs[1]));
    }

    #[test]
    fn prove_examples() {
        let opts = TableauOptions::default();
        assert!(prove_luk_valid(&luk("a -> (b -> a)"), &opts).unwrap().is_closed());
        assert!(prove_luk_valid(&luk("!a -> a"), &opts).unwrap().is_closed());
        match prove_luk_valid(&luk("(a (+) a) -> a"), &opts).unwrap() {
            TableauResult::Open(_, x) => {
                let a = &x[&LinVar::new("xL:a")];
                // any value strictly inside (0,1) refutes
                assert!(*a < int(1) && *a > int(0), "{a}");
            }
            r => panic!("{r:?}"),
        }
        assert!(!prove_luk_valid(&luk("-a -> a"), &opts).unwrap().is_closed());
        assert!(prove_luk_valid(&luk("--a <-> a"), &opts).unwrap().is_closed());
    }

    #[test]
    fn budget_enforced() {
        let opts = TableauOptions {
            max_nodes: 5,
            ..TableauOptions::default()
        };
        let err = prove_luk_valid(&luk("(a | b) & (b | a) -> (a | b)"), &opts).unwrap_err();
        assert!(err.is_resource_cap());
    }

    #[test]
    fn dump_lists_branches() {
        let opts = TableauOptions {
            dump: true,
            stop_at_open: false,
            ..TableauOptions::default()
        };
        let run = run(validity_root(&luk("a -> a")), &opts).unwrap();
        let d = run.dump.unwrap();
        assert!(d.starts_with("a -> a <=1 c\nc < 1\n"), "{d}");
        assert_eq!(d.matches("=> closed").count(), 2, "{d}");
        assert_eq!(run.branches, 2);
    }
}
