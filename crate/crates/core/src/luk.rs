//! The standard Ł_Δ algebra on `[0,1] ∩ ℚ`, its paired (truth, falsity)
//! twin, and evaluation of two-layered formulas over BD models carrying a
//! classical probability on worlds.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::bd::{bd_entails, BdModel, ExtensionKind, World};
use crate::error::{Error, Result};
use crate::rational::{self, format_rational, in_unit_interval, Rational};
use crate::syntax::{check_dialect, BdFormula, BinOp, Dialect, Modality, OuterFormula, UnaryOp};

/// A truth degree in `[0,1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LukValue(Rational);

impl LukValue {
    pub fn new(value: Rational) -> Result<Self> {
        if in_unit_interval(&value) {
            Ok(LukValue(value))
        } else {
            Err(Error::Malformed(format!(
                "{} is outside [0,1]",
                format_rational(&value)
            )))
        }
    }

    pub fn zero() -> Self {
        LukValue(Rational::zero())
    }

    pub fn one() -> Self {
        LukValue(Rational::one())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn neg(&self) -> Self {
        LukValue(Rational::one() - &self.0)
    }

    pub fn delta(&self) -> Self {
        if self.is_one() {
            Self::one()
        } else {
            Self::zero()
        }
    }

    pub fn implies(&self, rhs: &LukValue) -> Self {
        LukValue(rational::min(Rational::one(), Rational::one() - &self.0 + &rhs.0))
    }

    pub fn min(&self, rhs: &LukValue) -> Self {
        LukValue(rational::min(self.0.clone(), rhs.0.clone()))
    }

    pub fn max(&self, rhs: &LukValue) -> Self {
        LukValue(rational::max(self.0.clone(), rhs.0.clone()))
    }

    pub fn strong(&self, rhs: &LukValue) -> Self {
        LukValue(rational::max(Rational::zero(), &self.0 + &rhs.0 - Rational::one()))
    }

    pub fn plus(&self, rhs: &LukValue) -> Self {
        LukValue(rational::min(Rational::one(), &self.0 + &rhs.0))
    }

    pub fn minus(&self, rhs: &LukValue) -> Self {
        LukValue(rational::max(Rational::zero(), &self.0 - &rhs.0))
    }

    pub fn iff(&self, rhs: &LukValue) -> Self {
        LukValue(Rational::one() - (&self.0 - &rhs.0).abs())
    }

    pub fn binary(op: BinOp, a: &LukValue, b: &LukValue) -> Self {
        match op {
            BinOp::Implies => a.implies(b),
            BinOp::Iff => a.iff(b),
            BinOp::And => a.min(b),
            BinOp::Or => a.max(b),
            BinOp::Strong => a.strong(b),
            BinOp::Plus => a.plus(b),
            BinOp::Minus => a.minus(b),
        }
    }
}

impl fmt::Display for LukValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

/// A connective of either layer-two algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connective {
    Unary(UnaryOp),
    Bin(BinOp),
}

fn arity_error(op: Connective, got: usize) -> Error {
    Error::Malformed(format!("connective {op:?} applied to {got} arguments"))
}

/// Applies a connective of the standard Ł_Δ algebra.
pub fn luk_apply(op: Connective, args: &[LukValue]) -> Result<LukValue> {
    match (op, args) {
        (Connective::Unary(UnaryOp::LukNeg), [a]) => Ok(a.neg()),
        (Connective::Unary(UnaryOp::Delta), [a]) => Ok(a.delta()),
        (Connective::Unary(UnaryOp::ParNeg), [_]) => Err(Error::Malformed(
            "paraconsistent negation has no single-valued interpretation".into(),
        )),
        (Connective::Bin(b), [x, y]) => Ok(LukValue::binary(b, x, y)),
        _ => Err(arity_error(op, args.len())),
    }
}

/// A value of Ł²_Δ: support of truth and support of falsity, independent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairValue {
    pub truth: LukValue,
    pub falsity: LukValue,
}

impl PairValue {
    pub fn new(truth: LukValue, falsity: LukValue) -> Self {
        PairValue { truth, falsity }
    }

    pub fn from_rationals(truth: Rational, falsity: Rational) -> Result<Self> {
        Ok(PairValue::new(LukValue::new(truth)?, LukValue::new(falsity)?))
    }

    /// `¬`: swaps the coordinates.
    pub fn par_neg(&self) -> Self {
        PairValue::new(self.falsity.clone(), self.truth.clone())
    }

    pub fn luk_neg(&self) -> Self {
        PairValue::new(self.truth.neg(), self.falsity.neg())
    }

    /// `v2(Δφ) = ∼Δ∼v2(φ)`.
    pub fn delta(&self) -> Self {
        PairValue::new(self.truth.delta(), self.falsity.neg().delta().neg())
    }

    /// `v2(φ → χ) = v2(χ) ⊖ v2(φ)`.
    pub fn implies(&self, rhs: &PairValue) -> Self {
        PairValue::new(
            self.truth.implies(&rhs.truth),
            rhs.falsity.minus(&self.falsity),
        )
    }

    pub fn unary(op: UnaryOp, a: &PairValue) -> Self {
        match op {
            UnaryOp::ParNeg => a.par_neg(),
            UnaryOp::LukNeg => a.luk_neg(),
            UnaryOp::Delta => a.delta(),
        }
    }

    /// Derived connectives go through their definitions in terms of
    /// `∼` and `→`, so their falsity coordinate is whatever those
    /// definitions produce.
    pub fn binary(op: BinOp, a: &PairValue, b: &PairValue) -> Self {
        match op {
            BinOp::Implies => a.implies(b),
            // (a → b) → b
            BinOp::Or => a.implies(b).implies(b),
            // ∼(∼a ∨ ∼b)
            BinOp::And => {
                let (na, nb) = (a.luk_neg(), b.luk_neg());
                na.implies(&nb).implies(&nb).luk_neg()
            }
            // ∼a → b
            BinOp::Plus => a.luk_neg().implies(b),
            // ∼(a → ∼b)
            BinOp::Strong => a.implies(&b.luk_neg()).luk_neg(),
            // a ⊙ ∼b
            BinOp::Minus => Self::binary(BinOp::Strong, a, &b.luk_neg()),
            // (a → b) ⊙ (b → a)
            BinOp::Iff => Self::binary(BinOp::Strong, &a.implies(b), &b.implies(a)),
        }
    }
}

impl fmt::Display for PairValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.truth, self.falsity)
    }
}

/// Applies a connective of Ł²_Δ.
pub fn pair_apply(op: Connective, args: &[PairValue]) -> Result<PairValue> {
    match (op, args) {
        (Connective::Unary(u), [a]) => Ok(PairValue::unary(u, a)),
        (Connective::Bin(b), [x, y]) => Ok(PairValue::binary(b, x, y)),
        _ => Err(arity_error(op, args.len())),
    }
}

/// Evaluates an outer formula in Ł_Δ given values for its atoms.
pub fn eval_luk(
    f: &OuterFormula,
    atom: &mut impl FnMut(&OuterFormula) -> Result<LukValue>,
) -> Result<LukValue> {
    match f {
        OuterFormula::Modal(..) | OuterFormula::Atom(_) => atom(f),
        OuterFormula::Unary(op, g) => {
            let v = eval_luk(g, atom)?;
            luk_apply(Connective::Unary(*op), &[v])
        }
        OuterFormula::Bin(op, a, b) => {
            let x = eval_luk(a, atom)?;
            let y = eval_luk(b, atom)?;
            Ok(LukValue::binary(*op, &x, &y))
        }
    }
}

/// Evaluates an outer formula in Ł²_Δ given pair values for its atoms.
pub fn eval_pair(
    f: &OuterFormula,
    atom: &mut impl FnMut(&OuterFormula) -> Result<PairValue>,
) -> Result<PairValue> {
    match f {
        OuterFormula::Modal(..) | OuterFormula::Atom(_) => atom(f),
        OuterFormula::Unary(op, g) => Ok(PairValue::unary(*op, &eval_pair(g, atom)?)),
        OuterFormula::Bin(op, a, b) => {
            let x = eval_pair(a, atom)?;
            let y = eval_pair(b, atom)?;
            Ok(PairValue::binary(*op, &x, &y))
        }
    }
}

/// A classical probability on the worlds of a model: nonnegative weights
/// summing to one, keyed by world id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorldWeights {
    weights: BTreeMap<String, Rational>,
}

impl WorldWeights {
    pub fn new(model: &BdModel, weights: BTreeMap<String, Rational>) -> Result<Self> {
        let w = WorldWeights { weights };
        w.check(model)?;
        Ok(w)
    }

    pub fn uniform(model: &BdModel) -> Self {
        let n = model.worlds().len() as i64;
        WorldWeights {
            weights: model
                .world_ids()
                .map(|id| (id.to_string(), rational::rat(1, n)))
                .collect(),
        }
    }

    pub fn check(&self, model: &BdModel) -> Result<()> {
        let ids: BTreeSet<&str> = model.world_ids().collect();
        let keys: BTreeSet<&str> = self.weights.keys().map(String::as_str).collect();
        if ids != keys {
            let missing: Vec<&str> = ids.difference(&keys).copied().collect();
            let extra: Vec<&str> = keys.difference(&ids).copied().collect();
            return Err(Error::Weights(format!(
                "weights do not match worlds (missing {missing:?}, unknown {extra:?})"
            )));
        }
        if let Some((id, w)) = self.weights.iter().find(|(_, w)| w.is_negative()) {
            return Err(Error::Weights(format!(
                "negative weight {} on `{id}`",
                format_rational(w)
            )));
        }
        let total: Rational = self.weights.values().sum();
        if !total.is_one() {
            return Err(Error::Weights(format!(
                "weights sum to {}, not 1",
                format_rational(&total)
            )));
        }
        Ok(())
    }

    pub fn get(&self, id: &str) -> Option<&Rational> {
        self.weights.get(id)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Rational)> {
        self.weights.iter()
    }

    /// Weights in the model's world order.
    pub fn aligned(&self, model: &BdModel) -> Result<Vec<Rational>> {
        model
            .world_ids()
            .map(|id| {
                self.weights
                    .get(id)
                    .cloned()
                    .ok_or_else(|| Error::Weights(format!("no weight for world `{id}`")))
            })
            .collect()
    }
}

fn sum_where(weights: &[Rational], table: &[(bool, bool)], kind: ExtensionKind) -> Rational {
    table
        .iter()
        .zip(weights)
        .filter(|(s, _)| kind.contains(**s))
        .map(|(_, w)| w)
        .sum()
}

/// `μ(|f|^kind)` for the classical measure given by `weights`.
pub fn measure_of(
    model: &BdModel,
    weights: &WorldWeights,
    f: &BdFormula,
    kind: ExtensionKind,
) -> Result<Rational> {
    let w = weights.aligned(model)?;
    Ok(sum_where(&w, &model.support_table(f), kind))
}

/// Value of an outer formula of the ±-probability logic.
pub fn eval_pm(model: &BdModel, weights: &WorldWeights, f: &OuterFormula) -> Result<PairValue> {
    check_dialect(f, Dialect::Pm)?;
    let w = weights.aligned(model)?;
    eval_pair(f, &mut |atom| match atom {
        OuterFormula::Modal(Modality::Pr, body) => {
            let table = model.support_table(body);
            PairValue::from_rationals(
                sum_where(&w, &table, ExtensionKind::Plus),
                sum_where(&w, &table, ExtensionKind::Minus),
            )
        }
        other => Err(Error::Malformed(format!("unexpected atom `{other}`"))),
    })
}

/// The extension a four-valued modality measures.
pub fn modality_extension(m: Modality) -> ExtensionKind {
    match m {
        Modality::Pr => ExtensionKind::Plus,
        Modality::Bl => ExtensionKind::B,
        Modality::Db => ExtensionKind::D,
        Modality::Cf => ExtensionKind::C,
        Modality::Uc => ExtensionKind::U,
    }
}

/// Value of an outer formula of the four-valued probability logic.
pub fn eval_four(model: &BdModel, weights: &WorldWeights, f: &OuterFormula) -> Result<LukValue> {
    check_dialect(f, Dialect::Four)?;
    let w = weights.aligned(model)?;
    eval_luk(f, &mut |atom| match atom {
        OuterFormula::Modal(m, body) => {
            LukValue::new(sum_where(&w, &model.support_table(body), modality_extension(*m)))
        }
        other => Err(Error::Malformed(format!("unexpected atom `{other}`"))),
    })
}

// ---------------------------------------------------------------------------
// Measure tables and axiom audits

const MAX_TABLE_WORLDS: usize = 16;

/// An arbitrary map from sets of worlds to `[0,1]`, with no structural
/// guarantees. The verifiers below audit it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetMeasureTable {
    world_ids: Vec<String>,
    values: BTreeMap<u64, Rational>,
}

impl SetMeasureTable {
    pub fn new(model: &BdModel) -> Result<Self> {
        if model.worlds().len() > 64 {
            return Err(Error::Malformed("measure tables support at most 64 worlds".into()));
        }
        Ok(SetMeasureTable {
            world_ids: model.world_ids().map(str::to_string).collect(),
            values: BTreeMap::new(),
        })
    }

    /// The table a classical weighting induces on every subset of worlds.
    pub fn induced(model: &BdModel, weights: &WorldWeights) -> Result<Self> {
        let n = model.worlds().len();
        if n > MAX_TABLE_WORLDS {
            return Err(Error::TooManyVariables {
                found: n,
                cap: MAX_TABLE_WORLDS,
            });
        }
        let w = weights.aligned(model)?;
        let mut table = SetMeasureTable::new(model)?;
        for mask in 0u64..(1 << n) {
            let total: Rational = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &w[i]).sum();
            table.values.insert(mask, total);
        }
        Ok(table)
    }

    fn mask_of<'a>(&self, ids: impl IntoIterator<Item = &'a str>) -> Result<u64> {
        let mut mask = 0u64;
        for id in ids {
            let i = self
                .world_ids
                .iter()
                .position(|w| w == id)
                .ok_or_else(|| Error::UnknownWorld(id.to_string()))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    pub fn insert<'a>(&mut self, ids: impl IntoIterator<Item = &'a str>, value: Rational) -> Result<()> {
        let mask = self.mask_of(ids)?;
        self.values.insert(mask, value);
        Ok(())
    }

    pub fn get<'a>(&self, ids: impl IntoIterator<Item = &'a str>) -> Result<&Rational> {
        let mask = self.mask_of(ids)?;
        self.get_mask(mask)
    }

    fn get_mask(&self, mask: u64) -> Result<&Rational> {
        self.values.get(&mask).ok_or_else(|| {
            let ids: Vec<&str> = (0..self.world_ids.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| self.world_ids[i].as_str())
                .collect();
            Error::MissingMeasure(format!("{{{}}}", ids.join(", ")))
        })
    }
}

/// Probe formulas for the measure audits, with their pairwise BD
/// entailments computed once.
#[derive(Debug, Clone)]
pub struct ProbeSet {
    formulas: Vec<BdFormula>,
    entailments: Vec<(usize, usize)>,
}

impl ProbeSet {
    pub fn new(formulas: Vec<BdFormula>) -> Result<Self> {
        let mut entailments = Vec::new();
        for (i, f) in formulas.iter().enumerate() {
            for (j, g) in formulas.iter().enumerate() {
                if bd_entails(f, g)? {
                    entailments.push((i, j));
                }
            }
        }
        Ok(ProbeSet {
            formulas,
            entailments,
        })
    }

    pub fn formulas(&self) -> &[BdFormula] {
        &self.formulas
    }
}

/// A failed axiom instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    pub formulas: Vec<BdFormula>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fs: Vec<String> = self.formulas.iter().map(|g| g.to_string()).collect();
        write!(f, "{} [{}]: {}", self.axiom, fs.join(", "), self.detail)
    }
}

type Signature = Vec<(bool, bool)>;

fn mask(sig: &[(bool, bool)], kind: ExtensionKind) -> u64 {
    sig.iter()
        .enumerate()
        .filter(|(_, s)| kind.contains(**s))
        .fold(0, |m, (i, _)| m | 1 << i)
}

fn sig_neg(a: &[(bool, bool)]) -> Signature {
    a.iter().map(|&(t, f)| (f, t)).collect()
}

fn sig_and(a: &[(bool, bool)], b: &[(bool, bool)]) -> Signature {
    a.iter().zip(b).map(|(x, y)| (x.0 && y.0, x.1 || y.1)).collect()
}

fn sig_or(a: &[(bool, bool)], b: &[(bool, bool)]) -> Signature {
    a.iter().zip(b).map(|(x, y)| (x.0 || y.0, x.1 && y.1)).collect()
}

/// Probe formulas reduced to one representative per support table; every
/// axiom instance depends on formulas only through their extensions.
fn representatives(model: &BdModel, probe: &ProbeSet) -> (Vec<(usize, Signature)>, Vec<usize>) {
    let mut reps: Vec<(usize, Signature)> = Vec::new();
    let mut class_of = Vec::with_capacity(probe.formulas.len());
    let mut index: BTreeMap<Signature, usize> = BTreeMap::new();
    for (i, f) in probe.formulas.iter().enumerate() {
        let sig = model.support_table(f);
        let k = *index.entry(sig.clone()).or_insert_with(|| {
            reps.push((i, sig));
            reps.len() - 1
        });
        class_of.push(k);
    }
    (reps, class_of)
}

/// Audits the ±-probability conditions (monotonicity, negation,
/// exclusion-inclusion) of `table` over `probe` and its pairwise
/// conjunctions and disjunctions.
pub fn verify_pm_axioms(
    model: &BdModel,
    table: &SetMeasureTable,
    probe: &ProbeSet,
) -> Result<Vec<Violation>> {
    let (reps, _) = representatives(model, probe);
    let f = |i: usize| probe.formulas[reps[i].0].clone();
    let mut out = Vec::new();
    let mut sets: BTreeMap<u64, BdFormula> = BTreeMap::new();

    for (k, (_, sig)) in reps.iter().enumerate() {
        let plus = mask(sig, ExtensionKind::Plus);
        let minus = mask(sig, ExtensionKind::Minus);
        let neg_plus = mask(&sig_neg(sig), ExtensionKind::Plus);
        sets.entry(plus).or_insert_with(|| f(k));
        sets.entry(minus).or_insert_with(|| f(k).neg());
        let (a, b) = (table.get_mask(minus)?, table.get_mask(neg_plus)?);
        if a != b {
            out.push(Violation {
                axiom: "neg",
                formulas: vec![f(k)],
                detail: format!(
                    "μ(|φ|−) = {} but μ(|¬φ|+) = {}",
                    format_rational(a),
                    format_rational(b)
                ),
            });
        }
    }
    for i in 0..reps.len() {
        for j in i..reps.len() {
            let (si, sj) = (&reps[i].1, &reps[j].1);
            let disj = mask(&sig_or(si, sj), ExtensionKind::Plus);
            let conj = mask(&sig_and(si, sj), ExtensionKind::Plus);
            sets.entry(disj).or_insert_with(|| f(i).or(f(j)));
            sets.entry(conj).or_insert_with(|| f(i).and(f(j)));
            let lhs = table.get_mask(disj)?;
            let rhs = table.get_mask(mask(si, ExtensionKind::Plus))?
                + table.get_mask(mask(sj, ExtensionKind::Plus))?
                - table.get_mask(conj)?;
            if *lhs != rhs {
                out.push(Violation {
                    axiom: "ex",
                    formulas: vec![f(i), f(j)],
                    detail: format!(
                        "μ(|φ∨χ|+) = {} but μ|φ|+ + μ|χ|+ − μ|φ∧χ|+ = {}",
                        format_rational(lhs),
                        format_rational(&rhs)
                    ),
                });
            }
        }
    }
    for (x, fx) in &sets {
        for (y, fy) in &sets {
            if x & !y == 0 && x != y {
                let (a, b) = (table.get_mask(*x)?, table.get_mask(*y)?);
                if a > b {
                    out.push(Violation {
                        axiom: "mon",
                        formulas: vec![fx.clone(), fy.clone()],
                        detail: format!(
                            "X ⊆ Y but μ(X) = {} > μ(Y) = {}",
                            format_rational(a),
                            format_rational(b)
                        ),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Audits the four-probability conditions (partition, negation,
/// contradiction, BC-monotonicity, BC-exclusion) of `table` over `probe`.
/// BC-monotonicity is instantiated only for BD-valid probe pairs.
pub fn verify_four_axioms(
    model: &BdModel,
    table: &SetMeasureTable,
    probe: &ProbeSet,
) -> Result<Vec<Violation>> {
    use ExtensionKind::{B, C, D, U};
    let (reps, class_of) = representatives(model, probe);
    let f = |i: usize| probe.formulas[reps[i].0].clone();
    let mu = |sig: &[(bool, bool)], kind| table.get_mask(mask(sig, kind));
    let bc = |sig: &[(bool, bool)]| -> Result<Rational> { Ok(mu(sig, B)? + mu(sig, C)?) };
    let mut out = Vec::new();
    let mut report = |axiom, formulas, detail| {
        out.push(Violation {
            axiom,
            formulas,
            detail,
        })
    };

    for (k, (_, sig)) in reps.iter().enumerate() {
        let total = mu(sig, B)? + mu(sig, D)? + mu(sig, C)? + mu(sig, U)?;
        if !total.is_one() {
            report(
                "part",
                vec![f(k)],
                format!("the four parts sum to {}", format_rational(&total)),
            );
        }
        let neg = sig_neg(sig);
        if mu(&neg, B)? != mu(sig, D)? {
            report(
                "neg",
                vec![f(k)],
                format!(
                    "μ4(|¬φ|b) = {} but μ4(|φ|d) = {}",
                    format_rational(mu(&neg, B)?),
                    format_rational(mu(sig, D)?)
                ),
            );
        }
        if mu(&neg, C)? != mu(sig, C)? {
            report(
                "neg",
                vec![f(k)],
                format!(
                    "μ4(|¬φ|c) = {} but μ4(|φ|c) = {}",
                    format_rational(mu(&neg, C)?),
                    format_rational(mu(sig, C)?)
                ),
            );
        }
        let contra = sig_and(sig, &neg);
        if !mu(&contra, B)?.is_zero() {
            report(
                "contr",
                vec![f(k)],
                format!("μ4(|φ∧¬φ|b) = {}", format_rational(mu(&contra, B)?)),
            );
        }
        if mu(&contra, C)? != mu(sig, C)? {
            report(
                "contr",
                vec![f(k)],
                format!(
                    "μ4(|φ∧¬φ|c) = {} but μ4(|φ|c) = {}",
                    format_rational(mu(&contra, C)?),
                    format_rational(mu(sig, C)?)
                ),
            );
        }
    }

    let mon_pairs: BTreeSet<(usize, usize)> = probe
        .entailments
        .iter()
        .map(|&(i, j)| (class_of[i], class_of[j]))
        .collect();
    for (i, j) in mon_pairs {
        let (a, b) = (bc(&reps[i].1)?, bc(&reps[j].1)?);
        if a > b {
            report(
                "BCmon",
                vec![f(i), f(j)],
                format!(
                    "φ ⊨ χ but b+c of φ is {} > {}",
                    format_rational(&a),
                    format_rational(&b)
                ),
            );
        }
    }

    for i in 0..reps.len() {
        for j in i..reps.len() {
            let (si, sj) = (&reps[i].1, &reps[j].1);
            let lhs = bc(si)? + bc(sj)?;
            let rhs = bc(&sig_and(si, sj))? + bc(&sig_or(si, sj))?;
            if lhs != rhs {
                report(
                    "BCex",
                    vec![f(i), f(j)],
                    format!(
                        "{} on the left, {} on the right",
                        format_rational(&lhs),
                        format_rational(&rhs)
                    ),
                );
            }
        }
    }
    Ok(out)
}

/// Swaps gluts and gaps of every variable in `vocabulary` at every world,
/// keeping pure values and weights. Afterwards `|φ|+` of the original is
/// the complement of `|φ|−` of the result and vice versa, for every `φ`
/// over the vocabulary.
pub fn dual_model_over(
    model: &BdModel,
    weights: &WorldWeights,
    vocabulary: &BTreeSet<String>,
) -> Result<(BdModel, WorldWeights)> {
    let worlds = model
        .worlds()
        .iter()
        .map(|w| {
            let mut out = World::new(w.id.clone());
            for p in w.plus.iter().chain(&w.minus).chain(vocabulary) {
                let (t, f) = w.value(p).supports();
                let (t, f) = if t == f { (!t, !f) } else { (t, f) };
                if t {
                    out.plus.insert(p.clone());
                }
                if f {
                    out.minus.insert(p.clone());
                }
            }
            out
        })
        .collect();
    let dual = BdModel::new(worlds)?;
    weights.check(&dual)?;
    Ok((dual, weights.clone()))
}

/// [`dual_model_over`] the variables mentioned in the model.
pub fn dual_model(model: &BdModel, weights: &WorldWeights) -> Result<(BdModel, WorldWeights)> {
    dual_model_over(model, weights, &model.variables())
}
