//! Belnap-Dunn models over finite world sets: support of truth and falsity,
//! the six extensions of a formula, and the entailment oracle.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::syntax::BdFormula;

/// Largest number of variables the valuation enumeration accepts.
pub const MAX_ENTAILMENT_VARS: usize = 12;

/// One world: the variables it supports the truth of (`w ∈ v+(p)`) and the
/// falsity of (`w ∈ v−(p)`). The two sets may overlap (gluts) and a
/// variable in neither is a gap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct World {
    pub id: String,
    pub plus: BTreeSet<String>,
    pub minus: BTreeSet<String>,
}

impl World {
    pub fn new(id: impl Into<String>) -> Self {
        World {
            id: id.into(),
            plus: BTreeSet::new(),
            minus: BTreeSet::new(),
        }
    }

    pub fn with_plus(mut self, var: &str) -> Self {
        self.plus.insert(var.to_string());
        self
    }

    pub fn with_minus(mut self, var: &str) -> Self {
        self.minus.insert(var.to_string());
        self
    }

    pub fn value(&self, var: &str) -> Belnap {
        Belnap::from_supports(self.plus.contains(var), self.minus.contains(var))
    }
}

/// A BD model `⟨W, v+, v−⟩` with a nonempty, ordered list of worlds.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BdModel {
    worlds: Vec<World>,
}

impl BdModel {
    pub fn new(worlds: Vec<World>) -> Result<Self> {
        if worlds.is_empty() {
            return Err(Error::Malformed("a model needs at least one world".into()));
        }
        let mut seen = BTreeSet::new();
        for w in &worlds {
            if !seen.insert(w.id.as_str()) {
                return Err(Error::Malformed(format!("duplicate world id `{}`", w.id)));
            }
        }
        Ok(BdModel { worlds })
    }

    pub fn worlds(&self) -> &[World] {
        &self.worlds
    }

    pub fn world_ids(&self) -> impl Iterator<Item = &str> {
        self.worlds.iter().map(|w| w.id.as_str())
    }

    pub fn world(&self, id: &str) -> Result<&World> {
        self.worlds
            .iter()
            .find(|w| w.id == id)
            .ok_or_else(|| Error::UnknownWorld(id.to_string()))
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.worlds.iter().position(|w| w.id == id)
    }

    /// Every variable mentioned at some world.
    pub fn variables(&self) -> BTreeSet<String> {
        self.worlds
            .iter()
            .flat_map(|w| w.plus.iter().chain(w.minus.iter()))
            .cloned()
            .collect()
    }

    /// `(w ⊨+ f, w ⊨− f)` for every world, in world order.
    pub fn support_table(&self, f: &BdFormula) -> Vec<(bool, bool)> {
        self.worlds
            .iter()
            .map(|w| eval_supports(f, &|p| w.value(p)))
            .collect()
    }

    /// World indices in the `kind` extension of `f`.
    pub fn extension_indices(&self, f: &BdFormula, kind: ExtensionKind) -> BTreeSet<usize> {
        self.support_table(f)
            .into_iter()
            .enumerate()
            .filter(|(_, s)| kind.contains(*s))
            .map(|(i, _)| i)
            .collect()
    }
}

/// The four Belnap values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Belnap {
    True,
    False,
    Both,
    Neither,
}

impl Belnap {
    pub const ALL: [Belnap; 4] = [Belnap::True, Belnap::False, Belnap::Both, Belnap::Neither];

    pub fn from_supports(truth: bool, falsity: bool) -> Belnap {
        match (truth, falsity) {
            (true, false) => Belnap::True,
            (false, true) => Belnap::False,
            (true, true) => Belnap::Both,
            (false, false) => Belnap::Neither,
        }
    }

    pub fn supports(self) -> (bool, bool) {
        match self {
            Belnap::True => (true, false),
            Belnap::False => (false, true),
            Belnap::Both => (true, true),
            Belnap::Neither => (false, false),
        }
    }
}

/// Structural recursion for `(⊨+, ⊨−)` over a valuation of the variables.
pub fn eval_supports(f: &BdFormula, val: &impl Fn(&str) -> Belnap) -> (bool, bool) {
    match f {
        BdFormula::Var(p) => val(p).supports(),
        BdFormula::Neg(g) => {
            let (t, fa) = eval_supports(g, val);
            (fa, t)
        }
        BdFormula::And(a, b) => {
            let (ta, fa) = eval_supports(a, val);
            let (tb, fb) = eval_supports(b, val);
            (ta && tb, fa || fb)
        }
        BdFormula::Or(a, b) => {
            let (ta, fa) = eval_supports(a, val);
            let (tb, fb) = eval_supports(b, val);
            (ta || tb, fa && fb)
        }
    }
}

/// The six extensions of a formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtensionKind {
    /// `|φ|+`
    Plus,
    /// `|φ|−`
    Minus,
    /// pure belief, `|φ|+ ∖ |φ|−`
    B,
    /// pure disbelief, `|φ|− ∖ |φ|+`
    D,
    /// conflict, `|φ|+ ∩ |φ|−`
    C,
    /// uncertainty, `W ∖ (|φ|+ ∪ |φ|−)`
    U,
}

impl ExtensionKind {
    pub const ALL: [ExtensionKind; 6] = [
        ExtensionKind::Plus,
        ExtensionKind::Minus,
        ExtensionKind::B,
        ExtensionKind::D,
        ExtensionKind::C,
        ExtensionKind::U,
    ];

    /// The four-way partition.
    pub const PARTS: [ExtensionKind; 4] = [
        ExtensionKind::B,
        ExtensionKind::D,
        ExtensionKind::C,
        ExtensionKind::U,
    ];

    pub fn contains(self, (t, f): (bool, bool)) -> bool {
        match self {
            ExtensionKind::Plus => t,
            ExtensionKind::Minus => f,
            ExtensionKind::B => t && !f,
            ExtensionKind::D => f && !t,
            ExtensionKind::C => t && f,
            ExtensionKind::U => !t && !f,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ExtensionKind::Plus => "+",
            ExtensionKind::Minus => "-",
            ExtensionKind::B => "b",
            ExtensionKind::D => "d",
            ExtensionKind::C => "c",
            ExtensionKind::U => "u",
        }
    }
}

impl fmt::Display for ExtensionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `(w ⊨+ f, w ⊨− f)`.
pub fn supports(model: &BdModel, world: &str, f: &BdFormula) -> Result<(bool, bool)> {
    let w = model.world(world)?;
    Ok(eval_supports(f, &|p| w.value(p)))
}

/// The named extension of `f`, as world ids.
pub fn extension(model: &BdModel, f: &BdFormula, kind: ExtensionKind) -> BTreeSet<String> {
    model
        .extension_indices(f, kind)
        .into_iter()
        .map(|i| model.worlds[i].id.clone())
        .collect()
}

/// Calls `visit` with every assignment of Belnap values to `vars`.
/// Returns early with `false` as soon as `visit` does.
pub fn for_each_valuation(
    vars: &[String],
    mut visit: impl FnMut(&BTreeMap<&str, Belnap>) -> bool,
) -> Result<bool> {
    if vars.len() > MAX_ENTAILMENT_VARS {
        return Err(Error::TooManyVariables {
            found: vars.len(),
            cap: MAX_ENTAILMENT_VARS,
        });
    }
    let total = 1u64 << (2 * vars.len());
    let mut val = BTreeMap::new();
    for code in 0..total {
        for (i, v) in vars.iter().enumerate() {
            val.insert(v.as_str(), Belnap::ALL[((code >> (2 * i)) & 3) as usize]);
        }
        if !visit(&val) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `f ⊨BD g`: truth of `f` carries over to `g` and falsity of `g` carries
/// back to `f` under every four-valued valuation.
pub fn bd_entails(f: &BdFormula, g: &BdFormula) -> Result<bool> {
    let mut vars = f.props();
    vars.extend(g.props());
    let vars: Vec<String> = vars.into_iter().collect();
    for_each_valuation(&vars, |val| {
        let lookup = |p: &str| val[p];
        let (tf, ff) = eval_supports(f, &lookup);
        let (tg, fg) = eval_supports(g, &lookup);
        (!tf || tg) && (!fg || ff)
    })
}

/// `f ⊣⊢ g` in BD.
pub fn bd_equiv(f: &BdFormula, g: &BdFormula) -> Result<bool> {
    Ok(bd_entails(f, g)? && bd_entails(g, f)?)
}

/// Pushes `¬` down to the variables using the De Morgan dualities of the
/// support clauses. The result has the same `⊨+` and `⊨−` at every world.
pub fn negation_normal_form(f: &BdFormula) -> BdFormula {
    fn go(f: &BdFormula, negated: bool) -> BdFormula {
        match (f, negated) {
            (BdFormula::Var(_), false) => f.clone(),
            (BdFormula::Var(_), true) => f.clone().neg(),
            (BdFormula::Neg(g), _) => go(g, !negated),
            (BdFormula::And(a, b), false) => go(a, false).and(go(b, false)),
            (BdFormula::Or(a, b), false) => go(a, false).or(go(b, false)),
            (BdFormula::And(a, b), true) => go(a, true).or(go(b, true)),
            (BdFormula::Or(a, b), true) => go(a, true).and(go(b, true)),
        }
    }
    go(f, false)
}
