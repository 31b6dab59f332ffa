//! Axiom schemata and a line-by-line checker for the Hilbert calculus of
//! the four-probability logic.
//!
//! Ł_Δ tautologies are not a schema here: a `taut` line is accepted when
//! the tableau proves it with modal atoms treated as opaque.

use std::collections::BTreeSet;
use std::fmt;

use crate::bd::{bd_entails, bd_equiv};
use crate::error::{Error, Result};
use crate::syntax::{check_dialect, parse_bd, parse_outer, BdFormula, Dialect, Modality, OuterFormula};
use crate::tableau::{prove_luk_valid, TableauOptions, TableauResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomSchema {
    /// `Xφ ↔ Xχ` for BD-equivalent `φ`, `χ`.
    Equiv(Modality),
    /// `∼Bl(φ ∧ ¬φ)`
    Contr,
    /// `Cfφ ↔ Cf(φ ∧ ¬φ)`
    ContrCf,
    /// `Bl¬φ ↔ Dbφ`
    Neg,
    /// `Cf¬φ ↔ Cfφ`
    NegCf,
    /// `(Blφ ⊕ Cfφ) → (Blχ ⊕ Cfχ)` for `φ ⊨ χ`.
    Mon,
    /// `Blφ ⊕ Dbφ ⊕ Cfφ ⊕ Ucφ`
    Part1,
    /// `((X1φ ⊕ X2φ ⊕ X3φ ⊕ X4φ) ⊖ X4φ) ↔ (X1φ ⊕ X2φ ⊕ X3φ)`, `Xᵢ` distinct.
    Part2([Modality; 4]),
    /// Exclusion-inclusion for `Bl ⊕ Cf`.
    Ex,
}

impl AxiomSchema {
    pub fn arity(self) -> usize {
        match self {
            AxiomSchema::Equiv(_) | AxiomSchema::Mon | AxiomSchema::Ex => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> String {
        let lower = |m: Modality| m.name().to_ascii_lowercase();
        match self {
            AxiomSchema::Equiv(m) => format!("equiv-{}", lower(m)),
            AxiomSchema::Contr => "contr".into(),
            AxiomSchema::ContrCf => "contr-cf".into(),
            AxiomSchema::Neg => "neg".into(),
            AxiomSchema::NegCf => "neg-cf".into(),
            AxiomSchema::Mon => "mon".into(),
            AxiomSchema::Part1 => "part1".into(),
            AxiomSchema::Part2(ms) => {
                let parts: Vec<String> = ms.iter().map(|m| lower(*m)).collect();
                format!("part2-{}", parts.join("-"))
            }
            AxiomSchema::Ex => "ex".into(),
        }
    }

    pub fn from_name(name: &str) -> Option<AxiomSchema> {
        let modality = |s: &str| {
            Modality::FOUR
                .into_iter()
                .find(|m| m.name().eq_ignore_ascii_case(s))
        };
        Some(match name {
            "contr" => AxiomSchema::Contr,
            "contr-cf" => AxiomSchema::ContrCf,
            "neg" => AxiomSchema::Neg,
            "neg-cf" => AxiomSchema::NegCf,
            "mon" => AxiomSchema::Mon,
            "part1" => AxiomSchema::Part1,
            "ex" => AxiomSchema::Ex,
            _ => {
                if let Some(m) = name.strip_prefix("equiv-") {
                    AxiomSchema::Equiv(modality(m)?)
                } else if let Some(rest) = name.strip_prefix("part2-") {
                    let ms: Vec<Modality> = rest.split('-').map(modality).collect::<Option<_>>()?;
                    AxiomSchema::Part2(ms.try_into().ok()?)
                } else {
                    return None;
                }
            }
        })
    }

    /// Every schema, with all 24 orderings of Part2.
    pub fn all() -> Vec<AxiomSchema> {
        let mut out: Vec<AxiomSchema> = Modality::FOUR.into_iter().map(AxiomSchema::Equiv).collect();
        out.extend([
            AxiomSchema::Contr,
            AxiomSchema::ContrCf,
            AxiomSchema::Neg,
            AxiomSchema::NegCf,
            AxiomSchema::Mon,
            AxiomSchema::Part1,
        ]);
        out.extend(permutations(Modality::FOUR).into_iter().map(AxiomSchema::Part2));
        out.push(AxiomSchema::Ex);
        out
    }
}

impl fmt::Display for AxiomSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn permutations(items: [Modality; 4]) -> Vec<[Modality; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let idx = [a, b, c, d];
                    if idx.iter().collect::<BTreeSet<_>>().len() == 4 {
                        out.push(idx.map(|i| items[i]));
                    }
                }
            }
        }
    }
    out
}

fn x(m: Modality, f: &BdFormula) -> OuterFormula {
    OuterFormula::modal(m, f.clone())
}

fn bc(f: &BdFormula) -> OuterFormula {
    x(Modality::Bl, f).plus(x(Modality::Cf, f))
}

fn contradiction(f: &BdFormula) -> BdFormula {
    f.clone().and(f.clone().neg())
}

/// The instance of `schema` at `args`, after checking its side condition.
pub fn instantiate(schema: AxiomSchema, args: &[BdFormula]) -> Result<OuterFormula> {
    if args.len() != schema.arity() {
        return Err(Error::SideCondition(format!(
            "{schema} takes {} argument(s), got {}",
            schema.arity(),
            args.len()
        )));
    }
    let phi = &args[0];
    use Modality::{Bl, Cf, Db, Uc};
    Ok(match schema {
        AxiomSchema::Equiv(m) => {
            if !Modality::FOUR.contains(&m) {
                return Err(Error::SideCondition(format!("{} is not a four-valued modality", m.name())));
            }
            if !bd_equiv(phi, &args[1])? {
                return Err(Error::SideCondition(format!(
                    "`{phi}` and `{}` are not BD-equivalent",
                    args[1]
                )));
            }
            x(m, phi).iff(x(m, &args[1]))
        }
        AxiomSchema::Contr => x(Bl, &contradiction(phi)).luk_neg(),
        AxiomSchema::ContrCf => x(Cf, phi).iff(x(Cf, &contradiction(phi))),
        AxiomSchema::Neg => x(Bl, &phi.clone().neg()).iff(x(Db, phi)),
        AxiomSchema::NegCf => x(Cf, &phi.clone().neg()).iff(x(Cf, phi)),
        AxiomSchema::Mon => {
            if !bd_entails(phi, &args[1])? {
                return Err(Error::SideCondition(format!(
                    "`{phi}` does not BD-entail `{}`",
                    args[1]
                )));
            }
            bc(phi).implies(bc(&args[1]))
        }
        AxiomSchema::Part1 => x(Bl, phi).plus(x(Db, phi)).plus(x(Cf, phi)).plus(x(Uc, phi)),
        AxiomSchema::Part2(ms) => {
            if ms.iter().collect::<BTreeSet<_>>().len() != 4 || ms.contains(&Modality::Pr) {
                return Err(Error::SideCondition(
                    "part2 needs four distinct four-valued modalities".into(),
                ));
            }
            let three = x(ms[0], phi).plus(x(ms[1], phi)).plus(x(ms[2], phi));
            three.clone().plus(x(ms[3], phi)).minus(x(ms[3], phi)).iff(three)
        }
        AxiomSchema::Ex => {
            let chi = &args[1];
            let lhs = bc(&phi.clone().or(chi.clone()));
            let rhs = bc(phi)
                .minus(bc(&phi.clone().and(chi.clone())))
                .plus(bc(chi));
            lhs.iff(rhs)
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub schema: AxiomSchema,
    pub args: Vec<BdFormula>,
    pub formula: OuterFormula,
}

/// All BD formulas over `vars` of connective depth at most `depth`, in
/// order of depth then construction.
pub fn bd_formulas(vars: &[String], depth: usize) -> Vec<BdFormula> {
    let mut layers: Vec<Vec<BdFormula>> = vec![vars.iter().map(BdFormula::var).collect()];
    for _ in 0..depth {
        let all: Vec<BdFormula> = layers.iter().flatten().cloned().collect();
        let prev = layers.last().expect("nonempty");
        let mut next = Vec::new();
        for f in prev {
            next.push(f.clone().neg());
        }
        for a in &all {
            for b in &all {
                if prev.contains(a) || prev.contains(b) {
                    next.push(a.clone().and(b.clone()));
                    next.push(a.clone().or(b.clone()));
                }
            }
        }
        layers.push(next);
    }
    layers.into_iter().flatten().collect()
}

/// One representative per BD-equivalence class (the first in `pool`),
/// with the other members of its class.
pub fn equivalence_classes(pool: &[BdFormula]) -> Result<Vec<(BdFormula, Vec<BdFormula>)>> {
    let mut classes: Vec<(BdFormula, Vec<BdFormula>)> = Vec::new();
    'outer: for f in pool {
        for (rep, members) in classes.iter_mut() {
            if rep == f || members.contains(f) {
                continue 'outer;
            }
            if bd_equiv(rep, f)? {
                members.push(f.clone());
                continue 'outer;
            }
        }
        classes.push((f.clone(), Vec::new()));
    }
    Ok(classes)
}

/// Instances of every schema with arguments drawn from the BD formulas of
/// depth `≤ depth` over `vars`, one argument per equivalence class (the
/// equivalence schema pairs each representative with the rest of its
/// class). Fails once more than `cap` instances would be produced.
pub fn generate_instances(vars: &[String], depth: usize, cap: usize) -> Result<Vec<Instance>> {
    let classes = equivalence_classes(&bd_formulas(vars, depth))?;
    let reps: Vec<&BdFormula> = classes.iter().map(|(r, _)| r).collect();
    let mut out = Vec::new();
    let mut push = |schema: AxiomSchema, args: Vec<BdFormula>| -> Result<()> {
        if out.len() >= cap {
            return Err(Error::Budget(format!("more than {cap} axiom instances")));
        }
        let formula = instantiate(schema, &args)?;
        out.push(Instance {
            schema,
            args,
            formula,
        });
        Ok(())
    };
    for schema in AxiomSchema::all() {
        match schema {
            AxiomSchema::Equiv(_) => {
                for (rep, members) in &classes {
                    for m in members {
                        push(schema, vec![rep.clone(), m.clone()])?;
                    }
                }
            }
            AxiomSchema::Mon => {
                for a in &reps {
                    for b in &reps {
                        if a != b && bd_entails(a, b)? {
                            push(schema, vec![(*a).clone(), (*b).clone()])?;
                        }
                    }
                }
            }
            AxiomSchema::Ex => {
                for a in &reps {
                    for b in &reps {
                        push(schema, vec![(*a).clone(), (*b).clone()])?;
                    }
                }
            }
            _ => {
                for a in &reps {
                    push(schema, vec![(*a).clone()])?;
                }
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Proofs

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    /// 1-based index into the premise list.
    Premise(usize),
    Axiom(AxiomSchema, Vec<BdFormula>),
    Taut,
    /// Minor premise line, then the implication line (both 1-based).
    MP(usize, usize),
    DeltaNec(usize),
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Premise(i) => write!(f, "premise {i}"),
            Justification::Axiom(s, args) => {
                let a: Vec<String> = args.iter().map(|g| g.to_string()).collect();
                write!(f, "axiom {s}({})", a.join(", "))
            }
            Justification::Taut => f.write_str("taut"),
            Justification::MP(i, j) => write!(f, "mp {i} {j}"),
            Justification::DeltaNec(i) => write!(f, "dnec {i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine {
    pub formula: OuterFormula,
    pub justification: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofFile {
    pub premises: Vec<OuterFormula>,
    pub lines: Vec<ProofLine>,
    pub goal: Option<OuterFormula>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofCheck {
    pub accepted: bool,
    /// 1-based line number and reason of the first rejected line (0 when
    /// the goal is not reached or the proof is empty).
    pub failure: Option<(usize, String)>,
}

impl ProofCheck {
    fn fail(line: usize, reason: impl Into<String>) -> Self {
        ProofCheck {
            accepted: false,
            failure: Some((line, reason.into())),
        }
    }
}

fn check_line(
    k: usize,
    line: &ProofLine,
    premises: &[OuterFormula],
    earlier: &[(OuterFormula, bool)],
    opts: &TableauOptions,
) -> std::result::Result<bool, String> {
    let cited = |i: usize| -> std::result::Result<&(OuterFormula, bool), String> {
        if i == 0 || i >= k {
            return Err(format!("line {i} is not an earlier line"));
        }
        Ok(&earlier[i - 1])
    };
    check_dialect(&line.formula, Dialect::Four).map_err(|e| e.to_string())?;
    match &line.justification {
        Justification::Premise(i) => {
            let p = premises
                .get(i.wrapping_sub(1))
                .ok_or_else(|| format!("no premise {i}"))?;
            if *p != line.formula {
                return Err(format!("premise {i} is `{p}`"));
            }
            Ok(true)
        }
        Justification::Axiom(schema, args) => {
            let inst = instantiate(*schema, args).map_err(|e| e.to_string())?;
            if inst != line.formula {
                return Err(format!("the {schema} instance is `{inst}`"));
            }
            Ok(false)
        }
        Justification::Taut => match prove_luk_valid(&line.formula, opts) {
            Ok(TableauResult::Closed(_)) => Ok(false),
            Ok(TableauResult::Open(..)) => Err("not a Ł_Δ tautology".into()),
            Err(e) => Err(e.to_string()),
        },
        Justification::MP(i, j) => {
            let (minor, d1) = cited(*i)?;
            let (major, d2) = cited(*j)?;
            match major {
                OuterFormula::Bin(crate::syntax::BinOp::Implies, a, b)
                    if **a == *minor && **b == line.formula =>
                {
                    Ok(*d1 || *d2)
                }
                _ => Err(format!("line {j} is not `{minor} -> {}`", line.formula)),
            }
        }
        Justification::DeltaNec(i) => {
            let (f, from_premise) = cited(*i)?;
            if *from_premise {
                return Err(format!("line {i} depends on a premise"));
            }
            if line.formula != f.clone().delta() {
                return Err(format!("expected `!({f})`"));
            }
            Ok(false)
        }
    }
}

/// Checks every line in order and that the last one is `goal`.
pub fn check_proof(
    premises: &[OuterFormula],
    lines: &[ProofLine],
    goal: Option<&OuterFormula>,
    opts: &TableauOptions,
) -> ProofCheck {
    let mut earlier: Vec<(OuterFormula, bool)> = Vec::new();
    for (idx, line) in lines.iter().enumerate() {
        let k = idx + 1;
        match check_line(k, line, premises, &earlier, opts) {
            Ok(dep) => earlier.push((line.formula.clone(), dep)),
            Err(reason) => return ProofCheck::fail(k, reason),
        }
    }
    match (lines.last(), goal) {
        (None, _) => ProofCheck::fail(0, "empty proof"),
        (Some(last), Some(g)) if last.formula != *g => {
            ProofCheck::fail(0, format!("last line is not the goal `{g}`"))
        }
        _ => ProofCheck {
            accepted: true,
            failure: None,
        },
    }
}

fn parse_justification(text: &str) -> std::result::Result<Justification, String> {
    let text = text.trim();
    let (head, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
    let nums = |s: &str| -> std::result::Result<Vec<usize>, String> {
        s.split_whitespace()
            .map(|n| n.parse().map_err(|_| format!("bad line number `{n}`")))
            .collect()
    };
    match head {
        "taut" if rest.is_empty() => Ok(Justification::Taut),
        "premise" => match nums(rest)?[..] {
            [i] => Ok(Justification::Premise(i)),
            _ => Err("expected `premise <i>`".into()),
        },
        "mp" => match nums(rest)?[..] {
            [i, j] => Ok(Justification::MP(i, j)),
            _ => Err("expected `mp <i> <j>`".into()),
        },
        "dnec" => match nums(rest)?[..] {
            [i] => Ok(Justification::DeltaNec(i)),
            _ => Err("expected `dnec <i>`".into()),
        },
        "axiom" => {
            let (name, args) = rest
                .split_once('(')
                .ok_or("expected `axiom <name>(<args>)`")?;
            let args = args
                .trim_end()
                .strip_suffix(')')
                .ok_or("missing `)` after axiom arguments")?;
            let schema = AxiomSchema::from_name(name.trim())
                .ok_or_else(|| format!("unknown axiom `{}`", name.trim()))?;
            let args = args
                .split(',')
                .map(|a| parse_bd(a).map_err(|e| e.to_string()))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            Ok(Justification::Axiom(schema, args))
        }
        _ => Err(format!("unknown justification `{text}`")),
    }
}

/// Reads a proof file: `premise <formula>` and `goal <formula>` lines, then
/// `<k>. <formula> ; <justification>` lines numbered from 1. `#` starts a
/// comment.
pub fn parse_proof(text: &str) -> Result<ProofFile> {
    let mut premises = Vec::new();
    let mut lines = Vec::new();
    let mut goal = None;
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let err = |message: String| Error::ProofFormat { line, message };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let four = |s: &str| parse_outer(s, Dialect::Four).map_err(|e| err(e.to_string()));
        if let Some(f) = content.strip_prefix("premise ") {
            premises.push(four(f)?);
        } else if let Some(f) = content.strip_prefix("goal ") {
            goal = Some(four(f)?);
        } else {
            let (num, rest) = content
                .split_once('.')
                .ok_or_else(|| err("expected `<k>. <formula> ; <justification>`".into()))?;
            let k: usize = num
                .trim()
                .parse()
                .map_err(|_| err(format!("bad line number `{}`", num.trim())))?;
            if k != lines.len() + 1 {
                return Err(err(format!("expected line {}, found {k}", lines.len() + 1)));
            }
            let (formula, just) = rest
                .rsplit_once(';')
                .ok_or_else(|| err("missing `; <justification>`".into()))?;
            lines.push(ProofLine {
                formula: four(formula)?,
                justification: parse_justification(just).map_err(err)?,
            });
        }
    }
    Ok(ProofFile {
        premises,
        lines,
        goal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bd(s: &str) -> BdFormula {
        parse_bd(s).unwrap()
    }

    fn four(s: &str) -> OuterFormula {
        parse_outer(s, Dialect::Four).unwrap()
    }

    #[test]
    fn instantiate_examples() {
        assert_eq!(
            instantiate(AxiomSchema::Neg, &[bd("p")]).unwrap(),
            four("Bl{-p} <-> Db{p}")
        );
        assert_eq!(
            instantiate(AxiomSchema::Mon, &[bd("p"), bd("p | q")]).unwrap(),
            four("(Bl{p}(+)Cf{p}) -> (Bl{p|q}(+)Cf{p|q})")
        );
        assert!(matches!(
            instantiate(AxiomSchema::Mon, &[bd("p | q"), bd("p")]),
            Err(Error::SideCondition(_))
        ));
        assert!(instantiate(AxiomSchema::Equiv(Modality::Bl), &[bd("p"), bd("-p")]).is_err());
        assert!(instantiate(
            AxiomSchema::Part2([Modality::Bl, Modality::Bl, Modality::Cf, Modality::Uc]),
            &[bd("p")]
        )
        .is_err());
        assert!(instantiate(AxiomSchema::Contr, &[]).is_err());
    }

    #[test]
    fn names_round_trip() {
        let all = AxiomSchema::all();
        assert_eq!(all.len(), 4 + 6 + 24 + 1);
        for s in all {
            assert_eq!(AxiomSchema::from_name(&s.name()), Some(s));
        }
        assert_eq!(AxiomSchema::from_name("part2-bl-db-cf-uc").map(|s| s.name()).as_deref(), Some("part2-bl-db-cf-uc"));
        assert_eq!(AxiomSchema::from_name("equiv-pr"), None);
    }

    #[test]
    fn generation() {
        let p = vec!["p".to_string()];
        let d1 = generate_instances(&p, 1, 10_000).unwrap();
        assert!(d1.iter().any(|i| i.formula == four("~Bl{p & -p}")));
        let d0 = generate_instances(&p, 0, 10_000).unwrap();
        assert!(d0.iter().any(|i| i.schema == AxiomSchema::Part1 && i.args == vec![bd("p")]));
        let pq = vec!["p".to_string(), "q".to_string()];
        let d = generate_instances(&pq, 1, 10_000).unwrap();
        assert!(d.iter().any(|i| i.schema == AxiomSchema::Ex && i.args == vec![bd("p"), bd("q")]));
        assert!(d.len() >= 200, "{}", d.len());
        assert!(generate_instances(&pq, 1, 10).unwrap_err().is_resource_cap());
        assert_eq!(generate_instances(&pq, 1, 10_000).unwrap(), d);
    }

    const PROOF: &str = "\
# Ł axiom a -> (b -> a) applied to a contradiction axiom
1. ~Bl{p & -p} ; axiom contr(p)
2. ~Bl{p & -p} -> (Bl{q} -> ~Bl{p & -p}) ; taut
3. Bl{q} -> ~Bl{p & -p} ; mp 1 2
goal Bl{q} -> ~Bl{p & -p}
";

    #[test]
    fn checker_accepts() {
        let pf = parse_proof(PROOF).unwrap();
        let r = check_proof(&pf.premises, &pf.lines, pf.goal.as_ref(), &TableauOptions::default());
        assert!(r.accepted, "{r:?}");
    }

    #[test]
    fn checker_rejects() {
        let opts = TableauOptions::default();
        let pf = parse_proof("premise Bl{p}\n1. Bl{p} ; premise 1\n2. !Bl{p} ; dnec 1\n").unwrap();
        let r = check_proof(&pf.premises, &pf.lines, None, &opts);
        assert_eq!(r.failure.map(|f| f.0), Some(2));

        let pf = parse_proof("1. ~Bl{p & -p} ; axiom contr(p)\n2. Bl{q} ; mp 1 1\n").unwrap();
        let r = check_proof(&pf.premises, &pf.lines, None, &opts);
        assert_eq!(r.failure.map(|f| f.0), Some(2));

        let pf = parse_proof("1. Bl{p} -> Bl{p} ; taut\n2. Bl{p} ; taut\n").unwrap();
        let r = check_proof(&pf.premises, &pf.lines, None, &opts);
        assert_eq!(r.failure.map(|f| f.0), Some(2));

        let pf = parse_proof("1. ~Bl{p & -p} ; axiom contr(p)\n2. !~Bl{p & -p} ; dnec 1\n").unwrap();
        let r = check_proof(&pf.premises, &pf.lines, Some(&four("Bl{p}")), &opts);
        assert_eq!(r.failure.map(|f| f.0), Some(0));
        assert!(check_proof(&pf.premises, &pf.lines, None, &opts).accepted);
    }

    #[test]
    fn parse_errors() {
        let line = |t: &str| match parse_proof(t) {
            Err(Error::ProofFormat { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line("1. Bl{p} ; taut\n3. Bl{p} ; taut"), 2);
        assert_eq!(line("1. Bl{p} taut"), 1);
        assert_eq!(line("\n1. Bl{p} ; axiom nope(p)"), 2);
        assert_eq!(line("premise Pr{p}"), 1);
    }
}
