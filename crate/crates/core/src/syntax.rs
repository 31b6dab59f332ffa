//! Abstract syntax of the inner (Belnap-Dunn) layer and the outer
//! (Łukasiewicz) layer, with an ASCII parser and a minimal-parentheses
//! printer.
//!
//! Surface syntax:
//!
//! ```text
//! bd     := ident | "-" bd | bd "&" bd | bd "|" bd | "(" bd ")"
//! outer  := atom | ident | "-" outer | "~" outer | "!" outer | outer bin outer | "(" outer ")"
//! bin    := "->" | "<->" | "&" | "|" | "(+)" | "(*)" | "(-)"
//! atom   := ("Pr"|"Bl"|"Db"|"Cf"|"Uc") "{" bd "}"
//! ```
//!
//! Outer precedence, tightest first: unary `- ~ !`, `(*)`, `(+) (-)`,
//! `& |`, `->` (right associative), `<->`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A formula of the inner layer: no implication, only `¬`, `∧`, `∨`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BdFormula {
    Var(String),
    Neg(Box<BdFormula>),
    And(Box<BdFormula>, Box<BdFormula>),
    Or(Box<BdFormula>, Box<BdFormula>),
}

impl BdFormula {
    pub fn var(name: impl Into<String>) -> Self {
        BdFormula::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Self {
        BdFormula::Neg(Box::new(self))
    }

    pub fn and(self, rhs: BdFormula) -> Self {
        BdFormula::And(Box::new(self), Box::new(rhs))
    }

    pub fn or(self, rhs: BdFormula) -> Self {
        BdFormula::Or(Box::new(self), Box::new(rhs))
    }

    /// `Prop(φ)`.
    pub fn props(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_props(&mut out);
        out
    }

    pub(crate) fn collect_props(&self, out: &mut BTreeSet<String>) {
        match self {
            BdFormula::Var(p) => {
                out.insert(p.clone());
            }
            BdFormula::Neg(f) => f.collect_props(out),
            BdFormula::And(a, b) | BdFormula::Or(a, b) => {
                a.collect_props(out);
                b.collect_props(out);
            }
        }
    }

    /// `Lit(φ)`: the variables and negated variables occurring in `φ`.
    pub fn lits(&self) -> BTreeSet<BdFormula> {
        let mut out = BTreeSet::new();
        self.collect_lits(&mut out);
        out
    }

    fn collect_lits(&self, out: &mut BTreeSet<BdFormula>) {
        match self {
            BdFormula::Var(_) => {
                out.insert(self.clone());
            }
            BdFormula::Neg(inner) => {
                if let BdFormula::Var(_) = **inner {
                    out.insert(self.clone());
                }
                inner.collect_lits(out);
            }
            BdFormula::And(a, b) | BdFormula::Or(a, b) => {
                a.collect_lits(out);
                b.collect_lits(out);
            }
        }
    }

    /// `Sf(φ)`, including `φ` itself.
    pub fn subformulas(&self) -> BTreeSet<BdFormula> {
        let mut out = BTreeSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    fn collect_subformulas(&self, out: &mut BTreeSet<BdFormula>) {
        out.insert(self.clone());
        match self {
            BdFormula::Var(_) => {}
            BdFormula::Neg(f) => f.collect_subformulas(out),
            BdFormula::And(a, b) | BdFormula::Or(a, b) => {
                a.collect_subformulas(out);
                b.collect_subformulas(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            BdFormula::Var(_) => 0,
            BdFormula::Neg(f) => 1 + f.depth(),
            BdFormula::And(a, b) | BdFormula::Or(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            BdFormula::Var(_) => 1,
            BdFormula::Neg(f) => 1 + f.size(),
            BdFormula::And(a, b) | BdFormula::Or(a, b) => 1 + a.size() + b.size(),
        }
    }

    fn level(&self) -> u8 {
        match self {
            BdFormula::Or(..) => 1,
            BdFormula::And(..) => 2,
            BdFormula::Neg(_) => 3,
            BdFormula::Var(_) => 4,
        }
    }
}

/// The five measure modalities. `Pr` belongs to the ±-probability logic,
/// the other four to the four-valued one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Modality {
    Pr,
    Bl,
    Db,
    Cf,
    Uc,
}

impl Modality {
    pub const ALL: [Modality; 5] = [
        Modality::Pr,
        Modality::Bl,
        Modality::Db,
        Modality::Cf,
        Modality::Uc,
    ];
    pub const FOUR: [Modality; 4] = [Modality::Bl, Modality::Db, Modality::Cf, Modality::Uc];

    pub fn name(self) -> &'static str {
        match self {
            Modality::Pr => "Pr",
            Modality::Bl => "Bl",
            Modality::Db => "Db",
            Modality::Cf => "Cf",
            Modality::Uc => "Uc",
        }
    }

    pub fn from_name(name: &str) -> Option<Modality> {
        Modality::ALL.into_iter().find(|m| m.name() == name)
    }
}

/// Unary outer connectives: `-` (paraconsistent `¬`), `~` (Łukasiewicz `∼`)
/// and `!` (Baaz `Δ`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnaryOp {
    ParNeg,
    LukNeg,
    Delta,
}

impl UnaryOp {
    pub fn symbol(self) -> &'static str {
        match self {
            UnaryOp::ParNeg => "-",
            UnaryOp::LukNeg => "~",
            UnaryOp::Delta => "!",
        }
    }
}

/// Binary outer connectives. Only `Implies` is primitive; the rest are
/// kept as nodes so printed output follows the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinOp {
    Implies,
    Iff,
    And,
    Or,
    Strong,
    Plus,
    Minus,
}

impl BinOp {
    pub const ALL: [BinOp; 7] = [
        BinOp::Implies,
        BinOp::Iff,
        BinOp::And,
        BinOp::Or,
        BinOp::Strong,
        BinOp::Plus,
        BinOp::Minus,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Implies => "->",
            BinOp::Iff => "<->",
            BinOp::And => "&",
            BinOp::Or => "|",
            BinOp::Strong => "(*)",
            BinOp::Plus => "(+)",
            BinOp::Minus => "(-)",
        }
    }

    fn level(self) -> u8 {
        match self {
            BinOp::Iff => 1,
            BinOp::Implies => 2,
            BinOp::And | BinOp::Or => 3,
            BinOp::Plus | BinOp::Minus => 4,
            BinOp::Strong => 5,
        }
    }

    fn right_assoc(self) -> bool {
        self == BinOp::Implies
    }
}

/// A formula of the outer layer. Modal atoms hold inner formulas, so
/// modalities cannot nest. `Atom` is a bare propositional atom, accepted
/// only in the plain Łukasiewicz dialect (used for tableau work and atom
/// abstraction).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OuterFormula {
    Modal(Modality, BdFormula),
    Atom(String),
    Unary(UnaryOp, Box<OuterFormula>),
    Bin(BinOp, Box<OuterFormula>, Box<OuterFormula>),
}

impl OuterFormula {
    pub fn modal(m: Modality, body: BdFormula) -> Self {
        OuterFormula::Modal(m, body)
    }

    pub fn atom(name: impl Into<String>) -> Self {
        OuterFormula::Atom(name.into())
    }

    pub fn unary(op: UnaryOp, f: OuterFormula) -> Self {
        OuterFormula::Unary(op, Box::new(f))
    }

    pub fn bin(op: BinOp, a: OuterFormula, b: OuterFormula) -> Self {
        OuterFormula::Bin(op, Box::new(a), Box::new(b))
    }

    pub fn par_neg(self) -> Self {
        Self::unary(UnaryOp::ParNeg, self)
    }

    pub fn luk_neg(self) -> Self {
        Self::unary(UnaryOp::LukNeg, self)
    }

    pub fn delta(self) -> Self {
        Self::unary(UnaryOp::Delta, self)
    }

    pub fn implies(self, rhs: OuterFormula) -> Self {
        Self::bin(BinOp::Implies, self, rhs)
    }

    pub fn iff(self, rhs: OuterFormula) -> Self {
        Self::bin(BinOp::Iff, self, rhs)
    }

    pub fn plus(self, rhs: OuterFormula) -> Self {
        Self::bin(BinOp::Plus, self, rhs)
    }

    pub fn minus(self, rhs: OuterFormula) -> Self {
        Self::bin(BinOp::Minus, self, rhs)
    }

    pub fn strong(self, rhs: OuterFormula) -> Self {
        Self::bin(BinOp::Strong, self, rhs)
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, OuterFormula::Modal(..) | OuterFormula::Atom(_))
    }

    /// Variables of all inner formulas under modal atoms.
    pub fn props(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.for_each_atom(&mut |a| {
            if let OuterFormula::Modal(_, body) = a {
                body.collect_props(&mut out);
            }
        });
        out
    }

    /// Distinct atoms (modal or bare) in order of first occurrence.
    pub fn atoms(&self) -> Vec<OuterFormula> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        self.for_each_atom(&mut |a| {
            if seen.insert(a.clone()) {
                out.push(a.clone());
            }
        });
        out
    }

    pub fn for_each_atom<'a>(&'a self, f: &mut impl FnMut(&'a OuterFormula)) {
        match self {
            OuterFormula::Modal(..) | OuterFormula::Atom(_) => f(self),
            OuterFormula::Unary(_, g) => g.for_each_atom(f),
            OuterFormula::Bin(_, a, b) => {
                a.for_each_atom(f);
                b.for_each_atom(f);
            }
        }
    }

    /// Outer subformulas, including the formula itself.
    pub fn subformulas(&self) -> BTreeSet<OuterFormula> {
        let mut out = BTreeSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    fn collect_subformulas(&self, out: &mut BTreeSet<OuterFormula>) {
        out.insert(self.clone());
        match self {
            OuterFormula::Modal(..) | OuterFormula::Atom(_) => {}
            OuterFormula::Unary(_, g) => g.collect_subformulas(out),
            OuterFormula::Bin(_, a, b) => {
                a.collect_subformulas(out);
                b.collect_subformulas(out);
            }
        }
    }

    /// Node count, counting each modal atom (with its body) as one node.
    pub fn size(&self) -> usize {
        match self {
            OuterFormula::Modal(..) | OuterFormula::Atom(_) => 1,
            OuterFormula::Unary(_, g) => 1 + g.size(),
            OuterFormula::Bin(_, a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Connective depth of the outer layer.
    pub fn depth(&self) -> usize {
        match self {
            OuterFormula::Modal(..) | OuterFormula::Atom(_) => 0,
            OuterFormula::Unary(_, g) => 1 + g.depth(),
            OuterFormula::Bin(_, a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    pub fn contains_par_neg(&self) -> bool {
        match self {
            OuterFormula::Modal(..) | OuterFormula::Atom(_) => false,
            OuterFormula::Unary(UnaryOp::ParNeg, _) => true,
            OuterFormula::Unary(_, g) => g.contains_par_neg(),
            OuterFormula::Bin(_, a, b) => a.contains_par_neg() || b.contains_par_neg(),
        }
    }

    /// Rebuilds the formula with every atom replaced by `f(atom)`.
    pub fn map_atoms(&self, f: &mut impl FnMut(&OuterFormula) -> OuterFormula) -> OuterFormula {
        match self {
            OuterFormula::Modal(..) | OuterFormula::Atom(_) => f(self),
            OuterFormula::Unary(op, g) => OuterFormula::unary(*op, g.map_atoms(f)),
            OuterFormula::Bin(op, a, b) => OuterFormula::bin(*op, a.map_atoms(f), b.map_atoms(f)),
        }
    }

    fn level(&self) -> u8 {
        match self {
            OuterFormula::Bin(op, ..) => op.level(),
            OuterFormula::Unary(..) => 6,
            OuterFormula::Modal(..) | OuterFormula::Atom(_) => 7,
        }
    }
}

/// Which outer language a formula belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dialect {
    /// ±-probabilities: `Pr` atoms, all connectives including `-`.
    Pm,
    /// Four-valued probabilities: `Bl`/`Db`/`Cf`/`Uc` atoms, no `-`.
    Four,
    /// Plain Ł²_Δ: anything, bare identifiers are atoms.
    PlainLuk,
}

impl Dialect {
    pub fn name(self) -> &'static str {
        match self {
            Dialect::Pm => "pm",
            Dialect::Four => "four",
            Dialect::PlainLuk => "luk",
        }
    }

    pub fn from_name(name: &str) -> Option<Dialect> {
        match name {
            "pm" => Some(Dialect::Pm),
            "four" => Some(Dialect::Four),
            "luk" | "plain" => Some(Dialect::PlainLuk),
            _ => None,
        }
    }
}

/// Checks that `f` belongs to `dialect`, naming the first offending node.
pub fn check_dialect(f: &OuterFormula, dialect: Dialect) -> Result<()> {
    let fail = |message: String| Error::Dialect {
        dialect: dialect.name(),
        message,
    };
    match (dialect, f) {
        (Dialect::PlainLuk, _) => Ok(()),
        (_, OuterFormula::Atom(a)) => Err(fail(format!("bare atom `{a}` outside a modality"))),
        (Dialect::Pm, OuterFormula::Modal(m, body)) if *m != Modality::Pr => Err(fail(format!(
            "modality {} is not allowed, found `{}`",
            m.name(),
            render_outer(&OuterFormula::Modal(*m, body.clone()))
        ))),
        (Dialect::Four, OuterFormula::Modal(Modality::Pr, body)) => Err(fail(format!(
            "modality Pr is not allowed, found `Pr{{{}}}`",
            render_bd(body)
        ))),
        (_, OuterFormula::Modal(..)) => Ok(()),
        (Dialect::Four, OuterFormula::Unary(UnaryOp::ParNeg, _)) => Err(fail(format!(
            "ParNeg forbidden, found `{}`",
            render_outer(f)
        ))),
        (_, OuterFormula::Unary(_, g)) => check_dialect(g, dialect),
        (_, OuterFormula::Bin(_, a, b)) => {
            check_dialect(a, dialect)?;
            check_dialect(b, dialect)
        }
    }
}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Dash,
    Tilde,
    Bang,
    Amp,
    Bar,
    Arrow,
    DArrow,
    OPlus,
    OTimes,
    OMinus,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Eof => "end of input".to_string(),
            other => format!("`{}`", other.text()),
        }
    }

    fn text(&self) -> &str {
        match self {
            Tok::Ident(s) => s,
            Tok::Dash => "-",
            Tok::Tilde => "~",
            Tok::Bang => "!",
            Tok::Amp => "&",
            Tok::Bar => "|",
            Tok::Arrow => "->",
            Tok::DArrow => "<->",
            Tok::OPlus => "(+)",
            Tok::OTimes => "(*)",
            Tok::OMinus => "(-)",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::Eof => "",
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let rest = &bytes[i..];
        let (tok, len) = if rest.starts_with(b"<->") {
            (Tok::DArrow, 3)
        } else if rest.starts_with(b"->") {
            (Tok::Arrow, 2)
        } else if rest.starts_with(b"(+)") {
            (Tok::OPlus, 3)
        } else if rest.starts_with(b"(*)") {
            (Tok::OTimes, 3)
        } else if rest.starts_with(b"(-)") {
            (Tok::OMinus, 3)
        } else {
            match c {
                b'-' => (Tok::Dash, 1),
                b'~' => (Tok::Tilde, 1),
                b'!' => (Tok::Bang, 1),
                b'&' => (Tok::Amp, 1),
                b'|' => (Tok::Bar, 1),
                b'(' => (Tok::LParen, 1),
                b')' => (Tok::RParen, 1),
                b'{' => (Tok::LBrace, 1),
                b'}' => (Tok::RBrace, 1),
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let mut j = i + 1;
                    while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_') {
                        j += 1;
                    }
                    (Tok::Ident(text[i..j].to_string()), j - i)
                }
                _ => {
                    let ch = text[i..].chars().next().unwrap_or('?');
                    return Err(Error::Syntax {
                        offset: i,
                        message: format!("unexpected character `{ch}`"),
                    });
                }
            }
        };
        out.push((tok, start));
        i += len;
    }
    out.push((Tok::Eof, text.len()));
    Ok(out)
}

fn reserved_prefix(name: &str) -> bool {
    Modality::ALL.iter().any(|m| name.starts_with(m.name()))
}

// ---------------------------------------------------------------------------
// Parser

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    dialect: Dialect,
}

impl Parser {
    fn new(text: &str, dialect: Dialect) -> Result<Self> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            dialect,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &str) -> Error {
        Error::Syntax {
            offset: self.offset(),
            message: format!("expected {expected}, found {}", self.peek().describe()),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{}`", tok.text())))
        }
    }

    fn finish(&self) -> Result<()> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    fn bd_or(&mut self) -> Result<BdFormula> {
        let mut lhs = self.bd_and()?;
        while *self.peek() == Tok::Bar {
            self.bump();
            let rhs = self.bd_and()?;
            lhs = lhs.or(rhs);
        }
        Ok(lhs)
    }

    fn bd_and(&mut self) -> Result<BdFormula> {
        let mut lhs = self.bd_unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            let rhs = self.bd_unary()?;
            lhs = lhs.and(rhs);
        }
        Ok(lhs)
    }

    fn bd_unary(&mut self) -> Result<BdFormula> {
        let offset = self.offset();
        if matches!(self.peek(), Tok::Eof) {
            return Err(self.unexpected("a BD formula"));
        }
        match self.bump() {
            Tok::Dash => Ok(self.bd_unary()?.neg()),
            Tok::LParen => {
                let f = self.bd_or()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Ident(name) => {
                if reserved_prefix(&name) {
                    Err(Error::ReservedWord { offset, name })
                } else {
                    Ok(BdFormula::Var(name))
                }
            }
            _ => {
                self.pos -= 1;
                Err(self.unexpected("a BD formula"))
            }
        }
    }

    fn outer_iff(&mut self) -> Result<OuterFormula> {
        let mut lhs = self.outer_imp()?;
        while *self.peek() == Tok::DArrow {
            self.bump();
            let rhs = self.outer_imp()?;
            lhs = OuterFormula::bin(BinOp::Iff, lhs, rhs);
        }
        Ok(lhs)
    }

    fn outer_imp(&mut self) -> Result<OuterFormula> {
        let lhs = self.outer_lattice()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.outer_imp()?;
            return Ok(OuterFormula::bin(BinOp::Implies, lhs, rhs));
        }
        Ok(lhs)
    }

    fn outer_lattice(&mut self) -> Result<OuterFormula> {
        let mut lhs = self.outer_additive()?;
        loop {
            let op = match self.peek() {
                Tok::Amp => BinOp::And,
                Tok::Bar => BinOp::Or,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.outer_additive()?;
            lhs = OuterFormula::bin(op, lhs, rhs);
        }
    }

    fn outer_additive(&mut self) -> Result<OuterFormula> {
        let mut lhs = self.outer_strong()?;
        loop {
            let op = match self.peek() {
                Tok::OPlus => BinOp::Plus,
                Tok::OMinus => BinOp::Minus,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.outer_strong()?;
            lhs = OuterFormula::bin(op, lhs, rhs);
        }
    }

    fn outer_strong(&mut self) -> Result<OuterFormula> {
        let mut lhs = self.outer_unary()?;
        while *self.peek() == Tok::OTimes {
            self.bump();
            let rhs = self.outer_unary()?;
            lhs = OuterFormula::bin(BinOp::Strong, lhs, rhs);
        }
        Ok(lhs)
    }

    fn outer_unary(&mut self) -> Result<OuterFormula> {
        let offset = self.offset();
        let op = match self.peek() {
            Tok::Dash => Some(UnaryOp::ParNeg),
            Tok::Tilde => Some(UnaryOp::LukNeg),
            Tok::Bang => Some(UnaryOp::Delta),
            _ => None,
        };
        if let Some(op) = op {
            self.bump();
            if op == UnaryOp::ParNeg && self.dialect == Dialect::Four {
                return Err(Error::Dialect {
                    dialect: self.dialect.name(),
                    message: format!("ParNeg forbidden (outer `-` at byte {offset})"),
                });
            }
            return Ok(OuterFormula::unary(op, self.outer_unary()?));
        }
        self.outer_primary()
    }

    fn outer_primary(&mut self) -> Result<OuterFormula> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let f = self.outer_iff()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Ident(name) => {
                self.bump();
                if let Some(m) = Modality::from_name(&name) {
                    if *self.peek() == Tok::LBrace {
                        self.bump();
                        let body = self.bd_or()?;
                        self.expect(Tok::RBrace)?;
                        let f = OuterFormula::Modal(m, body);
                        check_dialect(&f, self.dialect)?;
                        return Ok(f);
                    }
                    return Err(Error::Syntax {
                        offset: self.offset(),
                        message: format!("expected `{{` after modality {name}"),
                    });
                }
                if reserved_prefix(&name) {
                    return Err(Error::ReservedWord { offset, name });
                }
                if self.dialect != Dialect::PlainLuk {
                    return Err(Error::Dialect {
                        dialect: self.dialect.name(),
                        message: format!("bare atom `{name}` at byte {offset} outside a modality"),
                    });
                }
                Ok(OuterFormula::Atom(name))
            }
            _ => Err(self.unexpected("an outer formula")),
        }
    }
}

/// Parses an inner (BD) formula.
pub fn parse_bd(text: &str) -> Result<BdFormula> {
    let mut p = Parser::new(text, Dialect::PlainLuk)?;
    let f = p.bd_or()?;
    p.finish()?;
    Ok(f)
}

/// Parses an outer formula and checks it against `dialect`.
pub fn parse_outer(text: &str, dialect: Dialect) -> Result<OuterFormula> {
    let mut p = Parser::new(text, dialect)?;
    let f = p.outer_iff()?;
    p.finish()?;
    check_dialect(&f, dialect)?;
    Ok(f)
}

// ---------------------------------------------------------------------------
// Printer

pub fn render_bd(f: &BdFormula) -> String {
    let mut out = String::new();
    write_bd(f, &mut out);
    out
}

fn write_bd(f: &BdFormula, out: &mut String) {
    let wrap = |g: &BdFormula, min: u8, out: &mut String| {
        if g.level() < min {
            out.push('(');
            write_bd(g, out);
            out.push(')');
        } else {
            write_bd(g, out);
        }
    };
    match f {
        BdFormula::Var(p) => out.push_str(p),
        BdFormula::Neg(g) => {
            out.push('-');
            wrap(g, 3, out);
        }
        BdFormula::And(a, b) | BdFormula::Or(a, b) => {
            let (level, sym) = if matches!(f, BdFormula::And(..)) {
                (2, " & ")
            } else {
                (1, " | ")
            };
            wrap(a, level, out);
            out.push_str(sym);
            wrap(b, level + 1, out);
        }
    }
}

pub fn render_outer(f: &OuterFormula) -> String {
    let mut out = String::new();
    write_outer(f, &mut out);
    out
}

fn write_outer(f: &OuterFormula, out: &mut String) {
    let wrap = |g: &OuterFormula, min: u8, out: &mut String| {
        if g.level() < min {
            out.push('(');
            write_outer(g, out);
            out.push(')');
        } else {
            write_outer(g, out);
        }
    };
    match f {
        OuterFormula::Modal(m, body) => {
            out.push_str(m.name());
            out.push('{');
            write_bd(body, out);
            out.push('}');
        }
        OuterFormula::Atom(a) => out.push_str(a),
        OuterFormula::Unary(op, g) => {
            out.push_str(op.symbol());
            wrap(g, 6, out);
        }
        OuterFormula::Bin(op, a, b) => {
            let level = op.level();
            let (lmin, rmin) = if op.right_assoc() {
                (level + 1, level)
            } else {
                (level, level + 1)
            };
            wrap(a, lmin, out);
            out.push(' ');
            out.push_str(op.symbol());
            out.push(' ');
            wrap(b, rmin, out);
        }
    }
}

impl fmt::Display for BdFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_bd(self))
    }
}

impl fmt::Display for OuterFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_outer(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(p: &str) -> BdFormula {
        BdFormula::var(p)
    }

    #[test]
    fn parse_bd_examples() {
        assert_eq!(parse_bd("p & -p").unwrap(), v("p").and(v("p").neg()));
        assert_eq!(parse_bd("p | q").unwrap(), v("p").or(v("q")));
        assert_eq!(parse_bd("-(p & q)").unwrap(), v("p").and(v("q")).neg());
        assert_eq!(
            parse_bd("p | q & r").unwrap(),
            v("p").or(v("q").and(v("r")))
        );
        assert_eq!(parse_bd("--p").unwrap(), v("p").neg().neg());
    }

    #[test]
    fn parse_bd_errors() {
        assert!(matches!(parse_bd("p &"), Err(Error::Syntax { offset: 3, .. })));
        assert!(matches!(parse_bd("p $ q"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_bd("Prop"), Err(Error::ReservedWord { offset: 0, .. })));
        assert!(matches!(parse_bd("p & Cf"), Err(Error::ReservedWord { offset: 4, .. })));
    }

    #[test]
    fn parse_outer_examples() {
        let pq = v("p").or(v("q"));
        assert_eq!(
            parse_outer("Bl{p|q} (+) Cf{p|q}", Dialect::Four).unwrap(),
            OuterFormula::modal(Modality::Bl, pq.clone())
                .plus(OuterFormula::modal(Modality::Cf, pq))
        );
        assert_eq!(
            parse_outer("~Pr{p | -p}", Dialect::Pm).unwrap(),
            OuterFormula::modal(Modality::Pr, v("p").or(v("p").neg())).luk_neg()
        );
        let err = parse_outer("-Bl{p}", Dialect::Four).unwrap_err();
        assert!(matches!(err, Error::Dialect { .. }));
        assert!(err.to_string().contains("ParNeg"));
        assert!(matches!(
            parse_outer("Bl{p}", Dialect::Pm),
            Err(Error::Dialect { .. })
        ));
        assert!(matches!(
            parse_outer("Pr{p}", Dialect::Four),
            Err(Error::Dialect { .. })
        ));
        assert!(matches!(parse_outer("a", Dialect::Pm), Err(Error::Dialect { .. })));
        assert!(parse_outer("a -> Pr{p}", Dialect::PlainLuk).is_ok());
    }

    #[test]
    fn precedence() {
        let a = || OuterFormula::atom("a");
        let b = || OuterFormula::atom("b");
        let c = || OuterFormula::atom("c");
        assert_eq!(
            parse_outer("a -> b -> c", Dialect::PlainLuk).unwrap(),
            a().implies(b().implies(c()))
        );
        assert_eq!(
            parse_outer("~!a", Dialect::PlainLuk).unwrap(),
            a().delta().luk_neg()
        );
        assert_eq!(
            parse_outer("a (+) b (*) c", Dialect::PlainLuk).unwrap(),
            a().plus(b().strong(c()))
        );
        assert_eq!(
            parse_outer("a (-) b (+) c", Dialect::PlainLuk).unwrap(),
            a().minus(b()).plus(c())
        );
        assert_eq!(
            parse_outer("a & b -> c <-> a", Dialect::PlainLuk).unwrap(),
            OuterFormula::bin(BinOp::And, a(), b()).implies(c()).iff(a())
        );
        // `(-)` is an operator, `(-a)` is a parenthesised negation
        assert_eq!(
            parse_outer("(-a)", Dialect::PlainLuk).unwrap(),
            a().par_neg()
        );
    }

    #[test]
    fn render_examples() {
        assert_eq!(render_bd(&v("p").and(v("p").neg())), "p & -p");
        assert_eq!(
            render_outer(&OuterFormula::modal(Modality::Pr, v("p").neg())),
            "Pr{-p}"
        );
        let f = OuterFormula::modal(Modality::Pr, v("p"))
            .implies(OuterFormula::modal(Modality::Pr, v("p").or(v("q"))));
        assert_eq!(render_outer(&f), "Pr{p} -> Pr{p | q}");
        assert_eq!(render_bd(&v("p").or(v("q")).and(v("r"))), "(p | q) & r");
        assert_eq!(render_bd(&v("p").and(v("q")).neg()), "-(p & q)");
        let a = OuterFormula::atom("a");
        assert_eq!(
            render_outer(&a.clone().implies(a.clone()).implies(a.clone())),
            "(a -> a) -> a"
        );
        assert_eq!(render_outer(&a.clone().delta().luk_neg()), "~!a");
        assert_eq!(
            render_outer(&a.clone().plus(a.clone()).luk_neg()),
            "~(a (+) a)"
        );
    }

    #[test]
    fn structural_sets() {
        let f = parse_bd("p & -p").unwrap();
        let lits: Vec<String> = f.lits().iter().map(render_bd).collect();
        assert_eq!(lits, vec!["p", "-p"]);
        let g = parse_outer("Pr{p} -> Pr{q}", Dialect::Pm).unwrap();
        assert_eq!(
            g.props().into_iter().collect::<Vec<_>>(),
            vec!["p".to_string(), "q".to_string()]
        );
        let h = parse_bd("p | q").unwrap();
        let sf = h.subformulas();
        assert_eq!(sf.len(), 3);
        assert!(sf.contains(&v("p")) && sf.contains(&v("q")) && sf.contains(&h));
    }
}
