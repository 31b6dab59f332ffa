//! Exact feasibility of linear systems over ℚ with `≤`, `<` and `=`.
//!
//! Strict rows `t < 0` are solved as `t + ε ≤ 0` for a formal positive
//! infinitesimal `ε`, by a phase-one simplex over pairs `a + bε` compared
//! lexicographically. Bland's rule keeps it from cycling.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinVar(pub String);

impl LinVar {
    pub fn new(name: impl Into<String>) -> Self {
        LinVar(name.into())
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for LinVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub type Assignment = BTreeMap<LinVar, Rational>;

/// `constant + Σ coeff·var`, never storing a zero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AffineTerm {
    constant: Rational,
    coeffs: BTreeMap<LinVar, Rational>,
}

impl AffineTerm {
    pub fn constant(c: Rational) -> Self {
        AffineTerm {
            constant: c,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn var(v: LinVar) -> Self {
        let mut t = AffineTerm::default();
        t.coeffs.insert(v, Rational::one());
        t
    }

    pub fn named(name: &str) -> Self {
        AffineTerm::var(LinVar::new(name))
    }

    pub fn constant_part(&self) -> &Rational {
        &self.constant
    }

    pub fn coeff(&self, v: &LinVar) -> Rational {
        self.coeffs.get(v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&LinVar, &Rational)> {
        self.coeffs.iter()
    }

    pub fn vars(&self) -> impl Iterator<Item = &LinVar> {
        self.coeffs.keys()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, v: &LinVar, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(v.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(v);
        }
    }

    pub fn plus(&self, other: &AffineTerm) -> AffineTerm {
        let mut out = self.clone();
        out.constant += &other.constant;
        for (v, c) in &other.coeffs {
            out.add_term(v, c);
        }
        out
    }

    pub fn minus(&self, other: &AffineTerm) -> AffineTerm {
        self.plus(&other.scaled(&-Rational::one()))
    }

    pub fn scaled(&self, k: &Rational) -> AffineTerm {
        if k.is_zero() {
            return AffineTerm::default();
        }
        AffineTerm {
            constant: &self.constant * k,
            coeffs: self.coeffs.iter().map(|(v, c)| (v.clone(), c * k)).collect(),
        }
    }

    /// Value under `x`; unassigned variables read as zero.
    pub fn eval(&self, x: &Assignment) -> Rational {
        self.coeffs
            .iter()
            .filter_map(|(v, c)| x.get(v).map(|val| c * val))
            .fold(self.constant.clone(), |acc, t| acc + t)
    }

    fn eval_eps(&self, x: &BTreeMap<LinVar, Eps>) -> Eps {
        let mut out = Eps::real(self.constant.clone());
        for (v, c) in &self.coeffs {
            if let Some(val) = x.get(v) {
                out = out.add(&val.scale(c));
            }
        }
        out
    }
}

impl From<Rational> for AffineTerm {
    fn from(c: Rational) -> Self {
        AffineTerm::constant(c)
    }
}

impl From<LinVar> for AffineTerm {
    fn from(v: LinVar) -> Self {
        AffineTerm::var(v)
    }
}

impl fmt::Display for AffineTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.constant.is_zero() || self.coeffs.is_empty() {
            f.write_str(&format_rational(&self.constant))?;
            first = false;
        }
        for (v, c) in &self.coeffs {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if !mag.is_one() {
                write!(f, "{}*", format_rational(&mag))?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Lt,
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Eq => "=",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinConstraint {
    pub lhs: AffineTerm,
    pub rel: Relation,
    pub rhs: AffineTerm,
}

impl LinConstraint {
    pub fn new(lhs: impl Into<AffineTerm>, rel: Relation, rhs: impl Into<AffineTerm>) -> Self {
        LinConstraint {
            lhs: lhs.into(),
            rel,
            rhs: rhs.into(),
        }
    }

    pub fn le(lhs: impl Into<AffineTerm>, rhs: impl Into<AffineTerm>) -> Self {
        Self::new(lhs, Relation::Le, rhs)
    }

    pub fn lt(lhs: impl Into<AffineTerm>, rhs: impl Into<AffineTerm>) -> Self {
        Self::new(lhs, Relation::Lt, rhs)
    }

    pub fn ge(lhs: impl Into<AffineTerm>, rhs: impl Into<AffineTerm>) -> Self {
        Self::new(rhs, Relation::Le, lhs)
    }

    pub fn gt(lhs: impl Into<AffineTerm>, rhs: impl Into<AffineTerm>) -> Self {
        Self::new(rhs, Relation::Lt, lhs)
    }

    pub fn eq(lhs: impl Into<AffineTerm>, rhs: impl Into<AffineTerm>) -> Self {
        Self::new(lhs, Relation::Eq, rhs)
    }

    /// `lhs − rhs REL 0`.
    pub fn normalized(&self) -> (AffineTerm, Relation) {
        (self.lhs.minus(&self.rhs), self.rel)
    }

    pub fn holds(&self, x: &Assignment) -> bool {
        let (t, rel) = self.normalized();
        let v = t.eval(x);
        match rel {
            Relation::Le => !v.is_positive(),
            Relation::Lt => v.is_negative(),
            Relation::Eq => v.is_zero(),
        }
    }

    pub fn vars(&self) -> BTreeSet<LinVar> {
        self.lhs.vars().chain(self.rhs.vars()).cloned().collect()
    }
}

impl fmt::Display for LinConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.rel.symbol(), self.rhs)
    }
}

/// One constraint per line, as used by tableau dumps.
pub fn dump_system(system: &[LinConstraint]) -> String {
    system.iter().map(|c| format!("{c}\n")).collect()
}

/// Optional lower and upper bound of a variable; a variable missing from
/// the bounds map is free.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VarBounds {
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
}

impl VarBounds {
    pub fn unit() -> Self {
        VarBounds {
            lower: Some(Rational::zero()),
            upper: Some(Rational::one()),
        }
    }

    pub fn nonnegative() -> Self {
        VarBounds {
            lower: Some(Rational::zero()),
            upper: None,
        }
    }

    pub fn free() -> Self {
        VarBounds::default()
    }
}

pub type Bounds = BTreeMap<LinVar, VarBounds>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Assignment),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn assignment(&self) -> Option<&Assignment> {
        match self {
            Feasibility::Feasible(x) => Some(x),
            Feasibility::Infeasible => None,
        }
    }
}

// ---------------------------------------------------------------------------
// Q(ε)

/// `a + bε` with `ε` a positive infinitesimal.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Eps {
    a: Rational,
    b: Rational,
}

impl Eps {
    fn real(a: Rational) -> Self {
        Eps {
            a,
            b: Rational::zero(),
        }
    }

    fn zero() -> Self {
        Eps::real(Rational::zero())
    }

    fn add(&self, o: &Eps) -> Eps {
        Eps {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }

    fn sub(&self, o: &Eps) -> Eps {
        Eps {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }

    fn scale(&self, k: &Rational) -> Eps {
        Eps {
            a: &self.a * k,
            b: &self.b * k,
        }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn is_negative(&self) -> bool {
        self.a.is_negative() || (self.a.is_zero() && self.b.is_negative())
    }

    fn is_positive(&self) -> bool {
        !self.is_zero() && !self.is_negative()
    }

    fn at(&self, delta: &Rational) -> Rational {
        &self.a + &self.b * delta
    }
}

impl PartialOrd for Eps {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Eps {
    fn cmp(&self, other: &Self) -> Ordering {
        self.a.cmp(&other.a).then_with(|| self.b.cmp(&other.b))
    }
}

// ---------------------------------------------------------------------------
// Phase-one simplex on `A y = b, y ≥ 0`

struct Simplex {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Eps>,
    basis: Vec<usize>,
    /// Reduced costs of the phase-one objective.
    cost: Vec<Rational>,
    objective: Eps,
}

impl Simplex {
    /// `rows · y = rhs` with `y ≥ 0`. Columns `ncols..` are artificials added
    /// here where no slack can start in the basis. Returns the values of the
    /// first `ncols` columns at a basic feasible point, if there is one.
    fn solve(mut rows: Vec<Vec<Rational>>, mut rhs: Vec<Eps>, ncols: usize) -> Option<Vec<Eps>> {
        let m = rows.len();
        for i in 0..m {
            if rhs[i].is_negative() {
                rhs[i] = rhs[i].scale(&-Rational::one());
                for c in rows[i].iter_mut() {
                    *c = -&*c;
                }
            }
        }
        // a column that is a unit vector with a 1 in row i can start basic
        let mut basis = vec![usize::MAX; m];
        for j in 0..ncols {
            let mut hit = None;
            let mut unit = true;
            for (i, row) in rows.iter().enumerate() {
                if row[j].is_zero() {
                    continue;
                }
                if row[j].is_one() && hit.is_none() {
                    hit = Some(i);
                } else {
                    unit = false;
                    break;
                }
            }
            if let (true, Some(i)) = (unit, hit) {
                if basis[i] == usize::MAX {
                    basis[i] = j;
                }
            }
        }
        let mut total = ncols;
        let mut artificial = Vec::new();
        for i in 0..m {
            if basis[i] == usize::MAX {
                basis[i] = total;
                artificial.push(i);
                total += 1;
            }
        }
        for (k, row) in rows.iter_mut().enumerate() {
            row.resize(total, Rational::zero());
            if let Some(pos) = artificial.iter().position(|&i| i == k) {
                row[ncols + pos] = Rational::one();
            }
        }
        let mut cost = vec![Rational::zero(); total];
        let mut objective = Eps::zero();
        for &i in &artificial {
            for j in 0..ncols {
                cost[j] -= &rows[i][j];
            }
            objective = objective.add(&rhs[i]);
        }
        let mut s = Simplex {
            rows,
            rhs,
            basis,
            cost,
            objective,
        };
        s.run();
        if s.objective.is_positive() {
            return None;
        }
        let mut values = vec![Eps::zero(); ncols];
        for (i, &b) in s.basis.iter().enumerate() {
            if b < ncols {
                values[b] = s.rhs[i].clone();
            }
        }
        Some(values)
    }

    fn run(&mut self) {
        while let Some(j) = self.cost.iter().position(|c| c.is_negative()) {
            let mut leave: Option<(usize, Eps)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs[i].scale(&a.recip());
                let better = match &leave {
                    None => true,
                    Some((k, best)) => match ratio.cmp(best) {
                        Ordering::Less => true,
                        Ordering::Equal => self.basis[i] < self.basis[*k],
                        Ordering::Greater => false,
                    },
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            // Phase one is bounded below by zero, so some row always leaves.
            let (r, _) = leave.expect("phase-one objective is bounded");
            self.pivot(r, j);
        }
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let inv = self.rows[r][j].recip();
        for c in self.rows[r].iter_mut() {
            if !c.is_zero() {
                *c *= &inv;
            }
        }
        self.rhs[r] = self.rhs[r].scale(&inv);
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][j].is_zero() {
                continue;
            }
            let f = self.rows[i][j].clone();
            for (c, p) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *c -= &f * p;
                }
            }
            self.rhs[i] = self.rhs[i].sub(&pivot_rhs.scale(&f));
        }
        let f = self.cost[j].clone();
        for (c, p) in self.cost.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *c -= &f * p;
            }
        }
        self.objective = self.objective.add(&pivot_rhs.scale(&f));
        self.basis[r] = j;
    }
}

/// How an original variable is rebuilt from nonnegative columns.
enum Shift {
    /// `x = l + y`
    Lower(Rational, usize),
    /// `x = u − y`
    Upper(Rational, usize),
    /// `x = y⁺ − y⁻`
    Split(usize, usize),
}

/// Exact feasibility of `system` under `bounds`, with a rational witness
/// that satisfies every constraint, strict ones included.
pub fn feasible(system: &[LinConstraint], bounds: &Bounds) -> Feasibility {
    match solve_eps(system, bounds) {
        None => Feasibility::Infeasible,
        Some(x) => Feasibility::Feasible(realize(system, bounds, &x)),
    }
}

/// A basic feasible solution of `system` with every variable `≥ 0`.
pub fn vertex_solution(system: &[LinConstraint]) -> Feasibility {
    let bounds: Bounds = system
        .iter()
        .flat_map(|c| c.vars())
        .map(|v| (v, VarBounds::nonnegative()))
        .collect();
    feasible(system, &bounds)
}

fn solve_eps(system: &[LinConstraint], bounds: &Bounds) -> Option<BTreeMap<LinVar, Eps>> {
    let mut vars: BTreeSet<LinVar> = bounds.keys().cloned().collect();
    for c in system {
        vars.extend(c.vars());
    }
    for b in bounds.values() {
        if let (Some(l), Some(u)) = (&b.lower, &b.upper) {
            if l > u {
                return None;
            }
        }
    }

    let mut shifts: BTreeMap<LinVar, Shift> = BTreeMap::new();
    let mut ncols = 0;
    // (coefficients over columns, constant, relation): Σ a·y + c REL 0
    let mut rows: Vec<(BTreeMap<usize, Rational>, Rational, Relation)> = Vec::new();
    for v in &vars {
        let b = bounds.get(v).cloned().unwrap_or_default();
        let shift = match (b.lower, b.upper) {
            (Some(l), u) => {
                if let Some(u) = u {
                    rows.push(([(ncols, Rational::one())].into(), l.clone() - u, Relation::Le));
                }
                ncols += 1;
                Shift::Lower(l, ncols - 1)
            }
            (None, Some(u)) => {
                ncols += 1;
                Shift::Upper(u, ncols - 1)
            }
            (None, None) => {
                ncols += 2;
                Shift::Split(ncols - 2, ncols - 1)
            }
        };
        shifts.insert(v.clone(), shift);
    }
    for c in system {
        let (t, rel) = c.normalized();
        let mut coeffs: BTreeMap<usize, Rational> = BTreeMap::new();
        let mut constant = t.constant_part().clone();
        let mut add = |col: usize, k: Rational| {
            let e = coeffs.entry(col).or_insert_with(Rational::zero);
            *e += k;
        };
        for (v, a) in t.coeffs() {
            match &shifts[v] {
                Shift::Lower(l, y) => {
                    constant += a * l;
                    add(*y, a.clone());
                }
                Shift::Upper(u, y) => {
                    constant += a * u;
                    add(*y, -a);
                }
                Shift::Split(p, n) => {
                    add(*p, a.clone());
                    add(*n, -a);
                }
            }
        }
        coeffs.retain(|_, k| !k.is_zero());
        if coeffs.is_empty() {
            let ok = match rel {
                Relation::Le => !constant.is_positive(),
                Relation::Lt => constant.is_negative(),
                Relation::Eq => constant.is_zero(),
            };
            if !ok {
                return None;
            }
            continue;
        }
        rows.push((coeffs, constant, rel));
    }

    let slacks = rows.iter().filter(|r| r.2 != Relation::Eq).count();
    let width = ncols + slacks;
    let mut matrix = Vec::with_capacity(rows.len());
    let mut rhs = Vec::with_capacity(rows.len());
    let mut next_slack = ncols;
    for (coeffs, constant, rel) in rows {
        let mut row = vec![Rational::zero(); width];
        for (j, k) in coeffs {
            row[j] = k;
        }
        // Σ a·y + s = −c (− ε when strict)
        let mut b = Eps::real(-constant);
        match rel {
            Relation::Eq => {}
            Relation::Le | Relation::Lt => {
                row[next_slack] = Rational::one();
                next_slack += 1;
                if rel == Relation::Lt {
                    b.b = -Rational::one();
                }
            }
        }
        matrix.push(row);
        rhs.push(b);
    }
    let y = Simplex::solve(matrix, rhs, width)?;
    Some(
        shifts
            .into_iter()
            .map(|(v, s)| {
                let val = match s {
                    Shift::Lower(l, c) => y[c].add(&Eps::real(l)),
                    Shift::Upper(u, c) => Eps::real(u).sub(&y[c]),
                    Shift::Split(p, n) => y[p].sub(&y[n]),
                };
                (v, val)
            })
            .collect(),
    )
}

/// Picks a positive rational for `ε` small enough that every row stays
/// satisfied, and substitutes it.
fn realize(system: &[LinConstraint], bounds: &Bounds, x: &BTreeMap<LinVar, Eps>) -> Assignment {
    let mut rows: Vec<(Eps, Relation)> = system
        .iter()
        .map(|c| {
            let (t, rel) = c.normalized();
            (t.eval_eps(x), rel)
        })
        .collect();
    for (v, b) in bounds {
        let val = &x[v];
        if let Some(l) = &b.lower {
            rows.push((Eps::real(l.clone()).sub(val), Relation::Le));
        }
        if let Some(u) = &b.upper {
            rows.push((val.sub(&Eps::real(u.clone())), Relation::Le));
        }
    }
    let mut delta = Rational::one();
    for (t, _) in &rows {
        if t.a.is_negative() && t.b.is_positive() {
            let limit = -&t.a / (&t.b * Rational::from_integer(2.into()));
            if limit < delta {
                delta = limit;
            }
        }
    }
    let out: Assignment = x.iter().map(|(v, e)| (v.clone(), e.at(&delta))).collect();
    for c in system {
        assert!(c.holds(&out), "simplex witness violates {c}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn v(name: &str) -> AffineTerm {
        AffineTerm::named(name)
    }

    fn c(r: Rational) -> AffineTerm {
        AffineTerm::constant(r)
    }

    fn free() -> Bounds {
        Bounds::new()
    }

    #[test]
    fn examples() {
        let sys = [LinConstraint::le(v("x"), c(rat(1, 2))), LinConstraint::ge(v("x"), c(rat(1, 2)))];
        let Feasibility::Feasible(x) = feasible(&sys, &free()) else {
            panic!()
        };
        assert_eq!(x[&LinVar::new("x")], rat(1, 2));

        let sys = [LinConstraint::lt(v("x"), c(rat(1, 2))), LinConstraint::ge(v("x"), c(rat(1, 2)))];
        assert_eq!(feasible(&sys, &free()), Feasibility::Infeasible);

        let sys = [
            LinConstraint::eq(v("u1").plus(&v("u2")), c(int(1))),
            LinConstraint::ge(v("u1"), c(rat(2, 3))),
            LinConstraint::ge(v("u2"), c(rat(2, 3))),
        ];
        assert_eq!(vertex_solution(&sys), Feasibility::Infeasible);
        assert_eq!(feasible(&[], &free()), Feasibility::Feasible(Assignment::new()));
    }

    #[test]
    fn strict_witness_is_exact() {
        // 0 < x < y < 1/1000
        let sys = [
            LinConstraint::lt(c(int(0)), v("x")),
            LinConstraint::lt(v("x"), v("y")),
            LinConstraint::lt(v("y"), c(rat(1, 1000))),
        ];
        let Feasibility::Feasible(x) = feasible(&sys, &free()) else {
            panic!()
        };
        assert!(sys.iter().all(|k| k.holds(&x)));
    }

    #[test]
    fn vertices_are_sparse() {
        let sum = v("u1").plus(&v("u2")).plus(&v("u3"));
        let Feasibility::Feasible(x) = vertex_solution(&[LinConstraint::eq(sum, c(int(1)))]) else {
            panic!()
        };
        assert_eq!(x.values().filter(|r| !r.is_zero()).count(), 1);
        let sys = [
            LinConstraint::eq(v("u1").plus(&v("u2")), c(int(1))),
            LinConstraint::ge(v("u1"), c(rat(1, 4))),
        ];
        let Feasibility::Feasible(x) = vertex_solution(&sys) else {
            panic!()
        };
        assert!(x.values().filter(|r| !r.is_zero()).count() <= 2);
        assert!(sys.iter().all(|k| k.holds(&x)));
    }

    #[test]
    fn bounds_are_respected() {
        let mut b = Bounds::new();
        b.insert(LinVar::new("x"), VarBounds::unit());
        b.insert(LinVar::new("y"), VarBounds { lower: None, upper: Some(int(-2)) });
        let sys = [LinConstraint::gt(v("x").minus(&v("y")), c(int(3)))];
        let Feasibility::Feasible(x) = feasible(&sys, &b) else {
            panic!()
        };
        assert!(x[&LinVar::new("y")] <= int(-2));
        assert!(x[&LinVar::new("x")] <= int(1));
        let sys = [LinConstraint::gt(v("x"), c(int(1)))];
        assert_eq!(feasible(&sys, &b), Feasibility::Infeasible);
        b.insert(LinVar::new("z"), VarBounds { lower: Some(int(1)), upper: Some(int(0)) });
        assert_eq!(feasible(&[], &b), Feasibility::Infeasible);
    }

    #[test]
    fn constant_rows() {
        assert_eq!(
            feasible(&[LinConstraint::le(c(int(1)), c(int(0)))], &free()),
            Feasibility::Infeasible
        );
        assert!(feasible(&[LinConstraint::eq(v("x").minus(&v("x")), c(int(0)))], &free()).is_feasible());
    }

    #[test]
    fn display() {
        let t = v("a").scaled(&int(2)).minus(&v("b")).plus(&c(rat(1, 2)));
        assert_eq!(LinConstraint::lt(t, c(int(1))).to_string(), "1/2 + 2*a - b < 1");
        assert_eq!(v("x").scaled(&int(-1)).to_string(), "-x");
    }
}
