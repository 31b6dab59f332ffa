//! Fourier-Motzkin elimination with strictness tracking. Slow but simple;
//! used only to cross-check the simplex.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use paraprob::lp::{LinConstraint, LinVar, Relation};
use paraprob::Rational;

/// `Σ aᵢxᵢ + c (< | ≤) 0`
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Row {
    coeffs: Vec<Rational>,
    constant: Rational,
    strict: bool,
}

impl Row {
    fn normalised(mut self) -> Row {
        let scale = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.constant))
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero);
        if !scale.is_zero() {
            for c in self.coeffs.iter_mut() {
                *c /= &scale;
            }
            self.constant /= &scale;
        }
        self
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn holds_trivially(&self) -> bool {
        if self.strict {
            self.constant.is_negative()
        } else {
            !self.constant.is_positive()
        }
    }
}

/// `None` when the row count passes `limit`.
pub fn fm_feasible(system: &[LinConstraint], limit: usize) -> Option<bool> {
    let vars: Vec<LinVar> = system
        .iter()
        .flat_map(|c| c.vars())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut rows: BTreeSet<Row> = BTreeSet::new();
    for c in system {
        let (t, rel) = c.normalized();
        let coeffs: Vec<Rational> = vars.iter().map(|v| t.coeff(v)).collect();
        let row = Row {
            coeffs: coeffs.clone(),
            constant: t.constant_part().clone(),
            strict: rel == Relation::Lt,
        };
        if rel == Relation::Eq {
            rows.insert(Row {
                coeffs: coeffs.iter().map(|c| -c).collect(),
                constant: -t.constant_part(),
                strict: false,
            });
        }
        rows.insert(row);
    }
    let mut live: Vec<usize> = (0..vars.len()).collect();
    loop {
        let mut next = BTreeSet::new();
        for r in rows {
            let r = r.normalised();
            if r.is_trivial() {
                if !r.holds_trivially() {
                    return Some(false);
                }
            } else {
                next.insert(r);
            }
        }
        rows = next;
        if live.is_empty() || rows.is_empty() {
            return Some(true);
        }
        // eliminate the variable producing the fewest new rows
        let (pos_k, &k) = live
            .iter()
            .enumerate()
            .min_by_key(|(_, &k)| {
                let p = rows.iter().filter(|r| r.coeffs[k].is_positive()).count();
                let n = rows.iter().filter(|r| r.coeffs[k].is_negative()).count();
                p * n
            })
            .expect("live variables");
        live.remove(pos_k);
        let (pos, rest): (Vec<Row>, Vec<Row>) = rows.into_iter().partition(|r| r.coeffs[k].is_positive());
        let (neg, zero): (Vec<Row>, Vec<Row>) = rest.into_iter().partition(|r| r.coeffs[k].is_negative());
        let mut out: BTreeSet<Row> = zero.into_iter().collect();
        for p in &pos {
            for n in &neg {
                let a = p.coeffs[k].clone();
                let b = -n.coeffs[k].clone();
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(x, y)| x * &b + y * &a)
                    .collect();
                out.insert(Row {
                    coeffs,
                    constant: &p.constant * &b + &n.constant * &a,
                    strict: p.strict || n.strict,
                });
                if out.len() > limit {
                    return None;
                }
            }
        }
        rows = out;
    }
}
