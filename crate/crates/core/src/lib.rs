//! Two-layered paraconsistent probability logics over Belnap-Dunn events.
//!
//! Inner formulas ([`BdFormula`]) describe events in four-valued models;
//! outer formulas ([`OuterFormula`]) combine probability atoms with
//! Łukasiewicz connectives. Two outer languages are supported: `Pr` atoms
//! valued as (truth, falsity) pairs, and the `Bl`/`Db`/`Cf`/`Uc` atoms of a
//! four-way partition of belief. The crate evaluates both, translates
//! between them, and decides validity, satisfiability and finite
//! entailment exactly over the rationals.

pub mod bd;
pub mod decision;
pub mod embed;
pub mod error;
pub mod gen;
pub mod hilbert;
pub mod lp;
pub mod luk;
pub mod modelfile;
pub mod rational;
pub mod syntax;
pub mod tableau;

pub use bd::{bd_entails, bd_equiv, extension, BdModel, Belnap, ExtensionKind, World};
pub use decision::{
    decide_entails_four, decide_sat_four, decide_sat_pm, decide_valid_four, decide_valid_pm,
    DecideOptions, Verdict, Witness,
};
pub use embed::{nnf, to_four, to_pm, TranslationTrace};
pub use error::{Error, Result};
pub use lp::{feasible, vertex_solution, AffineTerm, Feasibility, LinConstraint, LinVar, Relation};
pub use luk::{eval_four, eval_pm, LukValue, PairValue, WorldWeights};
pub use modelfile::{parse_model, render_model, ModelFile};
pub use rational::Rational;
pub use syntax::{parse_bd, parse_outer, BdFormula, BinOp, Dialect, Modality, OuterFormula, UnaryOp};
pub use tableau::{prove_luk_valid, TableauOptions, TableauResult};
