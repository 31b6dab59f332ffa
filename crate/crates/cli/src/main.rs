//! `paraprob` command-line front end.
//!
//! Exit codes: 0 for a positive answer (valid, sat, accepted, true), 1 for a
//! negative one, 2 for bad input and 3 when a resource cap is hit.

use std::fmt::Write as _;
use std::io::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use paraprob::embed::nnf_traced;
use paraprob::hilbert::{check_proof, generate_instances, parse_proof};
use paraprob::tableau::{atom_valuation, eval_with};
use paraprob::{
    bd_entails, bd_equiv, decide_sat_four, decide_sat_pm, decide_valid_four, decide_valid_pm,
    eval_four, eval_pm, parse_bd, parse_model, parse_outer, render_model, to_four,
    to_pm, DecideOptions, Dialect, OuterFormula, TableauOptions, TableauResult, Verdict,
};
use thiserror::Error;

const EXAMPLE_MODEL: &str = "\
world w0 { +p -p }
world w1 { -p -q }
weight w0 2/3
weight w1 1/3
";

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] paraprob::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_resource_cap() => 3,
            _ => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "paraprob", version, about = "Paraconsistent probability logics: evaluation, translation and decision")]
struct Cli {
    /// Budget for tableau expansion (labels plus constraints created).
    #[arg(long, global = true, default_value_t = 200_000)]
    max_branches: usize,
    /// Cap on propositional variables in decision and entailment problems.
    #[arg(long, global = true, default_value_t = 12)]
    max_vars: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a formula and print its canonical rendering.
    Parse {
        #[arg(value_enum)]
        dialect: ParseDialect,
        #[arg(allow_hyphen_values = true)]
        formula: String,
    },
    /// Belnap-Dunn entailment and equivalence.
    Bd {
        #[command(subcommand)]
        query: BdQuery,
    },
    /// Evaluate a formula in a weighted model file.
    Eval {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, value_enum)]
        logic: Logic,
        #[arg(allow_hyphen_values = true)]
        formula: String,
    },
    /// Decide validity.
    Valid {
        #[arg(long, value_enum)]
        logic: Logic,
        /// Write the countermodel here.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(allow_hyphen_values = true)]
        formula: String,
    },
    /// Decide satisfiability (value 1).
    Sat {
        #[arg(long, value_enum)]
        logic: Logic,
        /// Also demand falsity value 0 (pm only).
        #[arg(long)]
        require_e2_zero: bool,
        /// Write the model here.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(allow_hyphen_values = true)]
        formula: String,
    },
    /// Translate between the two languages or into negation normal form.
    Translate {
        #[arg(long, value_enum)]
        to: Target,
        /// Print the rewrite steps (nnf only).
        #[arg(long)]
        trace: bool,
        #[arg(allow_hyphen_values = true)]
        formula: String,
    },
    /// Run the Ł²_Δ tableau on a formula; modal atoms count as opaque atoms.
    Tableau {
        #[arg(long)]
        dump: bool,
        #[arg(allow_hyphen_values = true)]
        formula: String,
    },
    /// List axiom instances over the first k variables p, q, r, ...
    Axioms {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        depth: usize,
        /// Decide every instance as well.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
    /// Proof files.
    Proof {
        #[command(subcommand)]
        action: ProofAction,
    },
    /// Check the built-in golden values on the two-world example model.
    Selftest,
}

#[derive(Subcommand, Debug)]
enum BdQuery {
    Entails {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    Equiv {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
}

#[derive(Subcommand, Debug)]
enum ProofAction {
    Check { file: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ParseDialect {
    Bd,
    Pm,
    Four,
    Luk,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Logic {
    Pm,
    Four,
}

impl Logic {
    fn dialect(self) -> Dialect {
        match self {
            Logic::Pm => Dialect::Pm,
            Logic::Four => Dialect::Four,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Target {
    Nnf,
    Four,
    Pm,
}

/// Text for stdout and the exit code.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn answer(text: String, positive: bool) -> Self {
        Outcome {
            text,
            code: if positive { 0 } else { 1 },
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn yes_no(b: bool) -> Outcome {
    Outcome::answer(if b { "YES" } else { "NO" }.into(), b)
}

fn decide_options(cli: &Cli) -> DecideOptions {
    DecideOptions {
        max_vars: cli.max_vars,
        max_nodes: cli.max_branches,
        require_e2_zero: false,
    }
}

fn report(verdict: &Verdict, witness: Option<&Path>) -> CliResult<Outcome> {
    let mut text = verdict.label().to_string();
    if let Some(w) = verdict.witness() {
        let model = render_model(&w.model, Some(&w.weights));
        match witness {
            Some(path) => write(path, &model)?,
            None => {
                text.push('\n');
                text.push_str(model.trim_end());
            }
        }
    }
    Ok(Outcome::answer(text, verdict.is_positive()))
}

fn eval_text(text: &str, logic: Logic, formula: &str) -> CliResult<String> {
    let file = parse_model(text)?;
    let weights = file
        .weights
        .ok_or_else(|| CliError::Usage("model file has no weights".into()))?;
    let f = parse_outer(formula, logic.dialect())?;
    Ok(match logic {
        Logic::Pm => eval_pm(&file.model, &weights, &f)?.to_string(),
        Logic::Four => eval_four(&file.model, &weights, &f)?.to_string(),
    })
}

fn selftest() -> CliResult<Outcome> {
    let cases = [
        (Logic::Pm, "Pr{p | q}", "(2/3, 1/3)"),
        (Logic::Pm, "Pr{p}", "(2/3, 1)"),
        (Logic::Four, "Bl{p | q}", "2/3"),
        (Logic::Four, "Db{p | q}", "1/3"),
        (Logic::Four, "Cf{p | q}", "0"),
        (Logic::Four, "Uc{p | q}", "0"),
        (Logic::Four, "Bl{p}", "0"),
        (Logic::Four, "Uc{p}", "0"),
        (Logic::Four, "Cf{p}", "2/3"),
        (Logic::Four, "Db{p}", "1/3"),
    ];
    let mut text = String::new();
    let mut ok = true;
    for (logic, f, want) in cases {
        let got = eval_text(EXAMPLE_MODEL, logic, f)?;
        let pass = got == want;
        ok &= pass;
        let _ = writeln!(text, "{} {f} = {got}", if pass { "ok  " } else { "FAIL" });
    }
    text.push_str(if ok { "PASS" } else { "FAIL" });
    Ok(Outcome::answer(text, ok))
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    let opts = decide_options(cli);
    match &cli.command {
        Command::Parse { dialect, formula } => {
            let text = match dialect {
                ParseDialect::Bd => parse_bd(formula)?.to_string(),
                ParseDialect::Pm => parse_outer(formula, Dialect::Pm)?.to_string(),
                ParseDialect::Four => parse_outer(formula, Dialect::Four)?.to_string(),
                ParseDialect::Luk => parse_outer(formula, Dialect::PlainLuk)?.to_string(),
            };
            Ok(Outcome::answer(text, true))
        }
        Command::Bd { query } => match query {
            BdQuery::Entails { f, g } => Ok(yes_no(bd_entails(&parse_bd(f)?, &parse_bd(g)?)?)),
            BdQuery::Equiv { f, g } => Ok(yes_no(bd_equiv(&parse_bd(f)?, &parse_bd(g)?)?)),
        },
        Command::Eval { model, logic, formula } => {
            Ok(Outcome::answer(eval_text(&read(model)?, *logic, formula)?, true))
        }
        Command::Valid { logic, witness, formula } => {
            let f = parse_outer(formula, logic.dialect())?;
            let v = match logic {
                Logic::Pm => decide_valid_pm(&f, &opts)?,
                Logic::Four => decide_valid_four(&f, &opts)?,
            };
            report(&v, witness.as_deref())
        }
        Command::Sat {
            logic,
            require_e2_zero,
            witness,
            formula,
        } => {
            let f = parse_outer(formula, logic.dialect())?;
            let v = match logic {
                Logic::Pm => decide_sat_pm(
                    &f,
                    &DecideOptions {
                        require_e2_zero: *require_e2_zero,
                        ..opts
                    },
                )?,
                Logic::Four if *require_e2_zero => {
                    return Err(CliError::Usage("--require-e2-zero applies to --logic pm only".into()))
                }
                Logic::Four => decide_sat_four(&f, &opts)?,
            };
            report(&v, witness.as_deref())
        }
        Command::Translate { to, trace, formula } => {
            let text = match to {
                Target::Nnf => {
                    let t = nnf_traced(&parse_outer(formula, Dialect::Pm)?);
                    if *trace {
                        t.to_string().trim_end().to_string()
                    } else {
                        t.output.to_string()
                    }
                }
                Target::Four => {
                    let f = paraprob::nnf(&parse_outer(formula, Dialect::Pm)?);
                    to_four(&f)?.to_string()
                }
                Target::Pm => to_pm(&parse_outer(formula, Dialect::Four)?)?.to_string(),
            };
            Ok(Outcome::answer(text, true))
        }
        Command::Tableau { dump, formula } => tableau(cli, *dump, formula),
        Command::Axioms {
            vars,
            depth,
            check,
            cap,
        } => axioms(*vars, *depth, *check, *cap, &opts),
        Command::Proof {
            action: ProofAction::Check { file },
        } => {
            let proof = parse_proof(&read(file)?)?;
            let topts = TableauOptions {
                max_nodes: cli.max_branches,
                ..TableauOptions::default()
            };
            let check = check_proof(&proof.premises, &proof.lines, proof.goal.as_ref(), &topts);
            let text = match &check.failure {
                None => "ACCEPTED".to_string(),
                Some((0, reason)) => format!("REJECTED: {reason}"),
                Some((k, reason)) => format!("REJECTED at line {k}: {reason}"),
            };
            Ok(Outcome::answer(text, check.accepted))
        }
        Command::Selftest => selftest(),
    }
}

fn tableau(cli: &Cli, dump: bool, formula: &str) -> CliResult<Outcome> {
    let f: OuterFormula = parse_outer(formula, Dialect::PlainLuk)?;
    let opts = TableauOptions {
        max_nodes: cli.max_branches,
        dump,
        ..TableauOptions::default()
    };
    let r = paraprob::tableau::run(paraprob::tableau::validity_root(&f), &opts)?;
    let mut text = r.dump.unwrap_or_default();
    let closed = match &r.result {
        TableauResult::Closed(_) => {
            text.push_str("CLOSED");
            true
        }
        TableauResult::Open(_, x) => {
            text.push_str("OPEN");
            let vals = atom_valuation(&f, x)?;
            let v = eval_with(&f, &vals)?;
            assert!(!v.truth.is_one(), "open branch does not refute {f}");
            for (atom, v) in vals {
                let _ = write!(text, "\n{atom} = {v}");
            }
            false
        }
    };
    Ok(Outcome::answer(text, closed))
}

fn axioms(k: usize, depth: usize, check: bool, cap: usize, opts: &DecideOptions) -> CliResult<Outcome> {
    if k == 0 {
        return Err(CliError::Usage("--vars must be at least 1".into()));
    }
    let vars = paraprob::gen::vars(k);
    let mut text = String::new();
    let mut all_valid = true;
    for inst in generate_instances(&vars, depth, cap)? {
        let _ = write!(text, "{}\t{}", inst.schema, inst.formula);
        if check {
            let v = decide_valid_four(&inst.formula, opts)?;
            all_valid &= v == Verdict::Valid;
            let _ = write!(text, "\t{}", v.label());
        }
        text.push('\n');
    }
    Ok(Outcome::answer(text.trim_end().to_string(), all_valid))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if !out.text.is_empty() {
                // a closed pipe is not worth a panic
                let _ = writeln!(std::io::stdout(), "{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
