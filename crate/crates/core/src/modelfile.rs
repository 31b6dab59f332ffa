//! Plain-text model files.
//!
//! ```text
//! # Example: a glut and a falsehood
//! world w0 { +p -p }
//! world w1 { -p -q }
//! weight w0 2/3
//! weight w1 1/3
//! ```
//!
//! `+x` puts the world in `v+(x)`, `-x` in `v−(x)`. Weights are optional,
//! but when present every world needs one.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::bd::{BdModel, World};
use crate::error::{Error, Result};
use crate::luk::WorldWeights;
use crate::rational::{format_rational, parse_rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelFile {
    pub model: BdModel,
    pub weights: Option<WorldWeights>,
}

fn is_ident(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_model(text: &str) -> Result<ModelFile> {
    let mut worlds: Vec<World> = Vec::new();
    let mut weights = BTreeMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let err = |message: String| Error::ModelFormat { line, message };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content
            .split_once(char::is_whitespace)
            .unwrap_or((content, ""));
        match keyword {
            "world" => {
                let (id, body) = rest
                    .split_once('{')
                    .ok_or_else(|| err("expected `{` after world id".into()))?;
                let id = id.trim();
                if !is_ident(id) {
                    return Err(err(format!("bad world id `{id}`")));
                }
                let body = body
                    .trim_end()
                    .strip_suffix('}')
                    .ok_or_else(|| err("expected `}` at end of line".into()))?;
                let mut w = World::new(id);
                for lit in body.split_whitespace() {
                    let (sign, var) = lit.split_at(1);
                    if !is_ident(var) {
                        return Err(err(format!("bad literal `{lit}`")));
                    }
                    match sign {
                        "+" => w.plus.insert(var.to_string()),
                        "-" => w.minus.insert(var.to_string()),
                        _ => return Err(err(format!("literal `{lit}` needs a + or - sign"))),
                    };
                }
                if worlds.iter().any(|x| x.id == id) {
                    return Err(err(format!("world `{id}` declared twice")));
                }
                worlds.push(w);
            }
            "weight" => {
                let mut parts = rest.split_whitespace();
                let (Some(id), Some(value), None) = (parts.next(), parts.next(), parts.next())
                else {
                    return Err(err("expected `weight <world> <rational>`".into()));
                };
                let value = parse_rational(value).map_err(|e| err(e.to_string()))?;
                if weights.insert(id.to_string(), value).is_some() {
                    return Err(err(format!("weight for `{id}` given twice")));
                }
            }
            other => return Err(err(format!("unknown keyword `{other}`"))),
        }
    }
    if worlds.is_empty() {
        return Err(Error::ModelFormat {
            line: 0,
            message: "no worlds declared".into(),
        });
    }
    let model = BdModel::new(worlds)?;
    let weights = if weights.is_empty() {
        None
    } else {
        Some(WorldWeights::new(&model, weights)?)
    };
    Ok(ModelFile { model, weights })
}

pub fn render_model(model: &BdModel, weights: Option<&WorldWeights>) -> String {
    let mut out = String::new();
    for w in model.worlds() {
        let lits: Vec<String> = w
            .plus
            .iter()
            .map(|p| format!("+{p}"))
            .chain(w.minus.iter().map(|p| format!("-{p}")))
            .collect();
        if lits.is_empty() {
            let _ = writeln!(out, "world {} {{ }}", w.id);
        } else {
            let _ = writeln!(out, "world {} {{ {} }}", w.id, lits.join(" "));
        }
    }
    if let Some(ws) = weights {
        for w in model.worlds() {
            if let Some(v) = ws.get(&w.id) {
                let _ = writeln!(out, "weight {} {}", w.id, format_rational(v));
            }
        }
    }
    out
}
