//! JSON vector payloads: a bare array, or an object `{"d": D, "f"|"h"|"g": [...]}`
//! in the same shape the tool emits. Integers may be JSON numbers or decimal
//! strings of any size.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use fcompare_core::ExactInt;
use serde_json::Value;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum VecKind {
    F,
    H,
    G,
}

impl VecKind {
    pub fn key(self) -> &'static str {
        match self {
            VecKind::F => "f",
            VecKind::H => "h",
            VecKind::G => "g",
        }
    }
}

#[derive(Debug, PartialEq)]
pub struct VectorInput {
    pub d: Option<i64>,
    pub kind: Option<VecKind>,
    pub entries: Vec<ExactInt>,
}

pub fn read_source(inline: Option<&str>, file: Option<&Path>) -> Result<String, CliError> {
    match (inline, file) {
        (Some(text), None) => Ok(text.to_owned()),
        (None, Some(path)) => {
            fs::read_to_string(path).map_err(|e| CliError::io(format!("cannot read {}: {e}", path.display())))
        }
        _ => Err(CliError::usage("give the vector either inline or as a file, not both")),
    }
}

pub fn parse_vector(text: &str) -> Result<VectorInput, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::parse(format!("malformed JSON: {e}")))?;
    match value {
        Value::Array(items) => Ok(VectorInput {
            d: None,
            kind: None,
            entries: parse_ints(&items)?,
        }),
        Value::Object(map) => {
            let mut d = None;
            let mut found = None;
            for (key, v) in &map {
                let kind = match key.as_str() {
                    "d" => {
                        d = Some(parse_small(v, "d")?);
                        continue;
                    }
                    "f" => VecKind::F,
                    "h" => VecKind::H,
                    "g" => VecKind::G,
                    other => return Err(CliError::parse(format!("unexpected key {other:?} in vector object"))),
                };
                if found.is_some() {
                    return Err(CliError::parse("vector object must carry exactly one of f, h, g"));
                }
                let Value::Array(items) = v else {
                    return Err(CliError::parse(format!("\"{key}\" must be an array")));
                };
                found = Some((kind, parse_ints(items)?));
            }
            let (kind, entries) = found.ok_or_else(|| CliError::parse("vector object must carry one of f, h, g"))?;
            Ok(VectorInput {
                d,
                kind: Some(kind),
                entries,
            })
        }
        _ => Err(CliError::parse(
            "expected a JSON array or a {\"d\", \"f\"|\"h\"|\"g\"} object",
        )),
    }
}

fn parse_ints(items: &[Value]) -> Result<Vec<ExactInt>, CliError> {
    items.iter().map(parse_int).collect()
}

fn parse_int(v: &Value) -> Result<ExactInt, CliError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => return Err(CliError::parse(format!("expected an integer, got {other}"))),
    };
    parse_int_str(&text)
}

/// Decimal integer with optional leading minus; no exponent or fraction.
pub fn parse_int_str(text: &str) -> Result<ExactInt, CliError> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(CliError::parse(format!("not an integer: {text:?}")));
    }
    ExactInt::from_str(text).map_err(|e| CliError::parse(format!("not an integer: {text:?} ({e})")))
}

fn parse_small(v: &Value, name: &str) -> Result<i64, CliError> {
    let n = parse_int(v)?;
    i64::try_from(n).map_err(|_| CliError::validation(format!("{name} is out of range")))
}

/// Combines a dimension flag with the one carried by the payload.
pub fn resolve_d(flag: Option<i64>, payload: Option<i64>) -> Result<Option<i64>, CliError> {
    match (flag, payload) {
        (Some(a), Some(b)) if a != b => Err(CliError::validation(format!(
            "--d {a} disagrees with d = {b} in the payload"
        ))),
        (a, b) => Ok(a.or(b)),
    }
}
