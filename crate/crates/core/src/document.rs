//! Reading and writing ideals.
//!
//! Text form:
//!
//! ```text
//! ring: x1 x2 x3
//! gens:
//!   x1^2*x2^2, x1^2*x3^2
//!   x2^2*x3^2
//! ```
//!
//! Monomials are `1` or `term(*term)*` with `term = var(^uint)?`; they may be
//! separated by commas, newlines or both. `#` starts a comment. The JSON form
//! is `{"vars": [...], "gens": [[...], ...]}`. Generators are minimalized on
//! load.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::{Map, Number, Value};

use crate::error::{Error, Result};
use crate::ideal::{format_monomial, minimalize, ExponentVector, MonomialIdeal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDocument {
    pub vars: Vec<String>,
    pub gens: Vec<ExponentVector>,
}

impl IdealDocument {
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        Self {
            vars: ideal.vars().to_vec(),
            gens: ideal.gens().to_vec(),
        }
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::new(self.vars.clone(), self.gens.clone())
    }

    /// The text form; [`parse_ideal`] reads it back to the same document.
    pub fn to_text(&self) -> String {
        let mut out = format!("ring: {}\ngens:\n", self.vars.join(" "));
        for g in &self.gens {
            out.push_str(&format_monomial(&self.vars, g));
            out.push('\n');
        }
        out
    }

    pub fn to_json_value(&self) -> Value {
        let mut map = Map::new();
        map.insert(
            "vars".into(),
            Value::Array(self.vars.iter().cloned().map(Value::String).collect()),
        );
        map.insert(
            "gens".into(),
            Value::Array(self.gens.iter().map(exponents_json).collect()),
        );
        Value::Object(map)
    }

    pub fn to_json(&self) -> String {
        format!("{}\n", self.to_json_value())
    }
}

/// An exponent vector as a JSON array of integers.
pub fn exponents_json(v: &ExponentVector) -> Value {
    Value::Array(v.coords().iter().map(biguint_json).collect())
}

pub fn biguint_json(x: &BigUint) -> Value {
    // Digits always form a valid JSON number; arbitrary precision keeps
    // values beyond u64 intact.
    Value::Number(
        x.to_string()
            .parse::<Number>()
            .expect("decimal digits are a JSON number"),
    )
}

pub fn parse_ideal(text: &str) -> Result<IdealDocument> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn parse_text(text: &str) -> Result<IdealDocument> {
    let mut vars: Option<Vec<String>> = None;
    let mut gens: Vec<ExponentVector> = Vec::new();
    let mut in_gens = false;
    let mut gens_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let trimmed = line.trim_start();
        let offset = line.len() - trimmed.len();

        if let Some(rest) = trimmed.strip_prefix("ring:") {
            if vars.is_some() {
                return Err(err(line_no, offset + 1, "duplicate ring line"));
            }
            let start = offset + "ring:".len();
            vars = Some(parse_ring(rest, line_no, start)?);
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("gens:") {
            let Some(names) = vars.as_ref() else {
                return Err(err(line_no, offset + 1, "gens section before ring line"));
            };
            if in_gens {
                return Err(err(line_no, offset + 1, "duplicate gens section"));
            }
            in_gens = true;
            gens_line = line_no;
            let start = offset + "gens:".len();
            parse_monomial_list(rest, names, line_no, start, &mut gens)?;
            continue;
        }
        if !in_gens {
            return Err(err(line_no, offset + 1, "expected `ring:` or `gens:`"));
        }
        let names = vars.as_ref().expect("gens follow ring");
        parse_monomial_list(line, names, line_no, 0, &mut gens)?;
    }

    let Some(vars) = vars else {
        return Err(err(1, 1, "missing `ring:` line"));
    };
    if !in_gens {
        return Err(err(
            text.lines().count().max(1),
            1,
            "missing `gens:` section",
        ));
    }
    if gens.is_empty() {
        return Err(err(gens_line, 1, "empty gens section"));
    }
    Ok(IdealDocument {
        vars,
        gens: minimalize(gens),
    })
}

fn parse_ring(rest: &str, line: usize, start: usize) -> Result<Vec<String>> {
    let mut vars: Vec<String> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut col = start;
    for piece in rest.split_inclusive(char::is_whitespace) {
        let name = piece.trim_end();
        let at = col + 1;
        col += piece.len();
        if name.is_empty() {
            continue;
        }
        let mut chars = name.chars();
        let valid = chars.next().is_some_and(is_ident_start) && chars.all(is_ident_char);
        if !valid {
            return Err(err(line, at, format!("invalid variable name `{name}`")));
        }
        if !seen.insert(name.to_string()) {
            return Err(err(line, at, format!("duplicate variable `{name}`")));
        }
        vars.push(name.to_string());
    }
    if vars.is_empty() {
        return Err(err(line, start + 1, "ring declares no variables"));
    }
    Ok(vars)
}

fn parse_monomial_list(
    text: &str,
    vars: &[String],
    line: usize,
    start: usize,
    out: &mut Vec<ExponentVector>,
) -> Result<()> {
    let mut col = start;
    for piece in text.split_inclusive(',') {
        let body = piece.strip_suffix(',').unwrap_or(piece);
        let lead = body.len() - body.trim_start().len();
        let trimmed = body.trim();
        let at = col + lead;
        let had_comma = piece.ends_with(',');
        col += piece.len();
        if trimmed.is_empty() {
            if had_comma {
                return Err(err(line, at + 1, "empty monomial"));
            }
            continue;
        }
        out.push(parse_monomial_at(trimmed, vars, line, at)?);
    }
    Ok(())
}

/// Parse one monomial such as `x1^2*x3` over the given variables.
pub fn parse_monomial(text: &str, vars: &[String]) -> Result<ExponentVector> {
    let lead = text.len() - text.trim_start().len();
    parse_monomial_at(text.trim(), vars, 1, lead)
}

/// `offset` is the 0-based column of `text` within its line.
fn parse_monomial_at(
    text: &str,
    vars: &[String],
    line: usize,
    offset: usize,
) -> Result<ExponentVector> {
    let mut coords = vec![BigUint::zero(); vars.len()];
    if text == "1" {
        return Ok(ExponentVector::new(coords));
    }
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    let col = |byte: usize| offset + byte + 1;
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].1.is_whitespace() {
            *i += 1;
        }
    };
    loop {
        skip_ws(&mut i);
        let Some(&(start, c)) = chars.get(i) else {
            let end = text.len();
            return Err(err(line, col(end), "expected a variable"));
        };
        if !is_ident_start(c) {
            return Err(err(line, col(start), format!("unexpected `{c}`")));
        }
        while i < chars.len() && is_ident_char(chars[i].1) {
            i += 1;
        }
        let end = chars.get(i).map_or(text.len(), |&(b, _)| b);
        let name = &text[start..end];
        let Some(var) = vars.iter().position(|v| v == name) else {
            return Err(err(line, col(start), format!("unknown variable `{name}`")));
        };
        skip_ws(&mut i);
        let mut exponent = BigUint::from(1u32);
        if let Some(&(_, '^')) = chars.get(i) {
            i += 1;
            skip_ws(&mut i);
            let digits_start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            if i == digits_start {
                let at = chars.get(i).map_or(text.len(), |&(b, _)| b);
                let what = match chars.get(i) {
                    Some((_, '-')) => "negative exponent".to_string(),
                    Some((_, c)) => format!("malformed exponent at `{c}`"),
                    None => "missing exponent".to_string(),
                };
                return Err(err(line, col(at), what));
            }
            let from = chars[digits_start].0;
            let to = chars.get(i).map_or(text.len(), |&(b, _)| b);
            exponent = text[from..to].parse().expect("ascii digits");
            skip_ws(&mut i);
        }
        coords[var] += exponent;
        match chars.get(i) {
            None => break,
            Some(&(_, '*')) => i += 1,
            Some(&(b, c)) => return Err(err(line, col(b), format!("unexpected `{c}`"))),
        }
    }
    Ok(ExponentVector::new(coords))
}

fn parse_json(text: &str) -> Result<IdealDocument> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| err(e.line(), e.column(), format!("invalid JSON: {e}")))?;
    let shape = |m: &str| err(1, 1, m.to_string());
    let obj = value
        .as_object()
        .ok_or_else(|| shape("expected a JSON object"))?;
    let vars_v = obj
        .get("vars")
        .and_then(Value::as_array)
        .ok_or_else(|| shape("`vars` must be an array of strings"))?;
    let mut vars = Vec::with_capacity(vars_v.len());
    let mut seen = BTreeSet::new();
    for v in vars_v {
        let name = v
            .as_str()
            .ok_or_else(|| shape("`vars` must be an array of strings"))?;
        let mut chars = name.chars();
        if !(chars.next().is_some_and(is_ident_start) && chars.all(is_ident_char)) {
            return Err(shape(&format!("invalid variable name `{name}`")));
        }
        if !seen.insert(name.to_string()) {
            return Err(shape(&format!("duplicate variable `{name}`")));
        }
        vars.push(name.to_string());
    }
    if vars.is_empty() {
        return Err(shape("ring declares no variables"));
    }
    let gens_v = obj
        .get("gens")
        .and_then(Value::as_array)
        .ok_or_else(|| shape("`gens` must be an array of exponent arrays"))?;
    if gens_v.is_empty() {
        return Err(shape("empty gens section"));
    }
    let mut gens = Vec::with_capacity(gens_v.len());
    for (row_idx, row) in gens_v.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| shape(&format!("generator {row_idx} is not an array")))?;
        if row.len() != vars.len() {
            return Err(shape(&format!(
                "generator {row_idx} has {} entries, expected {}",
                row.len(),
                vars.len()
            )));
        }
        let mut coords = Vec::with_capacity(row.len());
        for entry in row {
            let digits = match entry {
                Value::Number(n) => n.to_string(),
                _ => String::new(),
            };
            let parsed = if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                digits.parse::<BigUint>().ok()
            } else {
                None
            };
            let Some(x) = parsed else {
                let what = if digits.starts_with('-') {
                    "negative exponent"
                } else {
                    "malformed exponent"
                };
                return Err(shape(&format!("{what} `{entry}` in generator {row_idx}")));
            };
            coords.push(x);
        }
        gens.push(ExponentVector::new(coords));
    }
    Ok(IdealDocument {
        vars,
        gens: minimalize(gens),
    })
}
