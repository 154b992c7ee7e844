//! JSON input schema and the polynomial text grammar.
//!
//! Polynomials are written as terms `coef '*' var '^' int` joined by `+` or
//! `-`, with variables named after 1-based link components: `t1^2 - t1 + 1`,
//! `2*t1^-1*t2 + 1`. A sublink table maps sorted component lists ("1,3") to
//! polynomial strings over exactly those variables.

use std::collections::BTreeMap;

use num::BigInt;
use serde::Deserialize;

use crate::algebra::laurent::LaurentPoly;
use crate::error::Error;
use crate::link::{AlexanderData, BraidWord, LinkDiagram};

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum BraidInput {
    /// `"braid 2: 1 1 1"`
    Text(String),
    Explicit { strands: usize, word: Vec<i32> },
}

/// Top-level input file for the `compute` command; `invariants` serves the
/// `higher-dim` command.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputFile {
    pub braid: Option<BraidInput>,
    /// Map from sorted 1-based component lists to polynomial strings.
    pub alexander: Option<BTreeMap<String, String>>,
    /// Cyclic summand orders of the covering group.
    pub group: Option<Vec<u64>>,
    /// One integer vector per component: the meridian image in the summand
    /// coordinates of `group`.
    pub meridians: Option<Vec<Vec<i64>>>,
    /// One-variable polynomials for the higher-dimensional product.
    pub invariants: Option<Vec<String>>,
}

impl InputFile {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::parse(format!("input file: {e}")))
    }

    pub fn diagram(&self) -> Result<Option<LinkDiagram>, Error> {
        let Some(braid) = &self.braid else {
            return Ok(None);
        };
        let word = match braid {
            BraidInput::Text(t) => BraidWord::parse(t)?,
            BraidInput::Explicit { strands, word } => BraidWord::new(*strands, word.clone())?,
        };
        Ok(Some(LinkDiagram::close(word)))
    }

    /// Parses the polynomial table. Components are 1-based in the file and
    /// 0-based in [`AlexanderData`].
    pub fn alexander_data(&self) -> Result<Option<AlexanderData>, Error> {
        let Some(table) = &self.alexander else {
            return Ok(None);
        };
        let mut data = AlexanderData::new();
        for (key, text) in table {
            let support = parse_support_key(key)?;
            let vars: Vec<usize> = support.iter().map(|&c| c + 1).collect();
            let poly = parse_polynomial(text, &vars)?;
            data.insert(support, poly)?;
        }
        Ok(Some(data))
    }
}

/// `"1,3"` -> `[0, 2]`; the empty string is the empty sublink.
pub fn parse_support_key(key: &str) -> Result<Vec<usize>, Error> {
    let trimmed = key.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for tok in trimmed.split(',') {
        let c: usize = tok
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad component index '{tok}'")))?;
        if c == 0 {
            return Err(Error::parse("component indices are 1-based"));
        }
        out.push(c - 1);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Parses a polynomial over the named variables: `vars` lists the 1-based
/// variable numbers in slot order, so `t3` maps to the slot holding 3.
pub fn parse_polynomial(text: &str, vars: &[usize]) -> Result<LaurentPoly, Error> {
    let nvars = vars.len();
    let slot_of = |n: usize| vars.iter().position(|&v| v == n);
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::parse("empty polynomial"));
    }
    let mut acc = LaurentPoly::zero(nvars);
    let mut pos = 0usize;

    let parse_uint = |chars: &[char], pos: &mut usize| -> Result<u64, Error> {
        let start = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if start == *pos {
            return Err(Error::parse(format!(
                "expected a number at offset {start} of polynomial"
            )));
        }
        chars[start..*pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| Error::parse("number too large"))
    };

    while pos < chars.len() {
        // term sign
        let mut negative = false;
        match chars[pos] {
            '+' => pos += 1,
            '-' => {
                negative = true;
                pos += 1;
            }
            _ if pos == 0 => {}
            c => {
                return Err(Error::parse(format!(
                    "expected '+' or '-' before term, found '{c}'"
                )))
            }
        }
        // factors
        let mut coef = BigInt::from(1);
        let mut exps = vec![0i64; nvars];
        loop {
            if pos < chars.len() && chars[pos].is_ascii_digit() {
                let k = parse_uint(&chars, &mut pos)?;
                coef *= BigInt::from(k);
            } else if pos < chars.len() && chars[pos] == 't' {
                pos += 1;
                let n = parse_uint(&chars, &mut pos)? as usize;
                let slot = slot_of(n).ok_or_else(|| {
                    Error::parse(format!("variable t{n} is not allowed here"))
                })?;
                let mut exp: i64 = 1;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    let mut exp_neg = false;
                    if pos < chars.len() && chars[pos] == '-' {
                        exp_neg = true;
                        pos += 1;
                    }
                    let e = parse_uint(&chars, &mut pos)? as i64;
                    exp = if exp_neg { -e } else { e };
                }
                exps[slot] += exp;
            } else {
                return Err(Error::parse(format!(
                    "expected a coefficient or variable at offset {pos}"
                )));
            }
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                continue;
            }
            break;
        }
        if negative {
            coef = -coef;
        }
        acc = acc.add(&LaurentPoly::from_terms(nvars, [(exps, coef)]))?;
    }
    Ok(acc)
}

/// Renders a polynomial with global component names, `vars` as in
/// [`parse_polynomial`].
pub fn render_polynomial(p: &LaurentPoly, vars: &[usize]) -> String {
    let names: Vec<String> = vars.iter().map(|v| format!("t{v}")).collect();
    p.to_string_with(&names)
}
