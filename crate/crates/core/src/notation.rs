//! Text notation for the combinatorial objects.
//!
//! Compact notation writes a sequence as a digit string (`4213675`), with
//! `ε` (or `e`, `∅`, or nothing) for the empty sequence. Sequences with an
//! entry above 9 are written as bracketed lists, `[10,2,3]`. On top of that:
//!
//! * signed tuple: partitions separated by commas, `;`, then the tail:
//!   `11,62;643452`, `;3644`, `6211;`
//! * marked pair: the mark set, `;`, then `β`: `{1,3};0103`
//! * good pair: `λ` (increasing), `;`, then `μ`: `13;152`
//!
//! Every parser also accepts the JSON form of the object.

use serde::{Deserialize, Serialize};

use crate::bijections::{GoodPair, MarkedPair, SignedTuple};
use crate::compositions::{Composition, Partition};
use crate::error::{Error, Result};
use crate::perm::{Permutation, SubdiagonalSequence};

pub fn format_sequence(values: &[usize]) -> String {
    if values.is_empty() {
        return "ε".to_string();
    }
    if values.iter().all(|&v| v <= 9) {
        values.iter().map(|v| char::from(b'0' + *v as u8)).collect()
    } else {
        let items: Vec<String> = values.iter().map(ToString::to_string).collect();
        format!("[{}]", items.join(","))
    }
}

fn is_empty_marker(s: &str) -> bool {
    matches!(s, "" | "ε" | "e" | "∅" | "{}" | "[]")
}

pub fn parse_sequence(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if is_empty_marker(s) {
        return Ok(Vec::new());
    }
    if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        return parse_number_list(inner);
    }
    s.chars()
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as usize)
                .ok_or_else(|| Error::Parse(format!("unexpected character {c:?} in {s:?}")))
        })
        .collect()
}

fn parse_number_list(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|item| {
            item.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad number {item:?}: {e}")))
        })
        .collect()
}

/// Splits on `sep` outside square brackets.
fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '[' | '{' => depth += 1,
            ']' | '}' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(s)
        .trim()
}

fn looks_like_json(s: &str) -> bool {
    let s = s.trim();
    s.starts_with('{') && s.contains('"')
}

fn from_json<T: serde::de::DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// Splits `left;right` into its two halves.
fn split_pair<'a>(s: &'a str, what: &str) -> Result<(&'a str, &'a str)> {
    match split_top_level(s, ';').as_slice() {
        [left, right] => Ok((left.trim(), right.trim())),
        _ => Err(Error::Parse(format!(
            "{what} needs exactly one ';' separating its halves: {s:?}"
        ))),
    }
}

pub fn parse_permutation(s: &str) -> Result<Permutation> {
    if s.trim().starts_with('[') && s.contains('"') {
        return from_json(s);
    }
    Permutation::new(parse_sequence(s)?)
}

pub fn parse_composition(s: &str) -> Result<Composition> {
    Composition::new(parse_sequence(s)?)
}

pub fn parse_subdiagonal(s: &str) -> Result<SubdiagonalSequence> {
    SubdiagonalSequence::new(parse_sequence(s)?)
}

pub fn parse_signed_tuple(s: &str) -> Result<SignedTuple> {
    if looks_like_json(s) {
        return from_json(s);
    }
    let (left, right) = split_pair(strip_parens(s), "signed tuple")?;
    let partitions = if is_empty_marker(left) {
        Vec::new()
    } else {
        split_top_level(left, ',')
            .into_iter()
            .map(|p| Partition::new(parse_sequence(p)?))
            .collect::<Result<_>>()?
    };
    SignedTuple::new(partitions, parse_composition(right)?)
}

pub fn parse_marked_pair(s: &str) -> Result<MarkedPair> {
    if looks_like_json(s) {
        return from_json(s);
    }
    let s = strip_parens(s);
    let (marks, beta) = match s.find('}') {
        // Paper style `{1,3}, 0103` as well as `{1,3};0103`.
        Some(close) if s.starts_with('{') => {
            let rest = s[close + 1..].trim_start();
            let rest = rest.strip_prefix([';', ',']).unwrap_or(rest);
            (&s[1..close], rest)
        }
        _ => split_pair(s, "marked pair")?,
    };
    let marks = if is_empty_marker(marks.trim()) {
        Vec::new()
    } else {
        parse_number_list(marks)?
    };
    MarkedPair::new(marks, parse_subdiagonal(beta)?)
}

pub fn parse_good_pair(s: &str) -> Result<GoodPair> {
    if looks_like_json(s) {
        return from_json(s);
    }
    let s = strip_parens(s);
    let (lambda, mu) = if s.contains(';') {
        split_pair(s, "good pair")?
    } else {
        match split_top_level(s, ',').as_slice() {
            [l, m] => (l.trim(), m.trim()),
            _ => return Err(Error::Parse(format!("good pair needs `λ;μ`: {s:?}"))),
        }
    };
    let lambda = parse_sequence(lambda)?;
    if !lambda.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Parse(format!(
            "λ must be listed strictly increasing: {}",
            format_sequence(&lambda)
        )));
    }
    GoodPair::new(Partition::new(lambda)?, parse_composition(mu)?)
}

/// JSON shape of a signed tuple; partitions are listed weakly decreasing.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SignedTupleJson {
    pub partitions: Vec<Vec<usize>>,
    pub tail: Vec<usize>,
}

impl From<SignedTuple> for SignedTupleJson {
    fn from(t: SignedTuple) -> Self {
        Self {
            partitions: t.partitions().iter().map(Partition::decreasing).collect(),
            tail: t.tail().parts().to_vec(),
        }
    }
}

impl TryFrom<SignedTupleJson> for SignedTuple {
    type Error = Error;

    fn try_from(j: SignedTupleJson) -> Result<Self> {
        let partitions = j
            .partitions
            .into_iter()
            .map(Partition::new)
            .collect::<Result<_>>()?;
        SignedTuple::new(partitions, Composition::new(j.tail)?)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MarkedPairJson {
    pub marks: Vec<usize>,
    pub beta: Vec<usize>,
}

impl From<MarkedPair> for MarkedPairJson {
    fn from(p: MarkedPair) -> Self {
        Self {
            marks: p.marks().iter().copied().collect(),
            beta: p.beta().entries().to_vec(),
        }
    }
}

impl TryFrom<MarkedPairJson> for MarkedPair {
    type Error = Error;

    fn try_from(j: MarkedPairJson) -> Result<Self> {
        MarkedPair::new(j.marks, SubdiagonalSequence::new(j.beta)?)
    }
}

/// JSON shape of a good pair; `lambda` is strictly increasing.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GoodPairJson {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
}

impl From<GoodPair> for GoodPairJson {
    fn from(g: GoodPair) -> Self {
        Self {
            lambda: g.lambda().parts().to_vec(),
            mu: g.mu().parts().to_vec(),
        }
    }
}

impl TryFrom<GoodPairJson> for GoodPair {
    type Error = Error;

    fn try_from(j: GoodPairJson) -> Result<Self> {
        if !j.lambda.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Parse("lambda must be strictly increasing".into()));
        }
        GoodPair::new(Partition::new(j.lambda)?, Composition::new(j.mu)?)
    }
}
