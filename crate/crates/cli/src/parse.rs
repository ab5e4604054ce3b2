//! Text syntax for curves, tuples, twist words and integer matrices.
//!
//! Curves: `d1`..`d<n>` (boundary), `p/q` (slope, must already be in
//! lowest terms), `{1,3}` (hole set). Tuples: comma-separated curves.
//! Words: whitespace-separated `t(<curve>)` factors with optional integer
//! exponent `^e`, multiplied left to right in composition order.

use std::collections::BTreeSet;
use std::fmt;

use palf_core::curve::{Curve, Surface};
use palf_core::factor::TwistTuple;
use palf_core::mcg::{dehn_twist, MappingClass};
use palf_core::snf::IntMat;

#[derive(Debug)]
pub struct ParseError {
    /// Byte offset of the offending token in the input.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, msg: msg.into() })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

/// Parses one curve expression; `pos` is the offset of `text` in the
/// surrounding input, for error positions.
pub fn parse_curve_at(text: &str, pos: usize, surface: Surface) -> Result<Curve, ParseError> {
    let t = text.trim();
    let pos = pos + (text.len() - text.trim_start().len());
    if t.is_empty() {
        return err(pos, "empty curve expression");
    }
    if let Some(rest) = t.strip_prefix('d') {
        let index: u32 = rest
            .parse()
            .map_err(|_| ParseError { pos, msg: format!("bad boundary index in `{t}`") })?;
        return Curve::boundary(surface, index).map_err(|e| ParseError { pos, msg: e.to_string() });
    }
    if t.starts_with('{') {
        let Some(inner) = t.strip_prefix('{').and_then(|s| s.strip_suffix('}')) else {
            return err(pos, format!("unclosed hole set `{t}`"));
        };
        let mut holes = BTreeSet::new();
        for part in inner.split(',') {
            let h: u32 = part
                .trim()
                .parse()
                .map_err(|_| ParseError { pos, msg: format!("bad hole number `{}`", part.trim()) })?;
            holes.insert(h);
        }
        return Curve::from_holes(surface, holes)
            .map_err(|e| ParseError { pos, msg: e.to_string() });
    }
    let Some((ps, qs)) = t.split_once('/') else {
        return err(pos, format!("expected `d<i>`, `p/q` or `{{i,..}}`, got `{t}`"));
    };
    let p: i64 = ps
        .trim()
        .parse()
        .map_err(|_| ParseError { pos, msg: format!("bad numerator `{}`", ps.trim()) })?;
    let q: i64 = qs
        .trim()
        .parse()
        .map_err(|_| ParseError { pos, msg: format!("bad denominator `{}`", qs.trim()) })?;
    if (p, q) == (0, 0) {
        return err(pos, "slope 0/0 has no meaning");
    }
    if gcd(p, q) != 1 {
        // likely a typo: reject instead of silently reducing
        return err(pos, format!("non-coprime slope `{t}`"));
    }
    Curve::slope(surface, p, q).map_err(|e| ParseError { pos, msg: e.to_string() })
}

#[cfg(test)]
pub fn parse_curve(text: &str, surface: Surface) -> Result<Curve, ParseError> {
    parse_curve_at(text, 0, surface)
}

/// Splits on commas that are not inside `{...}`.
fn split_top_level(text: &str) -> Vec<(usize, &str)> {
    let mut parts = vec![];
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in text.char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push((start, &text[start..]));
    parts
}

pub fn parse_tuple(text: &str, surface: Surface) -> Result<TwistTuple, ParseError> {
    if text.trim().is_empty() {
        return err(0, "empty tuple");
    }
    let mut curves = vec![];
    for (pos, part) in split_top_level(text) {
        curves.push(parse_curve_at(part, pos, surface)?);
    }
    TwistTuple::new(curves).map_err(|e| ParseError { pos: 0, msg: e.to_string() })
}

/// Parses a twist word, e.g. `t(1/0) t(0/1)^-1 t(d1)`, composed left to
/// right (the leftmost factor acts last).
pub fn parse_word(text: &str, surface: Surface) -> Result<MappingClass, ParseError> {
    if text.trim().is_empty() {
        return err(0, "empty word");
    }
    let mut result = MappingClass::identity();
    let mut rest = text;
    let mut offset = 0usize;
    loop {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        rest = trimmed;
        if rest.is_empty() {
            break;
        }
        if !rest.starts_with("t(") {
            return err(offset, format!("expected `t(<curve>)`, got `{rest}`"));
        }
        let Some(close) = rest.find(')') else {
            return err(offset, "unclosed `t(`");
        };
        let curve = parse_curve_at(&rest[2..close], offset + 2, surface)?;
        let twist =
            dehn_twist(&curve).map_err(|e| ParseError { pos: offset, msg: e.to_string() })?;
        offset += close + 1;
        rest = &rest[close + 1..];
        let mut exponent = 1i64;
        if let Some(after) = rest.strip_prefix('^') {
            let end = after
                .char_indices()
                .find(|&(i, c)| !(c == '-' && i == 0 || c.is_ascii_digit()))
                .map_or(after.len(), |(i, _)| i);
            exponent = after[..end]
                .parse()
                .map_err(|_| ParseError { pos: offset + 1, msg: "bad exponent".into() })?;
            offset += 1 + end;
            rest = &after[end..];
        }
        result = result.multiply(&twist.pow(exponent));
    }
    Ok(result)
}

/// Parses a matrix literal `[[1,2],[3,4]]` (whitespace-insensitive).
pub fn parse_matrix(text: &str) -> Result<IntMat, ParseError> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(inner) = t.strip_prefix("[[").and_then(|s| s.strip_suffix("]]")) else {
        return err(0, "expected a matrix like [[1,2],[3,4]]");
    };
    let mut rows: Vec<Vec<i64>> = vec![];
    for row in inner.split("],[") {
        let mut entries = vec![];
        for e in row.split(',') {
            entries.push(e.parse().map_err(|_| ParseError {
                pos: 0,
                msg: format!("bad matrix entry `{e}`"),
            })?);
        }
        rows.push(entries);
    }
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return err(0, "ragged matrix rows");
    }
    Ok(IntMat::from_rows(&rows))
}
