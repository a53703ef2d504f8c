//! Text grammars for algebras, KR weight lists and dominant weights.
//!
//! Whitespace is insignificant everywhere. Positions in errors are 1-based
//! character columns of the original input.

use krfusion_core::{AlgebraType, DominantWeight, Family, KRWeightSpec, KrFactor};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError { position, message: message.into() }
    }
}

/// Non-whitespace characters paired with their 1-based column.
fn significant(s: &str) -> Vec<(usize, char)> {
    s.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).map(|(i, c)| (i + 1, c)).collect()
}

fn end_position(s: &str) -> usize {
    s.chars().count() + 1
}

/// Splits on `sep`; every piece keeps the column of the separator before it
/// so that an empty piece can still be located.
fn split_terms(chars: &[(usize, char)], sep: char, end: usize) -> Vec<(usize, &[(usize, char)])> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut anchor = chars.first().map_or(end, |c| c.0);
    for (k, &(pos, c)) in chars.iter().enumerate() {
        if c == sep {
            out.push((anchor, &chars[start..k]));
            start = k + 1;
            anchor = chars.get(k + 1).map_or(end, |c| c.0);
            if k + 1 == chars.len() {
                anchor = pos + 1;
            }
        }
    }
    out.push((anchor, &chars[start..]));
    out
}

fn number(chars: &[(usize, char)], at: usize, what: &str) -> Result<(u64, usize), ParseError> {
    let digits: String = chars.iter().take_while(|c| c.1.is_ascii_digit()).map(|c| c.1).collect();
    if digits.is_empty() {
        let pos = chars.first().map_or(at, |c| c.0);
        return Err(ParseError::new(pos, format!("expected {what}")));
    }
    let value = digits.parse::<u64>().map_err(|_| ParseError::new(chars[0].0, format!("{what} is too large")))?;
    Ok((value, digits.len()))
}

/// One term `c*wI` or `wI`; returns `(c, I)` with `I` still 1-based.
fn term(anchor: usize, chars: &[(usize, char)], rank: usize) -> Result<(u64, usize), ParseError> {
    if chars.is_empty() {
        return Err(ParseError::new(anchor, "empty term"));
    }
    let (coeff, rest) = if chars[0].1 == 'w' || chars[0].1 == 'W' {
        (1, chars)
    } else {
        let (c, used) = number(chars, anchor, "coefficient or 'w'")?;
        match chars.get(used) {
            Some((_, '*')) => (c, &chars[used + 1..]),
            Some(&(pos, other)) => return Err(ParseError::new(pos, format!("expected '*', found '{other}'"))),
            None => return Err(ParseError::new(chars[used - 1].0 + 1, "expected '*' after coefficient")),
        }
    };
    let after_star = chars.last().map_or(anchor, |c| c.0 + 1);
    match rest.first() {
        Some((_, 'w' | 'W')) => {}
        Some(&(pos, other)) => return Err(ParseError::new(pos, format!("expected 'w', found '{other}'"))),
        None => return Err(ParseError::new(after_star, "expected 'w'")),
    }
    let (node, used) = number(&rest[1..], rest[0].0 + 1, "node index")?;
    if let Some(&(pos, other)) = rest.get(1 + used) {
        return Err(ParseError::new(pos, format!("unexpected '{other}'")));
    }
    let node_pos = rest[1].0;
    if node == 0 || node as usize > rank {
        return Err(ParseError::new(node_pos, format!("node index {node} out of range 1..={rank}")));
    }
    Ok((coeff, node as usize))
}

/// Parses `"A3"`, `"g2"`, `" E 8 "` and similar.
pub fn parse_algebra(s: &str) -> Result<AlgebraType, ParseError> {
    let chars = significant(s);
    let Some(&(pos, letter)) = chars.first() else {
        return Err(ParseError::new(1, "empty algebra name"));
    };
    let family = Family::from_letter(letter.to_ascii_uppercase())
        .ok_or_else(|| ParseError::new(pos, format!("unknown family '{letter}'")))?;
    let (rank, used) = number(&chars[1..], end_position(s), "rank")?;
    if let Some(&(p, other)) = chars.get(1 + used) {
        return Err(ParseError::new(p, format!("unexpected '{other}'")));
    }
    let rank = usize::try_from(rank).map_err(|_| ParseError::new(chars[1].0, "rank is too large"))?;
    AlgebraType::new(family, rank).map_err(|e| ParseError::new(chars[1].0, e.to_string()))
}

/// Comma-separated `a*wI` terms, `wI` meaning `1*wI`, every `a ≥ 1`.
pub fn parse_weight_spec(s: &str, rank: usize) -> Result<KRWeightSpec, ParseError> {
    let chars = significant(s);
    if chars.is_empty() {
        return Err(ParseError::new(1, "empty weight specification"));
    }
    let mut factors = Vec::new();
    for (anchor, piece) in split_terms(&chars, ',', end_position(s)) {
        let (level, node) = term(anchor, piece, rank)?;
        if level == 0 {
            return Err(ParseError::new(piece[0].0, "level must be positive"));
        }
        let level = u32::try_from(level).map_err(|_| ParseError::new(piece[0].0, "level is too large"))?;
        factors.push(KrFactor { node: node - 1, level });
    }
    KRWeightSpec::new(rank, factors).map_err(|e| ParseError::new(1, e.to_string()))
}

/// `c1*w1+c2*w2+…` or `0`; repeated nodes add up.
pub fn parse_lambda(s: &str, rank: usize) -> Result<DominantWeight, ParseError> {
    let chars = significant(s);
    if chars.is_empty() {
        return Err(ParseError::new(1, "empty weight"));
    }
    if chars.len() == 1 && chars[0].1 == '0' {
        return Ok(DominantWeight::zero(rank));
    }
    let mut coords = vec![0i64; rank];
    for (anchor, piece) in split_terms(&chars, '+', end_position(s)) {
        let (c, node) = term(anchor, piece, rank)?;
        let c = i64::try_from(c).map_err(|_| ParseError::new(piece[0].0, "coefficient is too large"))?;
        coords[node - 1] =
            coords[node - 1].checked_add(c).ok_or_else(|| ParseError::new(piece[0].0, "coefficient is too large"))?;
    }
    DominantWeight::new(coords).map_err(|e| ParseError::new(1, e.to_string()))
}
