//! Result documents and their text, json and csv renderings.
//!
//! Every document serializes with a fixed key order; polynomials become
//! `{exponent: coefficient}` maps with both sides as strings, exponents in
//! ascending numeric order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use krfusion_core::LaurentPoly;
use num_bigint::BigInt;
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::request::{Format, VariantChoice};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyJson(pub LaurentPoly);

impl Serialize for PolyJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.terms().count()))?;
        for (e, c) in self.0.terms() {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for PolyJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            let e: i64 = e.parse().map_err(|_| D::Error::custom(format!("bad exponent {e:?}")))?;
            let c: BigInt = c.parse().map_err(|_| D::Error::custom(format!("bad coefficient {c:?}")))?;
            terms.push((e, c));
        }
        Ok(PolyJson(LaurentPoly::from_terms(terms)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComputeDoc {
    pub algebra: String,
    #[serde(rename = "R")]
    pub r: Vec<String>,
    pub lambda: String,
    pub variant: VariantChoice,
    pub strict_vacancy: bool,
    /// KR1 polynomial; null for the `kr2` variant.
    pub polynomial: Option<PolyJson>,
    /// Value at `q = 1` of the selected variant (KR1 for `both`).
    pub q1_value: String,
    /// KR2 value; null for the `kr1` variant.
    pub kr2_q1_value: Option<String>,
    pub reason: Option<String>,
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub lambda: String,
    pub polynomial: Option<PolyJson>,
    pub q1_value: String,
    pub kr2_q1_value: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableDoc {
    pub algebra: String,
    #[serde(rename = "R")]
    pub r: Vec<String>,
    pub variant: VariantChoice,
    pub strict_vacancy: bool,
    pub rows: Vec<TableRow>,
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorDim {
    pub factor: String,
    pub dimension: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DimsDoc {
    pub algebra: String,
    #[serde(rename = "R")]
    pub r: Vec<String>,
    pub variant: VariantChoice,
    pub strict_vacancy: bool,
    pub factors: Vec<FactorDim>,
    pub product: String,
    pub dimension: String,
    pub kr2_dimension: Option<String>,
    pub multiplicative: bool,
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRow {
    pub check: String,
    pub lambda: Option<String>,
    pub status: Status,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub algebra: String,
    #[serde(rename = "R")]
    pub r: Vec<String>,
    pub strict_vacancy: bool,
    /// Family in which the oracle equality is a theorem, if any.
    pub certified: Option<String>,
    pub checks: Vec<CheckRow>,
    pub passed: usize,
    pub failed: usize,
    pub informational: usize,
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelfcheckRow {
    pub algebra: String,
    pub check: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelfcheckDoc {
    pub checks: Vec<SelfcheckRow>,
    pub passed: usize,
    pub failed: usize,
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
    pub position: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorDoc {
    pub error: ErrorBody,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Report {
    Compute(ComputeDoc),
    Table(TableDoc),
    Dims(DimsDoc),
    Verify(VerifyDoc),
    Selfcheck(SelfcheckDoc),
}

impl Report {
    pub fn set_elapsed(&mut self, ms: Option<f64>) {
        let slot = match self {
            Report::Compute(d) => &mut d.elapsed_ms,
            Report::Table(d) => &mut d.elapsed_ms,
            Report::Dims(d) => &mut d.elapsed_ms,
            Report::Verify(d) => &mut d.elapsed_ms,
            Report::Selfcheck(d) => &mut d.elapsed_ms,
        };
        *slot = ms;
    }

    fn elapsed(&self) -> Option<f64> {
        match self {
            Report::Compute(d) => d.elapsed_ms,
            Report::Table(d) => d.elapsed_ms,
            Report::Dims(d) => d.elapsed_ms,
            Report::Verify(d) => d.elapsed_ms,
            Report::Selfcheck(d) => d.elapsed_ms,
        }
    }

    /// 1 when a verification or self-check failed, else 0.
    pub fn exit_code(&self) -> i32 {
        match self {
            Report::Verify(d) if d.failed > 0 => 1,
            Report::Selfcheck(d) if d.failed > 0 => 1,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> String {
        let s = match self {
            Report::Compute(d) => serde_json::to_string_pretty(d),
            Report::Table(d) => serde_json::to_string_pretty(d),
            Report::Dims(d) => serde_json::to_string_pretty(d),
            Report::Verify(d) => serde_json::to_string_pretty(d),
            Report::Selfcheck(d) => serde_json::to_string_pretty(d),
        };
        s.expect("documents serialize") + "\n"
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = match (format, self) {
            (Format::Json, _) => return self.to_json(),
            (Format::Csv, Report::Table(d)) => return table_csv(d),
            (_, Report::Compute(d)) => compute_text(d),
            (_, Report::Table(d)) => table_text(d),
            (_, Report::Dims(d)) => dims_text(d),
            (_, Report::Verify(d)) => verify_text(d),
            (_, Report::Selfcheck(d)) => selfcheck_text(d),
        };
        if let Some(ms) = self.elapsed() {
            let _ = writeln!(out, "elapsed: {ms:.3} ms");
        }
        out
    }
}

fn poly_text(p: &Option<PolyJson>) -> String {
    p.as_ref().map_or_else(String::new, |p| p.0.to_string())
}

fn compute_text(d: &ComputeDoc) -> String {
    let mut out = String::new();
    if let Some(p) = &d.polynomial {
        let _ = writeln!(out, "M(q) = {}", p.0);
    }
    match d.variant {
        VariantChoice::Kr1 => {
            let _ = writeln!(out, "M(1) = {}", d.q1_value);
        }
        VariantChoice::Kr2 => {
            let _ = writeln!(out, "KR2 M(1) = {}", d.q1_value);
        }
        VariantChoice::Both => {
            let _ = writeln!(out, "M(1) = {}", d.q1_value);
            let _ = writeln!(out, "KR2 M(1) = {}", d.kr2_q1_value.as_deref().unwrap_or_default());
        }
    }
    if let Some(reason) = &d.reason {
        let _ = writeln!(out, "reason: {reason}");
    }
    out
}

fn table_text(d: &TableDoc) -> String {
    let mut out = String::new();
    let mut header = vec!["lambda", "M(q)", "M(1)"];
    if d.variant == VariantChoice::Both {
        header.push("KR2 M(1)");
    }
    if d.variant == VariantChoice::Kr2 {
        header = vec!["lambda", "KR2 M(1)"];
    }
    let _ = writeln!(out, "{}", header.join("\t"));
    for row in &d.rows {
        let mut cells = vec![row.lambda.clone()];
        if d.variant != VariantChoice::Kr2 {
            cells.push(poly_text(&row.polynomial));
        }
        cells.push(row.q1_value.clone());
        if d.variant == VariantChoice::Both {
            cells.push(row.kr2_q1_value.clone().unwrap_or_default());
        }
        let _ = writeln!(out, "{}", cells.join("\t"));
    }
    out
}

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn table_csv(d: &TableDoc) -> String {
    let mut out = String::from("lambda,polynomial,q1_value");
    if d.variant == VariantChoice::Both {
        out.push_str(",kr2_q1_value");
    }
    out.push('\n');
    for row in &d.rows {
        let _ = write!(out, "{},{},{}", quoted(&row.lambda), quoted(&poly_text(&row.polynomial)), row.q1_value);
        if d.variant == VariantChoice::Both {
            let _ = write!(out, ",{}", row.kr2_q1_value.as_deref().unwrap_or_default());
        }
        out.push('\n');
    }
    out
}

fn dims_text(d: &DimsDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra: {}", d.algebra);
    let _ = writeln!(out, "R: {}", d.r.join(","));
    for f in &d.factors {
        let _ = writeln!(out, "factor {}: {}", f.factor, f.dimension);
    }
    let _ = writeln!(out, "product of factors: {}", d.product);
    let _ = writeln!(out, "fermionic dimension: {}", d.dimension);
    if let Some(k) = &d.kr2_dimension {
        let _ = writeln!(out, "KR2 dimension: {k}");
    }
    let _ = writeln!(out, "multiplicative: {}", if d.multiplicative { "yes" } else { "no" });
    out
}

fn verify_text(d: &VerifyDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra: {}", d.algebra);
    let _ = writeln!(out, "R: {}", d.r.join(","));
    let _ =
        writeln!(out, "certified: {}", d.certified.as_deref().unwrap_or("no (oracle comparisons are informational)"));
    for c in &d.checks {
        let at = c.lambda.as_ref().map_or_else(String::new, |l| format!(" lambda={l}"));
        let _ = writeln!(out, "{} {}{}: expected {}, found {}", c.status.label(), c.check, at, c.expected, c.found);
    }
    let _ = writeln!(out, "passed: {}, failed: {}, informational: {}", d.passed, d.failed, d.informational);
    out
}

fn selfcheck_text(d: &SelfcheckDoc) -> String {
    let mut out = String::new();
    for c in &d.checks {
        let _ = write!(out, "{} {} {}", c.status.label(), c.algebra, c.check);
        if !c.detail.is_empty() {
            let _ = write!(out, ": {}", c.detail);
        }
        out.push('\n');
    }
    let _ = writeln!(out, "passed: {}, failed: {}", d.passed, d.failed);
    out
}

pub fn error_json(kind: &str, message: &str, position: Option<usize>) -> String {
    let doc = ErrorDoc { error: ErrorBody { kind: kind.into(), message: message.into(), position } };
    serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_keys_are_numerically_ordered() {
        let p = PolyJson(LaurentPoly::from_terms([(-1, 1), (10, 2), (2, 3)]));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"-1":"1","2":"3","10":"2"}"#);
        assert_eq!(serde_json::from_str::<PolyJson>(&s).unwrap(), p);
    }

    #[test]
    fn failed_checks_exit_1() {
        let row =
            |status| CheckRow { check: "oracle".into(), lambda: None, status, expected: "1".into(), found: "2".into() };
        let doc = |checks: Vec<CheckRow>| VerifyDoc {
            algebra: "A1".into(),
            r: vec![],
            strict_vacancy: false,
            certified: None,
            passed: checks.iter().filter(|c| c.status == Status::Pass).count(),
            failed: checks.iter().filter(|c| c.status == Status::Fail).count(),
            informational: checks.iter().filter(|c| c.status == Status::Info).count(),
            checks,
            elapsed_ms: None,
        };
        assert_eq!(Report::Verify(doc(vec![row(Status::Pass), row(Status::Info)])).exit_code(), 0);
        assert_eq!(Report::Verify(doc(vec![row(Status::Pass), row(Status::Fail)])).exit_code(), 1);
        let sc = SelfcheckDoc { checks: vec![], passed: 3, failed: 1, elapsed_ms: None };
        assert_eq!(Report::Selfcheck(sc).exit_code(), 1);
    }

    #[test]
    fn csv_quotes_polynomials() {
        let d = TableDoc {
            algebra: "A1".into(),
            r: vec!["1*w1".into()],
            variant: VariantChoice::Kr1,
            strict_vacancy: false,
            rows: vec![TableRow {
                lambda: "1*w1".into(),
                polynomial: Some(PolyJson(LaurentPoly::from_terms([(0, 1), (1, 2)]))),
                q1_value: "3".into(),
                kr2_q1_value: None,
            }],
            elapsed_ms: None,
        };
        assert_eq!(table_csv(&d), "lambda,polynomial,q1_value\n\"1*w1\",\"1 + 2*q^1\",3\n");
    }
}
