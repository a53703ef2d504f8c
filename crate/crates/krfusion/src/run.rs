use std::collections::BTreeMap;
use std::ffi::OsString;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use krfusion_core::{
    fermionic_vs_kostka, kr1_count, kr1_polynomial_with, kr2_value, oracle_decomposition, support_weights, total_m,
    weyl_dimension, AlgebraData, AlgebraType, DominantWeight, Family, KRWeightSpec, LaurentPoly, Positivity,
};
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::cache::Cache;
use crate::render::{
    error_json, CheckRow, ComputeDoc, DimsDoc, FactorDim, PolyJson, Report, Status, TableDoc, TableRow, VerifyDoc,
};
use crate::request::{Args, Command, Format, Request, UsageError, VariantChoice};
use crate::selfcheck;

pub const ZERO_WEIGHT_REASON: &str = "zero-weight condition fails";

/// Everything a process would emit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn usage(json: bool, message: &str, position: Option<usize>) -> Self {
        if json {
            Outcome { stdout: error_json("usage", message, position), stderr: String::new(), code: 2 }
        } else {
            Outcome { stdout: String::new(), stderr: format!("error: {message}\n"), code: 2 }
        }
    }
}

fn wants_json<S: AsRef<std::ffi::OsStr>>(args: &[S]) -> bool {
    let args: Vec<_> = args.iter().map(|a| a.as_ref().to_string_lossy().into_owned()).collect();
    args.iter().any(|a| a == "--format=json") || args.windows(2).any(|w| w[0] == "--format" && w[1] == "json")
}

/// Full command-line behaviour: argument parsing, thread pool, cache and
/// rendering.
pub fn main_with<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let parsed = match Args::try_parse_from(&args) {
        Ok(a) => a,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Outcome { stdout: e.render().to_string(), stderr: String::new(), code: 0 };
        }
        Err(e) => {
            if wants_json(&args) {
                let message = e.render().to_string();
                let first = message.lines().next().unwrap_or_default().trim_start_matches("error: ");
                return Outcome::usage(true, first, None);
            }
            return Outcome { stdout: String::new(), stderr: e.render().to_string(), code: 2 };
        }
    };
    let json = parsed.format == Format::Json;
    let req = match Request::from_args(&parsed) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(json, &e.to_string(), e.position()),
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = parsed.threads {
        pool = pool.num_threads(n);
    }
    match pool.build() {
        Ok(pool) => pool.install(|| run(&req)),
        Err(e) => Outcome::usage(json, &UsageError::Other(format!("--threads: {e}")).to_string(), None),
    }
}

/// Executes a validated request, consulting the cache when allowed.
pub fn run(req: &Request) -> Outcome {
    let start = Instant::now();
    let cache = match &req.cache_dir {
        Some(dir) if !req.timing && Cache::applies_to(req.command) => Some(Cache::new(dir)),
        _ => None,
    };
    let mut stderr = String::new();
    let mut report = match cache.as_ref().and_then(|c| c.load(req)) {
        Some(hit) => hit,
        None => {
            let fresh = execute(req);
            if let Some(c) = &cache {
                if let Err(e) = c.store(req, &fresh) {
                    stderr.push_str(&format!("warning: cache write to {} failed: {e}\n", c.dir().display()));
                }
            }
            fresh
        }
    };
    if req.timing {
        report.set_elapsed(Some(start.elapsed().as_secs_f64() * 1e3));
    }
    Outcome { stdout: report.render(req.format), stderr, code: report.exit_code() }
}

/// The uncached computation behind a request.
pub fn execute(req: &Request) -> Report {
    if req.command == Command::Selfcheck {
        return Report::Selfcheck(selfcheck::run(req.algebra, req.weights.as_ref()));
    }
    let (alg, r) = req.problem().expect("validated request");
    match req.command {
        Command::Compute => Report::Compute(compute(&alg, r, req.lambda.as_ref().expect("validated request"), req)),
        Command::Table => Report::Table(table(&alg, r, req)),
        Command::Dims => Report::Dims(dims(&alg, r, req)),
        Command::Verify => Report::Verify(verify(&alg, r, req)),
        Command::Selfcheck => unreachable!(),
    }
}

fn factor_strings(r: &KRWeightSpec) -> Vec<String> {
    r.entries().iter().map(|f| f.to_string()).collect()
}

/// KR1 at `q = 1`, skipping the graded sum when the default filter applies.
fn kr1_at_one(alg: &AlgebraData, r: &KRWeightSpec, lam: &DominantWeight, positivity: Positivity) -> BigInt {
    match positivity {
        Positivity::Occupied => kr1_count(alg, r, lam),
        p => kr1_polynomial_with(alg, r, lam, p).eval_at_one(),
    }
}

struct Values {
    polynomial: Option<LaurentPoly>,
    q1_value: BigInt,
    kr2: Option<BigInt>,
}

fn values(alg: &AlgebraData, r: &KRWeightSpec, lam: &DominantWeight, req: &Request) -> Values {
    let polynomial = (req.variant != VariantChoice::Kr2).then(|| kr1_polynomial_with(alg, r, lam, req.positivity()));
    let kr2 = (req.variant != VariantChoice::Kr1).then(|| kr2_value(alg, r, lam));
    let q1_value = match (&polynomial, &kr2) {
        (Some(p), _) => p.eval_at_one(),
        (None, Some(k)) => k.clone(),
        (None, None) => unreachable!(),
    };
    Values { polynomial, q1_value, kr2 }
}

fn compute(alg: &AlgebraData, r: &KRWeightSpec, lam: &DominantWeight, req: &Request) -> ComputeDoc {
    let v = values(alg, r, lam, req);
    ComputeDoc {
        algebra: alg.algebra_type().to_string(),
        r: factor_strings(r),
        lambda: lam.to_string(),
        variant: req.variant,
        strict_vacancy: req.strict_vacancy,
        polynomial: v.polynomial.map(PolyJson),
        q1_value: v.q1_value.to_string(),
        kr2_q1_value: v.kr2.map(|k| k.to_string()),
        reason: total_m(alg, r, lam).is_none().then(|| ZERO_WEIGHT_REASON.to_string()),
        elapsed_ms: None,
    }
}

fn table(alg: &AlgebraData, r: &KRWeightSpec, req: &Request) -> TableDoc {
    let rows = support_weights(alg, r)
        .par_iter()
        .map(|lam| {
            let v = values(alg, r, lam, req);
            TableRow {
                lambda: lam.to_string(),
                polynomial: v.polynomial.map(PolyJson),
                q1_value: v.q1_value.to_string(),
                kr2_q1_value: v.kr2.map(|k| k.to_string()),
            }
        })
        .collect();
    TableDoc {
        algebra: alg.algebra_type().to_string(),
        r: factor_strings(r),
        variant: req.variant,
        strict_vacancy: req.strict_vacancy,
        rows,
        elapsed_ms: None,
    }
}

/// `Σ_λ M(1)·dim V(λ)` for one variant.
fn dimension(alg: &AlgebraData, r: &KRWeightSpec, kr2: bool, positivity: Positivity) -> BigInt {
    support_weights(alg, r)
        .par_iter()
        .map(|lam| {
            let m = if kr2 { kr2_value(alg, r, lam) } else { kr1_at_one(alg, r, lam, positivity) };
            if m == BigInt::from(0) {
                m
            } else {
                m * weyl_dimension(alg, lam)
            }
        })
        .reduce(|| BigInt::from(0), |a, b| a + b)
}

fn dims(alg: &AlgebraData, r: &KRWeightSpec, req: &Request) -> DimsDoc {
    let use_kr2 = req.variant == VariantChoice::Kr2;
    let positivity = req.positivity();
    let mut per_factor: BTreeMap<String, BigInt> = BTreeMap::new();
    let mut factors = Vec::new();
    let mut product = BigInt::from(1);
    for f in r.entries() {
        let key = f.to_string();
        let d = per_factor
            .entry(key.clone())
            .or_insert_with(|| {
                let single = KRWeightSpec::single(r.rank(), f).expect("factor of a valid spec");
                dimension(alg, &single, use_kr2, positivity)
            })
            .clone();
        product *= &d;
        factors.push(FactorDim { factor: key, dimension: d.to_string() });
    }
    let total = dimension(alg, r, use_kr2, positivity);
    let kr2_dimension = match req.variant {
        VariantChoice::Kr1 => None,
        VariantChoice::Kr2 => Some(total.clone()),
        VariantChoice::Both => Some(dimension(alg, r, true, positivity)),
    };
    DimsDoc {
        algebra: alg.algebra_type().to_string(),
        r: factor_strings(r),
        variant: req.variant,
        strict_vacancy: req.strict_vacancy,
        factors,
        multiplicative: product == total,
        product: product.to_string(),
        dimension: total.to_string(),
        kr2_dimension: kr2_dimension.map(|d| d.to_string()),
        elapsed_ms: None,
    }
}

/// The family in which the oracle equality is a theorem, if any.
pub fn certification(ty: AlgebraType, r: &KRWeightSpec) -> Option<&'static str> {
    let entries = r.entries();
    match ty.family() {
        Family::A => Some("type A"),
        Family::D if entries.iter().all(|f| f.level == 1) => Some("type D, fundamental weights"),
        Family::B | Family::C | Family::D if entries.iter().all(|f| f.node == 0) => {
            Some("nonexceptional, multiples of w1")
        }
        _ => None,
    }
}

fn check(name: &str, lambda: Option<String>, certified: bool, expected: String, found: String) -> CheckRow {
    let status = match (certified, expected == found) {
        (false, _) => Status::Info,
        (true, true) => Status::Pass,
        (true, false) => Status::Fail,
    };
    CheckRow { check: name.into(), lambda, status, expected, found }
}

fn verify(alg: &AlgebraData, r: &KRWeightSpec, req: &Request) -> VerifyDoc {
    let ty = alg.algebra_type();
    let certified = certification(ty, r);
    let sure = certified.is_some();
    let positivity = req.positivity();
    let oracle = oracle_decomposition(alg, r);
    let kostka_applies = ty.family() == Family::A && r.entries().iter().all(|f| f.node == 0);
    let support = support_weights(alg, r);
    let per_weight: Vec<Vec<CheckRow>> = support
        .par_iter()
        .map(|lam| {
            let at = Some(lam.to_string());
            let poly = kr1_polynomial_with(alg, r, lam, positivity);
            let m1 = poly.eval_at_one().to_string();
            let mut rows = vec![
                check("kr1_vs_kr2", at.clone(), sure, kr2_value(alg, r, lam).to_string(), m1.clone()),
                check("oracle", at.clone(), sure, oracle.multiplicity(lam).to_string(), m1),
            ];
            if kostka_applies {
                let cmp = fermionic_vs_kostka(alg, r, lam).expect("symmetric powers in type A");
                rows.push(check("kostka", at, true, cmp.transformed.to_string(), poly.to_string()));
            }
            rows
        })
        .collect();
    let mut checks: Vec<CheckRow> = per_weight.into_iter().flatten().collect();
    let dims = dims(alg, r, &Request { variant: VariantChoice::Kr1, ..req.clone() });
    checks.push(check("dimension_multiplicative", None, sure, dims.product, dims.dimension));
    let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
    VerifyDoc {
        algebra: ty.to_string(),
        r: factor_strings(r),
        strict_vacancy: req.strict_vacancy,
        certified: certified.map(str::to_string),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        informational: count(Status::Info),
        checks,
        elapsed_ms: None,
    }
}
