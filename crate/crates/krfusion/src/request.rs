use std::fmt;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use krfusion_core::{build_algebra, AlgebraData, AlgebraType, DominantWeight, KRWeightSpec, Positivity};
use serde::{Deserialize, Serialize};

use crate::parse::{parse_algebra, parse_lambda, parse_weight_spec, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// One multiplicity `M_{λ,R}(q)`.
    Compute,
    /// Every weight in the support of `R`.
    Table,
    /// Compare against the character and Kostka oracles.
    Verify,
    /// Fermionic dimension with a per-factor breakdown.
    Dims,
    /// Invariant suite.
    Selfcheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VariantChoice {
    /// Restricted graded sum.
    #[default]
    Kr1,
    /// Unrestricted sum at `q = 1`.
    Kr2,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

impl fmt::Display for VariantChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

/// Raw command line; see [`Request::from_args`] for validation.
#[derive(Debug, Clone, Parser)]
#[command(
    name = "krfusion",
    version,
    about = "Graded multiplicities of fusion products of Kirillov-Reshetikhin modules"
)]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// Simple Lie algebra, e.g. `A3`, `D4`, `G2`.
    #[arg(long)]
    pub algebra: Option<String>,
    /// KR modules as `a*wI` terms, e.g. `2*w1,w3`.
    #[arg(long)]
    pub weights: Option<String>,
    /// Dominant weight `c1*w1+c2*w2+…`, or `0`.
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub variant: VariantChoice,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Require nonnegative vacancy numbers at every `(i, a)`, not only occupied ones.
    #[arg(long)]
    pub strict_vacancy: bool,
    /// Directory of memoised results.
    #[arg(long, env = "KRFUSION_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads; 0 picks one per core.
    #[arg(long, env = "KRFUSION_THREADS")]
    pub threads: Option<usize>,
    /// Report wall-clock time; bypasses the cache.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UsageError {
    #[error("--{flag}: {source}")]
    Parse { flag: &'static str, source: ParseError },
    #[error("--{flag} is required for {command}")]
    Missing { flag: &'static str, command: Command },
    #[error("--{flag} is not accepted by {command}")]
    Forbidden { flag: &'static str, command: Command },
    #[error("--weights requires --algebra")]
    WeightsWithoutAlgebra,
    #[error("csv output is only available for table")]
    CsvNotTable,
    #[error("{0}")]
    Other(String),
}

impl UsageError {
    pub fn position(&self) -> Option<usize> {
        match self {
            UsageError::Parse { source, .. } => Some(source.position),
            _ => None,
        }
    }
}

/// A validated request. `algebra` and `weights` are present for every
/// command except possibly `selfcheck`.
#[derive(Debug, Clone)]
pub struct Request {
    pub command: Command,
    pub algebra: Option<AlgebraType>,
    pub weights: Option<KRWeightSpec>,
    pub lambda: Option<DominantWeight>,
    pub variant: VariantChoice,
    pub format: Format,
    pub strict_vacancy: bool,
    pub cache_dir: Option<PathBuf>,
    pub timing: bool,
}

impl Request {
    pub fn from_args(args: &Args) -> Result<Self, UsageError> {
        let command = args.command;
        if args.format == Format::Csv && command != Command::Table {
            return Err(UsageError::CsvNotTable);
        }
        let algebra = args
            .algebra
            .as_deref()
            .map(parse_algebra)
            .transpose()
            .map_err(|source| UsageError::Parse { flag: "algebra", source })?;
        let rank = algebra.map(|a| a.rank());
        let weights = match (&args.weights, rank) {
            (Some(s), Some(rank)) => {
                Some(parse_weight_spec(s, rank).map_err(|source| UsageError::Parse { flag: "weights", source })?)
            }
            (Some(_), None) => return Err(UsageError::WeightsWithoutAlgebra),
            (None, _) => None,
        };
        if command != Command::Selfcheck {
            if algebra.is_none() {
                return Err(UsageError::Missing { flag: "algebra", command });
            }
            if weights.is_none() {
                return Err(UsageError::Missing { flag: "weights", command });
            }
        }
        let lambda = match (&args.lambda, command) {
            (None, Command::Compute) => return Err(UsageError::Missing { flag: "lambda", command }),
            (Some(_), Command::Compute) => {
                let s = args.lambda.as_deref().unwrap_or_default();
                let rank = rank.expect("checked above");
                Some(parse_lambda(s, rank).map_err(|source| UsageError::Parse { flag: "lambda", source })?)
            }
            (Some(_), _) => return Err(UsageError::Forbidden { flag: "lambda", command }),
            (None, _) => None,
        };
        Ok(Request {
            command,
            algebra,
            weights,
            lambda,
            variant: args.variant,
            format: args.format,
            strict_vacancy: args.strict_vacancy,
            cache_dir: args.cache_dir.clone(),
            timing: args.timing,
        })
    }

    pub fn positivity(&self) -> Positivity {
        if self.strict_vacancy {
            Positivity::Everywhere
        } else {
            Positivity::Occupied
        }
    }

    /// The algebra data and weights; `None` only for a bare `selfcheck`.
    pub fn problem(&self) -> Option<(AlgebraData, &KRWeightSpec)> {
        Some((build_algebra(self.algebra?), self.weights.as_ref()?))
    }

    /// Canonical text of everything that determines the result; the cache
    /// key is its digest.
    pub fn canonical(&self) -> String {
        let opt = |s: Option<String>| s.unwrap_or_else(|| "-".into());
        format!(
            "krfusion/1;command={};algebra={};weights={};lambda={};variant={};strict_vacancy={}",
            self.command,
            opt(self.algebra.map(|a| a.to_string())),
            opt(self.weights.as_ref().map(|w| w.to_string())),
            opt(self.lambda.as_ref().map(|l| l.to_string())),
            self.variant,
            self.strict_vacancy,
        )
    }
}
