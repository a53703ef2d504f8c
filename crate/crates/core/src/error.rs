use alloc::string::String;
use core::fmt;

/// Errors raised by the core crate. Everything else is total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidRank { family: char, rank: usize },
    DimensionMismatch { expected: usize, found: usize },
    NodeOutOfRange { node: usize, rank: usize },
    ZeroLevel,
    NegativeWeight,
    NotAPartition(String),
    SizeMismatch { shape: u64, content: u64 },
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidRank { family, rank } => {
                let admissible = match family {
                    'A' => "r >= 1",
                    'B' | 'C' => "r >= 2",
                    'D' => "r >= 3",
                    'E' => "r in {6, 7, 8}",
                    'F' => "r = 4",
                    'G' => "r = 2",
                    _ => "unknown family",
                };
                write!(f, "rank {rank} is not admissible for type {family} ({admissible})")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected a vector of length {expected}, found {found}")
            }
            Error::NodeOutOfRange { node, rank } => {
                write!(f, "node {node} out of range 1..={rank}")
            }
            Error::ZeroLevel => f.write_str("KR levels must be positive"),
            Error::NegativeWeight => f.write_str("dominant weights have nonnegative coordinates"),
            Error::NotAPartition(what) => write!(f, "{what} is not a partition"),
            Error::SizeMismatch { shape, content } => {
                write!(f, "shape has {shape} boxes but content has {content}")
            }
            Error::Unsupported(what) => f.write_str(what),
        }
    }
}

impl core::error::Error for Error {}
