//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong when constructing objects or applying maps
/// outside their domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The value sequence is not a permutation of `1..=n`.
    NotAPermutation(String),
    /// A pattern string or word string failed to parse.
    Parse(String),
    /// An operation was applied to an object outside its stated domain.
    Domain(String),
    /// An enumeration request exceeded the configured size limit.
    LimitExceeded { requested: usize, limit: usize },
    /// Series arithmetic hit a non-invertible element (zero constant term,
    /// square root of a series whose constant term is not 1, ...).
    Series(String),
    /// Unknown generating-function or verification target name.
    UnknownName(String),
    /// A parameter is outside the range a formula is stated for.
    BadParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAPermutation(s) => write!(f, "not a permutation: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::Domain(s) => write!(f, "domain violation: {s}"),
            Error::LimitExceeded { requested, limit } => {
                write!(f, "size {requested} exceeds configured limit {limit}")
            }
            Error::Series(s) => write!(f, "series error: {s}"),
            Error::UnknownName(s) => write!(f, "unknown name: {s}"),
            Error::BadParameter(s) => write!(f, "bad parameter: {s}"),
        }
    }
}

impl core::error::Error for Error {}
