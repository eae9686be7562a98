//! Error type shared by the whole crate.

use std::fmt;

/// Errors produced by series inversion and the numeric zeta paths.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A truncated series with zero constant term has no reciprocal.
    ZeroConstantTerm,
    /// An argument lies outside the domain of the operation.
    Domain(String),
    /// The requested tolerance could not be certified within the
    /// configured term or node budget.
    ToleranceNotMet { requested: f64, achieved: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroConstantTerm => {
                write!(f, "series has zero constant term and cannot be inverted")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::ToleranceNotMet {
                requested,
                achieved,
            } => write!(
                f,
                "tolerance not met: requested {requested:e}, achieved {achieved:e}"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
