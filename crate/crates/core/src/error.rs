use alloc::string::String;
use core::fmt;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Argument outside the domain of the operation (pole, branch cut, zero of log).
    Domain(String),
    /// Parameter violates a family exclusion, e.g. `c` a nonpositive integer.
    Parameter(String),
    /// Evaluation point lies outside the disk on which a series is certified.
    OutOfDomain { radius: f64, r_ref: f64 },
    /// A non-finite value was supplied or produced.
    NonFinite(&'static str),
    /// Ratio test did not settle within the term budget.
    NoConvergence { terms: usize },
    /// Quotient series requested with a vanishing leading coefficient.
    Degenerate(String),
    /// An operation precondition does not hold.
    Precondition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Parameter(msg) => write!(f, "parameter error: {msg}"),
            Error::OutOfDomain { radius, r_ref } => {
                write!(f, "|z| = {radius} exceeds the series reference radius {r_ref}")
            }
            Error::NonFinite(what) => write!(f, "non-finite value in {what}"),
            Error::NoConvergence { terms } => {
                write!(f, "series ratio test did not settle within {terms} terms")
            }
            Error::Degenerate(msg) => write!(f, "degenerate input: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition failed: {msg}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
