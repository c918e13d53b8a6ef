//! Error type shared across the library.
//!
//! Four failure classes are distinguished so that callers (the CLI in
//! particular) can map them to distinct exit codes:
//!
//! * [`Error::Structural`] — operands that cannot be combined at all, e.g.
//!   monomials or ideals from rings of different ambient size.
//! * [`Error::Domain`] — the operation is undefined on this input (zero or
//!   unit ideal where a proper nonzero one is required, `q` out of range,
//!   a prime that is not associated, a mixed ideal where unmixedness is
//!   needed, unsatisfiable generator parameters).
//! * [`Error::Resource`] — a configurable size cap was exceeded; the input
//!   may be perfectly meaningful but is too large for dense enumeration.
//! * [`Error::Parse`] — malformed input text, reported with a line number.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("structural error: {0}")]
    Structural(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource cap exceeded: {0}")]
    Resource(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
