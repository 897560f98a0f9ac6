use thiserror::Error;

use crate::poly::CliffordPoly;

/// Errors raised by the library.
///
/// Mathematical failures that are themselves the product of a computation
/// (a failed identity, a nonzero residual in a report) are returned as data,
/// never through this type.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (axis out of
    /// range, dimension mismatch, wrong grade, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Input text or JSON could not be parsed. `path` names the offending
    /// location (`$` for the document root).
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    /// A precondition on a polynomial failed; the nonzero residual is attached.
    #[error("precondition failed: {message}")]
    Precondition {
        message: String,
        residual: Box<CliffordPoly>,
    },

    /// A zero factor showed up in a denominator.
    #[error("singular parameters (s = {s}, n = {n}): factor {index} of {what} vanishes")]
    Singular {
        what: &'static str,
        s: u32,
        n: usize,
        index: u32,
    },

    /// A constructed object failed a structural check (e.g. an image that
    /// should be proportional to a known polynomial is not).
    #[error("structural error: {message}")]
    Structural {
        message: String,
        residual: Option<Box<CliffordPoly>>,
    },

    /// An exact linear solve left a nonzero residual.
    #[error("decomposition failed: {message}")]
    Decomposition {
        message: String,
        residual: Box<CliffordPoly>,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }
}
