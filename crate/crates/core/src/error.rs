//! Error type shared by the fallible operations of the crate.

use thiserror::Error;

/// Errors produced by parsing, algebra and file handling.
///
/// Structural misuse (mixing elements of different fiber rank or variable
/// count) is a programming error and panics instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("volume form is not invertible in this coefficient ring")]
    NonInvertibleVolume,
    #[error("metric is singular (determinant is zero)")]
    SingularMetric,
    #[error("(co)homology requires constant structure functions (zero-dimensional base)")]
    NotFiniteDimensional,
    #[error("deformation 1-form is not closed")]
    NotClosed,
    #[error("morphism endpoints live on different charts: {0}")]
    ChartMismatch(String),
    #[error("bivector violates the Jacobi identity")]
    JacobiViolation,
    #[error("schema violation at `{path}`: {msg}")]
    Schema { path: String, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn schema(path: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            msg: msg.into(),
        }
    }

    pub(crate) fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        Error::Syntax {
            pos,
            msg: msg.into(),
        }
    }
}
