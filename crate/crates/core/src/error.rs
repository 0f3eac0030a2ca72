use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rational `{text}`: {reason}")]
    ParseRational { text: String, reason: &'static str },

    #[error("value {0} lies outside [0,1]")]
    OutOfUnitInterval(String),

    #[error("term needs {needed} arguments, got {given}")]
    Arity { needed: usize, given: usize },

    #[error("multiplier must be at least 1")]
    ZeroMultiplier,

    #[error("cannot separate x = {x} from y = {y}: need x < y")]
    NotSeparable { x: String, y: String },

    #[error("term uses an operation the interpretation lacks: {0}")]
    UnsupportedOperation(&'static str),

    #[error("invalid term text: {0}")]
    ParseTerm(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("operation requires a nontrivial algebra")]
    TrivialAlgebra,

    #[error("algebra is not semisimple")]
    NotSemisimple,

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("{what} has size {size}, above the limit {limit}")]
    SizeGuard {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("subreduct does not generate the ambient algebra")]
    NotGenerating,

    #[error("element {0} is not in the ambient algebra")]
    NotInAmbient(String),

    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("value {value} is not on the grid with denominator {grid}")]
    OffGrid { value: String, grid: u64 },

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("signature mismatch: {0}")]
    Signature(String),

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            message: message.into(),
        }
    }
}
