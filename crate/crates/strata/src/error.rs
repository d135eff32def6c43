use thiserror::Error;

/// Errors surfaced by the algebra layers.
///
/// Session-file errors (with line anchors) live in [`crate::session`]; this
/// enum covers the domain operations themselves.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different polynomial rings")]
    RingMismatch,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid ring declaration: {0}")]
    InvalidRing(String),

    #[error("colon ideal by the zero polynomial is undefined")]
    DivisionByZero,

    #[error("ideal is the unit ideal where a proper ideal is required")]
    NotProper,

    #[error("certificate check failed: {0}")]
    Certificate(String),

    #[error("declared primary decomposition is inconsistent: {0}")]
    Decomposition(String),

    #[error("module has no declared decomposition and its defining ideal is not monomial")]
    NoDecomposition,

    #[error("candidate primes do not all share the required coheight")]
    MixedCoheights,

    #[error("minimal primes of the module are not pairwise comaximal")]
    NonComaximalComponents,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
