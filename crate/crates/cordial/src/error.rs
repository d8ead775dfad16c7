use crate::labeling::LambdaTriple;

/// Error type shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A labeling, arc labeling, or bijection does not match its host graph's size.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A graph constructor was handed data violating a type invariant.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// A scalar argument is outside an operation's domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An object is not (or does not assemble into) an oriented hypercube.
    #[error("structure error: {0}")]
    Structure(String),

    /// An operation was applied outside its stated class of digraphs.
    #[error("domain error: {0}")]
    Domain(String),

    /// A named resource (bijection, cube) is missing from a table.
    #[error("configuration error: {0}")]
    Configuration(String),

    /// No orientation of the free edges balances the triple; carries the
    /// closest achievable one.
    #[error("no balancing orientation exists; best achievable lambda is {best}")]
    Infeasible { best: LambdaTriple },

    /// An exhaustive search would exceed the configured work budget.
    #[error("search budget exceeded: {0}")]
    Budget(String),

    /// Malformed input document.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
