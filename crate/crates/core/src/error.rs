use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: indices out of range, wrong lengths, missing data.
    #[error("structural error: {0}")]
    Structure(String),
    /// Well-formed input that violates an algebraic axiom.
    #[error("axiom violated: {0}")]
    Axiom(String),
    /// A required piece of structure (identities, scalar ring) is absent.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A finite search exceeded its configured ceiling before deciding.
    #[error("undecided at bound: {0}")]
    Undecided(String),
    /// An induced map failed to respect relations at the chosen bound.
    #[error("inconsistent at bound: {0}")]
    InconsistentAtBound(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
