use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty generator list")]
    EmptyGenerators,

    #[error("not a numerical semigroup: gcd of generators is {0}")]
    NotNumericalSemigroup(u64),

    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),

    #[error("owner mismatch: ideal of {0} combined with ideal of {1}")]
    OwnerMismatch(String, String),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("{0} is not squarefree (or is 0 or 1)")]
    NotSquarefree(i64),

    #[error("degenerate lattice: generators span rank < 2")]
    DegenerateLattice,

    #[error("enumeration too large: found {found} before exceeding budget {budget}")]
    EnumerationTooLarge { found: usize, budget: usize },

    #[error("exhaustive scope not supported for {0}")]
    ExhaustiveUnsupported(String),

    #[error("star operations with mixed owners: {0} vs {1}")]
    MixedOwners(String, String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
