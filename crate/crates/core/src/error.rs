use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ideal is not square-free")]
    NotSquareFree,

    #[error(
        "symbolic powers are only defined here for square-free ideals: for non-radical \
         monomial ideals the intersection over associated primes and over minimal primes differ"
    )]
    SymbolicNotSquareFree,

    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,

    #[error("operation undefined for the unit ideal")]
    UnitIdeal,

    #[error("exponent overflow")]
    Overflow,

    #[error("at most {max} variables are supported, got {found}")]
    TooManyVariables { max: usize, found: usize },

    #[error("size guard exceeded: {what} would exceed {limit}")]
    SizeGuard { what: &'static str, limit: usize },

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// True for aborts caused by a configured size guard rather than bad input.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::SizeGuard { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
