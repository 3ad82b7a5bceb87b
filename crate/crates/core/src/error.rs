use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0}")]
    Shape(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(usize),

    #[error("partitions have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),

    #[error("{what} needs {size}, exceeding the budget of {limit}")]
    Budget {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("invalid field GF({p}^{e}): {reason}")]
    Field { p: u64, e: u32, reason: String },

    #[error("invalid subgroup: {0}")]
    Subgroup(String),

    #[error("invalid permutation: {0}")]
    Permutation(String),

    #[error("matrix is not unipotent of order dividing {0}")]
    NotUnipotent(u64),

    #[error("invalid point: {0}")]
    Point(String),
}

pub type Result<T> = std::result::Result<T, Error>;
