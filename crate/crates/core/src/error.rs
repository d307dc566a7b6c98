use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("polyhedron is unbounded")]
    Unbounded,

    #[error("invalid fan: {}", .0.join("; "))]
    InvalidFan(Vec<String>),

    #[error("invalid point configuration: {0}")]
    InvalidPointConfig(String),

    #[error("invalid divisor: {0}")]
    InvalidDivisor(String),

    #[error("divisor has non-integral coefficients")]
    NonIntegral,

    #[error("divisor list must be nonempty")]
    NoDivisors,

    #[error("divisor classes are linearly dependent over Z (relation {relation:?})")]
    DependentClasses { relation: Vec<i64> },

    #[error("no ample Cartier divisor found in the degree lattice within |a_i| <= {bound}")]
    NoAmpleWitness { bound: i64 },

    #[error("class group has torsion {0:?}; a Cox ring needs a free class group")]
    TorsionClassGroup(Vec<String>),

    #[error("divisor classes do not form a basis of the class group")]
    NotClassGroupBasis,

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
