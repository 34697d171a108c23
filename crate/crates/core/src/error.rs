//! Error type shared by the whole crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("element does not lie in the real subfield (coordinates {0:?})")]
    NotInRealSubfield(String),

    #[error("element is not integral")]
    NotIntegral,

    #[error("element is not totally positive")]
    NotTotallyPositive,

    #[error("matrix determinant is not a unit")]
    NonUnitDeterminant,

    #[error("form is not positive definite")]
    NotPositiveDefinite,

    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,

    #[error("point is not rank one")]
    NotRankOne,

    #[error("vector entries do not generate the unit ideal")]
    NotPrimitive,

    #[error("point is not integral with respect to the form lattice")]
    NotLatticePoint,

    #[error("norm equation has no solution; input is not a lattice point")]
    UnsolvableNormEquation,

    #[error("point configuration spans rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("point configuration is missing vector certificates")]
    CertificateMissing,

    #[error("too many points for the bitmask face representation ({0} > 64)")]
    TooManyPoints(usize),

    #[error("conjugacy search could not decide: {0}")]
    Undecided(String),

    #[error("vector pool exhausted after {nodes} search nodes")]
    PoolExhausted { nodes: usize },

    #[error("golden data mismatch: {0}")]
    GoldenMismatch(String),

    #[error("malformed rational literal {0:?}")]
    BadRational(String),

    #[error("serialization: {0}")]
    Serialization(String),
}
