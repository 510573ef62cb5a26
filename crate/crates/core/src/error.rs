//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by root-datum construction, polyhedral geometry, fan
/// validation and the motivic arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Rank outside the admissible range of the requested family.
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },

    /// Weyl-group enumeration would exceed the hard element limit.
    #[error("Weyl group exceeds the enumeration limit of {limit} elements")]
    GroupTooLarge { limit: usize },

    /// A vector had the wrong number of coordinates.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The zero vector has no primitive representative.
    #[error("zero vector cannot be made primitive")]
    ZeroVector,

    /// A cone operation required a full-dimensional cone.
    #[error("cone is not full-dimensional")]
    NotFullDimensional,

    /// A cone with |det| != 1 where a unimodular one is required.
    #[error("cone is not unimodular (smooth)")]
    NotSmooth,

    /// A fan operation required a complete fan.
    #[error("fan is not complete")]
    NotComplete,

    /// Structural invariant of a fan is violated.
    #[error("malformed fan: {0}")]
    MalformedFan(String),

    /// A fan failed one of the admissibility gates for the
    /// compactification formula.
    #[error("fan not admissible: failed the `{field}` check")]
    FanNotAdmissible { field: &'static str },

    /// Subdivision ray outside the support of the fan.
    #[error("ray lies outside the support of the fan")]
    RayOutsideSupport,

    /// A cone straddles a Weyl-chamber wall where a chamber refinement
    /// is required.
    #[error("fan does not refine the Weyl-chamber fan: a cone straddles a chamber wall")]
    NotRefinement,

    /// An integer that must be prime is not.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Invalid degree parameter for the Rost summand pattern.
    #[error("degree parameter must be at least 2, got {0}")]
    BadDegree(u32),

    /// A polynomial admits no decomposition into the Rost pattern plus
    /// nonnegative shifts of the Severi-Brauer polynomial.
    #[error("not decomposable: {0}")]
    NotDecomposable(String),

    /// Spec-file schema violation (distinct from domain errors so the
    /// CLI can map it to the parse-failure exit code).
    #[error("spec file error: {0}")]
    SpecFile(String),
}

impl Error {
    /// Stable machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidRank { .. } => "InvalidRank",
            Error::GroupTooLarge { .. } => "GroupTooLarge",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::ZeroVector => "ZeroVector",
            Error::NotFullDimensional => "NotFullDimensional",
            Error::NotSmooth => "NotSmooth",
            Error::NotComplete => "NotComplete",
            Error::MalformedFan(_) => "MalformedFan",
            Error::FanNotAdmissible { .. } => "FanNotAdmissible",
            Error::RayOutsideSupport => "RayOutsideSupport",
            Error::NotRefinement => "NotRefinement",
            Error::NotPrime(_) => "NotPrime",
            Error::BadDegree(_) => "BadDegree",
            Error::NotDecomposable(_) => "NotDecomposable",
            Error::SpecFile(_) => "SpecFile",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
