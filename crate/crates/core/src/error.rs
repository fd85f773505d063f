use thiserror::Error;

/// Errors raised by the library. Each variant maps to a stable string code
/// (see [`Error::code`]) used in machine-readable CLI output.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("lattice sum is not of full rank (index is infinite)")]
    RankError,
    #[error("zero vector has no primitive representative")]
    ZeroVector,
    #[error("linear functional is unbounded below on the polyhedron")]
    UnboundedDirection,
    #[error("polytope is empty")]
    EmptyPolytope,
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("polyhedron is not a bounded 1-dimensional edge")]
    NotAnEdge,
    #[error("edge endpoints are not lattice points")]
    NonIntegralEndpoints,
    #[error("polyhedron is not a cell of the complex")]
    NotACell,
    #[error("basepoint is not in the relative interior of the cell")]
    BasepointNotInterior,
    #[error("weighted complex is not pure: {0}")]
    NotPure(String),
    #[error("invalid weighted complex: {0}")]
    InvalidComplex(String),
    #[error("fan is not complete")]
    IncompleteFan,
    #[error("zero scalar has no leading term")]
    ZeroScalar,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial coefficients must all have valuation zero")]
    NonConstantCoefficients,
    #[error("point does not lie on the cycle")]
    PointNotOnCycle,
    #[error("cycles use different sign conventions")]
    ConventionMismatch,
    #[error("cycles do not intersect transversally")]
    NotTransverse,
    #[error("no transverse translation found after {0} attempts")]
    TransversalityFailure(usize),
    #[error("translated cycle does not meet the cone transversally")]
    NonTransverseConfiguration,
    #[error("cone has codimension {got}, cycle requires {expected}")]
    CodimensionMismatch { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::RankError => "RankError",
            Error::ZeroVector => "ZeroVector",
            Error::UnboundedDirection => "UnboundedDirection",
            Error::EmptyPolytope => "EmptyPolytope",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::NotAnEdge => "NotAnEdge",
            Error::NonIntegralEndpoints => "NonIntegralEndpoints",
            Error::NotACell => "NotACell",
            Error::BasepointNotInterior => "BasepointNotInterior",
            Error::NotPure(_) => "NotPure",
            Error::InvalidComplex(_) => "InvalidComplex",
            Error::IncompleteFan => "IncompleteFan",
            Error::ZeroScalar => "ZeroScalar",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NonConstantCoefficients => "NonConstantCoefficients",
            Error::PointNotOnCycle => "PointNotOnCycle",
            Error::ConventionMismatch => "ConventionMismatch",
            Error::NotTransverse => "NotTransverse",
            Error::TransversalityFailure(_) => "TransversalityFailure",
            Error::NonTransverseConfiguration => "NonTransverseConfiguration",
            Error::CodimensionMismatch { .. } => "CodimensionMismatch",
            Error::Parse(_) => "ParseError",
            Error::Schema(_) => "SchemaError",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}
