//! Error type shared by every module of the engine.

use thiserror::Error;

/// All domain errors the engine can signal.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("weight matrix has rank {rank}, expected {expected}: kernel projection needs full rank")]
    RankDeficient { rank: usize, expected: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("weights are not contained in an open half space")]
    HalfSpaceViolation,
    #[error("weights do not span the dual of the acting torus")]
    WeightsDoNotSpan,
    #[error("semistable locus is empty: moment polytope is infeasible")]
    EmptyQuotient,
    #[error("moment polytope is empty")]
    EmptyPolytope,
    #[error("moment polytope is not full-dimensional")]
    LowerDimensionalPolytope,
    #[error("origin is not interior to the hull")]
    OriginNotInterior,
    #[error("vertex {vertex:?} has {active} active facets, expected {expected}: support constants are non-generic, perturb the support (e.g. add j*delta to the j-th constant)")]
    NonSimplicialVertex {
        vertex: String,
        active: usize,
        expected: usize,
    },
    #[error("non-generic symplectic class: {detail}; perturb the support constants (e.g. add j*delta to the j-th constant for a small rational delta)")]
    NonGenericClass { detail: String },
    #[error("flipping simplex is degenerate (normalized volume 0): non-generic configuration")]
    DegenerateSimplex,
    #[error("pairing <mu_{index}, d> = {value} is not an integer")]
    NonIntegralPairing { index: usize, value: String },
    #[error("primitive relation is inconsistent with the weight matrix: {detail}")]
    InconsistentRelation { detail: String },
    #[error("root finding failed: {detail}")]
    RootFindingFailure { detail: String },
    #[error("root of magnitude {magnitude} lies inside the spurious discard band but has small residual {residual}")]
    SpuriousRootAmbiguity { magnitude: f64, residual: f64 },
    #[error("two roots closer than the matching radius while pairing critical points across q samples")]
    MatchingAmbiguity,
    #[error("input document error at {field}: {detail}")]
    SchemaError { field: String, detail: String },
    #[error("value {value:?} is not an exact rational; decimals are rejected, write p/q")]
    NonRationalValue { value: String },
    #[error("operation supports dimension {supported} only, input has dimension {got}")]
    UnsupportedDimension { supported: usize, got: usize },
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
