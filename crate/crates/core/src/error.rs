//! Error type shared by the geometry kernel.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeomError {
    /// The clipping halfspace excludes the entire solid.
    #[error("clip result is empty: halfspace excludes the whole solid")]
    EmptyResult,
    /// The clipping halfspace touches the solid only in a lower-dimensional set.
    #[error("clip result is degenerate (lower-dimensional intersection)")]
    DegenerateResult,
    /// Canonicalization produced geometry violating the convexity invariants.
    #[error("canonicalization failed: {0}")]
    NonConvexInput(String),
    /// Edge midpoints are not equidistant from the centroid.
    #[error("solid is not midscribed: edge-midpoint distances spread by {spread}")]
    NotMidscribed { spread: f64 },
    /// Truncation depth outside its valid range.
    #[error("truncation depth {value} out of range: {reason}")]
    DepthOutOfRange { value: f64, reason: String },
    /// The vertex/edge truncation linear system is degenerate.
    #[error("singular truncation-parameter system for theta = {theta}")]
    SingularSystem { theta: f64 },
    /// The snub cubic has no root in the search bracket.
    #[error("no root of the snub cubic in (1, 3) for alpha = {alpha_deg} degrees")]
    NoRootInBracket { alpha_deg: f64 },
    /// A skew truncation produced a non-uniform solid.
    #[error("skew truncation produced a non-uniform solid: {0}")]
    NonUniformResult(String),
    /// Inner solid is not contained in the outer one.
    #[error("solid is not contained in the candidate outer solid (violation {violation})")]
    NotContained { violation: f64 },
    /// Definition of a k-face embedding requires distinct solids.
    #[error("k-face embedding requires a proper subset; the solids coincide")]
    NotProperSubset,
    /// Simultaneous truncation parameters give irregular faces.
    #[error("inconsistent truncation parameters: max face irregularity {deviation}")]
    InconsistentParams { deviation: f64 },
    /// Catch-all for malformed inputs to constructors.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, GeomError>;
