//! Crate-wide error type.

/// Errors produced by any drumlab module.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// A root finder was handed a bracket without a sign change.
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {flo:e}, f(hi) = {fhi:e}")]
    NoSignChange { lo: f64, hi: f64, flo: f64, fhi: f64 },

    /// An iterative solve did not reach its tolerance.
    #[error("no convergence after {iterations} iterations: {context}")]
    NoConvergence { iterations: usize, context: String },

    /// Eigenvalue bracketing failed; reports the interval that was scanned.
    #[error("root bracketing failure: {context} (scanned [{lo}, {hi}])")]
    BracketingFailure { context: String, lo: f64, hi: f64 },

    /// Requested mesh resolution cannot resolve a geometric feature.
    #[error("resolution error: {0}")]
    Resolution(String),

    /// Geometry degenerated (collapsed passage, overlapping components, ...).
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    /// A point lay outside the mesh where a field value was requested.
    #[error("point ({x}, {y}) is outside the mesh")]
    PointOutsideMesh { x: f64, y: f64 },

    /// Mesh data failed a structural invariant.
    #[error("invalid mesh: {0}")]
    InvalidMesh(String),

    /// A nodal-analysis quantity was requested on an unsuitable field.
    #[error("nodal analysis: {0}")]
    Nodal(String),

    /// An experiment stage failed; carries the stage name for post-mortems.
    #[error("sweep stage '{stage}' failed: {message}")]
    SweepStage { stage: String, message: String },

    /// Configuration file problems.
    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
