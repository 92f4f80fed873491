use thiserror::Error;

/// Errors surfaced by the graph, linear algebra and solver layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what}: n = {n} exceeds the supported limit {max}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("vertex index {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop at vertex {v} not allowed")]
    SelfLoop { v: usize },

    #[error("invalid graph family spec: {0}")]
    InvalidFamily(String),

    #[error("edge list parse error at line {line}: {msg}")]
    ParseEdgeList { line: usize, msg: String },

    #[error("graph6 parse error: {0}")]
    ParseGraph6(String),

    #[error("matrix is materially non-PSD: lambda_min = {lambda_min}")]
    NotPsd { lambda_min: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps")]
    EigenNonConvergence { sweeps: usize },

    #[error("vector {index} is zero (or numerically zero)")]
    ZeroVector { index: usize },

    #[error("vector {index} is not a unit vector: norm = {norm}")]
    NonUnitVector { index: usize, norm: f64 },

    #[error("edge ({u},{v}) has positive inner product {value}, violating the bound's precondition")]
    PositiveEdgeInnerProduct { u: usize, v: usize, value: f64 },

    #[error("trials must be at least 1")]
    ZeroTrials,

    #[error("expected {expected} vectors/entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("witness is not certified: {0}")]
    NotCertified(String),

    #[error("witness orthogonality residual {residual} exceeds tolerance {tol}")]
    OrthogonalityResidual { residual: f64, tol: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
