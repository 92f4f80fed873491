//! Graph-bounds toolkit: Lovasz theta and vector chromatic numbers by an
//! ADMM semidefinite solver, exact MaxCut with surplus arithmetic,
//! Goemans-Williamson hyperplane rounding, and a verifier that machine-checks
//! the surplus/theta inequalities on small and generated graphs.

pub mod error;
pub mod graph;
pub mod linalg;
pub mod maxcut;
pub mod scalar;
pub mod sdp;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use scalar::Scalar;

/// What "positive semidefinite" means everywhere in this crate: witness
/// validation, Gram factorization and solver certification all share it.
pub const PSD_TOL: f64 = 1e-7;

/// Concrete f64 aliases for the scalar-generic numerical types.
pub type SymMatrix64 = linalg::SymMatrix<f64>;
pub type EigenDecomposition64 = linalg::EigenDecomposition<f64>;
pub type GramWitness64 = sdp::GramWitness<f64>;
pub type SolverConfig64 = sdp::SolverConfig<f64>;
pub type RoundingOutcome64 = maxcut::RoundingOutcome<f64>;

/// f32 variants, mainly useful for quick low-precision sweeps.
pub type SymMatrix32 = linalg::SymMatrix<f32>;
pub type GramWitness32 = sdp::GramWitness<f32>;
pub type SolverConfig32 = sdp::SolverConfig<f32>;
