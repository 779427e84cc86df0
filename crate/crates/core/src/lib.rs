//! Multi-scale spectral features of Vietoris-Rips filtrations, topological
//! kernels, and least-squares SVM classification.
//!
//! The pipeline goes point cloud -> filtration -> harmonic spectral features
//! -> mixed topological kernel -> one-vs-rest LS-SVM. Each stage is a module:
//!
//! * [`geometry`] — point clouds, distance matrices, scale grids, synthetic
//!   shape generators with recorded provenance.
//! * [`complex`] — Vietoris-Rips filtrations via clique expansion and signed
//!   boundary operators.
//! * [`spectral`] — combinatorial Laplacians, the Dirac operator, harmonic
//!   bases, Betti numbers, and pooled harmonic states.
//! * [`features`] — the three-layer feature set (states, Betti matrix,
//!   adjacent-scale persistence measures) with optional shot-noise overlap
//!   estimation.
//! * [`kernel`] — harmonic / Betti / persistence kernels, their weighted
//!   mix, and Gram-matrix assembly with PSD repair.
//! * [`svm`] — one-vs-rest least-squares SVM training, decision functions,
//!   argmax prediction, and cross-validation.
//!
//! Everything is deterministic given the seeds recorded in provenance; all
//! values are immutable after construction and safe to share across threads.

pub mod complex;
pub mod error;
pub mod features;
pub mod geometry;
pub mod kernel;
pub mod rng;
pub mod spectral;
pub mod svm;

pub use complex::{boundary, build_vr, BoundaryOperator, FiltrationComplex, Simplex, SimplicialComplex};
pub use error::Error;
pub use features::{
    extract_features, persistence_measure, BasisMode, HarmonicFeatureSet, OverlapKind, OverlapMode,
};
pub use geometry::{
    generate, make_scale_grid, pairwise_distances, CloudMeta, GridPolicy, PointCloud, ScaleGrid,
    Shape,
};
pub use kernel::{gram, k_topo, KernelConfig, KernelMatrix};
pub use spectral::{
    dirac, harmonic_basis, laplacian, pooled_state, HarmonicBasis, Laplacian, PooledState,
    ZeroTolerance,
};
pub use svm::{cross_validate, predict, train, LsSvmModel, Prediction, TrainingSet};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
