//! An exact-arithmetic kernel for vertex-presented polytopes.
//!
//! The kernel trades asymptotic cleverness for auditability: facets are found
//! by scanning vertex subsets with fraction-free elimination, faces by
//! closing vertex sets against the facet incidences, and every constructor
//! re-validates its output from scratch. All coordinates are exact rationals,
//! so a reported face count is a certificate, not an approximation. The cost
//! is a hard cap of 64 vertices per polytope — faces live in `u64` masks —
//! which is ample for the families this crate studies.

mod lattice;
mod numeric;
mod ops;
mod polytope;

pub use lattice::{CanonicalIncidence, FaceLattice, IncidenceStructure};
pub use ops::{
    direct_sum, is_simple_vertex, k_fold_pyramid, polar_dual, product, pyramid, truncate_face,
    truncate_face_at, vertex_degree, vertex_figure_counts,
};
pub use polytope::{affine_rank, Facet, Hyperplane, Point, VPolytope};

use thiserror::Error;

/// Everything that can go wrong while building or transforming a polytope.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("polytopes must live in dimension at least 1")]
    ZeroDimension,

    #[error("point has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("a {dim}-dimensional polytope needs at least {} vertices, got {got}", dim + 1)]
    TooFewVertices { dim: usize, got: usize },

    #[error("at most 64 vertices are supported, got {got}")]
    TooManyVertices { got: usize },

    #[error("at most 64 facets are supported, got {got}")]
    TooManyFacets { got: usize },

    #[error("points span an affine subspace of dimension {rank}, not the full {dim}")]
    NotFullDimensional { rank: usize, dim: usize },

    #[error("point {index} is not a vertex of the hull of the point set")]
    RedundantPoint { index: usize },

    #[error("vertex index {index} out of range for {n_vertices} vertices")]
    VertexIndexOutOfRange { index: usize, n_vertices: usize },

    #[error("the given vertex set is not a proper face")]
    NotAFace,

    #[error("truncation would remove every vertex")]
    TruncatesEverything,

    #[error("operation needs ambient dimension at least {needs}")]
    UnsupportedDimension { needs: usize },

    #[error("expected at least one point")]
    EmptyPointSet,

    #[error("truncation depth {num}/{den} must lie strictly between 0 and 1")]
    BadThreshold { num: i64, den: i64 },
}
