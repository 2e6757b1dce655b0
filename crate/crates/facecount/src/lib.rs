//! Exact tools for counting faces of convex polytopes with few vertices.
//!
//! The crate has four layers:
//!
//! * [`combinatorics`] — arbitrary-precision binomials and the closed-form
//!   lower-bound functions (`theta`, `eta`, `tau`, the pyramid-over-product
//!   and pyramid-over-sum counts, and Barnette's bound for simple polytopes).
//! * [`kernel`] — an exact rational V-polytope type with brute-force facet
//!   enumeration, full face-lattice construction, and the constructions
//!   (pyramid, product, direct sum, polar dual, face truncation) needed to
//!   realize the polytope families of interest.
//! * [`families`] — named builders for those families (simplices, simplicial
//!   prisms, triplexes and their truncations, pyramids over products and sums
//!   of simplices, and a sequence of vertex truncations of a simplex), each
//!   with a formula-predicted f-vector where one exists.
//! * [`verifier`] — batch checks that compare the formulas against the
//!   brute-force kernel and scan the purely combinatorial inequalities over
//!   configurable parameter grids, producing machine- and human-readable
//!   reports.
//!
//! All arithmetic is exact: integers are `BigInt`, coordinates are
//! `BigRational`, and no comparison anywhere carries a tolerance.

pub mod combinatorics;
pub mod families;
pub mod json;
pub mod kernel;
pub mod verifier;

pub use combinatorics::{binomial, FaceCountVector, FormulaError};
pub use families::{FamilyError, FamilySpec};
pub use kernel::{KernelError, Point, VPolytope};
pub use verifier::{CheckReport, Suite, VerifierError};
