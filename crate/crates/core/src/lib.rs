//! Exact computation and certification toolkit for signed total domination
//! and its companion invariants (total domination, tuple total domination,
//! open packing, limited and total limited packing) on small simple graphs.
//!
//! Graphs hold up to 64 vertices with one `u64` adjacency row per vertex.
//! Every solver returns a witness that can be re-checked with the matching
//! predicate in [`solvers`].

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod scalar;
pub mod solvers;
pub mod sweep;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, Family, Graph, VertexSet};
pub use scalar::{RealScalar, Scalar};
pub use solvers::{InvariantResult, PartitionStats, SignedFunction, Witness};

/// Exact rational scalar used for certified bound values.
pub type Rational = num_rational::Ratio<i64>;

/// Bound values evaluated exactly.
pub type ExactBounds = bounds::formulas::LowerBoundTriple<Rational>;
/// Bound values evaluated in double precision.
pub type FloatBounds = bounds::formulas::LowerBoundTriple<f64>;
