//! Weighted monogamy bounds for generalized W-class states.
//!
//! A bound for the ordered subset `j_1 .. j_{m-1}` of B qubits reads
//!
//! ```text
//! E^x(A | B_{j_1} ... B_{j_{m-1}}) >= sum_k w_k E^x(A | B_{j_k})
//! ```
//!
//! with weights from [`weight_vector`]. Which weights are admissible depends
//! on the ordering profile of the subset ([`classify_ordering`]): the split
//! point `t` up to which each pair value dominates the one-vs-rest value of
//! the qubits after it.

mod bounds;
mod ordering;
mod verify;

pub use bounds::{bound_rhs, h_coeff, law_base, weight_vector, BoundKind, Quantity, Shape, WeightLaw};
pub use ordering::{classify_ordering, ordered_subsets, Comparison, OrderingProfile, Regime, Relation, TIE_TOL};
pub use verify::{
    compare_bounds, verify_theorem, BoundPoint, BoundRow, BoundTable, HypothesisStatus, Lhs, LhsMode,
    MonogamyReport, TableRow, MARGIN_TOL,
};
