//! Knot diagrams assembled from Conway polyhedra filled with algebraic
//! tangles, or from tangle closures; component counts, Kauffman brackets,
//! determinants and the candidate sieve.

pub mod batch;
pub mod diagram;
pub mod frame;
pub mod small;

pub use diagram::{
    bracket_cyclotomic, bracket_laurent, component_count, determinant, fill_bracket_laurent, is_candidate,
    jones_from_bracket, oriented, DiagramError, FilledDiagram, Orientation, Source,
};
pub use batch::{compositions, enumerate_diagrams, plan_batches, run_batch, BatchId, BatchOutcome, PoolError, TanglePool};
pub use frame::{count_curves, strand_partner, PolyFrame};
pub use small::SmallCyc;
