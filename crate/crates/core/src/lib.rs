//! Counting complete multipartite subgraphs in graphs with a bounded
//! longest cycle, longest path or maximum matching.
//!
//! The crate provides the extremal constructions, closed-form copy counts
//! for them, an exact copy counter for arbitrary graphs, the graph
//! parameters involved, the reductions used to reach extremal graphs, and an
//! exhaustive small-order harness that certifies the upper bounds.

pub mod construct;
pub mod count;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod lemmas;
pub mod reduction;
pub mod verify;

pub use count::{count_copies, count_copies_through, count_embeddings, Count, PartSpec};
pub use error::{Error, Result};
pub use formulas::{bound, FormulaInputs, TheoremId};
pub use graph::Graph;
pub use graph6::{from_graph6, to_graph6};
