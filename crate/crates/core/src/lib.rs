//! Contraction and deletion blockers for the independence number, clique
//! number and chromatic number.
//!
//! The crate offers exact parameter computation, class recognizers, an
//! exhaustive oracle, polynomial-time solvers for the tractable graph
//! classes and generators for the hardness gadgets.

pub mod canon;
pub mod dense;
pub mod error;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod oracle;
pub mod params;
pub mod recognize;
pub mod reductions;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{Graph, Operation, VertexId, Witness};
pub use instance::{BlockerInstance, OpKind};
pub use params::Parameter;
