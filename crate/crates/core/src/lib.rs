//! Exact computation of the v-number, Castelnuovo–Mumford regularity and
//! related invariants of graphs, clutters and simplicial complexes.

pub mod canon;
pub mod chordal;
pub mod collapse;
pub mod complex;
pub mod error;
pub mod gallery;
pub mod graph;
pub mod graph6;
pub mod homology;
pub mod invariants;
pub mod regularity;
pub mod vertex_set;

#[cfg(test)]
mod testutil;

pub use complex::{Clutter, FreeFaceReport, SimplicialComplex};
pub use error::{Error, Result};
pub use graph::Graph;
pub use vertex_set::{VertexId, VertexSet};
