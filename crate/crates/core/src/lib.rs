//! Fractional k-extendability of graphs: extremal families, spectral radii,
//! exact quotient polynomials and extendability oracles.

pub mod canon;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod matching;
pub mod spectral;

pub use error::{Graph6Error, GraphError, HarnessError, MatchingError, SpectralError};
pub use extremal::{extremal_graph, matches_extremal, ExtremalParams};
pub use graph::{Graph, VertexSet};
pub use graph6::{emit_graph6, parse_graph6};
