//! Theorem checks, corpus sweeps, sharpness certificates and parameter grids.

pub mod grid;
pub mod identities;
pub mod sampling;
pub mod sharpness;
pub mod sweep;
pub mod theorem;

pub use grid::{lemma_grid, wiener_chain, GridBounds, GridLemma, GridPoint, GridReport};
pub use identities::{edge_count_identities, edge_identity_grid, EdgeIdentityReport};
pub use sampling::{sample_spanning_subgraphs, SamplingReport};
pub use sharpness::{extremal_certificate, sharpness, ExtremalCertificate, SharpnessReport};
pub use sweep::{sweep, sweep_graphs, SweepEntry, SweepReport};
pub use theorem::{check_theorem, spanning_embedding, Classification, GraphVerdict, TheoremId, TheoremSpec};
