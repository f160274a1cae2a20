//! Matrices of a graph, their largest eigenvalues, and equitable quotients.

pub mod closed_form;
pub mod eigen;
pub mod matrix;
pub mod quotient;
mod report;

pub use closed_form::{closed_form, Family, FamilyParams, Instance};
pub use eigen::{largest_eigenvalue, DEFAULT_TOL};
pub use matrix::{build_matrix, MatrixKind, SymMatrix};
pub use quotient::{charpoly3, largest_real_root, quotient, Cubic, Partition, QuotientMatrix};
pub use report::{spectral_radius, spectral_report, SpectralReport};
