//! Matchings, fractional perfect matchings and fractional k-extendability.

mod bipartite;
pub mod blossom;
pub mod fractional;
pub mod oracle;

pub use blossom::{has_k_matching, matching_number, maximum_matching};
pub use fractional::{extend_matching, fractional_pm_exists, FpmOutcome, FractionalMatching, Matching};
pub use oracle::{
    is_fext_definitional, is_fext_definitional_with, is_fext_lemma, is_violating_set, Verdict, Witness,
};
