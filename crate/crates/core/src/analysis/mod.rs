//! Ground-truth structure of a [`TGraph`](crate::TGraph).
//!
//! Components are counted two independent ways: union-find over the edge
//! list, and the nullity of the Laplacian computed with exact integer rank.
//! The two must agree on every graph.

mod coloring;
mod components;
mod laplacian;
mod parity;
mod report;
mod structure;

pub use coloring::{chromatic_number, chromatic_number_with_cap, is_bipartite, Bipartiteness};
pub use components::{connected_components, DisjointSets};
pub(crate) use laplacian::checked_nullity;
pub use laplacian::{
    laplacian, laplacian_nullity, laplacian_with_cap, rank_bareiss, rank_mod_p, LaplacianMatrix,
    NullityMethod, RANK_PRIMES,
};
pub use parity::{involution_image, parity_bipartition};
pub use report::{analyze, analyze_with, AnalysisReport};
pub use structure::{
    box_symmetry_witness, classify_components, components_isomorphic,
    components_isomorphic_with_cap, is_isomorphism, ComponentClassification, ComponentKind,
};
