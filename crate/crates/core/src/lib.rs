//! t-graphs on finitely generated groups written in exponent normal form.
//!
//! Every element of a group `G = <g_1, ..., g_k>` with a unique normal form
//! `g_1^e_1 ... g_k^e_k` is an exponent vector, and two elements are adjacent
//! in the t-graph exactly when the taxicab distance between their exponent
//! vectors equals `t`. The graph depends only on the exponent bounds, so the
//! crate works with [`GeneratorBounds`] and never multiplies group elements.
//!
//! Layout:
//! - [`presentation`]: bounds, elements, named group families
//! - [`metric`]: the taxicab distance
//! - [`graph`]: t-graph construction and DOT/JSON export
//! - [`analysis`]: components, Laplacian nullity, coloring, component shapes
//! - [`formulas`]: closed-form predictions as data
//! - [`harness`]: prediction vs. brute force sweeps, table fixtures, conjecture scans

#![forbid(unsafe_code)]

pub mod analysis;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod metric;
pub mod presentation;

pub use analysis::{analyze, AnalysisReport, ComponentClassification, ComponentKind};
pub use error::{Result, TGraphError};
pub use formulas::Prediction;
pub use graph::TGraph;
pub use metric::d1;
pub use presentation::{GeneratorBounds, GroupElement, GroupSpec, NamedGroup};

/// Environment variable overriding [`Limits::max_elements`].
pub const MAX_ELEMENTS_ENV: &str = "TGRAPH_MAX_ELEMENTS";

/// Resource caps shared by construction and analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest admissible element count `prod e_i`.
    pub max_elements: u64,
    /// Largest Laplacian order handled by the exact rank routines.
    pub spectral_cap: usize,
    /// Orders up to this use big-integer fraction-free elimination; above it
    /// the rank is taken modulo two large primes.
    pub exact_rank_cap: usize,
    /// Largest component handed to the exact chromatic search.
    pub chromatic_component_cap: usize,
    /// Largest component handed to the generic isomorphism matcher.
    pub isomorphism_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 1_000_000,
            spectral_cap: 2048,
            exact_rank_cap: 512,
            chromatic_component_cap: 64,
            isomorphism_cap: 32,
        }
    }
}

impl Limits {
    /// Defaults, with `TGRAPH_MAX_ELEMENTS` applied when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(MAX_ELEMENTS_ENV) {
            limits.max_elements = raw.trim().parse().map_err(|_| TGraphError::Parse {
                input: raw.clone(),
                reason: format!("{MAX_ELEMENTS_ENV} must be a positive integer"),
            })?;
        }
        Ok(limits)
    }
}
