//! Resource caps shared across the pipeline.
//!
//! Caps are explicit configuration with dedicated errors, never silent
//! truncation. The CLI can override them from the environment.

/// Resource limits for the search- and construction-heavy operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Largest group order for full automorphism enumeration.
    pub automorphism_order: usize,
    /// Largest group order for isomorphism search.
    pub isomorphism_order: usize,
    /// Largest number of cosets Todd-Coxeter may define.
    pub coset_limit: usize,
    /// Largest total simplex count for constructed complexes.
    pub simplex_limit: usize,
    /// Largest cohomology degree computed by default.
    pub degree_limit: usize,
    /// Largest dense cochain table (tuples times module rank).
    pub cochain_entries: usize,
    /// Largest number of H^2 classes materialized by enumeration.
    pub class_limit: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            automorphism_order: 64,
            isomorphism_order: 512,
            coset_limit: 1_000_000,
            simplex_limit: 1_000_000,
            degree_limit: 3,
            cochain_entries: 1_000_000,
            class_limit: 4096,
        }
    }
}

impl Caps {
    /// Caps with every limit raised; test and oracle use.
    pub fn unbounded() -> Self {
        Caps {
            automorphism_order: usize::MAX,
            isomorphism_order: usize::MAX,
            coset_limit: usize::MAX,
            simplex_limit: usize::MAX,
            degree_limit: usize::MAX,
            cochain_entries: usize::MAX,
            class_limit: usize::MAX,
        }
    }
}
