//! Enumeration budgets.
//!
//! Exhaustive searches refuse instances that would enumerate more candidates
//! than the budget allows, reporting `TooLarge` instead of silently
//! truncating.

/// Budgets for the exhaustive parts of the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of candidates for element-level enumerations
    /// (unit groups, grouplike searches, cocycle tables).
    pub elements: u64,
    /// Maximum size of the affine pre-solution space enumerated when
    /// searching for coring automorphisms.
    pub aut_candidates: u64,
}

impl Budget {
    pub const DEFAULT_ELEMENTS: u64 = 1 << 24;
    pub const DEFAULT_AUT: u64 = 1 << 20;

    /// Same cap for every enumeration.
    pub fn uniform(n: u64) -> Self {
        Budget {
            elements: n,
            aut_candidates: n,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            elements: Self::DEFAULT_ELEMENTS,
            aut_candidates: Self::DEFAULT_AUT,
        }
    }
}
