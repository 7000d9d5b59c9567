//! Exact edge coloring: decisions, chromatic index, criticality and the
//! structure of critical graphs with `χ' ≥ Δ + 2`.

pub mod chromatic;
pub mod critical;
pub mod matching;
pub mod solver;

pub use chromatic::{
    chromatic_index, chromatic_index_with, ChiMode, ChromaticIndex, ChromaticOptions,
};
pub use critical::{
    extract_critical, extract_critical_with, is_critical, is_critical_given_chi, is_critical_with,
};
pub use matching::{
    decompose_given_chi, degree_identity_check, degree_identity_check_with, degree_identity_report,
    near_perfect_matching_decomposition, near_perfect_matching_decomposition_with,
    DegreeIdentityReport, MatchingDecomposition, MinDegreeCheck,
};
pub use solver::{decide, is_k_colorable, validate_coloring, Decision, EdgeColoring};
