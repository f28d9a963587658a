//! Graph modulus toolkit.
//!
//! Computes the p-modulus of families of graph objects (stars, edge covers,
//! fractional edge covers), the extremal density, and the optimal probability
//! mass function, using an active-set solver with exact combinatorial
//! shortest-object oracles and blocking duality.

pub mod duality;
pub mod error;
pub mod families;
pub mod graph;
pub mod matching;
pub mod oracles;
pub mod probability;
pub mod solver;

pub use duality::{
    conjugate_exponent, dual_weights, fec_modulus_via_stars, infinity_modulus_from_one,
    verify_reciprocal, DualResult, ReciprocalReport,
};
pub use error::{Error, Result};
pub use families::{
    basic_fec_family, edge_cover_family, enumerate_basic_fecs, enumerate_minimal_edge_covers,
    for_each_basic_fec, is_fractional_edge_cover, star_family, BasicFec, EdgeCoverFamily,
    ExplicitFamily, Family, FecComponent, RowLabel, StarFamily, UsageRow,
};
pub use graph::{parse_standard_spec, EdgeSet, EdgeVector, Graph, StandardKind};
pub use matching::{brute_force_mwpm, min_weight_edge_cover, min_weight_perfect_matching, Matching};
pub use oracles::{
    barbell_bridge_usage, closed_form_modulus, ec_fec_ratio_complete, oracle_table, ObjectFamily,
    OracleEntry,
};
pub use probability::{
    expected_edge_usage, expected_overlap, optimal_expected_usage, pmf_from_result,
    uniform_star_lower_bound, Pmf,
};
pub use solver::{
    basic_algorithm, energy, rho_length, solve_subproblem, Density, ModulusResult, DEFAULT_TOL,
};
