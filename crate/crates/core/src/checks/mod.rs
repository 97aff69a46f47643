//! Executable replays of the structural arguments showing that
//! path-friendship graphs are determined by their Laplacian spectra.

mod degree_system;
mod radius;
mod starlike;
mod transforms;
mod windows;

pub use degree_system::{
    epsilon_closed_form, minus_one_closed_form, minus_two_closed_form, printed_pairs_agree, quadratic_target,
    repeated_maximum_pairs, run_case_analysis, solve_degree_system, CaseReport, DegreeSystem, DegreeSystemSolution,
    Hypothesis, Multiplicity, PRINTED_PAIRS_MINUS_ONE, PRINTED_PAIRS_MINUS_TWO,
};
pub use radius::{radius_below_four, small_radius_classify, RadiusClassification};
pub use starlike::{reduction_mu1_separation, separation, starlike_mu1_separation, NearTie, SeparationReport};
pub use transforms::{
    check_reduction, is_tree, pendant_edge_mu1, starlike_reduction, PendantEdgeReport, ReductionCheck,
    StarlikeReduction,
};
pub use windows::{
    centre_components, mu1_window, mu1_window_sweep, second_eigenvalue_bound, ComponentRadius, SecondEigenvalueReport,
    WindowReport,
};
