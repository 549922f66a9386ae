//! Dissipative phase transitions: observables over parameter grids,
//! critical-point detection and finite-size scaling.

pub mod detect;
pub mod observables;
pub mod scaling;
pub mod sweep;

pub use detect::{
    detect_critical_point_2nd, detect_first_order_jump, detect_gap_closing, detect_kissing_point, locate_gap_maximum,
    CriticalPoint, FirstOrderJump, GapClosing, GapMaximum, KissingPoint, DEFAULT_GAP_WINDOW, DEFAULT_JUMP_FACTOR,
    GAP_CLOSED_TOL,
};
pub use observables::{
    evaluate, hamiltonian_order_parameter, order_parameter, spectral_summary, Observable, SpectralSummary,
};
pub use scaling::{convergence_n, finite_diff_derivative, fit_power_law, ConvergenceReport, ScalingFit};
pub use sweep::{model_at_size, relaxation_surface, sweep, Axis, SweepConfig, SweepResult, SweepRow};
