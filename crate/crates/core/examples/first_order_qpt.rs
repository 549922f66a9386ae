//! First-order dissipative transition of the scaled model at η = +1: a jump
//! of the order parameter that moves to larger χ as N grows.

use liouspec::models::{DissipationChannel, HamiltonianParams, ModelSpec};
use liouspec::qpt::{
    detect_first_order_jump, finite_diff_derivative, sweep, Axis, Observable, SweepConfig, DEFAULT_JUMP_FACTOR,
};

fn main() -> liouspec::Result<()> {
    let config = SweepConfig {
        model: ModelSpec::new(
            HamiltonianParams::scaled(1.0, 0.0, 1),
            vec![DissipationChannel::linear(0.1)],
        ),
        axis: Axis::Chi,
        grid: (0..=50).map(|k| 0.01 * k as f64).collect(),
        n_list: vec![20, 40],
        observables: vec![Observable::Nu],
    };
    let result = sweep(&config)?;
    for &n in &config.n_list {
        let series = result.series(n, Observable::Nu);
        let jump = detect_first_order_jump(&series, DEFAULT_JUMP_FACTOR)?;
        let steepest = finite_diff_derivative(&series)?
            .into_iter()
            .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
            .expect("non-empty");
        println!(
            "N = {n}: jump of {:+.4} at chi_c = {:.3}; steepest d nu/d chi = {:.2} at chi = {:.2}",
            jump.size, jump.chi_c, steepest.1, steepest.0
        );
    }
    Ok(())
}
