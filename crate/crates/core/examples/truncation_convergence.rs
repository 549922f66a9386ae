//! Choosing the Fock truncation: double `n_max` until the slowest
//! eigenvalues stop moving.

use liouspec::models::{DissipationChannel, HamiltonianParams, ModelSpec};
use liouspec::qpt::convergence_n;

fn main() -> liouspec::Result<()> {
    for (eta, xi) in [(2.0, 0.0), (2.0, 2.0), (0.0, 4.0)] {
        let model = ModelSpec::new(
            HamiltonianParams::dimensionless(eta, xi),
            vec![DissipationChannel::linear(0.1)],
        );
        let report = convergence_n(&model, 10, 1e-8, 8, 64)?;
        let history: Vec<String> = report.history.iter().map(|(n, s)| format!("{n}:{s:.1e}")).collect();
        println!(
            "eta = {eta}, xi = {xi}: n_conv = {} (shifts {})",
            report.n_conv,
            history.join(", ")
        );
    }
    Ok(())
}
