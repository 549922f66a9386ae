//! Kissing points: closing of the Hamiltonian gap `|Im λ₁|` of the
//! Liouvillian as squeezing grows at η = −1. For more negative η the
//! tunnelling splitting becomes exponentially small well before the
//! degeneracy, so a numerical threshold cannot resolve it.

use liouspec::fock::FockSpace;
use liouspec::models::{closed_spectrum, kissing_point, DissipationChannel, HamiltonianParams, ModelSpec};
use liouspec::qpt::{detect_gap_closing, GAP_CLOSED_TOL};

fn main() -> liouspec::Result<()> {
    let space = FockSpace::with_dim(30)?;
    let grid: Vec<f64> = (0..=20).map(|k| 0.2 * k as f64).collect();
    let eta = -1.0;
    let model = ModelSpec::new(
        HamiltonianParams::dimensionless(eta, 0.0),
        vec![DissipationChannel::linear(0.1)],
    );
    let closing = detect_gap_closing(&model, &grid, space, GAP_CLOSED_TOL)?;
    println!(
        "eta = {eta}: |Im l1| closes at xi = {:.3} (closed form {:.1}, closed: {})",
        closing.xi,
        kissing_point(eta)?,
        closing.closed
    );
    let e = |xi: f64| -> liouspec::Result<f64> {
        let l = closed_spectrum(&HamiltonianParams::dimensionless(eta, xi), space)?;
        Ok(l[1].energy - l[0].energy)
    };
    println!(
        "  closed-system E1 - E0 at xi = 0, xi_k, 2 xi_k: {:.3e}, {:.3e}, {:.3e}",
        e(0.0)?,
        e(-2.0 * eta)?,
        e(-4.0 * eta)?
    );
    Ok(())
}
