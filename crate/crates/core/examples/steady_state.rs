//! Steady state of the squeezed Kerr oscillator: a parity-symmetric mixture
//! of the two cat-like wells.

use liouspec::fock::{number, FockSpace};
use liouspec::liouville::assemble;
use liouspec::models::{DissipationChannel, HamiltonianParams};
use liouspec::spectra::steady_state;

fn main() -> liouspec::Result<()> {
    let space = FockSpace::with_dim(30)?;
    for xi in [0.0, 1.0, 2.0, 4.0] {
        let params = HamiltonianParams::dimensionless(2.0, xi);
        let l = assemble(&params, &[DissipationChannel::thermal(0.1, 0.05)], space)?;
        let rho = steady_state(&l)?;
        rho.validate()?;
        let pops: Vec<String> = (0..8).map(|n| format!("{:.3}", rho.matrix().get(n, n).re)).collect();
        let purity = (rho.matrix() * rho.matrix()).trace().re;
        println!(
            "xi = {xi}: <n> = {:.4}, <n> via operator = {:.4}, purity {:.4}, P(0..7) = [{}]",
            rho.mean_number(),
            rho.expectation(&number(space)).re,
            purity,
            pops.join(", ")
        );
    }
    Ok(())
}
