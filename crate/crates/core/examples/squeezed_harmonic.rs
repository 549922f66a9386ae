//! Squeezed harmonic oscillator: renormalized frequency `√(ω² − 4ε₂²)` in the
//! stable regime, and loss of stability beyond `|ε₂| = ½√(ω² + κ²/4)`.

use liouspec::fock::FockSpace;
use liouspec::liouville::{assemble, SectorRule};
use liouspec::models::{DissipationChannel, HamiltonianParams};
use liouspec::quasispin::{oracle_squeezed_harmonic, stability_boundary};
use liouspec::spectra::{lambdas, match_into, sort_spectrum, spectrum, Strategy};

fn main() -> liouspec::Result<()> {
    let (omega, kappa) = (-1.0, 0.1);
    let space = FockSpace::with_dim(40)?;
    println!("instability threshold |eps2| = {:.4}", stability_boundary(omega, kappa));
    for eps2 in [0.0, 0.1, 0.2, 0.3, 0.4] {
        let params = HamiltonianParams::squeezed_harmonic(omega, eps2);
        let l = assemble(&params, &[DissipationChannel::linear(kappa)], space)?;
        let sorted = sort_spectrum(spectrum(&l, Strategy::Blocks(SectorRule::Z2Parity))?);
        let low = lambdas(&sorted[..10]);
        let oracle = lambdas(&oracle_squeezed_harmonic(omega, eps2, kappa, 15)?);
        println!(
            "eps2 = {eps2:.1}: |Im l1| = {:.5} (closed form {:.5}), 10 slowest vs closed form {:.1e}",
            sorted[1].im().abs(),
            (omega * omega - 4.0 * eps2 * eps2).sqrt(),
            match_into(&low, &oracle)?
        );
    }
    Ok(())
}
