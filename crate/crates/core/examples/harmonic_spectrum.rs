//! Damped harmonic oscillator: numeric Liouvillian spectrum against the
//! closed form `λ = −iω(n−m) − (κ/2)(n+m)`.

use liouspec::fock::FockSpace;
use liouspec::liouville::assemble;
use liouspec::models::{DissipationChannel, HamiltonianParams};
use liouspec::quasispin::oracle_harmonic;
use liouspec::spectra::{gaps, lambdas, match_spectra, sort_spectrum, spectrum, transfer_labels, Strategy};

fn main() -> liouspec::Result<()> {
    let (omega, kappa) = (-1.0, 0.1);
    let space = FockSpace::with_dim(10)?;
    let l = assemble(
        &HamiltonianParams::harmonic(omega),
        &[DissipationChannel::linear(kappa)],
        space,
    )?;
    println!("superoperator: {} x {}, {} non-zeros", l.dim(), l.dim(), l.nnz());

    let numeric = sort_spectrum(spectrum(&l, Strategy::Auto)?);
    let oracle = oracle_harmonic(omega, kappa, space.dim());
    println!(
        "max matched distance to closed form: {:.2e}",
        match_spectra(&lambdas(&numeric), &lambdas(&oracle))?
    );

    let labelled = transfer_labels(&oracle, &lambdas(&numeric))?;
    println!("\nslowest ten eigenvalues:");
    for p in labelled.iter().take(10) {
        println!("  {:>7} {:+.4} {:+.4}i", p.dyad.unwrap().to_string(), p.re(), p.im());
    }
    let g = gaps(&numeric)?;
    println!(
        "\nLiouvillian gap {:.4}, Hamiltonian gap {:.4}",
        g.liouvillian, g.hamiltonian
    );
    Ok(())
}
