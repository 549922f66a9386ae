//! Kerr oscillator at integer η: quasi-spin labels of the Phase-II dyads and
//! the (2j+1)-fold accumulation point at `Re λ = −κj`.

use liouspec::fock::FockSpace;
use liouspec::liouville::{assemble, SectorRule};
use liouspec::models::{closed_spectrum, DissipationChannel, HamiltonianParams};
use liouspec::quasispin::{accumulation_point, attach_labels, oracle_kerr, quasispin_energies};
use liouspec::spectra::{clusters, lambdas, sort_spectrum, spectrum, transfer_labels, Strategy};

fn main() -> liouspec::Result<()> {
    let (eta, kappa) = (3.0, 0.1);
    let params = HamiltonianParams::kerr(eta);
    let space = FockSpace::with_dim(8)?;
    let two_j = (eta + 1.0) as u32;

    println!("closed-system levels (eta = {eta}):");
    for level in closed_spectrum(&params, space)? {
        println!(
            "  n={:?} E={:+.1} phase {:?}",
            level.fock.unwrap(),
            level.energy,
            level.phase.unwrap()
        );
    }
    println!(
        "quasi-spin energies m_j^2 - j^2: {:?}",
        quasispin_energies(two_j).iter().map(|e| e.total).collect::<Vec<_>>()
    );

    let l = assemble(&params, &[DissipationChannel::linear(kappa)], space)?;
    let numeric = sort_spectrum(spectrum(&l, Strategy::Blocks(SectorRule::U1Coherence))?);
    let mut labelled = transfer_labels(&oracle_kerr(eta + 1.0, kappa, space.dim()), &lambdas(&numeric))?;
    attach_labels(&mut labelled, two_j);

    println!("\nPhase-II eigenvalues with (m_j, m_j') and (J, M) labels:");
    for p in labelled.iter().filter(|p| p.quasi_spin.is_some()) {
        println!(
            "  {:+.3} {:+.3}i  {}  {}",
            p.re(),
            p.im(),
            p.quasi_spin.unwrap(),
            p.jm.unwrap()
        );
    }

    let target = accumulation_point(two_j, kappa);
    let acc = clusters(&lambdas(&numeric))
        .into_iter()
        .find(|c| (c.center - target).norm() < 1e-9)
        .expect("accumulation point present");
    println!(
        "\naccumulation point {:+.3}: multiplicity {} (2j+1 = {})",
        acc.center.re,
        acc.multiplicity(),
        two_j + 1
    );
    Ok(())
}
