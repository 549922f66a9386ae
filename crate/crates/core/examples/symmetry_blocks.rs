//! Weak symmetries of the superoperator: U(1) coherence blocks without
//! squeezing, Z2 parity blocks with it, and a spectrum computed per block.

use liouspec::fock::FockSpace;
use liouspec::liouville::{applicable_rule, assemble, block_decompose};
use liouspec::models::{DissipationChannel, HamiltonianParams};
use liouspec::spectra::{eigendecompose, lambdas, match_spectra, spectrum, Strategy};

fn main() -> liouspec::Result<()> {
    let space = FockSpace::with_dim(6)?;
    for params in [HamiltonianParams::kerr(2.0), HamiltonianParams::dimensionless(2.0, 1.5)] {
        let l = assemble(&params, &[DissipationChannel::thermal(0.1, 0.1)], space)?;
        let rule = applicable_rule(&l).expect("both models have a weak symmetry");
        let blocks = block_decompose(&l, rule)?;
        let labels: Vec<i64> = blocks.blocks.iter().map(|b| b.label).collect();
        println!("{rule}: labels {labels:?}, sizes {:?}", blocks.sizes());
        let d = match_spectra(
            &lambdas(&spectrum(&l, Strategy::Blocks(rule))?),
            &lambdas(&eigendecompose(&l)?),
        )?;
        println!("  block spectrum vs full decomposition: {d:.1e}");
    }
    Ok(())
}
