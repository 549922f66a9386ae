//! Finite temperature: the harmonic spectrum is unchanged, the Kerr
//! accumulation point splits, and relaxation speeds up.

use liouspec::fock::FockSpace;
use liouspec::liouville::{assemble, SectorRule};
use liouspec::models::{DissipationChannel, HamiltonianParams, ModelSpec};
use liouspec::qpt::{evaluate, Observable};
use liouspec::quasispin::oracle_harmonic;
use liouspec::spectra::{lambdas, match_into, sort_spectrum, spectrum, Strategy};

fn main() -> liouspec::Result<()> {
    let space = FockSpace::with_dim(60)?;
    let mut oracle = oracle_harmonic(-1.0, 0.1, space.dim());
    oracle.sort_by(|a, b| a.re().abs().total_cmp(&b.re().abs()));
    for n_th in [0.0, 0.2, 0.5] {
        let l = assemble(
            &HamiltonianParams::harmonic(-1.0),
            &[DissipationChannel::thermal(0.1, n_th)],
            space,
        )?;
        let sorted = sort_spectrum(spectrum(&l, Strategy::Blocks(SectorRule::U1Coherence))?);
        let d = match_into(&lambdas(&sorted[..20]), &lambdas(&oracle[..28]))?;
        println!("harmonic, n_th = {n_th}: 20 slowest vs zero-temperature closed form {d:.1e}");
    }

    let small = FockSpace::with_dim(10)?;
    for n_th in [0.0, 0.05, 0.2] {
        let l = assemble(
            &HamiltonianParams::kerr(3.0),
            &[DissipationChannel::thermal(0.1, n_th)],
            small,
        )?;
        let near: Vec<String> = lambdas(&spectrum(&l, Strategy::Auto)?)
            .into_iter()
            .filter(|v| (v.re + 0.2).abs() < 0.05 && v.im.abs() < 0.05)
            .map(|v| format!("{:+.4}{:+.4}i", v.re, v.im))
            .collect();
        println!(
            "Kerr eta = 3, n_th = {n_th}: eigenvalues near the accumulation point: {}",
            near.join(" ")
        );
    }

    for n_th in [0.0, 0.1, 0.2, 0.5] {
        let model = ModelSpec::new(
            HamiltonianParams::dimensionless(0.0, 2.0),
            vec![DissipationChannel::thermal(0.1, n_th)],
        );
        let t = evaluate(&model, FockSpace::with_dim(30)?, &[Observable::TX], Strategy::Auto).remove(0)?;
        println!("eta = 0, xi = 2, n_th = {n_th}: T_X = {t:.4e}");
    }
    Ok(())
}
