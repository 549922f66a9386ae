//! Second-order dissipative transition of the scaled model at η = −1:
//! order parameter at χ_c and the drift of the gap maximum with N.

use liouspec::models::{DissipationChannel, HamiltonianParams, ModelSpec};
use liouspec::qpt::{detect_critical_point_2nd, fit_power_law, locate_gap_maximum, model_at_size, order_parameter};

fn main() -> liouspec::Result<()> {
    let template = ModelSpec::new(
        HamiltonianParams::scaled(-1.0, 0.0, 1),
        vec![DissipationChannel::linear(0.1)],
    );
    let chi_c = 0.5;
    let mut nu_points = Vec::new();
    let mut maxima = Vec::new();
    for n in [8usize, 12, 16, 24] {
        let (model, space) = model_at_size(&template, n);
        let nu = order_parameter(&model.hamiltonian.with_chi(chi_c), &model.channels, space)?;
        let peak = locate_gap_maximum(&model, space, 0.3, 0.8, 11, 0.8)?;
        println!(
            "N = {n:>2}: nu(chi_c) = {nu:.5}, gap maximum {:.5} at chi = {:.4}",
            peak.gap, peak.chi
        );
        nu_points.push((n as f64, nu));
        maxima.push((n, peak.chi));
    }
    let fit = fit_power_law(&nu_points)?;
    println!("nu(chi_c) ~ {:.4} N^{:.4}", fit.amplitude, fit.exponent);
    let cp = detect_critical_point_2nd(&maxima, Some(chi_c))?;
    println!("delta chi_1 = chi_max - chi_c: {:?}", cp.delta_chi);
    let free = detect_critical_point_2nd(&maxima, None)?;
    println!("chi_c extrapolated from the maxima: {:.4}", free.chi_c);
    Ok(())
}
