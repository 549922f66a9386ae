//! Finite-size scaling of the closed-system order parameter at the critical
//! point of the scaled Hamiltonian, using the tridiagonal ground-state solver.

use liouspec::fock::FockSpace;
use liouspec::models::HamiltonianParams;
use liouspec::qpt::{fit_power_law, hamiltonian_order_parameter};

fn main() -> liouspec::Result<()> {
    let (eta, chi_c) = (-1.0, 0.5);
    let mut points = Vec::new();
    for n in [100usize, 200, 500, 1000, 2000, 5000, 10000] {
        let nu = hamiltonian_order_parameter(&HamiltonianParams::scaled(eta, chi_c, n), FockSpace::new(n))?;
        println!("N = {n:>5}: nu(chi_c) = {nu:.6}");
        points.push((n as f64, nu));
    }
    let fit = fit_power_law(&points)?;
    println!(
        "fit: nu = {:.4} N^{:.4} (largest log residual {:.1e})",
        fit.amplitude, fit.exponent, fit.residual
    );
    Ok(())
}
