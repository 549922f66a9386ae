//! Relaxation time `T_X = −1/Re λ₁` over (η, ξ): long-lived cat manifolds
//! appear at even η.

use liouspec::fock::FockSpace;
use liouspec::qpt::{relaxation_surface, Observable};

fn main() -> liouspec::Result<()> {
    let etas = [2.0, 3.0, 4.0, 5.0];
    let xis = [0.0, 1.0, 2.0, 3.0];
    let surface = relaxation_surface(&etas, &xis, 0.1, 0.0, FockSpace::with_dim(30)?)?;
    println!("T_X (rows: eta, columns: xi = {xis:?})");
    for &eta in &etas {
        let row: Vec<String> = xis
            .iter()
            .map(|&xi| {
                surface
                    .rows
                    .iter()
                    .find(|r| r.axis_value == eta && r.secondary == Some(xi))
                    .and_then(|r| r.values[0])
                    .map_or("failed".into(), |t| format!("{t:10.3e}"))
            })
            .collect();
        println!("  eta = {eta}: {}", row.join(" "));
    }
    assert_eq!(surface.observables, vec![Observable::TX]);
    Ok(())
}
