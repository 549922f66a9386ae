//! Power-law fits, finite differences and truncation convergence.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liouville::assemble;
use crate::models::ModelSpec;
use crate::qpt::sweep::model_at_size;
use crate::spectra::{lambdas, match_into, sort_spectrum, spectrum, Strategy};

/// Power law `y = A·N^B`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingFit {
    pub amplitude: f64,
    pub exponent: f64,
    /// Largest absolute deviation in `ln y`.
    pub residual: f64,
}

impl ScalingFit {
    pub fn eval(&self, n: f64) -> f64 {
        self.amplitude * n.powf(self.exponent)
    }
}

/// Least-squares fit of `ln y = ln A + B ln N`.
pub fn fit_power_law(points: &[(f64, f64)]) -> Result<ScalingFit> {
    if points.len() < 3 {
        return Err(Error::invalid("points", "a power-law fit needs at least 3 points"));
    }
    if let Some(&(x, y)) = points.iter().find(|&&(x, y)| !(x > 0.0 && y > 0.0)) {
        return Err(Error::invalid("points", format!("non-positive data point ({x}, {y})")));
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if !(sxx > 0.0) {
        return Err(Error::invalid("points", "abscissae must not all coincide"));
    }
    let exponent = sxy / sxx;
    let intercept = my - exponent * mx;
    let residual = logs
        .iter()
        .map(|&(lx, ly)| (ly - intercept - exponent * lx).abs())
        .fold(0.0, f64::max);
    Ok(ScalingFit {
        amplitude: intercept.exp(),
        exponent,
        residual,
    })
}

/// Derivative of tabulated `(x, y)` data on a possibly non-uniform grid.
///
/// Interior points use the three-point central formula, the ends the
/// three-point one-sided formulas; all are exact for quadratics.
pub fn finite_diff_derivative(rows: &[(f64, f64)]) -> Result<Vec<(f64, f64)>> {
    let n = rows.len();
    if n < 3 {
        return Err(Error::invalid("rows", "at least 3 grid points are required"));
    }
    if rows.windows(2).any(|w| !(w[0].0 < w[1].0)) {
        return Err(Error::invalid("rows", "grid must be strictly increasing"));
    }
    let x = |i: usize| rows[i].0;
    let y = |i: usize| rows[i].1;
    let mut out = Vec::with_capacity(n);
    {
        let (h1, h2) = (x(1) - x(0), x(2) - x(1));
        let d =
            -(2.0 * h1 + h2) / (h1 * (h1 + h2)) * y(0) + (h1 + h2) / (h1 * h2) * y(1) - h1 / (h2 * (h1 + h2)) * y(2);
        out.push((x(0), d));
    }
    for i in 1..n - 1 {
        let (h1, h2) = (x(i) - x(i - 1), x(i + 1) - x(i));
        let d = -h2 / (h1 * (h1 + h2)) * y(i - 1) + (h2 - h1) / (h1 * h2) * y(i) + h1 / (h2 * (h1 + h2)) * y(i + 1);
        out.push((x(i), d));
    }
    {
        let (h1, h2) = (x(n - 2) - x(n - 3), x(n - 1) - x(n - 2));
        let d = h2 / (h1 * (h1 + h2)) * y(n - 3) - (h1 + h2) / (h1 * h2) * y(n - 2)
            + (h1 + 2.0 * h2) / (h2 * (h1 + h2)) * y(n - 1);
        out.push((x(n - 1), d));
    }
    Ok(out)
}

/// Outcome of a truncation-convergence search.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    /// Smallest tested truncation `n_max` that is converged.
    pub n_conv: usize,
    /// `(n_max, shift when doubling n_max)` for every tested size.
    pub history: Vec<(usize, f64)>,
}

/// Doubles `n_max` from `start` until the `k` lowest-`|Re λ|` eigenvalues
/// move by less than `tol` when the truncation is doubled again.
///
/// The shift is the bottleneck distance from the `k` lowest points at `n`
/// into the `2k` lowest points at `2n`, which tolerates reordering at the
/// edge of the window.
pub fn convergence_n(model: &ModelSpec, k: usize, tol: f64, start: usize, budget: usize) -> Result<ConvergenceReport> {
    model.validate()?;
    if k == 0 {
        return Err(Error::invalid("k", "at least one eigenvalue must be tracked"));
    }
    let low = |n: usize| -> Result<Vec<faer::c64>> {
        let (m, space) = model_at_size(model, n);
        let l = assemble(&m.hamiltonian, &m.channels, space)?;
        Ok(lambdas(&sort_spectrum(spectrum(&l, Strategy::Auto)?)))
    };
    let mut n = start.max(1);
    let mut current = low(n)?;
    let mut history = Vec::new();
    while 2 * n <= budget {
        let next = low(2 * n)?;
        let kk = k.min(current.len());
        let pool = &next[..(2 * kk).min(next.len())];
        let shift = match_into(&current[..kk], pool)?;
        history.push((n, shift));
        if shift < tol {
            return Ok(ConvergenceReport { n_conv: n, history });
        }
        n *= 2;
        current = next;
    }
    Err(Error::BudgetExceeded { n_max: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{DissipationChannel, HamiltonianParams};

    #[test]
    fn exact_power_law() {
        let pts: Vec<(f64, f64)> = [10.0, 20.0, 40.0, 80.0]
            .iter()
            .map(|&n| (n, 0.2065 * f64::powf(n, -0.6365)))
            .collect();
        let fit = fit_power_law(&pts).unwrap();
        assert!((fit.amplitude / 0.2065 - 1.0).abs() < 1e-10);
        assert!((fit.exponent + 0.6365).abs() < 1e-10);
        assert!(fit.residual < 1e-12);
        let flat = fit_power_law(&[(1.0, 3.0), (2.0, 3.0), (5.0, 3.0)]).unwrap();
        assert!(flat.exponent.abs() < 1e-14);
        assert!(fit_power_law(&[(1.0, 1.0), (2.0, 0.0), (3.0, 1.0)]).is_err());
        assert!(fit_power_law(&[(1.0, 1.0), (2.0, 1.0)]).is_err());
    }

    #[test]
    fn derivative_is_exact_for_quadratics() {
        let xs = [0.0, 0.1, 0.25, 0.3, 0.5, 0.55, 0.9];
        let lin: Vec<(f64, f64)> = xs.iter().map(|&x| (x, 3.0 * x - 1.0)).collect();
        for (_, d) in finite_diff_derivative(&lin).unwrap() {
            assert!((d - 3.0).abs() < 1e-12);
        }
        let quad: Vec<(f64, f64)> = xs.iter().map(|&x| (x, 2.0 * x * x - x + 0.5)).collect();
        for (x, d) in finite_diff_derivative(&quad).unwrap() {
            assert!((d - (4.0 * x - 1.0)).abs() < 1e-10, "x={x}");
        }
        assert!(finite_diff_derivative(&lin[..2]).is_err());
    }

    #[test]
    fn unsqueezed_kerr_converges_immediately() {
        let model = ModelSpec::new(HamiltonianParams::kerr(2.0), vec![DissipationChannel::linear(0.1)]);
        let r = convergence_n(&model, 6, 1e-9, 8, 64).unwrap();
        assert_eq!(r.n_conv, 8);
        assert!(matches!(
            convergence_n(&model, 6, 1e-9, 8, 8),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
