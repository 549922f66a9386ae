//! Kissing points, gap closings, gap maxima and first-order jumps.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::FockSpace;
use crate::models::{closed_spectrum, HamiltonianParams, ModelSpec, DEGENERACY_TOL};
use crate::qpt::observables::spectral_summary;
use crate::spectra::Strategy;

/// A jump must exceed this multiple of the median grid increment.
pub const DEFAULT_JUMP_FACTOR: f64 = 5.0;
/// Upper end of the `χ` window searched for the Liouvillian gap maximum.
pub const DEFAULT_GAP_WINDOW: f64 = 0.8;
/// `|Im λ₁|` below this counts as a closed Hamiltonian gap.
pub const GAP_CLOSED_TOL: f64 = 1e-7;

const BISECTION_STEPS: usize = 12;
const GOLDEN_STEPS: usize = 20;

fn check_grid(grid: &[f64], min_len: usize) -> Result<()> {
    if grid.len() < min_len {
        return Err(Error::invalid(
            "grid",
            format!("at least {min_len} grid points are required"),
        ));
    }
    if grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::invalid("grid", "grid must be strictly increasing"));
    }
    Ok(())
}

/// Vertex of the parabola through three points.
fn parabola_vertex((x0, y0): (f64, f64), (x1, y1): (f64, f64), (x2, y2): (f64, f64)) -> f64 {
    let num = (x1 - x0).powi(2) * (y1 - y2) - (x1 - x2).powi(2) * (y1 - y0);
    let den = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
    if den == 0.0 {
        x1
    } else {
        (x1 - 0.5 * num / den).clamp(x0, x2)
    }
}

/// Location of a gap minimum on a grid.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct KissingPoint {
    pub xi: f64,
    /// Gap at the closest grid point.
    pub gap: f64,
    /// The minimum sits at the left end of the grid.
    pub boundary: bool,
}

/// Minimum of `values` over `grid`: the leftmost point where `closed(v)`
/// holds, else the argmin refined by a parabola.
fn grid_minimum(grid: &[f64], values: &[f64], closed: impl Fn(f64) -> bool) -> Result<(usize, f64, bool)> {
    if let Some(i) = values.iter().position(|&v| closed(v)) {
        return Ok((i, grid[i], i == 0));
    }
    let i = (0..values.len())
        .min_by(|&a, &b| values[a].total_cmp(&values[b]))
        .ok_or(Error::EmptySpectrum)?;
    if i == 0 {
        return Ok((0, grid[0], true));
    }
    if i + 1 == values.len() {
        return Err(Error::NoInteriorMinimum);
    }
    let x = parabola_vertex(
        (grid[i - 1], values[i - 1]),
        (grid[i], values[i]),
        (grid[i + 1], values[i + 1]),
    );
    Ok((i, x, false))
}

/// Argmin of the closed-system gap `E₁ − E₀` over `ξ`.
///
/// A grid point where the two lowest levels are degenerate is returned
/// directly (the leftmost one); otherwise the discrete minimum is refined by
/// parabolic interpolation. A minimum at the left end is reported as a
/// boundary minimum; one at the right end is an error.
pub fn detect_kissing_point(template: &HamiltonianParams, xi_grid: &[f64], space: FockSpace) -> Result<KissingPoint> {
    check_grid(xi_grid, 3)?;
    let levels: Vec<Result<(f64, f64)>> = xi_grid
        .par_iter()
        .map(|&xi| {
            let l = closed_spectrum(&template.with_xi(xi), space)?;
            if l.len() < 2 {
                return Err(Error::EmptySpectrum);
            }
            Ok((l[0].energy, l[1].energy - l[0].energy))
        })
        .collect();
    let levels: Vec<(f64, f64)> = levels.into_iter().collect::<Result<_>>()?;
    let gaps: Vec<f64> = levels.iter().map(|l| l.1).collect();
    let scale = levels.iter().map(|l| l.0.abs()).fold(1.0, f64::max);
    let (i, xi, boundary) = grid_minimum(xi_grid, &gaps, |g| g < DEGENERACY_TOL * scale)?;
    Ok(KissingPoint {
        xi,
        gap: gaps[i],
        boundary,
    })
}

/// Onset of a closed Hamiltonian gap `|Im λ₁| ≈ 0` of the Liouvillian.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GapClosing {
    pub xi: f64,
    /// Smallest `|Im λ₁|` seen on the grid.
    pub min_gap: f64,
    pub boundary: bool,
    /// True when `|Im λ₁|` actually reached zero (else the argmin is reported).
    pub closed: bool,
}

/// Locates the closing of the Liouvillian Hamiltonian gap along `ξ`.
///
/// The leftmost grid point with `|Im λ₁| ≤ tol` is refined by bisection
/// against its left neighbour; if the gap never closes the parabolic argmin
/// is returned instead.
pub fn detect_gap_closing(model: &ModelSpec, xi_grid: &[f64], space: FockSpace, tol: f64) -> Result<GapClosing> {
    check_grid(xi_grid, 3)?;
    let im_gap = |xi: f64| -> Result<f64> {
        let m = ModelSpec {
            hamiltonian: model.hamiltonian.with_xi(xi),
            ..model.clone()
        };
        Ok(spectral_summary(&m, space, Strategy::Auto)?.hamiltonian_gap)
    };
    let values: Vec<Result<f64>> = xi_grid.par_iter().map(|&xi| im_gap(xi)).collect();
    let values: Vec<f64> = values.into_iter().collect::<Result<_>>()?;
    let min_gap = values.iter().copied().fold(f64::INFINITY, f64::min);
    let (i, xi, boundary) = grid_minimum(xi_grid, &values, |v| v <= tol)?;
    let closed = values[i] <= tol;
    if !closed || boundary {
        return Ok(GapClosing {
            xi,
            min_gap,
            boundary,
            closed,
        });
    }
    let (mut lo, mut hi) = (xi_grid[i - 1], xi_grid[i]);
    for _ in 0..BISECTION_STEPS {
        let mid = 0.5 * (lo + hi);
        if im_gap(mid)? <= tol {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(GapClosing {
        xi: 0.5 * (lo + hi),
        min_gap,
        boundary: false,
        closed: true,
    })
}

/// Maximum of the Liouvillian gap `Δ(χ)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GapMaximum {
    pub chi: f64,
    pub gap: f64,
}

/// Maximum of `Δ(χ)` for the scaled model `template` on `[chi_lo, min(chi_hi, window)]`.
///
/// A coarse scan with `coarse` points brackets the maximum, which is then
/// refined by golden-section search.
pub fn locate_gap_maximum(
    template: &ModelSpec,
    space: FockSpace,
    chi_lo: f64,
    chi_hi: f64,
    coarse: usize,
    window: f64,
) -> Result<GapMaximum> {
    if template.hamiltonian.scale_n.is_none() {
        return Err(Error::invalid(
            "model",
            "gap maximum search requires the scaled Hamiltonian",
        ));
    }
    let hi = chi_hi.min(window);
    if !(chi_lo < hi) || coarse < 3 {
        return Err(Error::invalid(
            "grid",
            "empty search window or fewer than 3 coarse points",
        ));
    }
    let gap = |chi: f64| -> Result<f64> {
        let m = ModelSpec {
            hamiltonian: template.hamiltonian.with_chi(chi),
            ..template.clone()
        };
        Ok(spectral_summary(&m, space, Strategy::Auto)?.gap)
    };
    let grid: Vec<f64> = (0..coarse)
        .map(|k| chi_lo + (hi - chi_lo) * k as f64 / (coarse - 1) as f64)
        .collect();
    let values: Vec<Result<f64>> = grid.par_iter().map(|&c| gap(c)).collect();
    let values: Vec<f64> = values.into_iter().collect::<Result<_>>()?;
    let i = (0..coarse)
        .max_by(|&a, &b| values[a].total_cmp(&values[b]).then(b.cmp(&a)))
        .expect("non-empty grid");
    if i == 0 || i + 1 == coarse {
        return Err(Error::NoInteriorMaximum);
    }
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    let (mut a, mut b) = (grid[i - 1], grid[i + 1]);
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    let (mut fc, mut fd) = (gap(c)?, gap(d)?);
    for _ in 0..GOLDEN_STEPS {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = gap(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = gap(d)?;
        }
    }
    let (chi, g) = [(c, fc), (d, fd), (grid[i], values[i])]
        .into_iter()
        .max_by(|x, y| x.1.total_cmp(&y.1))
        .expect("three candidates");
    Ok(GapMaximum { chi, gap: g })
}

/// Second-order critical point and the finite-size shifts `Δχ₁ = χ_max − χ_c`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriticalPoint {
    pub chi_c: f64,
    /// `χ_c` was extrapolated from the data rather than supplied.
    pub extrapolated: bool,
    pub delta_chi: Vec<(usize, f64)>,
}

/// Combines per-size gap maxima `(N, χ_max)` into a critical-point estimate.
///
/// A known `χ_c` is used as is; otherwise it is the `1/N → 0` intercept of a
/// straight-line fit of `χ_max` against `1/N`.
pub fn detect_critical_point_2nd(maxima: &[(usize, f64)], known_chi_c: Option<f64>) -> Result<CriticalPoint> {
    if maxima.is_empty() {
        return Err(Error::NoInteriorMaximum);
    }
    let (chi_c, extrapolated) = match known_chi_c {
        Some(c) => (c, false),
        None => {
            if maxima.len() < 2 {
                return Err(Error::invalid("maxima", "extrapolation needs at least two sizes"));
            }
            let pts: Vec<(f64, f64)> = maxima.iter().map(|&(n, c)| (1.0 / n as f64, c)).collect();
            let k = pts.len() as f64;
            let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
            let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
            let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
            let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
            if !(sxx > 0.0) {
                return Err(Error::invalid("maxima", "sizes must differ"));
            }
            (my - sxy / sxx * mx, true)
        }
    };
    Ok(CriticalPoint {
        chi_c,
        extrapolated,
        delta_chi: maxima.iter().map(|&(n, c)| (n, c - chi_c)).collect(),
    })
}

/// Discontinuity of the order parameter.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FirstOrderJump {
    /// Midpoint of the grid step containing the jump.
    pub chi_c: f64,
    /// Signed increment across that step.
    pub size: f64,
    /// Index of the left grid point of the step.
    pub index: usize,
}

/// Largest single-step change of `ν(χ)` if it exceeds `factor` times the
/// median step change.
pub fn detect_first_order_jump(rows: &[(f64, f64)], factor: f64) -> Result<FirstOrderJump> {
    let grid: Vec<f64> = rows.iter().map(|r| r.0).collect();
    check_grid(&grid, 3)?;
    let inc: Vec<f64> = rows.windows(2).map(|w| w[1].1 - w[0].1).collect();
    let mut mags: Vec<f64> = inc.iter().map(|d| d.abs()).collect();
    mags.sort_by(f64::total_cmp);
    let median = if mags.len() % 2 == 1 {
        mags[mags.len() / 2]
    } else {
        0.5 * (mags[mags.len() / 2 - 1] + mags[mags.len() / 2])
    };
    let index = (0..inc.len())
        .max_by(|&a, &b| inc[a].abs().total_cmp(&inc[b].abs()).then(b.cmp(&a)))
        .expect("at least two increments");
    let largest = inc[index].abs();
    let threshold = factor * median;
    if !(largest > threshold) {
        return Err(Error::NoJump { largest, threshold });
    }
    Ok(FirstOrderJump {
        chi_c: 0.5 * (rows[index].0 + rows[index + 1].0),
        size: inc[index],
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::DissipationChannel;

    #[test]
    fn parabola_vertex_is_exact() {
        let f = |x: f64| 3.0 * (x - 0.37).powi(2) + 1.0;
        let v = parabola_vertex((0.1, f(0.1)), (0.3, f(0.3)), (0.7, f(0.7)));
        assert!((v - 0.37).abs() < 1e-12);
    }

    #[test]
    fn boundary_kissing_point_at_eta_zero() {
        let grid: Vec<f64> = (0..6).map(|k| k as f64 * 0.2).collect();
        let k = detect_kissing_point(&HamiltonianParams::kerr(0.0), &grid, FockSpace::new(30)).unwrap();
        assert!(k.boundary);
        assert_eq!(k.xi, 0.0);
    }

    #[test]
    fn jump_detection() {
        let mut rows: Vec<(f64, f64)> = (0..20).map(|k| (k as f64 * 0.05, 0.01 * k as f64)).collect();
        assert!(matches!(detect_first_order_jump(&rows, 5.0), Err(Error::NoJump { .. })));
        for r in rows.iter_mut().skip(8) {
            r.1 += 0.5;
        }
        let j = detect_first_order_jump(&rows, 5.0).unwrap();
        assert_eq!(j.index, 7);
        assert!((j.chi_c - 0.375).abs() < 1e-12);
        assert!((j.size - 0.51).abs() < 1e-12);
    }

    #[test]
    fn critical_point_extrapolation() {
        let maxima: Vec<(usize, f64)> = [10usize, 20, 40].iter().map(|&n| (n, 0.5 + 2.0 / n as f64)).collect();
        let c = detect_critical_point_2nd(&maxima, None).unwrap();
        assert!(c.extrapolated);
        assert!((c.chi_c - 0.5).abs() < 1e-12);
        let c = detect_critical_point_2nd(&maxima, Some(0.5)).unwrap();
        assert!(!c.extrapolated);
        assert!((c.delta_chi[0].1 - 0.2).abs() < 1e-12);
    }

    #[test]
    fn gap_maximum_requires_scaled_model() {
        let m = ModelSpec::new(
            HamiltonianParams::dimensionless(-1.0, 0.0),
            vec![DissipationChannel::linear(0.1)],
        );
        assert!(locate_gap_maximum(&m, FockSpace::new(4), 0.0, 1.0, 5, 0.8).is_err());
    }
}
