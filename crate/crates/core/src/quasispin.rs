//! Closed-form Liouvillian spectra and the su(2) quasi-spin classification.
//!
//! Half-integer quantum numbers are stored doubled (`two_j = 2j`), so labels
//! are exact integers. For the Kerr oscillator at integer `η` the Phase-II
//! dyads `(n, m)` with `0 ≤ n, m ≤ 2j`, `j = (η+1)/2`, carry the labels
//! `m_j = j − n`, `m_j' = j − m`.

use std::fmt;

use faer::c64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liouville::Dyad;
use crate::spectra::SpectrumPoint;

/// Quasi-spin label `(j, m_j, m_j')`, all doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuasiSpinLabel {
    pub two_j: u32,
    pub two_mj: i32,
    pub two_mj_prime: i32,
}

impl QuasiSpinLabel {
    /// Label of dyad `(n, m)`; requires `n, m ≤ 2j`.
    pub fn from_dyad(dyad: Dyad, two_j: u32) -> Result<Self> {
        check_range(dyad, two_j)?;
        Ok(Self {
            two_j,
            two_mj: two_j as i32 - 2 * dyad.n as i32,
            two_mj_prime: two_j as i32 - 2 * dyad.m as i32,
        })
    }

    pub fn dyad(self) -> Dyad {
        Dyad::new(
            ((self.two_j as i32 - self.two_mj) / 2) as usize,
            ((self.two_j as i32 - self.two_mj_prime) / 2) as usize,
        )
    }

    pub fn j(self) -> f64 {
        self.two_j as f64 / 2.0
    }

    pub fn m_j(self) -> f64 {
        self.two_mj as f64 / 2.0
    }

    pub fn m_j_prime(self) -> f64 {
        self.two_mj_prime as f64 / 2.0
    }

    /// Member of the accumulation point (`m_j' = −m_j`).
    pub fn is_accumulation(self) -> bool {
        self.two_mj_prime == -self.two_mj
    }
}

impl fmt::Display for QuasiSpinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(j={}, m_j={}, m_j'={})",
            half(self.two_j as i32),
            half(self.two_mj),
            half(self.two_mj_prime)
        )
    }
}

/// Formats a doubled half-integer (`3 → "3/2"`, `4 → "2"`).
pub fn half(doubled: i32) -> String {
    if doubled % 2 == 0 {
        format!("{}", doubled / 2)
    } else {
        format!("{doubled}/2")
    }
}

/// Branch of the `(J, M)` classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `(J, M)` with `J = (n+m)/2`, `M = (n−m)/2`, used when `n + m ≤ 2j`.
    Right,
    /// `(J̄, M̄)` with `J̄ = 2j − (n+m)/2`, `M̄ = −(n−m)/2`, used when `n + m > 2j`.
    Left,
}

/// Representation label `(J, M)` or `(J̄, M̄)`, doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct JmLabel {
    pub branch: Branch,
    pub two_j: u32,
    /// `2J` (right) or `2J̄` (left).
    pub two_rep: u32,
    /// `2M` (right) or `2M̄` (left).
    pub two_m: i32,
}

impl JmLabel {
    /// Dyad carrying this label.
    pub fn dyad(self) -> Dyad {
        let (s, diff) = match self.branch {
            Branch::Right => (self.two_rep as i32, self.two_m),
            Branch::Left => (2 * self.two_j as i32 - self.two_rep as i32, -self.two_m),
        };
        Dyad::new(((s + diff) / 2) as usize, ((s - diff) / 2) as usize)
    }

    /// Eigenvalue from the representation formulas.
    ///
    /// Right: `4i(j−J)M − κJ`. Left: `4i(j−J̄)M̄ − κ(2j−J̄)`.
    pub fn eigenvalue(self, kappa: f64) -> c64 {
        let tj = self.two_j as i32;
        let tr = self.two_rep as i32;
        let im = ((tj - tr) * self.two_m) as f64;
        let doubled_re = match self.branch {
            Branch::Right => tr,
            Branch::Left => 2 * tj - tr,
        };
        c64::new(-kappa * 0.5 * doubled_re as f64, im)
    }
}

impl fmt::Display for JmLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = match self.branch {
            Branch::Right => ("J", "M"),
            Branch::Left => ("Jbar", "Mbar"),
        };
        write!(f, "({a}={}, {b}={})", half(self.two_rep as i32), half(self.two_m))
    }
}

fn check_range(dyad: Dyad, two_j: u32) -> Result<()> {
    let max = two_j as usize;
    if dyad.n > max || dyad.m > max {
        return Err(Error::OutOfRange(format!(
            "dyad {dyad} outside 0..={max} for j = {}",
            half(two_j as i32)
        )));
    }
    Ok(())
}

/// `(J, M)` / `(J̄, M̄)` label of a Phase-II dyad.
pub fn classify_jm(dyad: Dyad, two_j: u32) -> Result<JmLabel> {
    check_range(dyad, two_j)?;
    let s = dyad.excitation() as i32;
    let diff = dyad.coherence() as i32;
    let tj = two_j as i32;
    Ok(if s <= tj {
        JmLabel {
            branch: Branch::Right,
            two_j,
            two_rep: s as u32,
            two_m: diff,
        }
    } else {
        JmLabel {
            branch: Branch::Left,
            two_j,
            two_rep: (2 * tj - s) as u32,
            two_m: -diff,
        }
    })
}

fn labeled(lambda: c64, dyad: Dyad, two_j: u32) -> SpectrumPoint {
    SpectrumPoint {
        quasi_spin: QuasiSpinLabel::from_dyad(dyad, two_j).ok(),
        jm: classify_jm(dyad, two_j).ok(),
        ..SpectrumPoint::with_dyad(lambda, dyad)
    }
}

/// Every `(J, M)` and `(J̄, M̄)` label (with `J̄ < j`) and its eigenvalue.
pub fn enumerate_jm(two_j: u32, kappa: f64) -> Vec<SpectrumPoint> {
    let mut out = Vec::with_capacity(((two_j + 1) * (two_j + 1)) as usize);
    let reps = (0..=two_j)
        .map(|r| (Branch::Right, r))
        .chain((0..two_j).map(|r| (Branch::Left, r)));
    for (branch, two_rep) in reps {
        for two_m in (-(two_rep as i32)..=two_rep as i32).step_by(2) {
            let label = JmLabel {
                branch,
                two_j,
                two_rep,
                two_m,
            };
            let dyad = label.dyad();
            out.push(SpectrumPoint {
                quasi_spin: QuasiSpinLabel::from_dyad(dyad, two_j).ok(),
                jm: Some(label),
                ..SpectrumPoint::with_dyad(label.eigenvalue(kappa), dyad)
            });
        }
    }
    out
}

/// Quasi-spin spectrum `λ = −i(m_j² − m_j'²) − κ(j − (m_j + m_j')/2)`.
pub fn oracle_su2(two_j: u32, kappa: f64) -> Vec<SpectrumPoint> {
    let d = two_j as usize + 1;
    let mut out = Vec::with_capacity(d * d);
    for n in 0..d {
        for m in 0..d {
            let dyad = Dyad::new(n, m);
            let q = QuasiSpinLabel::from_dyad(dyad, two_j).expect("in range");
            let im = -((q.two_mj * q.two_mj - q.two_mj_prime * q.two_mj_prime) as f64) / 4.0;
            // j − (m_j + m_j')/2 = (n + m)/2
            let s = (2 * two_j as i32 - q.two_mj - q.two_mj_prime) / 2;
            let lambda = c64::new(-kappa * 0.5 * s as f64, im);
            out.push(labeled(lambda, dyad, two_j));
        }
    }
    out
}

/// Location `−κj` of the accumulation point.
pub fn accumulation_point(two_j: u32, kappa: f64) -> c64 {
    c64::new(-kappa * 0.5 * two_j as f64, 0.0)
}

fn dyad_grid(n_fock: usize, f: impl Fn(usize, usize) -> c64) -> Vec<SpectrumPoint> {
    let mut out = Vec::with_capacity(n_fock * n_fock);
    for n in 0..n_fock {
        for m in 0..n_fock {
            out.push(SpectrumPoint::with_dyad(f(n, m), Dyad::new(n, m)));
        }
    }
    out
}

/// Harmonic spectrum `−iω(n−m) − (κ/2)(n+m)`.
pub fn oracle_harmonic(omega: f64, kappa: f64, n_fock: usize) -> Vec<SpectrumPoint> {
    dyad_grid(n_fock, |n, m| {
        c64::new(-0.5 * kappa * (n + m) as f64, -omega * (n as f64 - m as f64))
    })
}

/// Kerr spectrum with `E_n = −η'n + n²`.
pub fn oracle_kerr(eta_prime: f64, kappa: f64, n_fock: usize) -> Vec<SpectrumPoint> {
    let e = |n: usize| -eta_prime * n as f64 + (n * n) as f64;
    dyad_grid(n_fock, |n, m| c64::new(-0.5 * kappa * (n + m) as f64, -(e(n) - e(m))))
}

/// Kerr spectrum under two-photon loss: `−i(E_n−E_m) − (κ₂/2)[n(n−1) + m(m−1)]`.
pub fn oracle_quadratic_dissipation(eta_prime: f64, kappa2: f64, n_fock: usize) -> Vec<SpectrumPoint> {
    let e = |n: usize| -eta_prime * n as f64 + (n * n) as f64;
    let pairs = |n: usize| (n * n.saturating_sub(1)) as f64;
    dyad_grid(n_fock, |n, m| {
        c64::new(-0.5 * kappa2 * (pairs(n) + pairs(m)), -(e(n) - e(m)))
    })
}

/// Lowest `count` points of the squeezed harmonic spectrum
/// `−i√(ω² − 4ε₂²)(n₁−n₂) − (κ/2)(n₁+n₂)`, ordered by `(n₁+n₂, n₁)`.
pub fn oracle_squeezed_harmonic(omega: f64, eps2: f64, kappa: f64, count: usize) -> Result<Vec<SpectrumPoint>> {
    if eps2.abs() > 0.5 * omega.abs() {
        return Err(Error::NoClosedForm(format!(
            "eps2/|omega| = {} exceeds 1/2: outside the stable regime",
            eps2.abs() / omega.abs()
        )));
    }
    let freq = (omega * omega - 4.0 * eps2 * eps2).max(0.0).sqrt();
    let mut out = Vec::with_capacity(count);
    'outer: for s in 0.. {
        for n1 in 0..=s {
            if out.len() == count {
                break 'outer;
            }
            let n2 = s - n1;
            out.push(SpectrumPoint::with_dyad(
                c64::new(-0.5 * kappa * s as f64, -freq * (n1 as f64 - n2 as f64)),
                Dyad::new(n1, n2),
            ));
        }
    }
    Ok(out)
}

/// Squeezing amplitude `½√(ω² + κ²/4)` bounding the second unstable region.
pub fn stability_boundary(omega: f64, kappa: f64) -> f64 {
    0.5 * (omega * omega + kappa * kappa / 4.0).sqrt()
}

/// Phase-II anharmonic level `E_ν = 4ξν(1 − ν/N_eff)`.
pub fn anharmonic_energy(xi: f64, n_eff: f64, nu: usize) -> f64 {
    let nu = nu as f64;
    4.0 * xi * nu * (1.0 - nu / n_eff)
}

/// Anharmonic Phase-II spectrum; every point is doubly degenerate in parity.
pub fn oracle_anharmonic_phase2(xi: f64, n_eff: f64, kappa: f64, nu_max: usize) -> Result<Vec<SpectrumPoint>> {
    if !(n_eff > 0.0) || nu_max as f64 > n_eff {
        return Err(Error::invalid(
            "nu_max",
            format!("nu_max = {nu_max} must not exceed N_eff = {n_eff}"),
        ));
    }
    let mut out = Vec::new();
    for a in 0..=nu_max {
        for b in 0..=nu_max {
            let lambda = c64::new(
                -0.5 * kappa * (a + b) as f64,
                -(anharmonic_energy(xi, n_eff, a) - anharmonic_energy(xi, n_eff, b)),
            );
            out.push(SpectrumPoint {
                multiplicity: 2,
                ..SpectrumPoint::with_dyad(lambda, Dyad::new(a, b))
            });
        }
    }
    Ok(out)
}

/// Quasi-spin level energy, counted from the lowest state.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuasiSpinEnergy {
    pub two_mj: i32,
    /// `m_j²` (integer `j`) or `m_j² − ¼` (half-integer `j`).
    pub energy: f64,
    /// `m_j² − j²`.
    pub total: f64,
}

pub fn quasispin_energies(two_j: u32) -> Vec<QuasiSpinEnergy> {
    let tj = two_j as i32;
    (-tj..=tj)
        .step_by(2)
        .map(|two_mj| {
            let m2 = (two_mj * two_mj) as f64 / 4.0;
            let offset = if two_j % 2 == 1 { 0.25 } else { 0.0 };
            QuasiSpinEnergy {
                two_mj,
                energy: m2 - offset,
                total: m2 - (tj * tj) as f64 / 4.0,
            }
        })
        .collect()
}

/// Attaches quasi-spin and `(J, M)` labels to points whose dyad lies in the
/// Phase-II range of `two_j`.
pub fn attach_labels(points: &mut [SpectrumPoint], two_j: u32) {
    for p in points.iter_mut() {
        if let Some(d) = p.dyad {
            p.quasi_spin = QuasiSpinLabel::from_dyad(d, two_j).ok();
            p.jm = classify_jm(d, two_j).ok();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{lambdas, max_multiplicity};

    fn c(re: f64, im: f64) -> c64 {
        c64::new(re, im)
    }

    fn sorted_labeled(mut v: Vec<SpectrumPoint>) -> Vec<(Dyad, f64, f64)> {
        v.sort_by_key(|p| p.dyad);
        v.into_iter().map(|p| (p.dyad.unwrap(), p.re(), p.im())).collect()
    }

    #[test]
    fn harmonic_oracle_examples() {
        let o = oracle_harmonic(-1.0, 0.1, 10);
        assert_eq!(o.len(), 100);
        assert_eq!(o[0].lambda, c(0.0, 0.0));
        let p10 = o.iter().find(|p| p.dyad == Some(Dyad::new(1, 0))).unwrap();
        assert!((p10.lambda - c(-0.05, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn kerr_oracle_accumulation() {
        let o = oracle_kerr(4.0, 0.1, 10);
        let p40 = o.iter().find(|p| p.dyad == Some(Dyad::new(4, 0))).unwrap();
        assert!((p40.lambda - c(-0.2, 0.0)).norm() < 1e-15);
        let acc: Vec<_> = o.iter().filter(|p| (p.lambda - c(-0.2, 0.0)).norm() < 1e-12).collect();
        let dyads: Vec<_> = acc.iter().map(|p| p.dyad.unwrap()).collect();
        for (n, m) in [(4, 0), (3, 1), (2, 2), (1, 3), (0, 4)] {
            assert!(dyads.contains(&Dyad::new(n, m)));
        }
        let five: Vec<c64> = oracle_kerr(5.0, 0.1, 10).iter().map(|p| p.lambda).collect();
        let center = accumulation_point(5, 0.1);
        assert_eq!(five.iter().filter(|l| (**l - center).norm() < 1e-12).count(), 6);
    }

    #[test]
    fn quadratic_oracle_examples() {
        let o = oracle_quadratic_dissipation(4.0, 0.1, 10);
        let get = |n, m| o.iter().find(|p| p.dyad == Some(Dyad::new(n, m))).unwrap().lambda;
        assert_eq!(get(1, 0).re, 0.0);
        assert_eq!(get(1, 0).im, -(-3.0));
        assert!((get(2, 0).re + 0.1).abs() < 1e-15);
        assert_eq!(get(0, 0), c(0.0, 0.0));
    }

    #[test]
    fn su2_spinor_and_accumulation() {
        let spinor = oracle_su2(1, 0.1);
        assert_eq!(spinor.len(), 4);
        assert!(spinor.iter().all(|p| p.im() == 0.0));
        let mut re: Vec<f64> = spinor.iter().map(|p| p.re()).collect();
        re.sort_by(f64::total_cmp);
        assert_eq!(re, vec![-0.1, -0.05, -0.05, 0.0]);

        let j2 = oracle_su2(4, 0.1);
        let center = accumulation_point(4, 0.1);
        assert_eq!(center, c(-0.2, 0.0));
        assert_eq!(j2.iter().filter(|p| p.lambda == center).count(), 5);
        assert_eq!(max_multiplicity(&lambdas(&j2)), 5);
    }

    #[test]
    fn su2_matches_kerr_phase2_block() {
        for two_j in 0..7u32 {
            let su2 = sorted_labeled(oracle_su2(two_j, 0.1));
            let d = two_j as usize + 1;
            let kerr = sorted_labeled(oracle_kerr(two_j as f64, 0.1, d));
            assert_eq!(su2, kerr, "2j = {two_j}");
        }
    }

    #[test]
    fn jm_enumeration_agrees_with_su2() {
        for two_j in 0..8u32 {
            let jm = enumerate_jm(two_j, 0.1);
            assert_eq!(jm.len(), ((two_j + 1) * (two_j + 1)) as usize);
            assert_eq!(sorted_labeled(jm.clone()), sorted_labeled(oracle_su2(two_j, 0.1)));
            for p in &jm {
                assert_eq!(classify_jm(p.dyad.unwrap(), two_j).unwrap(), p.jm.unwrap());
            }
        }
    }

    #[test]
    fn classify_examples() {
        let l = classify_jm(Dyad::new(1, 0), 4).unwrap();
        assert_eq!((l.branch, l.two_rep, l.two_m), (Branch::Right, 1, 1));
        assert!((l.eigenvalue(0.1) - c(-0.05, 3.0)).norm() < 1e-15);
        let l = classify_jm(Dyad::new(4, 0), 4).unwrap();
        assert_eq!((l.branch, l.two_rep), (Branch::Right, 4));
        let l = classify_jm(Dyad::new(4, 3), 4).unwrap();
        assert_eq!((l.branch, l.two_rep, l.two_m), (Branch::Left, 1, -1));
        assert!(matches!(classify_jm(Dyad::new(5, 0), 4), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn squeezed_harmonic_examples() {
        let base = oracle_squeezed_harmonic(-1.0, 0.0, 0.1, 10).unwrap();
        let harm = oracle_harmonic(-1.0, 0.1, 4);
        for p in &base {
            let q = harm.iter().find(|q| q.dyad == p.dyad).unwrap();
            assert!((p.lambda - q.lambda).norm() < 1e-15 || (p.lambda - q.lambda.conj()).norm() < 1e-15);
        }
        let s = oracle_squeezed_harmonic(-1.0, 0.4, 0.1, 3).unwrap();
        assert!((s[2].lambda - c(-0.05, -0.6)).norm() < 1e-12 || (s[2].lambda - c(-0.05, 0.6)).norm() < 1e-12);
        let edge = oracle_squeezed_harmonic(-1.0, 0.5, 0.1, 6).unwrap();
        assert!(edge.iter().all(|p| p.im() == 0.0));
        assert!(matches!(
            oracle_squeezed_harmonic(-1.0, 0.6, 0.1, 4),
            Err(Error::NoClosedForm(_))
        ));
    }

    #[test]
    fn stability_boundary_examples() {
        assert_eq!(stability_boundary(-1.0, 0.0), 0.5);
        assert!((stability_boundary(-1.0, 0.1) - 0.5 * 1.0025f64.sqrt()).abs() < 1e-15);
        assert!((stability_boundary(0.0, 0.2) - 0.05).abs() < 1e-15);
    }

    #[test]
    fn anharmonic_examples() {
        assert!((anharmonic_energy(12.0, 20.0, 1) - 45.6).abs() < 1e-12);
        let s = oracle_anharmonic_phase2(12.0, 20.0, 0.1, 3).unwrap();
        let p = s.iter().find(|p| p.dyad == Some(Dyad::new(1, 0))).unwrap();
        assert!((p.lambda - c(-0.05, -45.6)).norm() < 1e-12);
        assert_eq!(p.multiplicity, 2);
        assert!(oracle_anharmonic_phase2(12.0, 2.0, 0.1, 3).is_err());
    }

    #[test]
    fn energies() {
        let e2: Vec<f64> = quasispin_energies(4).iter().map(|e| e.energy).collect();
        assert_eq!(e2, vec![4.0, 1.0, 0.0, 1.0, 4.0]);
        let e32: Vec<f64> = quasispin_energies(3).iter().map(|e| e.energy).collect();
        assert_eq!(e32, vec![2.0, 0.0, 0.0, 2.0]);
        assert_eq!(quasispin_energies(0)[0].energy, 0.0);
        assert_eq!(quasispin_energies(4)[2].total, -4.0);
    }
}
