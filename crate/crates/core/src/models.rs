//! Oscillator Hamiltonians, dissipation channels and closed-system spectra.
//!
//! Every Hamiltonian in the model zoo has the form
//!
//! ```text
//! H = w·n̂ + K·n̂(n̂−1)/s − Σ_k ε_k (a†^k + a^k)
//! ```
//!
//! where `w` is the linear coefficient, `s` is either 1 or the scale `N` of
//! the scaled Hamiltonian, and the squeeze terms enter with a minus sign. The
//! constructors translate the usual parametrizations (harmonic `ω n̂`, Kerr
//! `−ω n̂ + K n̂(n̂−1)`, dimensionless `η`, `ξ`, scaled `χ`) into this form.

use faer::{c64, Mat, Side};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{pairing, FockSpace, OperatorMatrix};

/// Relative tolerance used to decide whether two levels are degenerate.
pub const DEGENERACY_TOL: f64 = 1e-8;

/// Returns true when `a` and `b` are degenerate under [`DEGENERACY_TOL`].
pub fn degenerate(a: f64, b: f64) -> bool {
    (a - b).abs() < DEGENERACY_TOL * a.abs().max(1.0)
}

/// One squeezing (pairing) drive, contributing `−amplitude·(a†^order + a^order)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SqueezeTerm {
    pub order: u32,
    pub amplitude: f64,
}

/// Parameters of `H = w·n̂ + K·n̂(n̂−1)/s − Σ ε_k (a†^k + a^k)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HamiltonianParams {
    /// Coefficient `w` of `n̂`.
    pub linear: f64,
    /// Kerr coefficient `K`.
    pub kerr: f64,
    /// Squeezing drives.
    pub squeeze: Vec<SqueezeTerm>,
    /// When set, the Kerr term is divided by this `N`.
    pub scale_n: Option<usize>,
}

impl HamiltonianParams {
    /// Harmonic oscillator `H = ω n̂`, so `E_n = ω n`.
    pub fn harmonic(omega: f64) -> Self {
        Self {
            linear: omega,
            kerr: 0.0,
            squeeze: Vec::new(),
            scale_n: None,
        }
    }

    /// Squeezed harmonic oscillator `H = −ω n̂ − ε₂ (a†² + a²)`.
    pub fn squeezed_harmonic(omega: f64, eps2: f64) -> Self {
        Self {
            linear: -omega,
            kerr: 0.0,
            squeeze: vec![SqueezeTerm {
                order: 2,
                amplitude: eps2,
            }],
            scale_n: None,
        }
    }

    /// Squeezed Kerr oscillator `H = −ω n̂ + K n̂(n̂−1) − ε₂ (a†² + a²)`.
    pub fn squeezed_kerr(omega: f64, kerr: f64, eps2: f64) -> Self {
        let squeeze = if eps2 == 0.0 {
            Vec::new()
        } else {
            vec![SqueezeTerm {
                order: 2,
                amplitude: eps2,
            }]
        };
        Self {
            linear: -omega,
            kerr,
            squeeze,
            scale_n: None,
        }
    }

    /// Dimensionless Kerr oscillator `H/K = −η n̂ + n̂(n̂−1)`.
    pub fn kerr(eta: f64) -> Self {
        Self::squeezed_kerr(eta, 1.0, 0.0)
    }

    /// Dimensionless squeezed Kerr oscillator `−η n̂ + n̂(n̂−1) − ξ P̂₂`.
    pub fn dimensionless(eta: f64, xi: f64) -> Self {
        Self::squeezed_kerr(eta, 1.0, xi)
    }

    /// Scaled Hamiltonian `−η n̂ + n̂(n̂−1)/N − χ P̂₂`.
    pub fn scaled(eta: f64, chi: f64, n: usize) -> Self {
        Self {
            scale_n: Some(n),
            ..Self::dimensionless(eta, chi)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.linear.is_finite() || !self.kerr.is_finite() {
            return Err(Error::invalid("hamiltonian", "coefficients must be finite"));
        }
        if self.scale_n == Some(0) {
            return Err(Error::invalid("scale_n", "scale N must be at least 1"));
        }
        for term in &self.squeeze {
            if term.order == 0 {
                return Err(Error::invalid("squeeze.order", "order must be at least 1"));
            }
            if !term.amplitude.is_finite() {
                return Err(Error::invalid("squeeze.amplitude", "amplitude must be finite"));
            }
        }
        Ok(())
    }

    /// Kerr-term divisor (`N` for the scaled Hamiltonian, else 1).
    pub fn kerr_divisor(&self) -> f64 {
        self.scale_n.map_or(1.0, |n| n as f64)
    }

    /// True if any squeeze drive has non-zero amplitude.
    pub fn is_squeezed(&self) -> bool {
        self.squeeze.iter().any(|t| t.amplitude != 0.0)
    }

    /// True when every non-vanishing squeeze order is even.
    pub fn conserves_parity(&self) -> bool {
        self.squeeze
            .iter()
            .filter(|t| t.amplitude != 0.0)
            .all(|t| t.order % 2 == 0)
    }

    /// Modulus `g` such that the Hamiltonian only couples `n ≡ n' (mod g)`.
    ///
    /// Zero means the Hamiltonian is diagonal in the Fock basis.
    pub fn sector_modulus(&self) -> usize {
        self.squeeze
            .iter()
            .filter(|t| t.amplitude != 0.0)
            .fold(0usize, |g, t| gcd(g, t.order as usize))
    }

    /// `η = ω/K` for the Kerr family; `None` when `K = 0`.
    pub fn eta(&self) -> Option<f64> {
        (self.kerr != 0.0).then(|| -self.linear / self.kerr)
    }

    /// `η' = η + 1`.
    pub fn eta_prime(&self) -> Option<f64> {
        self.eta().map(|e| e + 1.0)
    }

    /// Amplitude of the order-2 drive (zero when absent).
    pub fn eps2(&self) -> f64 {
        self.squeeze.iter().filter(|t| t.order == 2).map(|t| t.amplitude).sum()
    }

    /// `ξ = ε₂/K`, un-scaled even for the scaled Hamiltonian.
    pub fn xi(&self) -> Option<f64> {
        (self.kerr != 0.0).then(|| self.eps2() / self.kerr * self.kerr_divisor())
    }

    /// `χ = ξ/N` for the scaled Hamiltonian.
    pub fn chi(&self) -> Option<f64> {
        self.scale_n.and(self.xi()).map(|xi| xi / self.kerr_divisor())
    }

    /// Copy with the order-2 drive set so that [`Self::xi`] returns `xi`.
    ///
    /// Without a Kerr term `xi` is taken as the bare amplitude `ε₂`.
    pub fn with_xi(&self, xi: f64) -> Self {
        if self.kerr == 0.0 {
            return self.with_eps2(xi);
        }
        self.with_eps2(xi * self.kerr / self.kerr_divisor())
    }

    /// Copy with the order-2 drive set so that [`Self::chi`] returns `chi`.
    pub fn with_chi(&self, chi: f64) -> Self {
        self.with_eps2(chi * self.kerr)
    }

    /// Copy with the order-2 drive amplitude replaced.
    pub fn with_eps2(&self, eps2: f64) -> Self {
        let mut out = self.clone();
        out.squeeze.retain(|t| t.order != 2);
        if eps2 != 0.0 {
            out.squeeze.push(SqueezeTerm {
                order: 2,
                amplitude: eps2,
            });
        }
        out
    }

    /// Copy with `η` replaced (Kerr family), i.e. `w = −η·K`.
    pub fn with_eta(&self, eta: f64) -> Self {
        Self {
            linear: -eta * self.kerr,
            ..self.clone()
        }
    }

    /// Diagonal energy `w·n + K·n(n−1)/s`.
    pub fn diagonal_energy(&self, n: usize) -> f64 {
        let nf = n as f64;
        self.linear * nf + self.kerr * nf * (nf - 1.0) / self.kerr_divisor()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Lindblad channel `Γ = a^order` at rate `kappa`, optionally thermal.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DissipationChannel {
    pub order: u32,
    pub kappa: f64,
    #[serde(default)]
    pub n_th: f64,
}

impl DissipationChannel {
    /// Zero-temperature linear loss `κ D[a]`.
    pub fn linear(kappa: f64) -> Self {
        Self {
            order: 1,
            kappa,
            n_th: 0.0,
        }
    }

    /// Linear loss at thermal population `n_th`.
    pub fn thermal(kappa: f64, n_th: f64) -> Self {
        Self { order: 1, kappa, n_th }
    }

    /// Two-photon loss `κ₂ D[a²]`.
    pub fn quadratic(kappa2: f64) -> Self {
        Self {
            order: 2,
            kappa: kappa2,
            n_th: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::invalid("channel.order", "order must be at least 1"));
        }
        if !(self.kappa >= 0.0 && self.kappa.is_finite()) {
            return Err(Error::invalid("channel.kappa", "rate must be finite and non-negative"));
        }
        if !(self.n_th >= 0.0 && self.n_th.is_finite()) {
            return Err(Error::invalid(
                "channel.n_th",
                "thermal population must be finite and non-negative",
            ));
        }
        if self.n_th > 0.0 && self.order != 1 {
            return Err(Error::invalid(
                "channel.n_th",
                "thermal population is only defined for linear channels",
            ));
        }
        Ok(())
    }
}

/// Hamiltonian plus dissipation channels.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub hamiltonian: HamiltonianParams,
    pub channels: Vec<DissipationChannel>,
}

impl ModelSpec {
    pub fn new(hamiltonian: HamiltonianParams, channels: Vec<DissipationChannel>) -> Self {
        Self { hamiltonian, channels }
    }

    pub fn validate(&self) -> Result<()> {
        self.hamiltonian.validate()?;
        self.channels.iter().try_for_each(DissipationChannel::validate)
    }

    /// Returns a copy with the thermal population of every linear channel replaced.
    pub fn with_n_th(&self, n_th: f64) -> Self {
        let mut out = self.clone();
        for ch in out.channels.iter_mut().filter(|c| c.order == 1) {
            ch.n_th = n_th;
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Phase {
    I,
    II,
}

/// One eigenlevel of a closed Hamiltonian.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HamiltonianLevel {
    /// Position in the ascending list of levels.
    pub index: usize,
    pub energy: f64,
    /// Fock parity when the Hamiltonian conserves it.
    pub parity: Option<Parity>,
    /// Phase label for Kerr-type models.
    pub phase: Option<Phase>,
    /// Fock number when the level is a number state.
    pub fock: Option<usize>,
    /// Expectation value of `n̂` in this level.
    pub mean_number: f64,
}

/// Dense matrix of the Hamiltonian.
pub fn build_hamiltonian(params: &HamiltonianParams, space: FockSpace) -> OperatorMatrix {
    let mut h = OperatorMatrix::diagonal(space, |n| c64::new(params.diagonal_energy(n), 0.0));
    for term in params.squeeze.iter().filter(|t| t.amplitude != 0.0) {
        let p = pairing(space, term.order).scale(c64::new(-term.amplitude, 0.0));
        h = &h + &p;
    }
    h
}

/// Real symmetric matrix of the Hamiltonian restricted to `indices`.
fn sector_matrix(params: &HamiltonianParams, indices: &[usize]) -> Mat<f64> {
    let k = indices.len();
    Mat::from_fn(k, k, |a, b| {
        let (i, j) = (indices[a], indices[b]);
        if i == j {
            return params.diagonal_energy(i);
        }
        let lo = i.min(j);
        params
            .squeeze
            .iter()
            .filter(|t| t.amplitude != 0.0 && i.abs_diff(j) == t.order as usize)
            .map(|t| {
                let amp: f64 = (lo + 1..=lo + t.order as usize)
                    .map(|q| q as f64)
                    .product::<f64>()
                    .sqrt();
                -t.amplitude * amp
            })
            .sum()
    })
}

/// Fock-number sectors left invariant by the Hamiltonian.
fn sectors(params: &HamiltonianParams, space: FockSpace) -> Vec<Vec<usize>> {
    let g = params.sector_modulus();
    let d = space.dim();
    if g == 0 {
        return (0..d).map(|n| vec![n]).collect();
    }
    (0..g.min(d)).map(|r| (r..d).step_by(g).collect()).collect()
}

/// Eigenlevels in ascending order, with parity and phase labels.
pub fn closed_spectrum(params: &HamiltonianParams, space: FockSpace) -> Result<Vec<HamiltonianLevel>> {
    params.validate()?;
    let parity_defined = params.conserves_parity();
    let diagonal = params.sector_modulus() == 0;
    let mut raw: Vec<(f64, usize, Option<Parity>, Option<usize>, f64)> = Vec::with_capacity(space.dim());
    for sector in sectors(params, space) {
        let parity = parity_defined.then(|| Parity::of(sector[0]));
        if diagonal {
            let n = sector[0];
            raw.push((params.diagonal_energy(n), n, parity, Some(n), n as f64));
            continue;
        }
        let m = sector_matrix(params, &sector);
        let evd = m
            .self_adjoint_eigen(Side::Lower)
            .map_err(|e| Error::Eigensolver(format!("{e:?}")))?;
        let s = evd.S();
        let u = evd.U();
        for col in 0..sector.len() {
            let mean: f64 = sector
                .iter()
                .enumerate()
                .map(|(row, &n)| u[(row, col)].powi(2) * n as f64)
                .sum();
            raw.push((s[col], sector[0], parity, None, mean));
        }
    }
    raw.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.4.total_cmp(&b.4)));
    if diagonal {
        raw.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.3.cmp(&b.3)));
    }

    let energies: Vec<f64> = raw.iter().map(|r| r.0).collect();
    let levels = raw
        .iter()
        .enumerate()
        .map(|(index, &(energy, _, parity, fock, mean_number))| HamiltonianLevel {
            index,
            energy,
            parity,
            phase: assign_phase(params, &energies, index, fock),
            fock,
            mean_number,
        })
        .collect();
    Ok(levels)
}

fn assign_phase(params: &HamiltonianParams, energies: &[f64], index: usize, fock: Option<usize>) -> Option<Phase> {
    let eta_prime = params.eta_prime()?;
    if params.scale_n.is_some() && !params.is_squeezed() {
        // scaled Kerr term has no integer quasi-spin pairing at zero drive
        return Some(Phase::I);
    }
    if let Some(n) = fock {
        // Number states with non-positive energy lie inside the separatrix;
        // they come in degenerate pairs n ↔ η'−n.
        let inside = eta_prime >= 1.0 - DEGENERACY_TOL && (n as f64) <= eta_prime + DEGENERACY_TOL;
        return Some(if inside { Phase::II } else { Phase::I });
    }
    let e = energies[index];
    let paired = (index > 0 && degenerate(e, energies[index - 1]))
        || (index + 1 < energies.len() && degenerate(e, energies[index + 1]));
    Some(if paired { Phase::II } else { Phase::I })
}

/// Separatrix energy `E_s/K = η/2 + η²/4`.
pub fn separatrix_energy(eta: f64) -> f64 {
    eta / 2.0 + eta * eta / 4.0
}

/// Kissing point `ξ_k = −2η`, established for `−2 ≤ η ≤ 0`.
pub fn kissing_point(eta: f64) -> Result<f64> {
    if !(-2.0..=0.0).contains(&eta) {
        return Err(Error::NoClosedForm(format!(
            "kissing point formula is only established for -2 <= eta <= 0 (got {eta})"
        )));
    }
    Ok(-2.0 * eta + 0.0)
}

/// Lowest eigenpair of a real symmetric tridiagonal matrix.
///
/// Uses Sturm-sequence bisection for the eigenvalue and inverse iteration
/// for the eigenvector (normalized).
pub fn tridiagonal_ground_state(diag: &[f64], off: &[f64]) -> Result<(f64, Vec<f64>)> {
    let n = diag.len();
    if n == 0 {
        return Err(Error::EmptySpectrum);
    }
    if off.len() + 1 != n {
        return Err(Error::DimensionMismatch {
            expected: n - 1,
            found: off.len(),
        });
    }
    if n == 1 {
        return Ok((diag[0], vec![1.0]));
    }
    // Gershgorin bounds.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r = if i > 0 { off[i - 1].abs() } else { 0.0 } + if i + 1 < n { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    // Number of eigenvalues strictly below x.
    let count_below = |x: f64| -> usize {
        let mut count = 0;
        let mut q = diag[0] - x;
        if q < 0.0 {
            count += 1;
        }
        for i in 1..n {
            let denom = if q == 0.0 {
                f64::EPSILON * (off[i - 1].abs() + 1.0)
            } else {
                q
            };
            q = diag[i] - x - off[i - 1] * off[i - 1] / denom;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    };
    let scale = lo.abs().max(hi.abs()).max(1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if count_below(mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= 4.0 * f64::EPSILON * scale {
            break;
        }
    }
    let energy = 0.5 * (lo + hi);

    // Inverse iteration with a shift just below the eigenvalue; the shifted
    // matrix is positive definite so the LDLᵀ recursion is stable.
    let shift = energy - 1e-9 * scale;
    let mut d = vec![0.0; n];
    let mut l = vec![0.0; n - 1];
    d[0] = diag[0] - shift;
    for i in 1..n {
        l[i - 1] = off[i - 1] / d[i - 1];
        d[i] = diag[i] - shift - l[i - 1] * off[i - 1];
    }
    if d.iter().any(|&x| !(x > 0.0)) {
        return Err(Error::Numerical("tridiagonal shift is not below the spectrum".into()));
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    for _ in 0..4 {
        // forward: L y = x
        for i in 1..n {
            x[i] -= l[i - 1] * x[i - 1];
        }
        for i in 0..n {
            x[i] /= d[i];
        }
        // backward: Lᵀ z = y
        for i in (0..n - 1).rev() {
            x[i] -= l[i] * x[i + 1];
        }
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        x.iter_mut().for_each(|v| *v /= norm);
    }
    Ok((energy, x))
}

/// Ground-state energy and `⟨n̂⟩` for a Hamiltonian with a single squeeze order.
///
/// Each residue class `n mod k` is tridiagonal, so large truncations are cheap.
/// Falls back to dense diagonalization when several orders are present.
pub fn ground_state(params: &HamiltonianParams, space: FockSpace) -> Result<(f64, f64)> {
    params.validate()?;
    let active: Vec<_> = params.squeeze.iter().filter(|t| t.amplitude != 0.0).collect();
    if active.len() > 1 {
        let levels = closed_spectrum(params, space)?;
        let g = &levels[0];
        return Ok((g.energy, g.mean_number));
    }
    let mut best: Option<(f64, f64)> = None;
    for sector in sectors(params, space) {
        let diag: Vec<f64> = sector.iter().map(|&n| params.diagonal_energy(n)).collect();
        let off: Vec<f64> = match active.first() {
            Some(t) => sector
                .windows(2)
                .map(|w| {
                    let lo = w[0];
                    -t.amplitude
                        * (lo + 1..=lo + t.order as usize)
                            .map(|q| q as f64)
                            .product::<f64>()
                            .sqrt()
                })
                .collect(),
            None => Vec::new(),
        };
        let (e, v) = tridiagonal_ground_state(&diag, &off)?;
        let mean: f64 = sector.iter().zip(&v).map(|(&n, c)| c * c * n as f64).sum();
        if best.is_none_or(|(be, _)| e < be) {
            best = Some((e, mean));
        }
    }
    best.ok_or(Error::EmptySpectrum)
}

/// Gap `E₁ − E₀` of the closed Hamiltonian.
pub fn excitation_gap(params: &HamiltonianParams, space: FockSpace) -> Result<f64> {
    let levels = closed_spectrum(params, space)?;
    if levels.len() < 2 {
        return Err(Error::EmptySpectrum);
    }
    Ok(levels[1].energy - levels[0].energy)
}
