//! Liouvillian spectra: diagonalization, ordering, steady state, gaps and
//! spectrum-to-spectrum matching.

use std::cmp::Ordering;

use faer::linalg::solvers::Solve;
use faer::{c64, Mat, Side};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fock::{number, FockSpace, OperatorMatrix};
use crate::liouville::{
    applicable_rule, block_decompose, dyad_index, vectorize, BlockDecomposition, Dyad, LiouvillianMatrix, SectorRule,
};
use crate::quasispin::{JmLabel, QuasiSpinLabel};

/// Relative width of a `|Re λ|` tie group in [`sort_spectrum`].
pub const SORT_TIE_TOL: f64 = 1e-9;
/// Relative clustering radius for degenerate eigenvalues.
pub const CLUSTER_RADIUS: f64 = 1e-6;
/// `Re λ₁` above `−GAPLESS_TOL` counts as a closed gap.
pub const GAPLESS_TOL: f64 = 1e-12;
/// Bound on the steady-state residual `‖𝓛ρ‖∞`.
pub const STEADY_RESIDUAL_TOL: f64 = 1e-8;

/// Eigenvalue with optional labels.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumPoint {
    pub lambda: c64,
    /// Fock dyad `(n, m)` the eigenvalue is attached to.
    pub dyad: Option<Dyad>,
    /// Symmetry sector the eigenvalue was computed in.
    pub sector: Option<i64>,
    pub quasi_spin: Option<QuasiSpinLabel>,
    pub jm: Option<JmLabel>,
    pub multiplicity: usize,
}

impl SpectrumPoint {
    pub fn new(lambda: c64) -> Self {
        Self {
            lambda,
            dyad: None,
            sector: None,
            quasi_spin: None,
            jm: None,
            multiplicity: 1,
        }
    }

    pub fn with_dyad(lambda: c64, dyad: Dyad) -> Self {
        Self {
            dyad: Some(dyad),
            ..Self::new(lambda)
        }
    }

    pub fn re(&self) -> f64 {
        self.lambda.re
    }

    pub fn im(&self) -> f64 {
        self.lambda.im
    }

    fn label_key(&self) -> (Option<Dyad>, Option<i64>) {
        (self.dyad, self.sector)
    }
}

/// Wraps raw eigenvalues as unlabeled points.
pub fn points(values: impl IntoIterator<Item = c64>) -> Vec<SpectrumPoint> {
    values.into_iter().map(SpectrumPoint::new).collect()
}

/// Raw eigenvalues of a list of points.
pub fn lambdas(points: &[SpectrumPoint]) -> Vec<c64> {
    points.iter().map(|p| p.lambda).collect()
}

fn check_finite(m: &Mat<c64>) -> Result<()> {
    for j in 0..m.ncols() {
        for i in 0..m.nrows() {
            let v = m[(i, j)];
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::Numerical(format!("non-finite entry at ({i}, {j})")));
            }
        }
    }
    Ok(())
}

/// Eigenvalues of a dense matrix.
pub fn dense_eigenvalues(m: &Mat<c64>) -> Result<Vec<c64>> {
    check_finite(m)?;
    match m.nrows() {
        0 => Ok(Vec::new()),
        1 => Ok(vec![m[(0, 0)]]),
        _ => m.eigenvalues().map_err(|e| Error::Eigensolver(format!("{e:?}"))),
    }
}

/// Full spectrum of the superoperator from a single dense decomposition.
pub fn eigendecompose(l: &LiouvillianMatrix) -> Result<Vec<SpectrumPoint>> {
    Ok(points(dense_eigenvalues(&l.to_dense())?))
}

/// Spectrum as the union of block spectra; blocks are solved in parallel.
pub fn eigendecompose_blocks(blocks: &BlockDecomposition) -> Result<Vec<SpectrumPoint>> {
    let per_block: Vec<Result<Vec<SpectrumPoint>>> = blocks
        .blocks
        .par_iter()
        .map(|b| {
            Ok(dense_eigenvalues(&b.matrix)?
                .into_iter()
                .map(|lambda| SpectrumPoint {
                    sector: Some(b.label),
                    ..SpectrumPoint::new(lambda)
                })
                .collect())
        })
        .collect();
    let mut out = Vec::with_capacity(blocks.blocks.iter().map(|b| b.size()).sum());
    for r in per_block {
        out.extend(r?);
    }
    Ok(out)
}

/// How to diagonalize a superoperator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// One dense decomposition of the whole matrix.
    Full,
    /// Decompose the given symmetry blocks.
    Blocks(SectorRule),
    /// Finest applicable symmetry, else full.
    #[default]
    Auto,
}

/// Spectrum using the requested strategy.
pub fn spectrum(l: &LiouvillianMatrix, strategy: Strategy) -> Result<Vec<SpectrumPoint>> {
    let rule = match strategy {
        Strategy::Full => None,
        Strategy::Blocks(rule) => Some(rule),
        Strategy::Auto => applicable_rule(l),
    };
    match rule {
        Some(rule) => eigendecompose_blocks(&block_decompose(l, rule)?),
        None => eigendecompose(l),
    }
}

/// Eigenvalues and right eigenvectors (as columns) of the full matrix.
pub fn eigensystem(l: &LiouvillianMatrix) -> Result<(Vec<SpectrumPoint>, Mat<c64>)> {
    let dense = l.to_dense();
    check_finite(&dense)?;
    let evd = dense.eigen().map_err(|e| Error::Eigensolver(format!("{e:?}")))?;
    let s = evd.S();
    let values = (0..dense.nrows()).map(|i| s[i]).collect::<Vec<_>>();
    Ok((points(values), evd.U().to_owned()))
}

/// Orders points by ascending `|Re λ|`.
///
/// Points whose `|Re λ|` agree within `1e-9·(1 + |Re λ|)` form a tie group,
/// ordered by descending `Im λ` (so `+Im` precedes `−Im`) and then by label.
pub fn sort_spectrum(mut pts: Vec<SpectrumPoint>) -> Vec<SpectrumPoint> {
    pts.sort_by(|a, b| {
        a.re()
            .abs()
            .total_cmp(&b.re().abs())
            .then(b.im().total_cmp(&a.im()))
            .then(a.label_key().cmp(&b.label_key()))
    });
    let mut start = 0;
    while start < pts.len() {
        let anchor = pts[start].re().abs();
        let mut end = start + 1;
        while end < pts.len() && pts[end].re().abs() - anchor <= SORT_TIE_TOL * (1.0 + anchor) {
            end += 1;
        }
        pts[start..end].sort_by(|a, b| b.im().total_cmp(&a.im()).then(a.label_key().cmp(&b.label_key())));
        start = end;
    }
    pts
}

/// Liouvillian and Hamiltonian gaps.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Gaps {
    /// `Δ = −Re λ₁`.
    pub liouvillian: f64,
    /// `|Im λ₁|`.
    pub hamiltonian: f64,
}

/// Gaps from a sorted spectrum (`λ₀ ≈ 0` first).
pub fn gaps(sorted: &[SpectrumPoint]) -> Result<Gaps> {
    let l1 = sorted.get(1).ok_or(Error::EmptySpectrum)?;
    Ok(Gaps {
        liouvillian: (-l1.re()).max(0.0),
        hamiltonian: l1.im().abs(),
    })
}

/// `Δ₂ = −Re λ₂` from a sorted spectrum.
pub fn second_gap(sorted: &[SpectrumPoint]) -> Result<f64> {
    let l2 = sorted.get(2).ok_or(Error::EmptySpectrum)?;
    Ok((-l2.re()).max(0.0))
}

/// Relaxation time `T_X = −1/Re λ₁`.
pub fn relaxation_time(sorted: &[SpectrumPoint]) -> Result<f64> {
    let l1 = sorted.get(1).ok_or(Error::EmptySpectrum)?;
    if l1.re() > -GAPLESS_TOL {
        return Err(Error::Gapless { re: l1.re() });
    }
    Ok(-1.0 / l1.re())
}

/// A density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: OperatorMatrix,
}

impl DensityMatrix {
    /// Hermitizes and normalizes `matrix`; fails if the trace vanishes.
    pub fn from_operator(matrix: OperatorMatrix) -> Result<Self> {
        let herm = (&matrix + &matrix.dagger()).scale(c64::new(0.5, 0.0));
        let tr = herm.trace().re;
        if !(tr.abs() > f64::MIN_POSITIVE) || !tr.is_finite() {
            return Err(Error::Numerical("density matrix has zero trace".into()));
        }
        Ok(Self {
            matrix: herm.scale(c64::new(1.0 / tr, 0.0)),
        })
    }

    pub fn matrix(&self) -> &OperatorMatrix {
        &self.matrix
    }

    pub fn space(&self) -> FockSpace {
        self.matrix.space()
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    /// `Tr[ρ O]`.
    pub fn expectation(&self, op: &OperatorMatrix) -> c64 {
        (&self.matrix * op).trace()
    }

    /// `Tr[ρ n̂]`.
    pub fn mean_number(&self) -> f64 {
        let d = self.space().dim();
        (0..d).map(|n| self.matrix.get(n, n).re * n as f64).sum()
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        self.matrix
            .as_mat()
            .self_adjoint_eigenvalues(Side::Lower)
            .map_err(|e| Error::Eigensolver(format!("{e:?}")))
    }

    /// Checks hermiticity, unit trace and positivity.
    pub fn validate(&self) -> Result<()> {
        let herm = self.matrix.max_abs_diff(&self.matrix.dagger());
        if herm >= 1e-9 {
            return Err(Error::Numerical(format!("density matrix not Hermitian ({herm:e})")));
        }
        if (self.trace() - 1.0).abs() > 1e-9 {
            return Err(Error::Numerical(format!("density matrix trace {}", self.trace())));
        }
        let min = self.eigenvalues()?.into_iter().fold(f64::INFINITY, f64::min);
        if min < -1e-8 {
            return Err(Error::Numerical(format!("density matrix eigenvalue {min:e} < 0")));
        }
        Ok(())
    }
}

/// Smallest pivot magnitude of a full-pivot LU.
fn min_pivot(m: &Mat<c64>) -> f64 {
    if m.nrows() == 0 {
        return f64::INFINITY;
    }
    let lu = m.full_piv_lu();
    let u = lu.U();
    (0..m.nrows()).map(|i| u[(i, i)].norm()).fold(f64::INFINITY, f64::min)
}

/// Zero-eigenvalue tolerance `1e-9·(1 + ‖𝓛‖∞)`.
pub fn zero_tolerance(l: &LiouvillianMatrix) -> f64 {
    1e-9 * (1.0 + l.norm_inf())
}

/// Steady state from a null-space solve.
///
/// The solve runs in the symmetry block that carries the trace (coherence 0
/// or even parity when a rule applies). One row of the block is replaced by
/// the trace functional; a vanishing pivot signals a degenerate zero
/// eigenvalue in that block.
pub fn steady_state(l: &LiouvillianMatrix) -> Result<DensityMatrix> {
    let space = l.space();
    let tol = zero_tolerance(l);
    let indices: Vec<usize> = match applicable_rule(l) {
        Some(rule) => (0..l.dim())
            .filter(|&i| rule.label(crate::liouville::index_dyad(space, i)) == rule.trace_sector())
            .collect(),
        None => (0..l.dim()).collect(),
    };
    let mut m = l.submatrix(&indices);
    let anchor = indices
        .binary_search(&dyad_index(space, Dyad::new(0, 0)))
        .expect("trace sector contains the vacuum dyad");
    let k = indices.len();
    for col in 0..k {
        let d = crate::liouville::index_dyad(space, indices[col]);
        m[(anchor, col)] = if d.n == d.m {
            c64::new(1.0, 0.0)
        } else {
            c64::new(0.0, 0.0)
        };
    }
    let pivot = min_pivot(&m);
    if !(pivot > tol) {
        return Err(Error::SteadyStateNotUnique { pivot, tolerance: tol });
    }
    let mut rhs = Mat::<c64>::zeros(k, 1);
    rhs[(anchor, 0)] = c64::new(1.0, 0.0);
    let x = m.full_piv_lu().solve(&rhs);
    let mut full = vec![c64::new(0.0, 0.0); l.dim()];
    for (a, &i) in indices.iter().enumerate() {
        full[i] = x[(a, 0)];
    }
    let rho = DensityMatrix::from_operator(crate::liouville::devectorize(space, &full)?)?;
    let residual = l.act(rho.matrix())?.norm_inf();
    if !(residual < STEADY_RESIDUAL_TOL) {
        return Err(Error::Numerical(format!("steady-state residual {residual:e}")));
    }
    Ok(rho)
}

/// `Tr[ρ n̂]` of the steady state.
pub fn steady_mean_number(l: &LiouvillianMatrix) -> Result<f64> {
    let rho = steady_state(l)?;
    let n = number(rho.space());
    Ok(rho.expectation(&n).re)
}

fn dist(a: c64, b: c64) -> f64 {
    (a - b).norm()
}

/// Assigns each element of `a` to a distinct element of `b` (`|a| ≤ |b|`),
/// approximately minimizing the largest matched distance.
///
/// Elements of `a` are visited in lexicographic `(Re, Im)` order and take
/// their nearest free partner; the worst pair is then repeatedly improved by
/// pairwise swaps, including swaps with unassigned elements of `b`.
pub fn assign(a: &[c64], b: &[c64]) -> Result<Vec<usize>> {
    if a.len() > b.len() {
        return Err(Error::CardinalityMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let mut order: Vec<usize> = (0..a.len()).collect();
    order.sort_by(|&i, &j| lex(a[i], a[j]));
    let mut taken = vec![false; b.len()];
    let mut partner = vec![usize::MAX; a.len()];
    for &i in &order {
        let best = (0..b.len())
            .filter(|&k| !taken[k])
            .min_by(|&x, &y| dist(a[i], b[x]).total_cmp(&dist(a[i], b[y])).then(x.cmp(&y)))
            .expect("enough partners");
        taken[best] = true;
        partner[i] = best;
    }
    // pair-swap refinement of the bottleneck
    let mut owner = vec![usize::MAX; b.len()];
    for (i, &p) in partner.iter().enumerate() {
        owner[p] = i;
    }
    for _ in 0..(4 * a.len() + 16) {
        let Some(worst) = (0..a.len()).max_by(|&x, &y| {
            dist(a[x], b[partner[x]])
                .total_cmp(&dist(a[y], b[partner[y]]))
                .then(y.cmp(&x))
        }) else {
            break;
        };
        let current = dist(a[worst], b[partner[worst]]);
        let mut improved = false;
        for k in 0..b.len() {
            if k == partner[worst] {
                continue;
            }
            let d_new = dist(a[worst], b[k]);
            if d_new >= current {
                continue;
            }
            match owner[k] {
                usize::MAX => {
                    owner[partner[worst]] = usize::MAX;
                    owner[k] = worst;
                    partner[worst] = k;
                    improved = true;
                }
                other => {
                    let d_other = dist(a[other], b[partner[worst]]);
                    if d_other < current {
                        let old = partner[worst];
                        partner[other] = old;
                        owner[old] = other;
                        partner[worst] = k;
                        owner[k] = worst;
                        improved = true;
                    }
                }
            }
            if improved {
                break;
            }
        }
        if !improved {
            break;
        }
    }
    Ok(partner)
}

fn lex(x: c64, y: c64) -> Ordering {
    x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im))
}

fn bottleneck(a: &[c64], b: &[c64]) -> Result<f64> {
    let p = assign(a, b)?;
    Ok(a.iter().zip(&p).map(|(&x, &k)| dist(x, b[k])).fold(0.0, f64::max))
}

/// Largest distance of a perfect matching between two equal-size spectra.
///
/// The matching is computed in both directions and the smaller bottleneck
/// is reported, which makes the result symmetric in its arguments.
pub fn match_spectra(s1: &[c64], s2: &[c64]) -> Result<f64> {
    if s1.len() != s2.len() {
        return Err(Error::CardinalityMismatch {
            left: s1.len(),
            right: s2.len(),
        });
    }
    Ok(bottleneck(s1, s2)?.min(bottleneck(s2, s1)?))
}

/// Largest distance when matching every point of `subset` into `pool`.
pub fn match_into(subset: &[c64], pool: &[c64]) -> Result<f64> {
    bottleneck(subset, pool)
}

/// Copies dyad labels from `reference` onto the nearest points of `target`.
pub fn transfer_labels(reference: &[SpectrumPoint], target: &[c64]) -> Result<Vec<SpectrumPoint>> {
    let r = lambdas(reference);
    let partner = assign(target, &r)?;
    Ok(target
        .iter()
        .zip(partner)
        .map(|(&lambda, k)| SpectrumPoint {
            lambda,
            multiplicity: 1,
            ..reference[k].clone()
        })
        .collect())
}

/// A group of (numerically) degenerate eigenvalues.
#[derive(Clone, Debug, PartialEq)]
pub struct Cluster {
    pub center: c64,
    pub members: Vec<usize>,
}

impl Cluster {
    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }
}

/// Single-linkage clusters with radius `CLUSTER_RADIUS·(1 + |λ|)`.
pub fn clusters(values: &[c64]) -> Vec<Cluster> {
    let n = values.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            let r = CLUSTER_RADIUS * (1.0 + values[i].norm().max(values[j].norm()));
            if dist(values[i], values[j]) <= r {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(i);
    }
    groups
        .into_values()
        .map(|members| {
            let center = members.iter().map(|&i| values[i]).sum::<c64>() / members.len() as f64;
            Cluster { center, members }
        })
        .collect()
}

/// Fills `multiplicity` of each point from [`clusters`].
pub fn annotate_multiplicities(pts: &mut [SpectrumPoint]) {
    let values = lambdas(pts);
    for c in clusters(&values) {
        for &i in &c.members {
            pts[i].multiplicity = c.multiplicity();
        }
    }
}

/// Largest cluster multiplicity.
pub fn max_multiplicity(values: &[c64]) -> usize {
    clusters(values).iter().map(Cluster::multiplicity).max().unwrap_or(0)
}

/// Conjugation closure: bottleneck distance between `{λ}` and `{λ̄}`.
pub fn conjugation_defect(values: &[c64]) -> Result<f64> {
    let conj: Vec<c64> = values.iter().map(|v| v.conj()).collect();
    match_spectra(values, &conj)
}

/// Steady state (`|0⟩⟨0|`) vector used by tests and examples.
pub fn vacuum(space: FockSpace) -> Vec<c64> {
    vectorize(&OperatorMatrix::dyad(space, 0, 0))
}
