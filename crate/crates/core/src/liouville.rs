//! Vectorization and Liouvillian superoperator assembly.
//!
//! Operators are vectorized row-major: the dyad `|n⟩⟨m|` maps to index
//! `n·d + m`. With this ordering left multiplication by `O` is `O ⊗ I` and
//! right multiplication is `I ⊗ Oᵀ`.
//!
//! The superoperator is kept in compressed sparse row form. Its number of
//! non-zeros grows like `d²` for the oscillator models, while the dense
//! matrix would need `d⁴` entries.

use std::fmt;

use faer::{c64, Mat};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{annihilation, creation, FockSpace, OperatorMatrix};
use crate::models::{build_hamiltonian, DissipationChannel, HamiltonianParams};

/// Entries below this magnitude are treated as zero when checking sector coupling.
pub const SECTOR_COUPLING_TOL: f64 = 1e-12;

/// Dyad label `|n⟩⟨m|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dyad {
    pub n: usize,
    pub m: usize,
}

impl Dyad {
    pub fn new(n: usize, m: usize) -> Self {
        Self { n, m }
    }

    /// Coherence index `c = n − m`.
    pub fn coherence(self) -> i64 {
        self.n as i64 - self.m as i64
    }

    /// Total excitation `s = n + m`.
    pub fn excitation(self) -> usize {
        self.n + self.m
    }
}

impl fmt::Display for Dyad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n, self.m)
    }
}

/// Index of dyad `(n, m)` in the row-major vectorization.
pub fn dyad_index(space: FockSpace, dyad: Dyad) -> usize {
    dyad.n * space.dim() + dyad.m
}

/// Dyad at vectorization index `index`.
pub fn index_dyad(space: FockSpace, index: usize) -> Dyad {
    Dyad::new(index / space.dim(), index % space.dim())
}

/// Row-major stacking of an operator.
pub fn vectorize(a: &OperatorMatrix) -> Vec<c64> {
    let d = a.dim();
    (0..d * d).map(|k| a.get(k / d, k % d)).collect()
}

/// Inverse of [`vectorize`].
pub fn devectorize(space: FockSpace, v: &[c64]) -> Result<OperatorMatrix> {
    let d = space.dim();
    if v.len() != d * d {
        return Err(Error::LengthMismatch {
            expected: d * d,
            found: v.len(),
        });
    }
    Ok(OperatorMatrix::from_fn(space, |i, j| v[i * d + j]))
}

/// Superoperator on vectorized operators, stored as compressed sparse rows.
#[derive(Clone, Debug, PartialEq)]
pub struct LiouvillianMatrix {
    space: FockSpace,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    values: Vec<c64>,
}

impl LiouvillianMatrix {
    /// Builds the matrix from `(row, col, value)` triplets, summing duplicates.
    pub fn from_triplets(space: FockSpace, mut triplets: Vec<(usize, usize, c64)>) -> Result<Self> {
        let dim = space.dim() * space.dim();
        if let Some(&(r, c, _)) = triplets.iter().find(|t| t.0 >= dim || t.1 >= dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: r.max(c) + 1,
            });
        }
        triplets.sort_by_key(|&(r, c, _)| (r, c));
        let mut row_ptr = vec![0usize; dim + 1];
        let mut cols = Vec::with_capacity(triplets.len());
        let mut values: Vec<c64> = Vec::with_capacity(triplets.len());
        let mut rows = Vec::with_capacity(triplets.len());
        for (r, c, v) in triplets {
            match (rows.last(), cols.last()) {
                (Some(&lr), Some(&lc)) if lr == r && lc == c => {
                    *values.last_mut().expect("non-empty") += v;
                }
                _ => {
                    rows.push(r);
                    cols.push(c);
                    values.push(v);
                }
            }
        }
        // drop exact cancellations
        let zero = c64::new(0.0, 0.0);
        let keep: Vec<usize> = (0..values.len()).filter(|&k| values[k] != zero).collect();
        let rows: Vec<usize> = keep.iter().map(|&k| rows[k]).collect();
        let cols: Vec<usize> = keep.iter().map(|&k| cols[k]).collect();
        let values: Vec<c64> = keep.iter().map(|&k| values[k]).collect();
        for &r in &rows {
            row_ptr[r + 1] += 1;
        }
        for i in 0..dim {
            row_ptr[i + 1] += row_ptr[i];
        }
        Ok(Self {
            space,
            row_ptr,
            cols,
            values,
        })
    }

    pub fn identity(space: FockSpace) -> Self {
        let dim = space.dim() * space.dim();
        Self {
            space,
            row_ptr: (0..=dim).collect(),
            cols: (0..dim).collect(),
            values: vec![c64::new(1.0, 0.0); dim],
        }
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    /// Superoperator dimension `d²`.
    pub fn dim(&self) -> usize {
        self.row_ptr.len() - 1
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    /// Stored entries of one row as `(col, value)`.
    pub fn row(&self, row: usize) -> impl Iterator<Item = (usize, c64)> + '_ {
        let range = self.row_ptr[row]..self.row_ptr[row + 1];
        self.cols[range.clone()]
            .iter()
            .copied()
            .zip(self.values[range].iter().copied())
    }

    /// All stored entries as `(row, col, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, c64)> + '_ {
        (0..self.dim()).flat_map(move |r| self.row(r).map(move |(c, v)| (r, c, v)))
    }

    pub fn get(&self, row: usize, col: usize) -> c64 {
        let range = self.row_ptr[row]..self.row_ptr[row + 1];
        match self.cols[range.clone()].binary_search(&col) {
            Ok(k) => self.values[range.start + k],
            Err(_) => c64::new(0.0, 0.0),
        }
    }

    /// Coefficient of `|k⟩⟨l|` in `𝓛(|n⟩⟨m|)`.
    pub fn action_coefficient(&self, from: Dyad, to: Dyad) -> c64 {
        self.get(dyad_index(self.space, to), dyad_index(self.space, from))
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[c64]) -> Result<Vec<c64>> {
        if v.len() != self.dim() {
            return Err(Error::LengthMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok((0..self.dim())
            .map(|r| self.row(r).map(|(c, a)| a * v[c]).sum())
            .collect())
    }

    /// Row vector `uᵀ·L`.
    pub fn apply_left(&self, u: &[c64]) -> Result<Vec<c64>> {
        if u.len() != self.dim() {
            return Err(Error::LengthMismatch {
                expected: self.dim(),
                found: u.len(),
            });
        }
        let mut out = vec![c64::new(0.0, 0.0); self.dim()];
        for (r, c, a) in self.entries() {
            out[c] += u[r] * a;
        }
        Ok(out)
    }

    /// `𝓛(A)` as an operator.
    pub fn act(&self, a: &OperatorMatrix) -> Result<OperatorMatrix> {
        devectorize(self.space, &self.apply(&vectorize(a))?)
    }

    /// Largest absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.dim())
            .map(|r| self.row(r).map(|(_, v)| v.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn to_dense(&self) -> Mat<c64> {
        self.submatrix(&(0..self.dim()).collect::<Vec<_>>())
    }

    /// Dense submatrix on `indices` (which must be sorted ascending).
    pub fn submatrix(&self, indices: &[usize]) -> Mat<c64> {
        let k = indices.len();
        let mut out = Mat::<c64>::zeros(k, k);
        for (a, &r) in indices.iter().enumerate() {
            for (c, v) in self.row(r) {
                if let Ok(b) = indices.binary_search(&c) {
                    out[(a, b)] = v;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Self::from_triplets(self.space, self.entries().chain(other.entries()).collect())
    }

    pub fn scale(&self, factor: c64) -> Self {
        Self {
            values: self.values.iter().map(|v| v * factor).collect(),
            ..self.clone()
        }
    }
}

/// Triplets of `coef · (A ⊗ B)` in the row-major dyad basis.
fn kron_triplets(a: &OperatorMatrix, b: &OperatorMatrix, coef: c64, out: &mut Vec<(usize, usize, c64)>) {
    let d = a.dim();
    let bnz = b.nonzeros();
    for (i, k, av) in a.nonzeros() {
        for &(j, l, bv) in &bnz {
            out.push((i * d + j, k * d + l, coef * av * bv));
        }
    }
}

/// `O ⊗ I`, the superoperator of left multiplication.
pub fn left_super(o: &OperatorMatrix) -> LiouvillianMatrix {
    let mut t = Vec::new();
    kron_triplets(o, &OperatorMatrix::identity(o.space()), c64::new(1.0, 0.0), &mut t);
    LiouvillianMatrix::from_triplets(o.space(), t).expect("indices in range")
}

/// `I ⊗ Oᵀ`, the superoperator of right multiplication.
pub fn right_super(o: &OperatorMatrix) -> LiouvillianMatrix {
    let mut t = Vec::new();
    kron_triplets(
        &OperatorMatrix::identity(o.space()),
        &o.transpose(),
        c64::new(1.0, 0.0),
        &mut t,
    );
    LiouvillianMatrix::from_triplets(o.space(), t).expect("indices in range")
}

/// Adds `κ D[Γ]` to the triplet list.
fn push_dissipator(gamma: &OperatorMatrix, kappa: f64, out: &mut Vec<(usize, usize, c64)>) {
    if kappa == 0.0 {
        return;
    }
    let id = OperatorMatrix::identity(gamma.space());
    let gg = &gamma.dagger() * gamma;
    let k = c64::new(kappa, 0.0);
    let half = c64::new(-0.5 * kappa, 0.0);
    kron_triplets(gamma, &gamma.conjugate(), k, out);
    kron_triplets(&gg, &id, half, out);
    kron_triplets(&id, &gg.transpose(), half, out);
}

/// Assembles `𝓛 = −i(H⊗I − I⊗Hᵀ) + Σ κ_i D[Γ_i]`.
///
/// A thermal linear channel contributes `κ(1+n̄) D[a] + κ n̄ D[a†]`.
pub fn assemble(
    params: &HamiltonianParams,
    channels: &[DissipationChannel],
    space: FockSpace,
) -> Result<LiouvillianMatrix> {
    params.validate()?;
    channels.iter().try_for_each(DissipationChannel::validate)?;
    let h = build_hamiltonian(params, space);
    let id = OperatorMatrix::identity(space);
    let mut t = Vec::new();
    kron_triplets(&h, &id, c64::new(0.0, -1.0), &mut t);
    kron_triplets(&id, &h.transpose(), c64::new(0.0, 1.0), &mut t);
    let a = annihilation(space);
    for ch in channels {
        let gamma = a.pow(ch.order);
        push_dissipator(&gamma, ch.kappa * (1.0 + ch.n_th), &mut t);
        if ch.n_th > 0.0 {
            push_dissipator(&creation(space), ch.kappa * ch.n_th, &mut t);
        }
    }
    LiouvillianMatrix::from_triplets(space, t)
}

/// Weak-symmetry sector rule for block decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SectorRule {
    /// Sectors of fixed coherence `c = n − m`.
    U1Coherence,
    /// Sectors of fixed `(n − m) mod 2`.
    Z2Parity,
}

impl SectorRule {
    pub fn name(self) -> &'static str {
        match self {
            SectorRule::U1Coherence => "u1_coherence",
            SectorRule::Z2Parity => "z2_parity",
        }
    }

    /// Sector label of a dyad.
    pub fn label(self, dyad: Dyad) -> i64 {
        match self {
            SectorRule::U1Coherence => dyad.coherence(),
            SectorRule::Z2Parity => dyad.coherence().rem_euclid(2),
        }
    }

    /// Label of the sector containing the identity (and hence the steady state).
    pub fn trace_sector(self) -> i64 {
        0
    }
}

impl fmt::Display for SectorRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SectorRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "u1_coherence" | "u1" => Ok(SectorRule::U1Coherence),
            "z2_parity" | "z2" => Ok(SectorRule::Z2Parity),
            other => Err(Error::invalid("sector_rule", format!("unknown rule `{other}`"))),
        }
    }
}

/// One invariant block of the superoperator.
#[derive(Clone, Debug)]
pub struct Block {
    pub label: i64,
    pub indices: Vec<usize>,
    pub matrix: Mat<c64>,
}

impl Block {
    pub fn size(&self) -> usize {
        self.indices.len()
    }
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub rule: SectorRule,
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Block::size).collect()
    }

    pub fn trace_block(&self) -> Option<&Block> {
        self.blocks.iter().find(|b| b.label == self.rule.trace_sector())
    }
}

/// Checks that `rule` is a symmetry of `l`.
pub fn check_rule(l: &LiouvillianMatrix, rule: SectorRule) -> Result<()> {
    let space = l.space();
    for (r, c, v) in l.entries() {
        let magnitude = v.norm();
        if magnitude > SECTOR_COUPLING_TOL && rule.label(index_dyad(space, r)) != rule.label(index_dyad(space, c)) {
            return Err(Error::RuleInapplicable {
                rule: rule.name(),
                row: r,
                col: c,
                magnitude,
            });
        }
    }
    Ok(())
}

/// Splits `l` into the invariant blocks of `rule`, ordered by sector label.
pub fn block_decompose(l: &LiouvillianMatrix, rule: SectorRule) -> Result<BlockDecomposition> {
    check_rule(l, rule)?;
    let space = l.space();
    let mut groups: std::collections::BTreeMap<i64, Vec<usize>> = Default::default();
    for idx in 0..l.dim() {
        groups.entry(rule.label(index_dyad(space, idx))).or_default().push(idx);
    }
    let blocks = groups
        .into_iter()
        .map(|(label, indices)| Block {
            label,
            matrix: l.submatrix(&indices),
            indices,
        })
        .collect();
    Ok(BlockDecomposition { rule, blocks })
}

/// Finest applicable sector rule: `u1_coherence`, then `z2_parity`.
pub fn applicable_rule(l: &LiouvillianMatrix) -> Option<SectorRule> {
    [SectorRule::U1Coherence, SectorRule::Z2Parity]
        .into_iter()
        .find(|&r| check_rule(l, r).is_ok())
}
