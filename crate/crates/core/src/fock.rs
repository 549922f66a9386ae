//! Operators on a truncated Fock space.
//!
//! A [`FockSpace`] with maximum boson number `N` has dimension `N + 1`.
//! Operators are stored densely; the truncation makes `[a, a†]` equal to the
//! identity except for the last diagonal entry, which is `-N`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use faer::{c64, Mat};

use crate::error::{Error, Result};

/// Truncated single-mode Fock space `{|0⟩, …, |N⟩}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FockSpace {
    n_max: usize,
}

impl FockSpace {
    pub fn new(n_max: usize) -> Self {
        Self { n_max }
    }

    /// Space with `dim` basis states (`N_Fock`).
    pub fn with_dim(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("dim", "Fock dimension must be at least 1"));
        }
        Ok(Self { n_max: dim - 1 })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn dim(&self) -> usize {
        self.n_max + 1
    }
}

impl fmt::Display for FockSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fock(N={}, dim={})", self.n_max, self.dim())
    }
}

/// Dense complex matrix acting on a [`FockSpace`].
#[derive(Clone, Debug)]
pub struct OperatorMatrix {
    space: FockSpace,
    data: Mat<c64>,
}

impl PartialEq for OperatorMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.data == other.data
    }
}

impl OperatorMatrix {
    pub fn zeros(space: FockSpace) -> Self {
        let d = space.dim();
        Self {
            space,
            data: Mat::zeros(d, d),
        }
    }

    pub fn identity(space: FockSpace) -> Self {
        let d = space.dim();
        Self {
            space,
            data: Mat::identity(d, d),
        }
    }

    pub fn from_fn(space: FockSpace, f: impl FnMut(usize, usize) -> c64) -> Self {
        let d = space.dim();
        Self {
            space,
            data: Mat::from_fn(d, d, f),
        }
    }

    /// Wraps an existing square matrix.
    pub fn from_mat(space: FockSpace, data: Mat<c64>) -> Result<Self> {
        let d = space.dim();
        if data.nrows() != d || data.ncols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: data.nrows().max(data.ncols()),
            });
        }
        Ok(Self { space, data })
    }

    /// Diagonal operator from its diagonal entries.
    pub fn diagonal(space: FockSpace, diag: impl Fn(usize) -> c64) -> Self {
        Self::from_fn(space, |i, j| if i == j { diag(i) } else { c64::new(0.0, 0.0) })
    }

    /// Dyad `|n⟩⟨m|`.
    pub fn dyad(space: FockSpace, n: usize, m: usize) -> Self {
        Self::from_fn(space, |i, j| {
            if i == n && j == m {
                c64::new(1.0, 0.0)
            } else {
                c64::new(0.0, 0.0)
            }
        })
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn as_mat(&self) -> &Mat<c64> {
        &self.data
    }

    pub fn into_mat(self) -> Mat<c64> {
        self.data
    }

    pub fn get(&self, row: usize, col: usize) -> c64 {
        self.data[(row, col)]
    }

    pub fn set(&mut self, row: usize, col: usize, value: c64) {
        self.data[(row, col)] = value;
    }

    pub fn dagger(&self) -> Self {
        Self {
            space: self.space,
            data: self.data.adjoint().to_owned(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            space: self.space,
            data: self.data.transpose().to_owned(),
        }
    }

    pub fn conjugate(&self) -> Self {
        Self {
            space: self.space,
            data: self.data.conjugate().to_owned(),
        }
    }

    pub fn scale(&self, factor: c64) -> Self {
        let d = self.dim();
        Self {
            space: self.space,
            data: Mat::from_fn(d, d, |i, j| self.data[(i, j)] * factor),
        }
    }

    /// `A^k` by repeated multiplication (`A^0 = I`).
    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.space);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn trace(&self) -> c64 {
        (0..self.dim()).map(|i| self.data[(i, i)]).sum()
    }

    /// Largest absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        let d = self.dim();
        (0..d)
            .map(|i| (0..d).map(|j| self.data[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Largest entry magnitude of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let d = self.dim().min(other.dim());
        let mut worst = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                worst = worst.max((self.data[(i, j)] - other.data[(i, j)]).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.dagger()) <= tol
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Non-zero entries as `(row, col, value)` in row-major order.
    pub fn nonzeros(&self) -> Vec<(usize, usize, c64)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let v = self.data[(i, j)];
                if v != c64::new(0.0, 0.0) {
                    out.push((i, j, v));
                }
            }
        }
        out
    }
}

impl<'a> Mul<&'a OperatorMatrix> for &'a OperatorMatrix {
    type Output = OperatorMatrix;

    fn mul(self, rhs: &'a OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.space, rhs.space, "operator spaces differ");
        OperatorMatrix {
            space: self.space,
            data: &self.data * &rhs.data,
        }
    }
}

impl<'a> Add<&'a OperatorMatrix> for &'a OperatorMatrix {
    type Output = OperatorMatrix;

    fn add(self, rhs: &'a OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.space, rhs.space, "operator spaces differ");
        OperatorMatrix {
            space: self.space,
            data: &self.data + &rhs.data,
        }
    }
}

impl<'a> Sub<&'a OperatorMatrix> for &'a OperatorMatrix {
    type Output = OperatorMatrix;

    fn sub(self, rhs: &'a OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.space, rhs.space, "operator spaces differ");
        OperatorMatrix {
            space: self.space,
            data: &self.data - &rhs.data,
        }
    }
}

/// Annihilation operator: `a[n-1, n] = √n`.
pub fn annihilation(space: FockSpace) -> OperatorMatrix {
    OperatorMatrix::from_fn(space, |i, j| {
        if j == i + 1 {
            c64::new((j as f64).sqrt(), 0.0)
        } else {
            c64::new(0.0, 0.0)
        }
    })
}

/// Creation operator, the adjoint of [`annihilation`].
pub fn creation(space: FockSpace) -> OperatorMatrix {
    annihilation(space).dagger()
}

/// Number operator `diag(0, 1, …, N)`.
pub fn number(space: FockSpace) -> OperatorMatrix {
    OperatorMatrix::diagonal(space, |n| c64::new(n as f64, 0.0))
}

/// Pairing operator of the given order, `a†^k + a^k`.
///
/// Orders above `N` give the zero matrix.
pub fn pairing(space: FockSpace, order: u32) -> OperatorMatrix {
    let k = order as usize;
    OperatorMatrix::from_fn(space, |i, j| {
        if k == 0 {
            return if i == j { c64::new(2.0, 0.0) } else { c64::new(0.0, 0.0) };
        }
        // a†^k |j⟩ = sqrt((j+1)…(j+k)) |j+k⟩
        let lower = i.min(j);
        if i.abs_diff(j) == k {
            let amp: f64 = (lower + 1..=lower + k).map(|q| q as f64).product::<f64>().sqrt();
            c64::new(amp, 0.0)
        } else {
            c64::new(0.0, 0.0)
        }
    })
}

/// Hilbert–Schmidt inner product `Tr[A† B]`.
pub fn hs_inner(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<c64> {
    if a.space != b.space {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let d = a.dim();
    let mut acc = c64::new(0.0, 0.0);
    for i in 0..d {
        for j in 0..d {
            acc += a.get(i, j).conj() * b.get(i, j);
        }
    }
    Ok(acc)
}
