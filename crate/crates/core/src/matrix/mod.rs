//! Dense complex linear algebra: Hermitian matrices, spectral decompositions,
//! singular values, Schatten and weak norms, Kronecker utilities, and I/O.
//!
//! All types are immutable after construction and every operation is pure,
//! so everything here is safe to share across threads.

mod eig;
mod io;
mod kron;
mod norms;

pub use eig::{eig, matrix_function, SpectralDecomposition};
pub use io::MatrixJson;
pub use kron::{kron, matrix_unit};
pub use norms::{schatten_norm, singular_values, weak_norm, SingularValueList};

use nalgebra::DMatrix;

use crate::{Error, Result};

/// Complex scalar used throughout the crate.
pub type C64 = num_complex::Complex<f64>;

/// Hermitian-symmetry tolerance checked at construction, relative to the
/// Frobenius scale of the matrix.
pub const TOL_HERM: f64 = 1e-12;

/// Tolerance for the invariants of a spectral decomposition (completeness,
/// idempotency, orthogonality, reconstruction), relative Frobenius.
pub const TOL_SPECTRAL: f64 = 1e-10;

/// Eigenvalue clustering tolerance. Eigenvalues closer than this are merged
/// into a single spectral projection: difference-quotient symbols evaluated
/// at near-degenerate pairs amplify roundoff, so the merge happens once,
/// here, and every consumer sees exactly-equal nodes instead.
pub fn tol_cluster(spectral_radius: f64) -> f64 {
    1e-9 * spectral_radius.max(1.0)
}

/// Dense complex matrix of arbitrary shape; the arguments `x_k` of the
/// operator integrals.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    m: DMatrix<C64>,
}

impl ComplexMatrix {
    pub fn new(m: DMatrix<C64>) -> Result<Self> {
        if m.nrows() == 0 || m.ncols() == 0 {
            return Err(Error::DimensionMismatch(
                "matrix must have at least one row and one column".into(),
            ));
        }
        Ok(Self { m })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            m: DMatrix::zeros(rows, cols),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            m: DMatrix::identity(dim, dim),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> C64) -> Self {
        Self {
            m: DMatrix::from_fn(rows, cols, f),
        }
    }

    /// Row-major real entries, zero imaginary part.
    pub fn from_real_rows(rows: usize, cols: usize, entries: &[f64]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self::from_fn(rows, cols, |i, j| {
            C64::new(entries[i * cols + j], 0.0)
        }))
    }

    pub fn rows(&self) -> usize {
        self.m.nrows()
    }

    pub fn cols(&self) -> usize {
        self.m.ncols()
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.m[(i, j)]
    }

    pub fn adjoint(&self) -> ComplexMatrix {
        ComplexMatrix {
            m: self.m.adjoint(),
        }
    }

    pub fn scale(&self, c: C64) -> ComplexMatrix {
        ComplexMatrix {
            m: self.m.map(|v| v * c),
        }
    }

    pub fn scale_re(&self, c: f64) -> ComplexMatrix {
        self.scale(C64::new(c, 0.0))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.m.norm()
    }

    pub fn trace(&self) -> C64 {
        self.m.trace()
    }

    pub fn as_dmatrix(&self) -> &DMatrix<C64> {
        &self.m
    }

    pub fn into_dmatrix(self) -> DMatrix<C64> {
        self.m
    }
}

impl From<DMatrix<C64>> for ComplexMatrix {
    fn from(m: DMatrix<C64>) -> Self {
        Self { m }
    }
}

impl From<&HermitianMatrix> for ComplexMatrix {
    fn from(h: &HermitianMatrix) -> Self {
        Self { m: h.m.clone() }
    }
}

impl std::ops::Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            m: &self.m + &rhs.m,
        }
    }
}

impl std::ops::Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            m: &self.m - &rhs.m,
        }
    }
}

impl std::ops::Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            m: &self.m * &rhs.m,
        }
    }
}

/// Dense complex square matrix with Hermitian symmetry enforced at
/// construction (and exactly symmetrized, so downstream eigensolves see a
/// bona fide Hermitian input).
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    m: DMatrix<C64>,
}

impl HermitianMatrix {
    pub fn new(m: DMatrix<C64>) -> Result<Self> {
        if m.nrows() != m.ncols() || m.nrows() == 0 {
            return Err(Error::DimensionMismatch(format!(
                "Hermitian matrix must be square with dim >= 1, got {}x{}",
                m.nrows(),
                m.ncols()
            )));
        }
        let scale = m.norm().max(1.0);
        let mut max_dev: f64 = 0.0;
        for i in 0..m.nrows() {
            for j in i..m.ncols() {
                let dev = (m[(i, j)] - m[(j, i)].conj()).norm();
                max_dev = max_dev.max(dev);
            }
        }
        let tol = TOL_HERM * scale;
        if max_dev > tol {
            return Err(Error::NotHermitian { max_dev, tol });
        }
        // Symmetrize so the stored matrix is Hermitian to the last bit.
        let herm = DMatrix::from_fn(m.nrows(), m.ncols(), |i, j| {
            (m[(i, j)] + m[(j, i)].conj()) * 0.5
        });
        Ok(Self { m: herm })
    }

    /// Construct without the symmetry check; callers guarantee Hermitianity
    /// by construction (e.g. `U U*` or `(G + G*)/2`).
    pub(crate) fn new_unchecked(m: DMatrix<C64>) -> Self {
        Self { m }
    }

    pub fn from_real(rows: &[&[f64]]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("ragged row lengths".into()));
        }
        Self::new(DMatrix::from_fn(n, n, |i, j| C64::new(rows[i][j], 0.0)))
    }

    pub fn diagonal(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::DimensionMismatch("dim must be >= 1".into()));
        }
        let n = values.len();
        Ok(Self::new_unchecked(DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                C64::new(values[i], 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        })))
    }

    pub fn identity(dim: usize) -> Self {
        Self::new_unchecked(DMatrix::identity(dim, dim))
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new_unchecked(DMatrix::zeros(dim, dim))
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.m[(i, j)]
    }

    /// `A - delta * I`.
    pub fn shift(&self, delta: f64) -> HermitianMatrix {
        let mut m = self.m.clone();
        for i in 0..m.nrows() {
            m[(i, i)] -= C64::new(delta, 0.0);
        }
        Self::new_unchecked(m)
    }

    pub fn scale_re(&self, c: f64) -> HermitianMatrix {
        Self::new_unchecked(self.m.map(|v| v * c))
    }

    pub fn add(&self, other: &HermitianMatrix) -> Result<HermitianMatrix> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.dim(),
                self.dim(),
                other.dim(),
                other.dim()
            )));
        }
        Ok(Self::new_unchecked(&self.m + &other.m))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.m.norm()
    }

    pub fn as_dmatrix(&self) -> &DMatrix<C64> {
        &self.m
    }

    pub fn to_complex(&self) -> ComplexMatrix {
        ComplexMatrix { m: self.m.clone() }
    }
}

/// Scale-guarded relative Frobenius distance; the residual metric used by
/// every identity check in the crate.
pub fn relative_residual(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    let scale = a.frobenius_norm().max(b.frobenius_norm()).max(1.0);
    (a - b).frobenius_norm() / scale
}
