//! Hermitian eigendecomposition into clustered spectral projections.

use nalgebra::DMatrix;

use super::{tol_cluster, C64, HermitianMatrix, TOL_SPECTRAL};
use crate::{Error, Result};

/// Eigenvalues grouped by multiplicity together with the orthogonal
/// projections onto the corresponding eigenspaces. This is the finite
/// dimensional stand-in for the spectral measure of a self-adjoint operator.
///
/// Eigenvalues within the clustering tolerance of each other are merged into
/// a single projection, and a cluster whose representative lies within the
/// tolerance of zero is snapped to exactly `0.0` so that indicator symbols
/// and zero-spectrum checks can compare against zero exactly.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,
    multiplicities: Vec<usize>,
    projections: Vec<HermitianMatrix>,
    /// Orthonormal eigenvector columns, cluster-contiguous, ascending.
    basis: DMatrix<C64>,
    /// Cluster start offsets into the basis columns; length `count() + 1`.
    offsets: Vec<usize>,
    dim: usize,
}

impl SpectralDecomposition {
    /// Distinct eigenvalues (cluster representatives), strictly increasing.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn projections(&self) -> &[HermitianMatrix] {
        &self.projections
    }

    pub fn projection(&self, i: usize) -> &HermitianMatrix {
        &self.projections[i]
    }

    /// Number of distinct eigenvalues.
    pub fn count(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues
            .iter()
            .fold(0.0_f64, |acc, l| acc.max(l.abs()))
    }

    /// Index of the zero eigenvalue cluster, if the spectrum contains one.
    pub fn zero_index(&self) -> Option<usize> {
        self.eigenvalues.iter().position(|&l| l == 0.0)
    }

    /// `f(A) = U f(Lambda) U*`, evaluating `f` at cluster representatives.
    pub fn apply_fn(&self, f: impl Fn(f64) -> f64) -> HermitianMatrix {
        let d = self.dim;
        let mut diag = DMatrix::<C64>::zeros(d, d);
        for (c, &l) in self.eigenvalues.iter().enumerate() {
            let v = C64::new(f(l), 0.0);
            for col in self.offsets[c]..self.offsets[c + 1] {
                diag[(col, col)] = v;
            }
        }
        let m = &self.basis * diag * self.basis.adjoint();
        HermitianMatrix::new_unchecked(symmetrize(&m))
    }

    /// Orthogonal projection onto the span of eigenspaces selected by the
    /// predicate on the eigenvalue.
    pub fn projection_where(&self, pred: impl Fn(f64) -> bool) -> HermitianMatrix {
        let mut acc = DMatrix::<C64>::zeros(self.dim, self.dim);
        for (c, &l) in self.eigenvalues.iter().enumerate() {
            if pred(l) {
                acc += self.projections[c].as_dmatrix();
            }
        }
        HermitianMatrix::new_unchecked(symmetrize(&acc))
    }

    /// Reconstruct `sum_i lambda_i P_i`.
    pub fn reconstruct(&self) -> HermitianMatrix {
        self.apply_fn(|l| l)
    }

    pub(crate) fn basis(&self) -> &DMatrix<C64> {
        &self.basis
    }

    pub(crate) fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Cluster index of a basis column.
    pub(crate) fn column_cluster(&self) -> Vec<usize> {
        let mut map = vec![0usize; self.dim];
        for c in 0..self.count() {
            for col in self.offsets[c]..self.offsets[c + 1] {
                map[col] = c;
            }
        }
        map
    }
}

fn symmetrize(m: &DMatrix<C64>) -> DMatrix<C64> {
    DMatrix::from_fn(m.nrows(), m.ncols(), |i, j| {
        (m[(i, j)] + m[(j, i)].conj()) * 0.5
    })
}

/// Eigendecomposition of a Hermitian matrix with eigenvalue clustering.
///
/// Fails with a diagnostic report when the underlying solver returns a basis
/// that is not orthonormal or does not reconstruct the input to the spectral
/// tolerance.
pub fn eig(a: &HermitianMatrix) -> Result<SpectralDecomposition> {
    let d = a.dim();
    let se = a.as_dmatrix().clone().symmetric_eigen();

    // Sort eigenpairs ascending.
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| se.eigenvalues[i].total_cmp(&se.eigenvalues[j]));
    let raw: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut basis = DMatrix::<C64>::zeros(d, d);
    for (new_col, &old_col) in order.iter().enumerate() {
        basis.set_column(new_col, &se.eigenvectors.column(old_col));
    }

    // Solver quality checks.
    let ortho_dev = (basis.adjoint() * &basis - DMatrix::<C64>::identity(d, d)).norm();
    let mut rec = DMatrix::<C64>::zeros(d, d);
    for col in 0..d {
        let v = basis.column(col);
        rec += (v * v.adjoint()).map(|e| e * raw[col]);
    }
    let scale = a.frobenius_norm().max(1.0);
    let rec_dev = (&rec - a.as_dmatrix()).norm() / scale;
    if ortho_dev > TOL_SPECTRAL * (d as f64) || rec_dev > TOL_SPECTRAL {
        return Err(Error::EigenFailure(format!(
            "dim {}: basis orthonormality deviation {:.3e}, reconstruction deviation {:.3e}, \
             spectral radius {:.3e}, extremal gap {:.3e}",
            d,
            ortho_dev,
            rec_dev,
            raw.iter().fold(0.0_f64, |m, l| m.max(l.abs())),
            min_gap(&raw),
        )));
    }

    // Cluster eigenvalues within tolerance of their neighbor.
    let radius = raw.iter().fold(0.0_f64, |m, l| m.max(l.abs()));
    let tol = tol_cluster(radius);
    let mut offsets = vec![0usize];
    for i in 1..d {
        if raw[i] - raw[i - 1] > tol {
            offsets.push(i);
        }
    }
    offsets.push(d);

    let count = offsets.len() - 1;
    let mut eigenvalues = Vec::with_capacity(count);
    let mut multiplicities = Vec::with_capacity(count);
    let mut projections = Vec::with_capacity(count);
    for c in 0..count {
        let (lo, hi) = (offsets[c], offsets[c + 1]);
        let mean = raw[lo..hi].iter().sum::<f64>() / (hi - lo) as f64;
        // Snap sub-tolerance eigenvalues to an exact zero.
        let rep = if mean.abs() <= tol { 0.0 } else { mean };
        eigenvalues.push(rep);
        multiplicities.push(hi - lo);
        let cols = basis.columns(lo, hi - lo);
        let p = &cols * cols.adjoint();
        projections.push(HermitianMatrix::new_unchecked(symmetrize(&p)));
    }

    Ok(SpectralDecomposition {
        eigenvalues,
        multiplicities,
        projections,
        basis,
        offsets,
        dim: d,
    })
}

fn min_gap(sorted: &[f64]) -> f64 {
    sorted
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::INFINITY, f64::min)
}

/// `f(A)` computed directly from a fresh eigendecomposition; convenience
/// wrapper used by callers that do not keep the decomposition around.
pub fn matrix_function(a: &HermitianMatrix, f: impl Fn(f64) -> f64) -> Result<HermitianMatrix> {
    Ok(eig(a)?.apply_fn(f))
}

/// Eigenvalues only (ascending, with multiplicity), without forming
/// projections. Used by the norm layer where projections would be wasteful.
pub(crate) fn eigenvalues_only(m: &DMatrix<C64>) -> Vec<f64> {
    let mut ev: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}
