//! Singular values and the norms computed from them.
//!
//! Everything goes through the Hermitian eigendecomposition of the Gram
//! matrix `x* x` (or `x x*`, whichever is smaller); no iterative refinement.

use std::io::Write;

use super::eig::eigenvalues_only;
use super::ComplexMatrix;
use crate::{Error, Result};

/// Singular values in nonincreasing order, `min(rows, cols)` of them.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularValueList {
    values: Vec<f64>,
}

impl SingularValueList {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest singular value (the operator norm), 0 for a zero matrix.
    pub fn operator_norm(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    /// CSV export with header `k,mu_k`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "k,mu_k")?;
        for (k, mu) in self.values.iter().enumerate() {
            writeln!(w, "{},{}", k, mu)?;
        }
        Ok(())
    }
}

/// Singular values of `x`: the eigenvalues of `|x| = (x* x)^(1/2)`, sorted
/// nonincreasing.
pub fn singular_values(x: &ComplexMatrix) -> SingularValueList {
    let m = x.as_dmatrix();
    let gram = if m.ncols() <= m.nrows() {
        m.adjoint() * m
    } else {
        m * m.adjoint()
    };
    let take = m.nrows().min(m.ncols());
    let mut mu: Vec<f64> = eigenvalues_only(&gram)
        .into_iter()
        .map(|l| l.max(0.0).sqrt())
        .collect();
    mu.reverse();
    mu.truncate(take);
    SingularValueList { values: mu }
}

/// Schatten `p`-norm `(sum mu_k^p)^(1/p)`; `p = infinity` returns the
/// operator norm. Errors for `p < 1`.
pub fn schatten_norm(x: &ComplexMatrix, p: f64) -> Result<f64> {
    schatten_norm_of(&singular_values(x), p)
}

/// Schatten norm straight from a singular value list.
pub fn schatten_norm_of(mu: &SingularValueList, p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidExponent(p));
    }
    let values = mu.values();
    if p.is_infinite() {
        return Ok(mu.operator_norm());
    }
    let top = mu.operator_norm();
    if top == 0.0 {
        return Ok(0.0);
    }
    if p == 1.0 {
        return Ok(values.iter().sum());
    }
    if p == 2.0 {
        return Ok(values.iter().map(|v| v * v).sum::<f64>().sqrt());
    }
    // Factor out the largest value so the powers stay well-scaled.
    let sum: f64 = values.iter().map(|v| (v / top).powf(p)).sum();
    Ok(top * sum.powf(1.0 / p))
}

/// Weak quasi-norm `max_k (k + 1) mu_k(x)`; the finite-dimensional supremum
/// is a maximum.
pub fn weak_norm(x: &ComplexMatrix) -> f64 {
    weak_norm_of(&singular_values(x))
}

pub fn weak_norm_of(mu: &SingularValueList) -> f64 {
    mu.values()
        .iter()
        .enumerate()
        .map(|(k, v)| (k + 1) as f64 * v)
        .fold(0.0, f64::max)
}
