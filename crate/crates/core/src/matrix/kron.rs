//! Kronecker products and matrix units.

use super::{C64, ComplexMatrix};
use crate::{Error, Result};

/// Standard Kronecker product `E (x) X`.
pub fn kron(e: &ComplexMatrix, x: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from(e.as_dmatrix().kronecker(x.as_dmatrix()))
}

/// The `size x size` matrix unit with a single 1 at row `i`, column `j`.
pub fn matrix_unit(size: usize, i: usize, j: usize) -> Result<ComplexMatrix> {
    if size == 0 {
        return Err(Error::DimensionMismatch("matrix unit size must be >= 1".into()));
    }
    if i >= size || j >= size {
        return Err(Error::IndexOutOfRange(format!(
            "matrix unit ({i}, {j}) out of range for size {size}"
        )));
    }
    let mut m = ComplexMatrix::zeros(size, size).into_dmatrix();
    m[(i, j)] = C64::new(1.0, 0.0);
    Ok(ComplexMatrix::from(m))
}
