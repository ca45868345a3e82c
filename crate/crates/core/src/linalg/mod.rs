//! Matrix storage and the row-oriented kernels the solvers are written against.
//!
//! Both backends ([`DenseMatrix`], [`SparseMatrixCsr`]) expose one interface,
//! [`RowMatrix`]: row visiting, `A x`, the restricted transpose product
//! `A^T xi` touching only the support of `xi`, per-row norms, and row
//! extraction. Matrices are immutable after construction and shareable across
//! threads.

mod dense;
mod norms;
mod sparse;
pub mod vec;

pub use dense::DenseMatrix;
pub use norms::RowNormCache;
pub use sparse::SparseMatrixCsr;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Vectors are plain slices/`Vec`s; entries are kept finite at construction
/// boundaries (file ingestion, generators).
pub type Vector<S> = Vec<S>;

/// Row-major access to a real matrix plus the kernels every solver needs.
pub trait RowMatrix<S: Scalar>: Sized + Send + Sync {
    fn nrows(&self) -> usize;
    fn ncols(&self) -> usize;

    /// Number of (structurally) nonzero entries.
    fn nnz(&self) -> usize;

    /// Visit the nonzero entries of row `i` as `(column, value)` pairs,
    /// in increasing column order.
    fn for_each_in_row<F: FnMut(usize, S)>(&self, i: usize, f: F);

    /// `A^(i) . x`
    fn row_dot(&self, i: usize, x: &[S]) -> S {
        let mut acc = S::zero();
        self.for_each_in_row(i, |j, v| acc = acc + v * x[j]);
        acc
    }

    /// `y = A x`
    fn spmv(&self, x: &[S]) -> Result<Vector<S>> {
        if x.len() != self.ncols() {
            return Err(Error::SizeMismatch {
                context: "spmv input",
                expected: self.ncols(),
                actual: x.len(),
            });
        }
        Ok((0..self.nrows()).map(|i| self.row_dot(i, x)).collect())
    }

    /// `u = A^T xi` for a sparse `xi` given as parallel `(support, coeffs)`
    /// lists over row indices. Touches only the stored entries of the rows in
    /// the support.
    fn transpose_gather(&self, support: &[usize], coeffs: &[S]) -> Result<Vector<S>> {
        if support.len() != coeffs.len() {
            return Err(Error::SizeMismatch {
                context: "transpose_gather support/coeffs",
                expected: support.len(),
                actual: coeffs.len(),
            });
        }
        let mut u = vec![S::zero(); self.ncols()];
        for (&i, &c) in support.iter().zip(coeffs) {
            if i >= self.nrows() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    nrows: self.nrows(),
                });
            }
            self.for_each_in_row(i, |j, v| u[j] = u[j] + c * v);
        }
        Ok(u)
    }

    /// Per-row `||A^(i)||_p^p` and `||A^(i)||_2^2` plus `||A||_F^2`.
    fn row_norms(&self, p: S) -> Result<RowNormCache<S>> {
        RowNormCache::compute(self, p)
    }

    /// Submatrix made of the given rows, which must be sorted, unique and in
    /// range.
    fn extract_rows(&self, indices: &[usize]) -> Result<Self>;

    /// Densified copy (tests and dense decompositions only).
    fn to_dense(&self) -> DenseMatrix<S> {
        let mut entries = vec![S::zero(); self.nrows() * self.ncols()];
        let n = self.ncols();
        for i in 0..self.nrows() {
            self.for_each_in_row(i, |j, v| entries[i * n + j] = v);
        }
        DenseMatrix::from_row_major(self.nrows(), self.ncols(), entries)
            .expect("densified copy is well-formed")
    }
}

pub(crate) fn validate_row_selection(indices: &[usize], nrows: usize) -> Result<()> {
    let mut prev: Option<usize> = None;
    for &i in indices {
        if i >= nrows {
            return Err(Error::IndexOutOfRange { index: i, nrows });
        }
        if let Some(p) = prev {
            if i <= p {
                return Err(Error::param(
                    "indices",
                    format!("row selection must be sorted and unique, got {p} then {i}"),
                ));
            }
        }
        prev = Some(i);
    }
    Ok(())
}
