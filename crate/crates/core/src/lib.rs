//! Row-action solvers for large consistent linear systems `Ax = b`.
//!
//! The crate implements a family of greedy block Kaczmarz iterations built on
//! the averaging technique (no per-block pseudoinverse), together with the
//! classical baselines they are benchmarked against:
//!
//! * `fgbk` — fast greedy block Kaczmarz: rows are selected by thresholding
//!   the p-norm residual ratio `|r_i|^p / ||a_i||_p^p` at a fraction `eta` of
//!   its maximum, and the update direction is `A^T xi` for the residual
//!   combination `xi` on the selected rows.
//! * `fdbk` — fast deterministic block Kaczmarz: same averaged update with
//!   the `gamma_k` half-sum selection rule over squared 2-norm ratios.
//! * `gbk`  — greedy block Kaczmarz: `delta_k` selection rule and an exact
//!   minimum-norm block solve per iteration.
//! * `kaczmarz` / `rk` — cyclic and norm-weighted randomized single-row
//!   projections.
//!
//! Solver arithmetic is generic over the floating-point scalar (see
//! [`Scalar`]); the benchmark harness and CLI instantiate everything at `f64`
//! via the aliases at the crate root. [`verify`] evaluates the theoretical
//! per-iteration contraction factor of the fgbk iteration on small instances
//! and certifies that observed error decay never violates it.

pub mod error;
pub mod io;
pub mod linalg;
pub mod scalar;
pub mod selection;
pub mod solvers;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Concrete f64 instantiations used by the benchmark harness and CLI.
pub type DenseMatrixF64 = linalg::DenseMatrix<f64>;
pub type SparseMatrixF64 = linalg::SparseMatrixCsr<f64>;
pub type RowNormCacheF64 = linalg::RowNormCache<f64>;
pub type ProblemInstanceDenseF64 = io::ProblemInstance<f64, DenseMatrixF64>;
pub type ProblemInstanceSparseF64 = io::ProblemInstance<f64, SparseMatrixF64>;
