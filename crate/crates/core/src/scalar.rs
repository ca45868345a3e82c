//! Floating-point scalar abstraction.

use std::fmt;
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Scalar type for solver arithmetic: `f32` or `f64`.
///
/// The benchmark harness always runs at `f64`; the residual tolerances it
/// certifies (1e-6 and below) are not representable in single precision.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Sum<Self> + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Machine epsilon of the concrete type.
    fn eps() -> Self {
        Self::epsilon()
    }

    /// Lossless (for f32/f64 diagnostics) conversion used in reports.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("finite scalar converts to f64")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// `|x|^p`, using repeated multiplication when `p` is a small integer.
///
/// `p_int` must be `Some(k)` iff `p == k` exactly; callers precompute it once
/// per norm exponent (see [`crate::linalg::RowNormCache`]).
#[inline]
pub fn pow_abs<S: Scalar>(x: S, p: S, p_int: Option<i32>) -> S {
    match p_int {
        Some(1) => x.abs(),
        Some(2) => x * x,
        Some(k) => x.abs().powi(k),
        None => x.abs().powf(p),
    }
}

/// Integer representation of `p` when it is exactly integral and small.
pub fn integral_exponent<S: Scalar>(p: S) -> Option<i32> {
    if p.fract() == S::zero() && p <= S::from_i32(64).unwrap() {
        p.to_i32()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_abs_matches_powf() {
        let xs = [-2.5f64, -1.0, 0.0, 0.75, 3.0];
        for &x in &xs {
            for p in [1.0, 2.0, 3.0] {
                let fast = pow_abs(x, p, integral_exponent(p));
                assert!((fast - x.abs().powf(p)).abs() <= 1e-15 * fast.max(1.0));
            }
            let p = 1.5;
            assert_eq!(integral_exponent(p), None);
            assert_eq!(pow_abs(x, p, None), x.abs().powf(p));
        }
    }

    #[test]
    fn integral_exponent_detects_integers() {
        assert_eq!(integral_exponent(1.0f64), Some(1));
        assert_eq!(integral_exponent(2.0f64), Some(2));
        assert_eq!(integral_exponent(3.0f32), Some(3));
        assert_eq!(integral_exponent(2.5f64), None);
    }
}
