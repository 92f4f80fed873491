//! Floating-point scalar abstraction: the numerical kernels are generic over
//! `Scalar` so the same code runs at f32 and f64 precision.

use num_traits::{Float, FloatConst, NumAssign, NumCast};
use std::fmt::{Debug, Display};
use std::iter::Sum;

/// Real scalar type for the linear algebra and SDP kernels.
pub trait Scalar:
    Float + FloatConst + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Lift an f64 constant into this type.
    #[inline]
    fn real(x: f64) -> Self {
        <Self as NumCast>::from(x).expect("constant representable in scalar type")
    }

    /// Lossy view as f64 (used at report boundaries).
    #[inline]
    fn as_f64(self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self).expect("scalar convertible to f64")
    }

    /// Relative off-diagonal Frobenius target for the Jacobi eigensolver.
    fn jacobi_tol() -> Self;
}

impl Scalar for f64 {
    #[inline]
    fn jacobi_tol() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    #[inline]
    fn jacobi_tol() -> Self {
        1e-6
    }
}
