//! Scalar abstraction shared by every numerical routine in the crate.
//!
//! All matrix and entropy code is written against [`Real`], which is
//! implemented for `f32` and `f64`. Each implementation carries its own
//! numerical tolerances: the `f64` values are the ones the bounds and
//! acceptance checks are calibrated against, the `f32` values are scaled to
//! single-precision round-off.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

mod private {
    pub trait Sealed {}
    impl Sealed for f32 {}
    impl Sealed for f64 {}
}

/// Floating point type usable as the real field of a complex matrix.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + Sum
    + Default
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
    + private::Sealed
{
    /// Max-abs deviation `|m - m†|` accepted as Hermitian.
    const HERMITIAN_TOL: f64;
    /// Allowed deviation of a density matrix trace from one.
    const TRACE_TOL: f64;
    /// Most negative eigenvalue accepted in a density matrix.
    const PSD_TOL: f64;
    /// Eigenvalues and probabilities at or below this are treated as zero.
    const SUPPORT_TOL: f64;
    /// Allowed deviation of a basis Gram matrix from the identity.
    const ORTHONORMAL_TOL: f64;
    /// Allowed deviation of a probability vector sum from one.
    const PROB_SUM_TOL: f64;

    /// Converts an `f64` literal. Every `f64` is representable (up to
    /// rounding) in both implementors, so this never fails.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn hermitian_tol() -> Self {
        Self::lit(Self::HERMITIAN_TOL)
    }

    #[inline]
    fn trace_tol() -> Self {
        Self::lit(Self::TRACE_TOL)
    }

    #[inline]
    fn psd_tol() -> Self {
        Self::lit(Self::PSD_TOL)
    }

    #[inline]
    fn support_tol() -> Self {
        Self::lit(Self::SUPPORT_TOL)
    }

    #[inline]
    fn orthonormal_tol() -> Self {
        Self::lit(Self::ORTHONORMAL_TOL)
    }

    #[inline]
    fn prob_sum_tol() -> Self {
        Self::lit(Self::PROB_SUM_TOL)
    }

    /// `x log₂ x` with the convention `0 log 0 = 0`; arguments at or below
    /// the support threshold count as zero.
    #[inline]
    fn xlog2x(self) -> Self {
        if self <= Self::support_tol() {
            Self::zero()
        } else {
            self * self.log2()
        }
    }

    /// Lossy conversion for reporting.
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const HERMITIAN_TOL: f64 = 1e-10;
    const TRACE_TOL: f64 = 1e-9;
    const PSD_TOL: f64 = 1e-9;
    const SUPPORT_TOL: f64 = 1e-12;
    const ORTHONORMAL_TOL: f64 = 1e-10;
    const PROB_SUM_TOL: f64 = 1e-9;
}

impl Real for f32 {
    const HERMITIAN_TOL: f64 = 1e-5;
    const TRACE_TOL: f64 = 1e-4;
    const PSD_TOL: f64 = 1e-4;
    const SUPPORT_TOL: f64 = 1e-6;
    const ORTHONORMAL_TOL: f64 = 1e-5;
    const PROB_SUM_TOL: f64 = 1e-4;
}

/// Shorthand for a complex number over `T`.
pub type C<T> = Complex<T>;

#[inline]
pub(crate) fn c<T: Real>(re: T, im: T) -> C<T> {
    Complex::new(re, im)
}

#[inline]
pub(crate) fn re<T: Real>(x: T) -> C<T> {
    Complex::new(x, T::zero())
}

/// Clamps values in `(-tol, 0)` to zero; larger negative values are left
/// untouched so genuine violations stay visible.
#[inline]
pub(crate) fn clamp_dust<T: Real>(x: T, tol: T) -> T {
    if x < T::zero() && x > -tol {
        T::zero()
    } else {
        x
    }
}
