//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Complex amplitude over the real scalar `T`.
pub type C<T> = Complex<T>;

/// Real floating-point scalar the linear algebra is generic over (`f32`, `f64`).
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Sum
    + Default
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal. Every finite literal used in this crate fits.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    /// Absolute tolerance `x`, floored at a few machine epsilons so that
    /// double-precision tolerances stay reachable in single precision.
    fn tolerance(x: f64) -> Self {
        Self::lit(x).max(Self::epsilon() * Self::lit(8.0))
    }

    /// Euclidean remainder, in `[0, |m|)` up to rounding.
    fn rem_euclid(self, m: Self) -> Self {
        let r = self % m;
        if r < Self::zero() {
            r + m.abs()
        } else {
            r
        }
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

pub(crate) fn cplx<T: Real>(re: T, im: T) -> C<T> {
    Complex::new(re, im)
}

/// `e^{iθ}`.
pub(crate) fn phase<T: Real>(theta: T) -> C<T> {
    Complex::new(theta.cos(), theta.sin())
}

pub(crate) fn norm_sqr<T: Real>(v: &[C<T>]) -> T {
    v.iter().map(|z| z.norm_sqr()).sum()
}

pub(crate) fn norm<T: Real>(v: &[C<T>]) -> T {
    norm_sqr(v).sqrt()
}

/// `Σ conj(a_i)·b_i`; callers check lengths.
pub(crate) fn dot<T: Real>(a: &[C<T>], b: &[C<T>]) -> C<T> {
    a.iter()
        .zip(b)
        .fold(C::new(T::zero(), T::zero()), |acc, (x, y)| acc + x.conj() * y)
}
