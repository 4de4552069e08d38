//! Scalar abstraction shared by every routine in the crate.
//!
//! All algorithms are written once against [`Scalar`] and instantiated for
//! `f32`, `f64`, `Complex<f32>` and `Complex<f64>`. Real instantiations take a
//! real-arithmetic path automatically because `conj` is the identity there.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, Neg, SubAssign};

use num_complex::Complex;
use num_traits::{Float, FromPrimitive, Num, ToPrimitive, Zero};

/// Field element a matrix can hold: a real float or a complex number over one.
pub trait Scalar:
    Num
    + Copy
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
{
    /// The underlying real field.
    type Real: RealScalar;

    /// `true` for complex instantiations.
    const IS_COMPLEX: bool;

    fn conj(self) -> Self;
    fn re(self) -> Self::Real;
    fn im(self) -> Self::Real;
    fn from_real(re: Self::Real) -> Self;

    /// Builds a scalar from its parts. Real types drop `im`.
    fn from_parts(re: Self::Real, im: Self::Real) -> Self;

    /// `|z|^2`, without the square root.
    fn abs_sq(self) -> Self::Real {
        let (re, im) = (self.re(), self.im());
        re * re + im * im
    }

    /// `|z|`.
    fn modulus(self) -> Self::Real {
        self.re().hypot(self.im())
    }

    /// Multiply by a real factor.
    fn scale(self, factor: Self::Real) -> Self {
        self * Self::from_real(factor)
    }

    /// Divide by a real factor, componentwise, so tiny divisors do not overflow.
    fn unscale(self, divisor: Self::Real) -> Self {
        Self::from_parts(self.re() / divisor, self.im() / divisor)
    }

    /// Unit-modulus phase `z/|z|`, or one for zero.
    fn phase(self) -> Self {
        let r = self.modulus();
        if r == Self::Real::zero() {
            Self::one()
        } else {
            self.unscale(r)
        }
    }
}

/// Real floating-point field used for norms, eigenvalues and tolerances.
pub trait RealScalar:
    Scalar<Real = Self> + Float + FromPrimitive + ToPrimitive + PartialOrd
{
    /// Lossy conversion from an `f64` constant.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Lossy conversion to `f64` for reporting.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("finite real converts to f64")
    }
}

macro_rules! impl_real {
    ($t:ty) => {
        impl Scalar for $t {
            type Real = $t;
            const IS_COMPLEX: bool = false;

            #[inline]
            fn conj(self) -> Self {
                self
            }
            #[inline]
            fn re(self) -> Self {
                self
            }
            #[inline]
            fn im(self) -> Self {
                0.0
            }
            #[inline]
            fn from_real(re: Self) -> Self {
                re
            }
            #[inline]
            fn from_parts(re: Self, _im: Self) -> Self {
                re
            }
            #[inline]
            fn abs_sq(self) -> Self {
                self * self
            }
            #[inline]
            fn modulus(self) -> Self {
                self.abs()
            }
            #[inline]
            fn scale(self, factor: Self) -> Self {
                self * factor
            }
        }

        impl RealScalar for $t {}
    };
}

impl_real!(f32);
impl_real!(f64);

macro_rules! impl_complex {
    ($t:ty) => {
        impl Scalar for Complex<$t> {
            type Real = $t;
            const IS_COMPLEX: bool = true;

            #[inline]
            fn conj(self) -> Self {
                Complex::conj(&self)
            }
            #[inline]
            fn re(self) -> $t {
                self.re
            }
            #[inline]
            fn im(self) -> $t {
                self.im
            }
            #[inline]
            fn from_real(re: $t) -> Self {
                Complex::new(re, 0.0)
            }
            #[inline]
            fn from_parts(re: $t, im: $t) -> Self {
                Complex::new(re, im)
            }
            #[inline]
            fn scale(self, factor: $t) -> Self {
                Complex::new(self.re * factor, self.im * factor)
            }
        }
    };
}

impl_complex!(f32);
impl_complex!(f64);
