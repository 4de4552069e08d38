use crate::matrix::Matrix;
use crate::scalar::{RealScalar, Scalar};
use num_traits::{Float, One, Zero};

/// 2x2 unitary `G = [[c, s], [-s*d, c*d]]` acting on an index pair `(p, q)`.
///
/// `d` is a unit-modulus phase that makes the off-diagonal entry real before the
/// real rotation is applied; it is one in real arithmetic.
#[derive(Debug, Clone, Copy)]
pub(crate) struct JacobiRotation<T: Scalar> {
    pub c: T::Real,
    pub s: T::Real,
    pub d: T,
}

impl<T: Scalar> JacobiRotation<T> {
    /// Rotation that diagonalizes the Hermitian block `[[app, apq], [conj(apq), aqq]]`
    /// under `G^H * block * G`. Returns `None` when `apq` is exactly zero.
    pub fn annihilating(app: T::Real, aqq: T::Real, apq: T) -> Option<Self> {
        let r = apq.modulus();
        if r == T::Real::zero() {
            return None;
        }
        let d = apq.conj().unscale(r);
        // Subnormal parts carry few bits; renormalize so G stays unitary.
        let d = d.unscale(d.modulus());
        let two = T::Real::lit(2.0);
        let theta = (aqq - app) / (two * r);
        let t = if theta >= T::Real::zero() {
            (theta + theta.hypot(T::Real::one())).recip()
        } else {
            -(theta.abs() + theta.hypot(T::Real::one())).recip()
        };
        let c = t.hypot(T::Real::one()).recip();
        Some(Self { c, s: t * c, d })
    }

    #[inline]
    fn entries(&self) -> (T, T, T, T) {
        let c = T::from_real(self.c);
        let s = T::from_real(self.s);
        (c, s, -(s * self.d), c * self.d)
    }

    /// `A <- A * G` on columns `p, q`.
    pub fn apply_right(&self, a: &mut Matrix<T>, p: usize, q: usize) {
        let (gpp, gpq, gqp, gqq) = self.entries();
        for k in 0..a.rows() {
            let x = a[(k, p)];
            let y = a[(k, q)];
            a[(k, p)] = x * gpp + y * gqp;
            a[(k, q)] = x * gpq + y * gqq;
        }
    }

    /// `A <- G^H * A` on rows `p, q`.
    pub fn apply_left_adjoint(&self, a: &mut Matrix<T>, p: usize, q: usize) {
        let (gpp, gpq, gqp, gqq) = self.entries();
        for k in 0..a.cols() {
            let x = a[(p, k)];
            let y = a[(q, k)];
            a[(p, k)] = gpp.conj() * x + gqp.conj() * y;
            a[(q, k)] = gpq.conj() * x + gqq.conj() * y;
        }
    }
}
