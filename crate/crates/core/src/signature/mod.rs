//! Geometry of the indefinite inner product `<x, y>_J = x^H J y` with
//! `J = diag(I_p, -I_q)`.

mod gram_schmidt;
mod hyperexchange;
mod isotropic;
mod random;

use serde::{Deserialize, Serialize};

use crate::error::{HsvdError, Result};
use crate::matrix::Matrix;
use crate::scalar::{RealScalar, Scalar};
use num_traits::One;

pub use gram_schmidt::{hyperbolic_gram_schmidt, JBasisColumn, JSign};
pub use hyperexchange::{hyperexchange_to_junitary, permutation_for_signs};
pub use isotropic::{isotropic_pair_complete, IsotropicPair};
pub use random::j_unitary_random;

/// Inertia `(p, q)` of the signature matrix `J = diag(I_p, -I_q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    p: usize,
    q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q == 0 {
            return Err(HsvdError::InvalidSignature { p, q });
        }
        Ok(Self { p, q })
    }

    /// The Euclidean signature `J = I_m`.
    pub fn euclidean(m: usize) -> Result<Self> {
        Self::new(m, 0)
    }

    #[inline]
    pub fn p(&self) -> usize {
        self.p
    }

    #[inline]
    pub fn q(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.p + self.q
    }

    /// `J[i][i]` as `+1` or `-1`.
    #[inline]
    pub fn sign(&self, i: usize) -> i8 {
        if i < self.p {
            1
        } else {
            -1
        }
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.m()).map(|i| self.sign(i)).collect()
    }

    pub fn j_matrix<T: Scalar>(&self) -> Matrix<T> {
        let mut j = Matrix::identity(self.m());
        for i in self.p..self.m() {
            j[(i, i)] = -T::one();
        }
        j
    }

    pub(crate) fn check_rows<T: Scalar>(&self, x: &Matrix<T>) -> Result<()> {
        if x.rows() != self.m() {
            return Err(HsvdError::DimensionMismatch(format!(
                "expected {} rows for signature ({}, {}), got {}",
                self.m(),
                self.p,
                self.q,
                x.rows()
            )));
        }
        Ok(())
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.m() {
            return Err(HsvdError::DimensionMismatch(format!(
                "expected vector of length {}, got {len}",
                self.m()
            )));
        }
        Ok(())
    }
}

/// `J * x`: rows `p..m` negated.
pub fn apply_j<T: Scalar>(sig: Signature, x: &Matrix<T>) -> Result<Matrix<T>> {
    sig.check_rows(x)?;
    Ok(Matrix::from_fn(x.rows(), x.cols(), |i, j| {
        if i < sig.p {
            x[(i, j)]
        } else {
            -x[(i, j)]
        }
    }))
}

/// `J * x` for a single vector.
pub fn apply_j_vec<T: Scalar>(sig: Signature, x: &[T]) -> Result<Vec<T>> {
    sig.check_len(x.len())?;
    Ok(j_vec(sig, x))
}

pub(crate) fn j_vec<T: Scalar>(sig: Signature, x: &[T]) -> Vec<T> {
    x.iter()
        .enumerate()
        .map(|(i, &v)| if i < sig.p { v } else { -v })
        .collect()
}

/// `x^H J y`.
pub fn j_inner<T: Scalar>(sig: Signature, x: &[T], y: &[T]) -> Result<T> {
    sig.check_len(x.len())?;
    sig.check_len(y.len())?;
    Ok(j_dot(sig, x, y))
}

pub(crate) fn j_dot<T: Scalar>(sig: Signature, x: &[T], y: &[T]) -> T {
    let mut acc = T::zero();
    for (i, (&a, &b)) in x.iter().zip(y).enumerate() {
        let t = a.conj() * b;
        if i < sig.p {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

/// `X^H J Y`.
pub fn j_gram<T: Scalar>(sig: Signature, x: &Matrix<T>, y: &Matrix<T>) -> Result<Matrix<T>> {
    sig.check_rows(x)?;
    sig.check_rows(y)?;
    Ok(x.adjoint_mul(&apply_j(sig, y)?))
}

/// `‖V^H J V - J‖_F`.
pub fn j_unitary_defect<T: Scalar>(sig: Signature, v: &Matrix<T>) -> Result<T::Real> {
    if v.shape() != (sig.m(), sig.m()) {
        return Err(HsvdError::DimensionMismatch(format!(
            "J-unitarity test needs a {m}x{m} matrix, got {}x{}",
            v.rows(),
            v.cols(),
            m = sig.m()
        )));
    }
    Ok(j_gram(sig, v, v)?.distance(&sig.j_matrix()))
}

/// Tests `V^H J V = J`; returns the verdict and the defect `‖V^H J V - J‖_F`.
pub fn is_j_unitary<T: Scalar>(
    sig: Signature,
    v: &Matrix<T>,
    tol: T::Real,
) -> Result<(bool, T::Real)> {
    let defect = j_unitary_defect(sig, v)?;
    Ok((defect <= tol, defect))
}

/// `V^{-1} = J V^H J` for J-unitary `V`.
pub fn j_inverse<T: Scalar>(sig: Signature, v: &Matrix<T>) -> Result<Matrix<T>> {
    let vh = v.adjoint();
    let jvh = apply_j(sig, &vh)?;
    Ok(apply_j(sig, &jvh.adjoint())?.adjoint())
}

/// `J V J`, the inverse adjoint `V^{-H}` of a J-unitary `V`.
pub fn j_conjugate<T: Scalar>(sig: Signature, v: &Matrix<T>) -> Result<Matrix<T>> {
    let jv = apply_j(sig, v)?;
    Ok(apply_j(sig, &jv.transpose())?.transpose())
}

/// Conditioning factor `1 + ‖V‖_F^2 / m` used to scale tolerances for J-unitary factors.
pub fn cond_scale<T: Scalar>(v: &Matrix<T>) -> T::Real {
    let m = T::Real::lit(v.rows().max(1) as f64);
    T::Real::one() + v.frobenius_norm_sq() / m
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    #[test]
    fn signature_validation() {
        assert!(Signature::new(0, 0).is_err());
        assert_eq!(Signature::new(0, 3).unwrap().m(), 3);
        assert_eq!(sig(2, 1).signs(), vec![1, 1, -1]);
    }

    #[test]
    fn apply_j_examples() {
        let x = Matrix::column(&[1.0, 2.0]);
        assert_eq!(
            apply_j(sig(1, 1), &x).unwrap(),
            Matrix::column(&[1.0, -2.0])
        );
        assert_eq!(apply_j(sig(2, 0), &x).unwrap(), x);
        let y = Matrix::column(&[3.0, 4.0, 5.0]);
        assert_eq!(
            apply_j(sig(2, 1), &y).unwrap(),
            Matrix::column(&[3.0, 4.0, -5.0])
        );
        assert!(matches!(
            apply_j(sig(2, 2), &y),
            Err(HsvdError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn apply_j_is_an_involution() {
        let x = Matrix::from_rows(&[
            [Complex64::new(1.5, -0.25), Complex64::new(0.0, 2.0)],
            [Complex64::new(-3.0, 1.0), Complex64::new(7.0, 0.5)],
            [Complex64::new(0.1, 0.2), Complex64::new(-0.3, 0.4)],
        ]);
        let s = sig(1, 2);
        assert_eq!(apply_j(s, &apply_j(s, &x).unwrap()).unwrap(), x);
    }

    #[test]
    fn j_inner_examples() {
        let s = sig(1, 1);
        assert_eq!(j_inner(s, &[1.0, 2.0], &[1.0, 2.0]).unwrap(), -3.0);
        assert_eq!(j_inner(s, &[2.0, 2.0], &[2.0, 2.0]).unwrap(), 0.0);
        assert_eq!(
            j_inner(sig(3, 0), &[1.0, 2.0, 2.0], &[1.0, 2.0, 2.0]).unwrap(),
            9.0
        );
        let z = [Complex64::new(1.0, 1.0), Complex64::new(0.0, 2.0)];
        let v = j_inner(s, &z, &z).unwrap();
        assert_eq!(v, Complex64::new(-2.0, 0.0));
    }

    #[test]
    fn is_j_unitary_examples() {
        let s = sig(1, 1);
        let r3 = 3f64.sqrt();
        let v0 = Matrix::from_rows(&[[-2.0 / r3, -1.0 / r3], [1.0 / r3, 2.0 / r3]]);
        let (ok, d) = is_j_unitary(s, &v0, 1e-12).unwrap();
        assert!(ok, "defect {d}");
        let (ok, d) = is_j_unitary(s, &Matrix::<f64>::identity(2), 1e-12).unwrap();
        assert!(ok && d == 0.0);
        let scaled = Matrix::from_rows(&[[2.0, 0.0], [0.0, 1.0]]);
        assert!(!is_j_unitary(s, &scaled, 1e-12).unwrap().0);
    }

    #[test]
    fn inverse_and_conjugate_of_j_unitary() {
        let s = sig(1, 1);
        let (c, sh) = (1.2f64.cosh(), 1.2f64.sinh());
        let v = Matrix::from_rows(&[[c, sh], [sh, c]]);
        let inv = j_inverse(s, &v).unwrap();
        assert!((&inv * &v).distance(&Matrix::identity(2)) < 1e-14);
        let conj = j_conjugate(s, &v).unwrap();
        assert!(conj.distance(&inv.adjoint()) < 1e-14);
    }
}
