//! Seeded random matrices used to build synthetic gauges.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::matrix::{axpy, dot, norm, Matrix};
use crate::scalar::{RealScalar, Scalar};
use num_traits::Zero;

/// Deterministic generator for a seed.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard normal scalar; complex values have unit expected modulus squared.
pub fn gaussian_scalar<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> T {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    if T::IS_COMPLEX {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        T::from_parts(T::Real::lit(re * h), T::Real::lit(im * h))
    } else {
        T::from_real(T::Real::lit(re))
    }
}

/// Matrix with i.i.d. standard normal entries.
pub fn gaussian_matrix<T: Scalar, R: Rng + ?Sized>(
    rows: usize,
    cols: usize,
    rng: &mut R,
) -> Matrix<T> {
    Matrix::from_fn(rows, cols, |_, _| gaussian_scalar(rng))
}

/// Random unitary (orthogonal in real mode) `n x n` matrix for a seed.
///
/// Orthonormalizes a seeded Gaussian matrix by modified Gram-Schmidt with one
/// reorthogonalization pass.
pub fn unitary_random<T: Scalar>(n: usize, seed: u64) -> Matrix<T> {
    let mut rng = seeded_rng(seed);
    unitary_from_rng(n, &mut rng)
}

pub(crate) fn unitary_from_rng<T: Scalar, R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix<T> {
    loop {
        let g: Matrix<T> = gaussian_matrix(n, n, rng);
        if let Some(q) = orthonormalize_columns(&g.columns()) {
            return Matrix::from_columns(n, &q);
        }
    }
}

/// Modified Gram-Schmidt with reorthogonalization. `None` if the columns are
/// numerically dependent.
pub(crate) fn orthonormalize_columns<T: Scalar>(cols: &[Vec<T>]) -> Option<Vec<Vec<T>>> {
    let mut out: Vec<Vec<T>> = Vec::with_capacity(cols.len());
    for c in cols {
        let mut x = c.clone();
        let start = norm(&x);
        for _ in 0..2 {
            for q in &out {
                let r = dot(q, &x);
                axpy(-r, q, &mut x);
            }
        }
        let nx = norm(&x);
        if !(nx > T::Real::lit(1e-8) * start) || nx == T::Real::zero() {
            return None;
        }
        out.push(x.into_iter().map(|v| v.unscale(nx)).collect());
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn one_by_one_is_unit_modulus() {
        let q: Matrix<Complex64> = unitary_random(1, 42);
        assert!((q[(0, 0)].norm() - 1.0).abs() < 1e-15);
        let r: Matrix<f64> = unitary_random(1, 42);
        assert!((r[(0, 0)].abs() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn deterministic_per_seed() {
        let a: Matrix<f64> = unitary_random(3, 7);
        let b: Matrix<f64> = unitary_random(3, 7);
        assert_eq!(a, b);
        let c: Matrix<f64> = unitary_random(3, 8);
        assert_ne!(a, c);
    }

    #[test]
    fn orthonormal_to_working_precision() {
        let q: Matrix<f64> = unitary_random(4, 1);
        assert!(q.adjoint_mul(&q).distance(&Matrix::identity(4)) <= 1e-12);
        let z: Matrix<Complex64> = unitary_random(6, 1);
        assert!(z.adjoint_mul(&z).distance(&Matrix::identity(6)) <= 1e-12);
    }
}
