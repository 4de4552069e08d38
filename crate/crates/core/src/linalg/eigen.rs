use crate::error::{HsvdError, Result};
use crate::linalg::rotation::JacobiRotation;
use crate::linalg::tolerance::ToleranceConfig;
use crate::matrix::Matrix;
use crate::scalar::{RealScalar, Scalar};
use num_traits::{Float, One, Zero};

const MAX_SWEEPS: usize = 64;

/// Eigen-pairs of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct EigenResult<T: Scalar> {
    /// Eigenvalues in descending order.
    pub values: Vec<T::Real>,
    /// Column `k` is the unit eigenvector for `values[k]`.
    pub vectors: Matrix<T>,
}

impl<T: Scalar> EigenResult<T> {
    /// `V * diag(values) * V^H`.
    pub fn reconstruct(&self) -> Matrix<T> {
        let n = self.values.len();
        let scaled = Matrix::from_fn(n, n, |i, j| self.vectors[(i, j)].scale(self.values[j]));
        &scaled * &self.vectors.adjoint()
    }
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Eigenvalues come back sorted descending. Each eigenvector is normalized so
/// that its largest-magnitude component is real and positive.
pub fn hermitian_eigendecompose<T: Scalar>(
    m: &Matrix<T>,
    tol: &ToleranceConfig,
) -> Result<EigenResult<T>> {
    if !m.is_square() {
        return Err(HsvdError::DimensionMismatch(format!(
            "eigendecomposition needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let defect = m.hermitian_defect();
    let bound = T::Real::lit(tol.residual_tol) * (T::Real::one() + m.frobenius_norm());
    if !(defect <= bound) {
        return Err(HsvdError::NotHermitian {
            defect: defect.as_f64(),
        });
    }

    let n = m.rows();
    let half = T::Real::lit(0.5);
    let mut a = Matrix::from_fn(n, n, |i, j| (m[(i, j)] + m[(j, i)].conj()).scale(half));
    for i in 0..n {
        a[(i, i)] = T::from_real(a[(i, i)].re());
    }
    let mut v = Matrix::identity(n);

    let scale = a.frobenius_norm();
    let floor = T::Real::epsilon() * T::Real::epsilon() * scale * scale;
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_sq(&a) <= floor {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let Some(rot) =
                    JacobiRotation::annihilating(a[(p, p)].re(), a[(q, q)].re(), a[(p, q)])
                else {
                    continue;
                };
                rot.apply_right(&mut a, p, q);
                rot.apply_left_adjoint(&mut a, p, q);
                a[(p, q)] = T::zero();
                a[(q, p)] = T::zero();
                a[(p, p)] = T::from_real(a[(p, p)].re());
                a[(q, q)] = T::from_real(a[(q, q)].re());
                rot.apply_right(&mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_sq(&a) > floor {
        return Err(HsvdError::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(j, j)]
            .re()
            .partial_cmp(&a[(i, i)].re())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let values = order.iter().map(|&i| a[(i, i)].re()).collect();
    let mut vectors = v.select_columns(&order);
    for k in 0..n {
        normalize_phase_column(&mut vectors, k);
    }
    Ok(EigenResult { values, vectors })
}

fn off_diagonal_sq<T: Scalar>(a: &Matrix<T>) -> T::Real {
    let mut acc = T::Real::zero();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if i != j {
                acc += a[(i, j)].abs_sq();
            }
        }
    }
    acc
}

/// Rotates column `k` so its largest-magnitude entry is real and positive.
pub(crate) fn normalize_phase_column<T: Scalar>(m: &mut Matrix<T>, k: usize) {
    let col = m.col(k);
    let mut best = 0;
    let mut best_mod = T::Real::zero();
    // Leading entries win near-ties so that rounding noise does not flip the choice.
    let slack = T::Real::one() + T::Real::lit(1e3) * T::Real::epsilon();
    for (i, x) in col.iter().enumerate() {
        let r = x.modulus();
        if r > best_mod * slack {
            best = i;
            best_mod = r;
        }
    }
    if best_mod == T::Real::zero() {
        return;
    }
    let fix = col[best].phase().conj();
    for i in 0..m.rows() {
        m[(i, k)] = m[(i, k)] * fix;
    }
    m[(best, k)] = T::from_real(m[(best, k)].re());
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::random::gaussian_matrix;
    use num_complex::Complex64;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    #[test]
    fn diagonal_input() {
        let m = Matrix::diag(&[2.0, -1.0]);
        let e = hermitian_eigendecompose(&m, &tol()).unwrap();
        assert_eq!(e.values, vec![2.0, -1.0]);
        assert_eq!(e.vectors, Matrix::identity(2));
    }

    #[test]
    fn one_by_one_from_first_example() {
        let m = Matrix::from_rows(&[[-3.0]]);
        let e = hermitian_eigendecompose(&m, &tol()).unwrap();
        assert_eq!(e.values, vec![-3.0]);
        assert_eq!(e.vectors[(0, 0)], 1.0);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = Matrix::from_rows(&[[1.0, 2.0], [0.0, 1.0]]);
        assert!(matches!(
            hermitian_eigendecompose(&m, &tol()),
            Err(HsvdError::NotHermitian { .. })
        ));
        let r = Matrix::<f64>::zeros(2, 3);
        assert!(matches!(
            hermitian_eigendecompose(&r, &tol()),
            Err(HsvdError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn complex_reconstruction_and_unitarity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g: Matrix<Complex64> = gaussian_matrix(6, 6, &mut rng);
        let h = &g + &g.adjoint();
        let e = hermitian_eigendecompose(&h, &tol()).unwrap();
        let rec = e.reconstruct();
        assert!(rec.distance(&h) <= 1e-12 * h.frobenius_norm());
        let gram = e.vectors.adjoint_mul(&e.vectors);
        assert!(gram.distance(&Matrix::identity(6)) <= 1e-12);
        for w in e.values.windows(2) {
            assert!(w[0] >= w[1]);
        }
        // trace invariant
        let tr: f64 = e.values.iter().sum();
        assert!((tr - h.trace().re).abs() <= 1e-10 * (1.0 + tr.abs()));
    }

    #[test]
    fn phase_convention_largest_component_real_positive() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g: Matrix<Complex64> = gaussian_matrix(4, 4, &mut rng);
        let h = &g + &g.adjoint();
        let e = hermitian_eigendecompose(&h, &tol()).unwrap();
        for k in 0..4 {
            let col = e.vectors.col(k);
            let (idx, _) = col
                .iter()
                .enumerate()
                .max_by(|a, b| a.1.norm().partial_cmp(&b.1.norm()).unwrap())
                .unwrap();
            assert!(col[idx].re > 0.0);
            assert!(col[idx].im.abs() < 1e-15);
        }
    }

    #[test]
    fn repeated_eigenvalues_give_orthonormal_basis() {
        let m = Matrix::from_rows(&[[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 5.0]]);
        let e = hermitian_eigendecompose(&m, &tol()).unwrap();
        assert_eq!(e.values, vec![5.0, 1.0, 1.0]);
        let gram = e.vectors.adjoint_mul(&e.vectors);
        assert!(gram.distance(&Matrix::identity(3)) < 1e-14);
    }
}
