use crate::linalg::rotation::JacobiRotation;
use crate::linalg::tolerance::ToleranceConfig;
use crate::matrix::{dot, norm, Matrix};
use crate::scalar::{RealScalar, Scalar};
use num_traits::{Float, Zero};

const MAX_SWEEPS: usize = 80;

/// Singular value decomposition `A = U_thin * diag(sigma) * V^H`.
#[derive(Debug, Clone)]
pub struct Svd<T: Scalar> {
    /// One value per column of `A`, descending.
    pub singular_values: Vec<T::Real>,
    /// `rows x cols`; column `k` is `A v_k / sigma_k`, or zero when `sigma_k` is zero.
    pub u: Matrix<T>,
    /// Full `cols x cols` unitary matrix of right singular vectors.
    pub v: Matrix<T>,
    pub converged: bool,
}

impl<T: Scalar> Svd<T> {
    pub fn sigma_max(&self) -> T::Real {
        self.singular_values
            .first()
            .copied()
            .unwrap_or_else(T::Real::zero)
    }

    /// Number of singular values strictly above `threshold`.
    pub fn count_above(&self, threshold: T::Real) -> usize {
        self.singular_values
            .iter()
            .filter(|&&s| s > threshold)
            .count()
    }
}

/// One-sided (Hestenes) Jacobi SVD.
///
/// Orthogonalizes the columns of `A` in place by plane rotations; the rotations
/// accumulate into `V`. Accurate for small singular values because `A^H A` is
/// never formed.
pub fn jacobi_svd<T: Scalar>(a: &Matrix<T>) -> Svd<T> {
    let (m, n) = a.shape();
    let mut w = a.clone();
    let mut v = Matrix::identity(n);
    let eps = T::Real::epsilon();
    let mut converged = n < 2;

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let cp = w.col(p);
                let cq = w.col(q);
                let alpha = norm(&cp).powi(2);
                let beta = norm(&cq).powi(2);
                if alpha == T::Real::zero() || beta == T::Real::zero() {
                    continue;
                }
                let gamma = dot(&cp, &cq);
                if gamma.modulus() <= eps * (alpha * beta).sqrt() {
                    continue;
                }
                if let Some(rot) = JacobiRotation::annihilating(alpha, beta, gamma) {
                    rot.apply_right(&mut w, p, q);
                    rot.apply_right(&mut v, p, q);
                    rotated = true;
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }

    let norms: Vec<T::Real> = (0..n).map(|j| norm(&w.col(j))).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        norms[j]
            .partial_cmp(&norms[i])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let singular_values: Vec<T::Real> = order.iter().map(|&i| norms[i]).collect();
    let v = v.select_columns(&order);
    let mut u = Matrix::zeros(m, n);
    for (k, &src) in order.iter().enumerate() {
        let s = norms[src];
        if s > T::Real::zero() {
            let col: Vec<T> = w.col(src).into_iter().map(|x| x.unscale(s)).collect();
            u.set_col(k, &col);
        }
    }
    Svd {
        singular_values,
        u,
        v,
        converged,
    }
}

/// Singular values only, descending, `min(rows, cols)` of them.
pub fn singular_values<T: Scalar>(a: &Matrix<T>) -> Vec<T::Real> {
    let k = a.rows().min(a.cols());
    let svd = if a.rows() >= a.cols() {
        jacobi_svd(a)
    } else {
        jacobi_svd(&a.adjoint())
    };
    svd.singular_values.into_iter().take(k).collect()
}

/// Number of singular values above `rank_rtol * max(rows, cols) * sigma_max`.
pub fn numerical_rank<T: Scalar>(a: &Matrix<T>, tol: &ToleranceConfig) -> usize {
    let sv = singular_values(a);
    let Some(&smax) = sv.first() else {
        return 0;
    };
    if smax == T::Real::zero() {
        return 0;
    }
    let dim = T::Real::lit(a.rows().max(a.cols()) as f64);
    let threshold = T::Real::lit(tol.rank_rtol) * dim * smax;
    sv.iter().filter(|&&s| s > threshold).count()
}

/// Orthonormal basis of the null space of `a`, assuming it has dimension `dim`.
///
/// Returns the trailing `dim` right singular vectors together with the
/// smallest singular value that was kept outside the null space (`None` when
/// the whole domain is the null space).
pub(crate) fn null_space<T: Scalar>(a: &Matrix<T>, dim: usize) -> (Matrix<T>, Option<T::Real>) {
    let n = a.cols();
    assert!(dim <= n, "null space dimension exceeds domain");
    let svd = jacobi_svd(a);
    let keep: Vec<usize> = ((n - dim)..n).collect();
    let last_kept = if dim < n {
        Some(svd.singular_values[n - dim - 1])
    } else {
        None
    };
    (svd.v.select_columns(&keep), last_kept)
}
