use super::{j_dot, Signature};
use crate::error::{HsvdError, Result};
use crate::linalg::{jacobi_svd, ToleranceConfig};
use crate::matrix::{axpy, dot, norm, Matrix};
use crate::scalar::{RealScalar, Scalar};
use num_traits::{Float, Zero};

/// Hyperbolic pair built around an isotropic column `c`.
///
/// `plus = (c + dual) / 2` and `minus = (dual - c) / 2`, so that
/// `<plus, plus>_J = 1`, `<minus, minus>_J = -1`, `<plus, minus>_J = 0` and
/// `plus - minus = c`.
#[derive(Debug, Clone, PartialEq)]
pub struct IsotropicPair<T: Scalar> {
    pub plus: Vec<T>,
    pub minus: Vec<T>,
    pub dual: Vec<T>,
}

/// Completes mutually J-orthogonal isotropic columns `c_i` into hyperbolic pairs.
///
/// The duals `d_i` are drawn from `span(ambient)` and satisfy
/// `<c_i, d_k>_J = 2 δ_ik` and `<d_i, d_k>_J = 0`. They are found by a
/// minimum-norm solve of the linear constraints followed by two closed-form
/// corrections along the `c_i`, neither of which disturbs the linear
/// constraints.
pub fn isotropic_pair_complete<T: Scalar>(
    sig: Signature,
    c_list: &[Vec<T>],
    ambient: &[Vec<T>],
    tol: &ToleranceConfig,
) -> Result<Vec<IsotropicPair<T>>> {
    let m = sig.m();
    if let Some(bad) = c_list.iter().chain(ambient).find(|v| v.len() != m) {
        return Err(HsvdError::DimensionMismatch(format!(
            "column of length {} for signature of size {m}",
            bad.len()
        )));
    }
    if c_list.is_empty() {
        return Ok(Vec::new());
    }

    let rtol = T::Real::lit(tol.residual_tol);
    for (i, ci) in c_list.iter().enumerate() {
        for ck in &c_list[i..] {
            let defect = j_dot(sig, ci, ck).modulus();
            if defect > rtol * norm(ci) * norm(ck) {
                return Err(HsvdError::NotIsotropic {
                    index: i,
                    defect: defect.as_f64(),
                });
            }
        }
    }

    let basis = orthonormal_span(ambient, tol);
    if basis.is_empty() {
        return Err(HsvdError::DualNotFound {
            index: 0,
            residual: 2.0,
        });
    }
    let a = Matrix::from_columns(m, &basis);

    // G = C^H J A, one row per isotropic column.
    let j = c_list.len();
    let g = Matrix::from_fn(j, basis.len(), |i, k| j_dot(sig, &c_list[i], &basis[k]));
    let svd = jacobi_svd(&g);
    let smax = svd.sigma_max();
    let cutoff = T::Real::lit(tol.rank_rtol) * T::Real::lit(j.max(basis.len()) as f64) * smax;

    let two = T::from_real(T::Real::lit(2.0));
    let mut duals: Vec<Vec<T>> = Vec::with_capacity(j);
    for i in 0..j {
        let mut rhs = vec![T::zero(); j];
        rhs[i] = two;
        // Minimum-norm least squares through the thin SVD.
        let mut y = vec![T::zero(); basis.len()];
        for (k, &s) in svd.singular_values.iter().enumerate() {
            if !(s > cutoff) {
                continue;
            }
            let uk = svd.u.col(k);
            let coeff = dot(&uk, &rhs).scale(s.recip());
            axpy(coeff, &svd.v.col(k), &mut y);
        }
        let resid: Vec<T> = g
            .mul_vec(&y)
            .iter()
            .zip(&rhs)
            .map(|(&a, &b)| a - b)
            .collect();
        let residual = norm(&resid);
        if !(residual <= rtol * T::Real::lit(2.0)) {
            return Err(HsvdError::DualNotFound {
                index: i,
                residual: residual.as_f64(),
            });
        }
        duals.push(a.mul_vec(&y));
    }

    let quarter = T::Real::lit(0.25);
    let half = T::Real::lit(0.5);
    for i in 0..j {
        // Restore isotropy of d_i: d_i <- d_i - (<d_i, d_i>_J / 4) c_i.
        let alpha = j_dot(sig, &duals[i], &duals[i]).re() * quarter;
        axpy(T::from_real(-alpha), &c_list[i], &mut duals[i]);
    }
    for k in 0..j {
        for i in 0..k {
            // Zero <d_i, d_k>_J using c_i, which is J-orthogonal to d_k.
            let beta = j_dot(sig, &duals[i], &duals[k]).scale(half);
            let (ci, dk) = (&c_list[i], &mut duals[k]);
            axpy(-beta, ci, dk);
        }
    }

    Ok(c_list
        .iter()
        .zip(duals)
        .map(|(c, d)| {
            let plus = c
                .iter()
                .zip(&d)
                .map(|(&x, &y)| (x + y).scale(half))
                .collect();
            let minus = c
                .iter()
                .zip(&d)
                .map(|(&x, &y)| (y - x).scale(half))
                .collect();
            IsotropicPair {
                plus,
                minus,
                dual: d,
            }
        })
        .collect())
}

/// Orthonormal basis of the span of `cols`.
fn orthonormal_span<T: Scalar>(cols: &[Vec<T>], tol: &ToleranceConfig) -> Vec<Vec<T>> {
    if cols.is_empty() {
        return Vec::new();
    }
    let m = cols[0].len();
    let a = Matrix::from_columns(m, cols);
    let svd = jacobi_svd(&a);
    let smax = svd.sigma_max();
    if smax == T::Real::zero() {
        return Vec::new();
    }
    let cutoff = T::Real::lit(tol.rank_rtol) * T::Real::lit(m.max(cols.len()) as f64) * smax;
    (0..svd.singular_values.len())
        .filter(|&k| svd.singular_values[k] > cutoff)
        .map(|k| svd.u.col(k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity_cols(m: usize) -> Vec<Vec<f64>> {
        Matrix::<f64>::identity(m).columns()
    }

    #[test]
    fn second_example_pair() {
        let s = Signature::new(1, 1).unwrap();
        let pairs = isotropic_pair_complete(
            s,
            &[vec![2.0, -2.0]],
            &identity_cols(2),
            &ToleranceConfig::default(),
        )
        .unwrap();
        let p = &pairs[0];
        assert!((p.plus[0] - 1.25).abs() < 1e-15 && (p.plus[1] + 0.75).abs() < 1e-15);
        assert!((p.minus[0] + 0.75).abs() < 1e-15 && (p.minus[1] - 1.25).abs() < 1e-15);
    }

    #[test]
    fn scaled_isotropic_column() {
        let s = Signature::new(1, 1).unwrap();
        let c = vec![4.0, -4.0];
        let pairs = isotropic_pair_complete(
            s,
            &[c.clone()],
            &identity_cols(2),
            &ToleranceConfig::default(),
        )
        .unwrap();
        let p = &pairs[0];
        assert!((j_dot(s, &p.plus, &p.plus) - 1.0).abs() < 1e-14);
        assert!((j_dot(s, &p.minus, &p.minus) + 1.0).abs() < 1e-14);
        assert!(j_dot(s, &p.plus, &p.minus).abs() < 1e-14);
        for i in 0..2 {
            assert!((p.plus[i] - p.minus[i] - c[i]).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_non_isotropic_input() {
        let s = Signature::new(1, 1).unwrap();
        let err = isotropic_pair_complete(
            s,
            &[vec![1.0, 0.0]],
            &identity_cols(2),
            &ToleranceConfig::default(),
        )
        .unwrap_err();
        assert!(matches!(err, HsvdError::NotIsotropic { .. }));
    }

    #[test]
    fn ambient_too_small_has_no_dual() {
        // Ambient = span{c} itself: <c, d>_J = 0 for every d in it.
        let s = Signature::new(1, 1).unwrap();
        let err = isotropic_pair_complete(
            s,
            &[vec![1.0, 1.0]],
            &[vec![1.0, 1.0]],
            &ToleranceConfig::default(),
        )
        .unwrap_err();
        assert!(matches!(err, HsvdError::DualNotFound { index: 0, .. }));
    }

    #[test]
    fn two_pairs_in_signature_two_two() {
        let s = Signature::new(2, 2).unwrap();
        let c1 = vec![1.0, 0.0, 1.0, 0.0];
        let c2 = vec![0.0, 1.0, 0.0, -1.0];
        let pairs =
            isotropic_pair_complete(s, &[c1, c2], &identity_cols(4), &ToleranceConfig::default())
                .unwrap();
        let cols: Vec<&Vec<f64>> = pairs.iter().flat_map(|p| [&p.plus, &p.minus]).collect();
        let signs = [1.0, -1.0, 1.0, -1.0];
        for (a, x) in cols.iter().enumerate() {
            for (b, y) in cols.iter().enumerate() {
                let want = if a == b { signs[a] } else { 0.0 };
                assert!((j_dot(s, x, y) - want).abs() < 1e-12, "({a},{b})");
            }
        }
    }
}
