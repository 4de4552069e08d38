use serde::{Deserialize, Serialize};

use crate::error::{HsvdError, Result};
use crate::hsvd::{
    build_sigma_dense, compute_invariants, eigen_identity_defects, structural_nonzeros,
    HsvdFactors, Orientation,
};
use crate::linalg::ToleranceConfig;
use crate::matrix::Matrix;
use crate::scalar::{RealScalar, Scalar};
use crate::signature::{cond_scale, j_conjugate, j_unitary_defect, Signature};

/// Quality measures for a set of factors against the matrix they claim to decompose.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    /// `‖V^H B U − Σ‖_F` (right) or `‖A − U Σ V^H‖_F` (left).
    pub residual: f64,
    /// `‖U^H U − I‖_F`.
    pub unitary_defect: f64,
    /// `‖V^H J V − J‖_F`.
    pub j_unitary_defect: f64,
    pub sigma_pattern_ok: bool,
    /// Whether the invariants recomputed from the matrix equal the stored ones.
    pub invariants_match: bool,
    /// Defects of `(B^H J B) U = U Σ^T J Σ` and `(J B B^H) V = V J Σ Σ^T`.
    pub identity_defects: (f64, f64),
    /// `‖B‖_F`.
    pub b_norm: f64,
    /// `1 + ‖V‖_F^2 / m`.
    pub cond_scale: f64,
}

impl VerifyReport {
    /// Tolerance thresholds: residual `tol·(1+‖B‖)·c`, `U` defect `tol`, `V`
    /// defect `tol·c`, first identity `tol·(1+‖B‖²)`, second `tol·(1+‖B‖²)·c`,
    /// where `c` is the condition scale of `V`.
    pub fn thresholds(&self, tol: f64) -> [f64; 5] {
        let b2 = 1.0 + self.b_norm * self.b_norm;
        [
            tol * (1.0 + self.b_norm) * self.cond_scale,
            tol,
            tol * self.cond_scale,
            tol * b2,
            tol * b2 * self.cond_scale,
        ]
    }

    pub fn passes_at(&self, tol: f64) -> bool {
        let [r, u, v, e1, e2] = self.thresholds(tol);
        self.sigma_pattern_ok
            && self.invariants_match
            && self.residual <= r
            && self.unitary_defect <= u
            && self.j_unitary_defect <= v
            && self.identity_defects.0 <= e1
            && self.identity_defects.1 <= e2
    }

    pub fn passes(&self, tol: &ToleranceConfig) -> bool {
        self.passes_at(tol.residual_tol)
    }
}

/// Checks factors against `B` (right orientation) or `A` (left orientation).
pub fn check_factors<T: Scalar>(
    b: &Matrix<T>,
    sig: Signature,
    factors: &HsvdFactors<T>,
    tol: &ToleranceConfig,
) -> Result<VerifyReport> {
    let sf = &factors.sigma;
    let n = sf.n;
    let m = sig.m();
    if sf.signature != sig {
        return Err(HsvdError::DimensionMismatch(format!(
            "factors carry signature ({}, {}), expected ({}, {})",
            sf.signature.p(),
            sf.signature.q(),
            sig.p(),
            sig.q()
        )));
    }
    let expected_shape = match sf.orientation {
        Orientation::Right => (m, n),
        Orientation::Left => (n, m),
    };
    if b.shape() != expected_shape {
        return Err(HsvdError::DimensionMismatch(format!(
            "matrix is {}x{}, factors describe {}x{}",
            b.rows(),
            b.cols(),
            expected_shape.0,
            expected_shape.1
        )));
    }
    if factors.u.shape() != (n, n) || factors.v.shape() != (m, m) {
        return Err(HsvdError::DimensionMismatch(format!(
            "U is {}x{} and V is {}x{}, expected {n}x{n} and {m}x{m}",
            factors.u.rows(),
            factors.u.cols(),
            factors.v.rows(),
            factors.v.cols()
        )));
    }

    let (u, v) = (&factors.u, &factors.v);
    let (dense, sigma_pattern_ok): (Matrix<T>, bool) = match build_sigma_dense(sf) {
        Ok(d) => {
            let right = match sf.orientation {
                Orientation::Right => d.clone(),
                Orientation::Left => d.transpose(),
            };
            let allowed = structural_nonzeros(sf);
            let ok = (0..m)
                .all(|i| (0..n).all(|c| allowed.contains(&(i, c)) || right[(i, c)] == T::zero()));
            (d, ok)
        }
        Err(_) => (Matrix::zeros(expected_shape.0, expected_shape.1), false),
    };

    let residual = match sf.orientation {
        Orientation::Right => (&v.adjoint() * &(b * u)).distance(&dense),
        Orientation::Left => b.distance(&(&(u * &dense) * &v.adjoint())),
    };
    let unitary_defect = u.adjoint_mul(u).distance(&Matrix::identity(n));
    let j_defect = j_unitary_defect(sig, v)?;

    // Everything below works in the right-orientation view B = A^H, V_0 = J V J.
    let (b_right, v_right) = match sf.orientation {
        Orientation::Right => (b.clone(), v.clone()),
        Orientation::Left => (b.adjoint(), j_conjugate(sig, v)?),
    };
    let invariants_match = match compute_invariants(&b_right, sig, tol) {
        Ok(inv) => inv == sf.invariants,
        Err(_) => false,
    };
    let identities = if sigma_pattern_ok {
        let (a, c) = eigen_identity_defects(&b_right, sig, u, &v_right, sf)?;
        (a.as_f64(), c.as_f64())
    } else {
        (f64::INFINITY, f64::INFINITY)
    };

    Ok(VerifyReport {
        residual: residual.as_f64(),
        unitary_defect: unitary_defect.as_f64(),
        j_unitary_defect: j_defect.as_f64(),
        sigma_pattern_ok,
        invariants_match,
        identity_defects: identities,
        b_norm: b.frobenius_norm().as_f64(),
        cond_scale: cond_scale(v).as_f64(),
    })
}
