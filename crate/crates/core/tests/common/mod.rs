#![allow(dead_code)]

use hsvd::hsvd::{eigen_identity_defects, hsvd_left, hsvd_right, HsvdFactors};
use hsvd::signature::{cond_scale, j_conjugate};
use hsvd::{Matrix, RealScalar, Scalar, Signature, ToleranceConfig};

/// Asserts both eigen-structure identities for right-orientation factors of `b`.
pub fn assert_identities<T: Scalar>(b: &Matrix<T>, sig: Signature, f: &HsvdFactors<T>, tol: f64) {
    let (d1, d2) = eigen_identity_defects(b, sig, &f.u, &f.v, &f.sigma).unwrap();
    let b2 = 1.0 + b.frobenius_norm_sq().as_f64();
    let c = cond_scale(&f.v).as_f64();
    assert!(
        d1.as_f64() <= tol * b2,
        "(B^H J B) U identity defect {:e}",
        d1.as_f64()
    );
    assert!(
        d2.as_f64() <= tol * b2 * c,
        "(J B B^H) V identity defect {:e}",
        d2.as_f64()
    );
}

/// `hsvd_right` followed by the identity checks and the residual contract.
pub fn right<T: Scalar>(b: &Matrix<T>, sig: Signature) -> HsvdFactors<T> {
    let tol = ToleranceConfig::default();
    let f = hsvd_right(b, sig, &tol).unwrap();
    assert_identities(b, sig, &f, tol.residual_tol);
    let bound = tol.residual_tol * (1.0 + b.frobenius_norm().as_f64()) * cond_scale(&f.v).as_f64();
    assert!(
        f.residual.as_f64() <= bound,
        "residual {:e}",
        f.residual.as_f64()
    );
    f
}

/// `hsvd_left` with the identities checked in the equivalent right view.
pub fn left<T: Scalar>(a: &Matrix<T>, sig: Signature) -> HsvdFactors<T> {
    let tol = ToleranceConfig::default();
    let f = hsvd_left(a, sig, &tol).unwrap();
    let right_view = HsvdFactors {
        u: f.u.clone(),
        v: j_conjugate(sig, &f.v).unwrap(),
        sigma: f.sigma.flipped(),
        residual: f.residual,
        tolerances: tol,
    };
    assert_identities(&a.adjoint(), sig, &right_view, tol.residual_tol);
    let bound = tol.residual_tol * (1.0 + a.frobenius_norm().as_f64()) * cond_scale(&f.v).as_f64();
    assert!(
        f.residual.as_f64() <= bound,
        "residual {:e}",
        f.residual.as_f64()
    );
    f
}

pub fn sig(p: usize, q: usize) -> Signature {
    Signature::new(p, q).unwrap()
}
