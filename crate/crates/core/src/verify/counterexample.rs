use serde::{Deserialize, Serialize};

use crate::hsvd::hsvd_left;
use crate::linalg::ToleranceConfig;
use crate::matrix::Matrix;
use crate::signature::{hyperexchange_to_junitary, j_unitary_defect, Signature};

/// Outcome of the checks on `A = (0, 1)` with `J = diag(1, -1)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleCertificate {
    /// Residual of the computed left decomposition.
    pub left_residual: f64,
    /// Computed Σ equals `(0 | 1)`.
    pub left_sigma_ok: bool,
    pub left_v_defect: f64,
    /// A value in the positive block forces `v11 = 0`, while every first column
    /// of an `O(1,1)` matrix has `v11^2 = 1 + v21^2 >= 1`.
    pub contradiction: bool,
    /// Smallest residual `min_c ‖A − c (v11, v21)‖` seen over the rapidity scan.
    pub scan_min_residual: f64,
    /// Analytic infimum of that residual over all of `O(1,1)`.
    pub analytic_infimum: f64,
    /// `‖A − u (Σ_Z S)(V_Z S)^T‖_F` after converting the hyperexchange factor.
    pub hyperexchange_round_trip: f64,
    /// J-unitarity defect of the converted factor.
    pub converted_defect: f64,
}

impl CounterexampleCertificate {
    pub fn holds(&self, tol: f64) -> bool {
        self.left_residual <= tol
            && self.left_sigma_ok
            && self.left_v_defect <= tol
            && self.contradiction
            && self.scan_min_residual >= self.analytic_infimum - tol
            && self.hyperexchange_round_trip <= tol
            && self.converted_defect <= tol
    }
}

/// `min_c ‖(0, 1) − c (cosh a, sinh a)‖` for real or unit-modulus-times-positive `c`.
///
/// Every element of `O(1,1)` has first column `±(cosh a, sinh a)`, so this is
/// the best a positive-block value can do at rapidity `a`.
pub fn split_form_min_residual(a: f64) -> f64 {
    let (ch, sh) = (a.cosh(), a.sinh());
    (ch * ch / (ch * ch + sh * sh)).sqrt()
}

pub fn counterexample_fixture() -> CounterexampleCertificate {
    let s = Signature::new(1, 1).expect("valid signature");
    let a = Matrix::from_rows(&[[0.0, 1.0]]);
    let tol = ToleranceConfig::default();

    let f = hsvd_left(&a, s, &tol).expect("left decomposition of (0, 1)");
    let left_sigma_ok =
        f.sigma_dense() == Matrix::from_rows(&[[0.0, 1.0]]) && f.sigma.neg_values == [1.0];
    let left_v_defect = j_unitary_defect(s, &f.v).unwrap_or(f64::INFINITY);

    // A = u (d, 0) V^T needs u d v11 = 0 and u d v21 = 1; with u d != 0 that is
    // v11 = 0, and J-unitarity of V demands v11^2 − v21^2 = 1.
    let v11 = 0.0f64;
    let contradiction = (0..=4000).all(|i| {
        let v21 = -20.0 + 0.01 * i as f64;
        (v11 * v11 - v21 * v21 - 1.0).abs() >= 1.0
    });
    let scan_min_residual = (0..=8000)
        .map(|i| split_form_min_residual(-20.0 + 0.005 * i as f64))
        .fold(f64::INFINITY, f64::min);
    let analytic_infimum = 0.5f64.sqrt();

    // Hyperexchange factor with Ĵ = diag(−1, 1): A = 1 · (1, 0) · V_Z^T.
    let vz = Matrix::from_rows(&[[0.0, 1.0], [1.0, 0.0]]);
    let sigma_z = Matrix::from_rows(&[[1.0, 0.0]]);
    let (round_trip, converted_defect) = match hyperexchange_to_junitary(s, &vz, &[-1, 1], 1e-12) {
        Ok(perm) => {
            let fz = &vz * &perm;
            let sz = &sigma_z * &perm;
            (
                a.distance(&(&sz * &fz.transpose())),
                j_unitary_defect(s, &fz).unwrap_or(f64::INFINITY),
            )
        }
        Err(_) => (f64::INFINITY, f64::INFINITY),
    };

    CounterexampleCertificate {
        left_residual: f.residual,
        left_sigma_ok,
        left_v_defect,
        contradiction,
        scan_min_residual,
        analytic_infimum,
        hyperexchange_round_trip: round_trip,
        converted_defect,
    }
}
