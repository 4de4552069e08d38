use serde::{Deserialize, Serialize};

use super::{j_dot, Signature};
use crate::error::{HsvdError, Result};
use crate::matrix::{axpy, norm};
use crate::scalar::{RealScalar, Scalar};
use num_traits::{Float, Zero};

/// Sign of `<x, x>_J` for a basis column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum JSign {
    Positive,
    Negative,
    Isotropic,
}

impl JSign {
    pub fn value(self) -> i8 {
        match self {
            JSign::Positive => 1,
            JSign::Negative => -1,
            JSign::Isotropic => 0,
        }
    }
}

/// A column with known J-norm sign: `<v, v>_J = ±1`, or `0` when isotropic.
#[derive(Debug, Clone, PartialEq)]
pub struct JBasisColumn<T: Scalar> {
    pub vector: Vec<T>,
    pub sign: JSign,
}

/// Hyperbolic Gram-Schmidt with full pivoting on `|<x, x>_J|`.
///
/// At each step the remaining candidate with the largest relative J-norm
/// `|<x, x>_J| / ‖x‖^2` is normalized to `<x, x>_J = ±1` and projected out of
/// every other candidate (modified, sequential form). The classical form, which
/// projects each candidate against all previous pivots at once, is not used:
/// cancellation in an indefinite form is not bounded by the Euclidean norm.
///
/// Fails with `IsotropicBreakdown` when every remaining candidate has
/// `|<x, x>_J| <= breakdown_tol * ‖x‖^2`.
pub fn hyperbolic_gram_schmidt<T: Scalar>(
    sig: Signature,
    basis: &[Vec<T>],
    breakdown_tol: T::Real,
) -> Result<Vec<JBasisColumn<T>>> {
    for b in basis {
        if b.len() != sig.m() {
            return Err(HsvdError::DimensionMismatch(format!(
                "basis vector of length {} for signature of size {}",
                b.len(),
                sig.m()
            )));
        }
    }
    let mut remaining: Vec<Vec<T>> = basis.to_vec();
    let mut out = Vec::with_capacity(basis.len());

    while !remaining.is_empty() {
        let mut best: Option<(usize, T::Real)> = None;
        for (idx, x) in remaining.iter().enumerate() {
            let n2 = norm(x).powi(2);
            let ratio = if n2 > T::Real::zero() {
                j_dot(sig, x, x).re().abs() / n2
            } else {
                T::Real::zero()
            };
            if best.is_none_or(|(_, r)| ratio > r) {
                best = Some((idx, ratio));
            }
        }
        let (idx, ratio) = best.expect("remaining is non-empty");
        if !(ratio > breakdown_tol) {
            return Err(HsvdError::IsotropicBreakdown {
                ratio: ratio.as_f64(),
            });
        }
        let mut pivot = remaining.remove(idx);
        let jn = j_dot(sig, &pivot, &pivot).re();
        let sign = if jn > T::Real::zero() {
            JSign::Positive
        } else {
            JSign::Negative
        };
        let inv = jn.abs().sqrt().recip();
        for x in pivot.iter_mut() {
            *x = x.scale(inv);
        }
        let s = T::from_real(T::Real::lit(sign.value() as f64));
        for y in remaining.iter_mut() {
            let coeff = s * j_dot(sig, &pivot, y);
            axpy(-coeff, &pivot, y);
        }
        out.push(JBasisColumn {
            vector: pivot,
            sign,
        });
    }
    Ok(out)
}
