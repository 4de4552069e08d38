use super::{j_gram, Signature};
use crate::error::{HsvdError, Result};
use crate::matrix::Matrix;
use crate::scalar::{RealScalar, Scalar};

/// Stable permutation `σ` with `J[σ(i)] = jhat[i]`: the a-th `+1` of `jhat`
/// goes to position `a`, the b-th `-1` to position `p + b`.
pub fn permutation_for_signs(sig: Signature, jhat: &[i8]) -> Result<Vec<usize>> {
    if jhat.len() != sig.m() {
        return Err(HsvdError::DimensionMismatch(format!(
            "sign pattern of length {} for signature of size {}",
            jhat.len(),
            sig.m()
        )));
    }
    if let Some(bad) = jhat.iter().find(|&&s| s != 1 && s != -1) {
        return Err(HsvdError::DimensionMismatch(format!(
            "sign pattern entries must be +1 or -1, found {bad}"
        )));
    }
    let positives = jhat.iter().filter(|&&s| s == 1).count();
    if positives != sig.p() {
        return Err(HsvdError::InertiaMismatch {
            expected: sig.p(),
            found: positives,
        });
    }
    let (mut next_pos, mut next_neg) = (0, sig.p());
    Ok(jhat
        .iter()
        .map(|&s| {
            if s == 1 {
                next_pos += 1;
                next_pos - 1
            } else {
                next_neg += 1;
                next_neg - 1
            }
        })
        .collect())
}

/// Permutation matrix `S` turning a hyperexchange matrix into a J-unitary one.
///
/// Requires `V^H J V = diag(jhat)` to within `tol`. The returned `S` satisfies
/// `S J S^T = diag(jhat)`, hence `(V S)^H J (V S) = J`.
pub fn hyperexchange_to_junitary<T: Scalar>(
    sig: Signature,
    v: &Matrix<T>,
    jhat: &[i8],
    tol: T::Real,
) -> Result<Matrix<T>> {
    let perm = permutation_for_signs(sig, jhat)?;
    if v.shape() != (sig.m(), sig.m()) {
        return Err(HsvdError::DimensionMismatch(format!(
            "hyperexchange matrix must be {m}x{m}, got {}x{}",
            v.rows(),
            v.cols(),
            m = sig.m()
        )));
    }
    let jhat_mat = Matrix::diag(
        &jhat
            .iter()
            .map(|&s| T::from_real(T::Real::lit(s as f64)))
            .collect::<Vec<_>>(),
    );
    let defect = j_gram(sig, v, v)?.distance(&jhat_mat);
    if !(defect <= tol) {
        return Err(HsvdError::NotHyperexchange {
            defect: defect.as_f64(),
        });
    }
    let mut s = Matrix::zeros(sig.m(), sig.m());
    for (i, &target) in perm.iter().enumerate() {
        s[(i, target)] = T::one();
    }
    Ok(s)
}
