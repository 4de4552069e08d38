use rand::Rng;

use super::Signature;
use crate::linalg::random::{seeded_rng, unitary_from_rng};
use crate::matrix::Matrix;
use crate::scalar::{RealScalar, Scalar};

/// Seeded random J-unitary matrix.
///
/// Built as `diag(U1, W1) * H * diag(U2, W2)` with random unitary blocks and
/// `H` a product of planar hyperbolic rotations, each mixing index `i < p`
/// with `p + i`, rapidities uniform in `[-max_rapidity, max_rapidity]`. For
/// `q = 0` (or `p = 0`) the result is exactly `unitary_random(m, seed)`.
pub fn j_unitary_random<T: Scalar>(sig: Signature, seed: u64, max_rapidity: f64) -> Matrix<T> {
    assert!(max_rapidity >= 0.0, "max_rapidity must be non-negative");
    let mut rng = seeded_rng(seed);
    let (p, q) = (sig.p(), sig.q());
    if p == 0 || q == 0 {
        return unitary_from_rng(sig.m(), &mut rng);
    }
    let left = block_diag(
        &unitary_from_rng(p, &mut rng),
        &unitary_from_rng(q, &mut rng),
    );
    let mut h: Matrix<T> = Matrix::identity(sig.m());
    for i in 0..p.min(q) {
        let r: f64 = if max_rapidity > 0.0 {
            rng.random_range(-max_rapidity..=max_rapidity)
        } else {
            0.0
        };
        let (c, s) = (
            T::from_real(T::Real::lit(r.cosh())),
            T::from_real(T::Real::lit(r.sinh())),
        );
        h[(i, i)] = c;
        h[(p + i, p + i)] = c;
        h[(i, p + i)] = s;
        h[(p + i, i)] = s;
    }
    let right = block_diag(
        &unitary_from_rng(p, &mut rng),
        &unitary_from_rng(q, &mut rng),
    );
    &(&left * &h) * &right
}

fn block_diag<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let (ra, ca) = a.shape();
    let (rb, cb) = b.shape();
    Matrix::from_fn(ra + rb, ca + cb, |i, j| {
        if i < ra && j < ca {
            a[(i, j)]
        } else if i >= ra && j >= ca {
            b[(i - ra, j - ca)]
        } else {
            T::zero()
        }
    })
}
