use super::invariants::HsvdInvariants;
use super::sigma::{build_sigma_dense, sigma_gram, Orientation, SigmaForm};
use crate::error::{HsvdError, Result};
use crate::linalg::{
    hermitian_eigendecompose, jacobi_svd, normalize_phase_column, null_space, singular_values,
    ToleranceConfig,
};
use crate::matrix::Matrix;
use crate::scalar::{RealScalar, Scalar};
use crate::signature::{
    apply_j, hyperbolic_gram_schmidt, isotropic_pair_complete, j_conjugate, j_gram, j_vec, JSign,
    Signature,
};
use num_traits::{Float, Zero};

/// Factors of a hyperbolic SVD.
///
/// Right orientation: `V^H B U = Σ` with `B` of size `m x n`.
/// Left orientation: `A = U Σ V^H` with `A` of size `n x m`.
/// In both, `U` is `n x n` unitary and `V` is `m x m` J-unitary.
#[derive(Debug, Clone)]
pub struct HsvdFactors<T: Scalar> {
    pub u: Matrix<T>,
    pub v: Matrix<T>,
    pub sigma: SigmaForm<T::Real>,
    /// Frobenius residual of the defining identity.
    pub residual: T::Real,
    pub tolerances: ToleranceConfig,
}

impl<T: Scalar> HsvdFactors<T> {
    pub fn orientation(&self) -> Orientation {
        self.sigma.orientation
    }

    pub fn invariants(&self) -> HsvdInvariants {
        self.sigma.invariants
    }

    pub fn sigma_dense(&self) -> Matrix<T> {
        build_sigma_dense(&self.sigma).expect("factor Σ is validated on construction")
    }

    /// Hyperbolic values, positive and negative blocks merged, descending.
    pub fn sorted_values(&self) -> Vec<T::Real> {
        self.sigma.sorted_values()
    }
}

/// Spectral data of `B^H J B` split the way the decomposition needs it.
#[derive(Debug, Clone)]
pub struct SpectralAnalysis<T: Scalar> {
    pub invariants: HsvdInvariants,
    /// Eigenvalues of `B^H J B`, descending.
    pub eigenvalues: Vec<T::Real>,
    /// Eigenvalues at or below this magnitude count as zero.
    pub zero_threshold: T::Real,
    /// Largest singular value of `B`.
    pub sigma_max: T::Real,
    /// Eigenvectors for positive eigenvalues, eigenvalue descending.
    pos: Vec<(T::Real, Vec<T>)>,
    /// Eigenvectors for negative eigenvalues, magnitude descending.
    neg: Vec<(T::Real, Vec<T>)>,
    /// `ker(B^H J B)` minus `ker(B)`, ordered by descending `‖B z‖`.
    degenerate: Vec<Vec<T>>,
    /// `ker(B)`.
    null: Vec<Vec<T>>,
}

/// Splits the spectrum of `B^H J B` into positive, negative, degenerate and null parts.
///
/// Eigenvalues with `|λ| <= rank_rtol * max(m, n) * σ_max(B)^2` are zero; ties
/// go to zero. Inside the zero eigenspace `Z`, the directions with
/// `‖B z‖ > sqrt(rank_rtol * max(m, n)) * σ_max(B)` (right singular vectors of
/// `B Z`) are degenerate and counted by `j`; the rest span `ker(B)`.
pub fn analyze<T: Scalar>(
    b: &Matrix<T>,
    sig: Signature,
    tol: &ToleranceConfig,
) -> Result<SpectralAnalysis<T>> {
    tol.validate()?;
    if b.rows() != sig.m() {
        return Err(HsvdError::SignatureMismatch {
            rows: b.rows(),
            m: sig.m(),
        });
    }
    let n = b.cols();
    let gram = j_gram(sig, b, b)?;
    let eig = hermitian_eigendecompose(&gram, tol)?;
    let sigma_max = singular_values(b)
        .first()
        .copied()
        .unwrap_or_else(T::Real::zero);
    let dim = T::Real::lit(sig.m().max(n) as f64);
    let rtol = T::Real::lit(tol.rank_rtol);
    let zero_threshold = rtol * dim * sigma_max * sigma_max;

    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut zero_cols = Vec::new();
    for (k, &lam) in eig.values.iter().enumerate() {
        let u = eig.vectors.col(k);
        if lam > zero_threshold {
            pos.push((lam, u));
        } else if lam < -zero_threshold {
            neg.push((lam, u));
        } else {
            zero_cols.push(u);
        }
    }
    neg.reverse();

    let mut degenerate = Vec::new();
    let mut null = Vec::new();
    if !zero_cols.is_empty() {
        let z = Matrix::from_columns(n, &zero_cols);
        if sigma_max > T::Real::zero() {
            let bz = b * &z;
            let svd = jacobi_svd(&bz);
            let cutoff = (rtol * dim).sqrt() * sigma_max;
            let jcount = svd.count_above(cutoff);
            let mut rotated = &z * &svd.v;
            for c in 0..rotated.cols() {
                normalize_phase_column(&mut rotated, c);
            }
            for c in 0..rotated.cols() {
                if c < jcount {
                    degenerate.push(rotated.col(c));
                } else {
                    null.push(rotated.col(c));
                }
            }
        } else {
            null = zero_cols;
        }
    }

    let invariants = HsvdInvariants::new(degenerate.len(), pos.len() + neg.len(), neg.len(), sig)
        .and_then(|inv| inv.check_fits(sig, n).map(|_| inv))
        .map_err(|e| {
            HsvdError::InternalInvariantViolation(format!(
                "classified invariants are inconsistent: {e}"
            ))
        })?;

    Ok(SpectralAnalysis {
        invariants,
        eigenvalues: eig.values,
        zero_threshold,
        sigma_max,
        pos,
        neg,
        degenerate,
        null,
    })
}

/// Invariants `(j, l, t)` with derived `k`, `s` and `rank = j + l` for `B` (`m x n`).
pub fn compute_invariants<T: Scalar>(
    b: &Matrix<T>,
    sig: Signature,
    tol: &ToleranceConfig,
) -> Result<HsvdInvariants> {
    Ok(analyze(b, sig, tol)?.invariants)
}

/// Hyperbolic SVD `V^H B U = Σ` with unitary `U` and J-unitary `V`.
///
/// `U` collects eigenvectors of `B^H J B`: positive eigenvalues, then negative,
/// then the degenerate directions, then `ker(B)`. Columns of `V` for nonzero
/// eigenvalues are `±J B u / sqrt|λ|`. Each degenerate direction `z` yields
/// an isotropic `c = J B z`, completed into a `(+1, -1)` pair whose difference
/// is `c`. The rest of `V` is a J-orthonormal basis of the J-orthogonal
/// complement of everything already placed, which lies inside `ker(B^H)`.
pub fn hsvd_right<T: Scalar>(
    b: &Matrix<T>,
    sig: Signature,
    tol: &ToleranceConfig,
) -> Result<HsvdFactors<T>> {
    let an = analyze(b, sig, tol)?;
    let inv = an.invariants;
    let (m, n) = (sig.m(), b.cols());

    let mut u_cols: Vec<Vec<T>> = Vec::with_capacity(n);
    let mut v_pos: Vec<Vec<T>> = Vec::new();
    let mut v_neg: Vec<Vec<T>> = Vec::new();
    let mut pos_values = Vec::with_capacity(an.pos.len());
    let mut neg_values = Vec::with_capacity(an.neg.len());
    for (lam, u) in &an.pos {
        let root = lam.sqrt();
        v_pos.push(scaled(&j_vec(sig, &b.mul_vec(u)), root.recip()));
        pos_values.push(root);
        u_cols.push(u.clone());
    }
    for (lam, u) in &an.neg {
        let root = lam.abs().sqrt();
        v_neg.push(scaled(&j_vec(sig, &b.mul_vec(u)), -root.recip()));
        neg_values.push(root);
        u_cols.push(u.clone());
    }
    u_cols.extend(an.degenerate.iter().cloned());
    u_cols.extend(an.null.iter().cloned());

    let placed: Vec<Vec<T>> = v_pos.iter().chain(&v_neg).cloned().collect();
    let (v_plus, v_minus) = if inv.j > 0 {
        let ambient = j_orthogonal_complement(sig, &placed, m - inv.l, tol)?;
        let c_list: Vec<Vec<T>> = an
            .degenerate
            .iter()
            .map(|z| j_vec(sig, &b.mul_vec(z)))
            .collect();
        let pairs = isotropic_pair_complete(sig, &c_list, &ambient, tol)?;
        pairs.into_iter().map(|p| (p.plus, p.minus)).unzip()
    } else {
        (Vec::new(), Vec::new())
    };

    let all_placed: Vec<Vec<T>> = placed
        .iter()
        .chain(&v_plus)
        .chain(&v_minus)
        .cloned()
        .collect();
    let (fill_pos, fill_neg) = completion(sig, &all_placed, inv, tol)?;

    let v_cols: Vec<Vec<T>> = v_pos
        .into_iter()
        .chain(v_plus)
        .chain(fill_pos)
        .chain(v_neg)
        .chain(v_minus)
        .chain(fill_neg)
        .collect();
    let u = Matrix::from_columns(n, &u_cols);
    let v = Matrix::from_columns(m, &v_cols);

    let sigma = SigmaForm {
        orientation: Orientation::Right,
        signature: sig,
        n,
        invariants: inv,
        pos_values,
        neg_values,
    };
    sigma.validate()?;
    let dense: Matrix<T> = build_sigma_dense(&sigma)?;
    let residual = (&v.adjoint() * &(b * &u)).distance(&dense);
    Ok(HsvdFactors {
        u,
        v,
        sigma,
        residual,
        tolerances: *tol,
    })
}

/// Hyperbolic SVD `A = U Σ V^H` for `A` of size `n x m`.
///
/// Runs [`hsvd_right`] on `B = A^H`; then `U = U_0`, `V = J V_0 J` and Σ is
/// transposed.
pub fn hsvd_left<T: Scalar>(
    a: &Matrix<T>,
    sig: Signature,
    tol: &ToleranceConfig,
) -> Result<HsvdFactors<T>> {
    if a.cols() != sig.m() {
        return Err(HsvdError::SignatureMismatch {
            rows: a.cols(),
            m: sig.m(),
        });
    }
    let right = hsvd_right(&a.adjoint(), sig, tol)?;
    let v = j_conjugate(sig, &right.v)?;
    let sigma = right.sigma.flipped();
    let dense: Matrix<T> = build_sigma_dense(&sigma)?;
    let residual = a.distance(&(&(&right.u * &dense) * &v.adjoint()));
    Ok(HsvdFactors {
        u: right.u,
        v,
        sigma,
        residual,
        tolerances: *tol,
    })
}

/// Ordinary SVD as the `J = I` special case of [`hsvd_right`].
pub fn ordinary_svd<T: Scalar>(b: &Matrix<T>, tol: &ToleranceConfig) -> Result<HsvdFactors<T>> {
    let sig = Signature::euclidean(b.rows())?;
    let f = hsvd_right(b, sig, tol)?;
    let inv = f.invariants();
    if inv.j != 0 || inv.t != 0 {
        return Err(HsvdError::InternalInvariantViolation(format!(
            "Euclidean signature produced j = {}, t = {}",
            inv.j, inv.t
        )));
    }
    Ok(f)
}

/// Frobenius defects of `(B^H J B) U = U (Σ^T J Σ)` and `(J B B^H) V = V (J Σ Σ^T)`
/// for right-orientation factors of `B`.
pub fn eigen_identity_defects<T: Scalar>(
    b: &Matrix<T>,
    sig: Signature,
    u: &Matrix<T>,
    v: &Matrix<T>,
    sigma: &SigmaForm<T::Real>,
) -> Result<(T::Real, T::Real)> {
    let right = match sigma.orientation {
        Orientation::Right => sigma.clone(),
        Orientation::Left => sigma.flipped(),
    };
    let dense: Matrix<T> = build_sigma_dense(&right)?;
    let lhs_u = &j_gram(sig, b, b)? * u;
    let rhs_u = u * &sigma_gram::<T>(&right);
    let jbbh = apply_j(sig, &(b * &b.adjoint()))?;
    let jss = apply_j(sig, &(&dense * &dense.transpose()))?;
    let lhs_v = &jbbh * v;
    let rhs_v = v * &jss;
    Ok((lhs_u.distance(&rhs_u), lhs_v.distance(&rhs_v)))
}

fn scaled<T: Scalar>(x: &[T], factor: T::Real) -> Vec<T> {
    x.iter().map(|&v| v.scale(factor)).collect()
}

/// Orthonormal basis of `{x : <w, x>_J = 0 for all w in placed}`, of known dimension.
fn j_orthogonal_complement<T: Scalar>(
    sig: Signature,
    placed: &[Vec<T>],
    dim: usize,
    tol: &ToleranceConfig,
) -> Result<Vec<Vec<T>>> {
    let m = sig.m();
    if placed.is_empty() {
        return Ok(Matrix::<T>::identity(m).columns());
    }
    // Rows w^H J.
    let x = Matrix::from_columns(m, placed);
    let constraints = apply_j(sig, &x)?.adjoint();
    let (basis, last_kept) = null_space(&constraints, dim);
    if let Some(s) = last_kept {
        let smax = jacobi_svd(&constraints).sigma_max();
        if !(s > T::Real::lit(tol.rank_rtol) * smax) {
            return Err(HsvdError::InternalInvariantViolation(format!(
                "placed columns of V are numerically dependent (σ = {})",
                s.as_f64()
            )));
        }
    }
    Ok(basis.columns())
}

/// J-orthonormal completion of the placed columns, split by sign.
fn completion<T: Scalar>(
    sig: Signature,
    placed: &[Vec<T>],
    inv: HsvdInvariants,
    tol: &ToleranceConfig,
) -> Result<(Vec<Vec<T>>, Vec<Vec<T>>)> {
    if inv.k == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let basis = j_orthogonal_complement(sig, placed, inv.k, tol)?;
    let k_mat = Matrix::from_columns(sig.m(), &basis);
    // Diagonalize the J-Gram matrix of the complement so the Gram-Schmidt
    // pivots are J-orthogonal from the start.
    let g = j_gram(sig, &k_mat, &k_mat)?;
    let eig = hermitian_eigendecompose(&g, tol)?;
    let candidates = (&k_mat * &eig.vectors).columns();
    let cols = hyperbolic_gram_schmidt(sig, &candidates, T::Real::lit(tol.breakdown_tol))?;

    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for c in cols {
        let mut col = Matrix::column(&c.vector);
        normalize_phase_column(&mut col, 0);
        match c.sign {
            JSign::Positive => pos.push(col.into_vec()),
            _ => neg.push(col.into_vec()),
        }
    }
    if pos.len() != inv.s {
        return Err(HsvdError::InertiaMismatch {
            expected: inv.s,
            found: pos.len(),
        });
    }
    Ok((pos, neg))
}
