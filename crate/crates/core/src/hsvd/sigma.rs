use serde::{Deserialize, Serialize};

use super::invariants::HsvdInvariants;
use crate::error::{HsvdError, Result};
use crate::matrix::Matrix;
use crate::scalar::{RealScalar, Scalar};
use crate::signature::Signature;

/// Which side the J-unitary factor sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// `A = U Σ V^H`, `A` is `n x m`.
    Left,
    /// `V^H B U = Σ`, `B` is `m x n`.
    Right,
}

impl Orientation {
    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Left => "left",
            Orientation::Right => "right",
        }
    }
}

/// Structured description of Σ.
///
/// `m = p + q` is the signature dimension and `n` the unitary dimension, in
/// both orientations. The dense matrix is `m x n` for `Right` and its
/// transpose for `Left`.
#[derive(Debug, Clone, PartialEq)]
pub struct SigmaForm<R> {
    pub orientation: Orientation,
    pub signature: Signature,
    pub n: usize,
    pub invariants: HsvdInvariants,
    /// Diagonal of the positive block, `l - t` values, descending.
    pub pos_values: Vec<R>,
    /// Diagonal of the negative block, `t` values, descending.
    pub neg_values: Vec<R>,
}

impl<R: RealScalar> SigmaForm<R> {
    pub fn m(&self) -> usize {
        self.signature.m()
    }

    /// Shape of the dense Σ in this orientation.
    pub fn dense_shape(&self) -> (usize, usize) {
        match self.orientation {
            Orientation::Right => (self.m(), self.n),
            Orientation::Left => (self.n, self.m()),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let inv = &self.invariants;
        inv.check_fits(self.signature, self.n)?;
        if self.pos_values.len() != inv.positive() {
            return Err(HsvdError::Infeasible(format!(
                "expected {} positive-block values, got {}",
                inv.positive(),
                self.pos_values.len()
            )));
        }
        if self.neg_values.len() != inv.t {
            return Err(HsvdError::Infeasible(format!(
                "expected {} negative-block values, got {}",
                inv.t,
                self.neg_values.len()
            )));
        }
        for (name, vals) in [
            ("positive", &self.pos_values),
            ("negative", &self.neg_values),
        ] {
            if let Some(bad) = vals.iter().find(|&&v| !(v > R::zero() && v.is_finite())) {
                return Err(HsvdError::Infeasible(format!(
                    "{name}-block value {bad} is not strictly positive"
                )));
            }
            if vals.windows(2).any(|w| w[0] < w[1]) {
                return Err(HsvdError::Infeasible(format!(
                    "{name}-block values are not sorted descending"
                )));
            }
        }
        Ok(())
    }

    /// All hyperbolic values (positive and negative blocks) sorted descending.
    pub fn sorted_values(&self) -> Vec<R> {
        let mut all: Vec<R> = self
            .pos_values
            .iter()
            .chain(&self.neg_values)
            .copied()
            .collect();
        all.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
        all
    }

    /// Same form in the other orientation.
    pub fn flipped(&self) -> Self {
        let mut out = self.clone();
        out.orientation = match self.orientation {
            Orientation::Left => Orientation::Right,
            Orientation::Right => Orientation::Left,
        };
        out
    }
}

/// Dense Σ.
///
/// Right orientation (`m x n`), 0-based: `Σ[i][i] = P_i` for `i < l - t`;
/// `Σ[p + i][l - t + i] = Q_i` for `i < t`; the paired identities put ones at
/// `Σ[l - t + i][l + i]` and `Σ[p + t + i][l + i]` for `i < j`. Every other
/// entry is exactly zero. Left orientation is the transpose.
pub fn build_sigma_dense<T: Scalar>(sf: &SigmaForm<T::Real>) -> Result<Matrix<T>> {
    sf.validate()?;
    let inv = &sf.invariants;
    let p = sf.signature.p();
    let lt = inv.positive();
    let mut s = Matrix::zeros(sf.m(), sf.n);
    for (i, &v) in sf.pos_values.iter().enumerate() {
        s[(i, i)] = T::from_real(v);
    }
    for (i, &v) in sf.neg_values.iter().enumerate() {
        s[(p + i, lt + i)] = T::from_real(v);
    }
    for i in 0..inv.j {
        s[(lt + i, inv.l + i)] = T::one();
        s[(p + inv.t + i, inv.l + i)] = T::one();
    }
    Ok(match sf.orientation {
        Orientation::Right => s,
        Orientation::Left => s.transpose(),
    })
}

/// Positions that may hold a nonzero in the right-orientation dense Σ.
pub(crate) fn structural_nonzeros<R: RealScalar>(sf: &SigmaForm<R>) -> Vec<(usize, usize)> {
    let inv = &sf.invariants;
    let p = sf.signature.p();
    let lt = inv.positive();
    let mut out: Vec<(usize, usize)> = (0..lt).map(|i| (i, i)).collect();
    out.extend((0..inv.t).map(|i| (p + i, lt + i)));
    for i in 0..inv.j {
        out.push((lt + i, inv.l + i));
        out.push((p + inv.t + i, inv.l + i));
    }
    out
}

/// `Σ^T J Σ` for a right-orientation form: `diag(P^2, -Q^2, 0)`.
pub fn sigma_gram<T: Scalar>(sf: &SigmaForm<T::Real>) -> Matrix<T> {
    let mut d = Matrix::zeros(sf.n, sf.n);
    for (i, &v) in sf.pos_values.iter().enumerate() {
        d[(i, i)] = T::from_real(v * v);
    }
    let lt = sf.pos_values.len();
    for (i, &v) in sf.neg_values.iter().enumerate() {
        d[(lt + i, lt + i)] = T::from_real(-(v * v));
    }
    d
}
