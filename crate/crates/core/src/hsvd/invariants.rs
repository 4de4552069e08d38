use serde::{Deserialize, Serialize};

use crate::error::{HsvdError, Result};
use crate::signature::Signature;

/// The integers characterizing a hyperbolic SVD.
///
/// `j` counts degenerate (isotropic) directions, `l` is the rank of `B^H J B`
/// and `t` its number of negative eigenvalues. `k` and `s` follow from them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HsvdInvariants {
    pub j: usize,
    pub l: usize,
    pub t: usize,
    pub k: usize,
    pub s: usize,
    pub rank: usize,
}

impl HsvdInvariants {
    /// Builds the full set from `(j, l, t)`, validating against the signature.
    pub fn new(j: usize, l: usize, t: usize, sig: Signature) -> Result<Self> {
        if t > l {
            return Err(HsvdError::Infeasible(format!("t = {t} exceeds l = {l}")));
        }
        let (k, s) = derive_k_s(j, l, t, sig)?;
        Ok(Self {
            j,
            l,
            t,
            k,
            s,
            rank: j + l,
        })
    }

    /// Number of positive hyperbolic values, `l - t`.
    pub fn positive(&self) -> usize {
        self.l - self.t
    }

    /// Checks that a Σ with these invariants fits in an `m x n` shape.
    pub fn check_fits(&self, sig: Signature, n: usize) -> Result<()> {
        if self.positive() + self.j > sig.p() {
            return Err(HsvdError::Infeasible(format!(
                "l - t + j = {} exceeds p = {}",
                self.positive() + self.j,
                sig.p()
            )));
        }
        if self.t + self.j > sig.q() {
            return Err(HsvdError::Infeasible(format!(
                "t + j = {} exceeds q = {}",
                self.t + self.j,
                sig.q()
            )));
        }
        if self.l + self.j > n {
            return Err(HsvdError::Infeasible(format!(
                "l + j = {} exceeds n = {n}",
                self.l + self.j
            )));
        }
        let expected = Self::new(self.j, self.l, self.t, sig)?;
        if expected != *self {
            return Err(HsvdError::Infeasible(format!(
                "stored (k, s, rank) = ({}, {}, {}) disagree with derived ({}, {}, {})",
                self.k, self.s, self.rank, expected.k, expected.s, expected.rank
            )));
        }
        Ok(())
    }

    /// Count of hyperbolic singular values including structural zeros, `min(m - 2j, n - j)`.
    pub fn hyperbolic_value_count(&self, sig: Signature, n: usize) -> usize {
        (sig.m().saturating_sub(2 * self.j)).min(n.saturating_sub(self.j))
    }
}

/// `k = m - 2j - l` and `s = p - j - l + t`.
pub fn derive_k_s(j: usize, l: usize, t: usize, sig: Signature) -> Result<(usize, usize)> {
    let (m, p) = (sig.m() as i64, sig.p() as i64);
    let (j, l, t) = (j as i64, l as i64, t as i64);
    let k = m - 2 * j - l;
    let s = p - j - l + t;
    if k < 0 {
        return Err(HsvdError::Infeasible(format!(
            "k = m - 2j - l = {k} is negative"
        )));
    }
    if s < 0 || s > k {
        return Err(HsvdError::Infeasible(format!(
            "s = p - j - l + t = {s} lies outside [0, k = {k}]"
        )));
    }
    Ok((k as usize, s as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    #[test]
    fn k_s_examples() {
        assert_eq!(derive_k_s(0, 1, 1, sig(1, 1)).unwrap(), (1, 1));
        assert_eq!(derive_k_s(0, 0, 0, sig(4, 0)).unwrap(), (4, 4));
        assert_eq!(derive_k_s(1, 0, 0, sig(1, 1)).unwrap(), (0, 0));
    }

    #[test]
    fn infeasible_combinations() {
        assert!(derive_k_s(2, 0, 0, sig(1, 1)).is_err());
        // s < 0: a positive value with p = 0
        assert!(derive_k_s(0, 1, 0, sig(0, 2)).is_err());
        assert!(HsvdInvariants::new(0, 1, 2, sig(2, 2)).is_err());
    }

    #[test]
    fn fits_checks_each_constraint() {
        let inv = HsvdInvariants::new(1, 1, 0, sig(2, 1)).unwrap();
        assert!(inv.check_fits(sig(2, 1), 2).is_ok());
        assert!(inv.check_fits(sig(2, 1), 1).is_err());
        let inv = HsvdInvariants::new(0, 2, 2, sig(2, 2)).unwrap();
        assert!(inv.check_fits(sig(2, 2), 3).is_ok());
        // s <= k is the same condition as t + j <= q
        assert!(HsvdInvariants::new(1, 1, 1, sig(2, 1)).is_err());
    }

    #[test]
    fn hyperbolic_value_count() {
        let inv = HsvdInvariants::new(1, 0, 0, sig(1, 1)).unwrap();
        assert_eq!(inv.hyperbolic_value_count(sig(1, 1), 1), 0);
        let inv = HsvdInvariants::new(0, 1, 1, sig(1, 1)).unwrap();
        assert_eq!(inv.hyperbolic_value_count(sig(1, 1), 1), 1);
    }
}
