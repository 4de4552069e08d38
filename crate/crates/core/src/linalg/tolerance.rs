use serde::{Deserialize, Serialize};

use crate::error::{HsvdError, Result};

/// Thresholds that turn exact-arithmetic rank and sign decisions into
/// finite-precision ones.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    /// Relative threshold for rank and zero-eigenvalue classification.
    pub rank_rtol: f64,
    /// Acceptance threshold for factor residuals.
    pub residual_tol: f64,
    /// Pivot floor for hyperbolic orthogonalization.
    pub breakdown_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            rank_rtol: 1e-10,
            residual_tol: 1e-8,
            breakdown_tol: 1e-10,
        }
    }
}

impl ToleranceConfig {
    pub fn new(rank_rtol: f64, residual_tol: f64, breakdown_tol: f64) -> Result<Self> {
        let cfg = Self {
            rank_rtol,
            residual_tol,
            breakdown_tol,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Defaults scaled for single precision.
    pub fn single_precision() -> Self {
        Self {
            rank_rtol: 1e-5,
            residual_tol: 1e-4,
            breakdown_tol: 1e-5,
        }
    }

    pub fn with_rank_rtol(mut self, rank_rtol: f64) -> Self {
        self.rank_rtol = rank_rtol;
        self
    }

    pub fn with_residual_tol(mut self, residual_tol: f64) -> Self {
        self.residual_tol = residual_tol;
        self
    }

    pub fn with_breakdown_tol(mut self, breakdown_tol: f64) -> Self {
        self.breakdown_tol = breakdown_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("rank_rtol", self.rank_rtol),
            ("residual_tol", self.residual_tol),
            ("breakdown_tol", self.breakdown_tol),
        ];
        for (name, v) in fields {
            if !(v.is_finite() && v > 0.0) {
                return Err(HsvdError::InvalidTolerance(format!(
                    "{name} must be finite and strictly positive, got {v}"
                )));
            }
        }
        if self.rank_rtol > 1.0 {
            return Err(HsvdError::InvalidTolerance(format!(
                "rank_rtol must not exceed 1, got {}",
                self.rank_rtol
            )));
        }
        Ok(())
    }
}
