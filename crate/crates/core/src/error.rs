use thiserror::Error;

/// Errors raised by the decomposition and its building blocks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HsvdError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian (defect {defect:.3e})")]
    NotHermitian { defect: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("invalid signature (p={p}, q={q}): p + q must be at least 1")]
    InvalidSignature { p: usize, q: usize },

    #[error("signature mismatch: matrix has {rows} rows but p + q = {m}")]
    SignatureMismatch { rows: usize, m: usize },

    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    #[error("IsotropicBreakdown: every remaining candidate is J-isotropic (best |<x,x>_J|/|x|^2 = {ratio:.3e})")]
    IsotropicBreakdown { ratio: f64 },

    #[error("DualNotFound: no dual vector for isotropic column {index} (residual {residual:.3e})")]
    DualNotFound { index: usize, residual: f64 },

    #[error("isotropic input column {index} violates J-orthogonality (defect {defect:.3e})")]
    NotIsotropic { index: usize, defect: f64 },

    #[error("inertia mismatch: expected {expected} positive signs, found {found}")]
    InertiaMismatch { expected: usize, found: usize },

    #[error("matrix is not hyperexchange for the given sign pattern (defect {defect:.3e})")]
    NotHyperexchange { defect: f64 },

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

impl HsvdError {
    /// Short diagnostic name, stable across releases.
    pub fn name(&self) -> &'static str {
        match self {
            HsvdError::DimensionMismatch(_) => "DimensionMismatch",
            HsvdError::NotHermitian { .. } => "NotHermitian",
            HsvdError::NoConvergence { .. } => "NoConvergence",
            HsvdError::InvalidSignature { .. } => "InvalidSignature",
            HsvdError::SignatureMismatch { .. } => "SignatureMismatch",
            HsvdError::InvalidTolerance(_) => "InvalidTolerance",
            HsvdError::IsotropicBreakdown { .. } => "IsotropicBreakdown",
            HsvdError::DualNotFound { .. } => "DualNotFound",
            HsvdError::NotIsotropic { .. } => "NotIsotropic",
            HsvdError::InertiaMismatch { .. } => "InertiaMismatch",
            HsvdError::NotHyperexchange { .. } => "NotHyperexchange",
            HsvdError::Infeasible(_) => "Infeasible",
            HsvdError::InternalInvariantViolation(_) => "InternalInvariantViolation",
        }
    }
}

pub type Result<T> = std::result::Result<T, HsvdError>;
