//! Hyperbolic singular value decomposition with J-unitary factors.

pub mod error;
pub mod hsvd;
pub mod linalg;
pub mod matrix;
pub mod scalar;
pub mod signature;
pub mod verify;

pub use error::{HsvdError, Result};
pub use hsvd::{
    hsvd_left, hsvd_right, ordinary_svd, HsvdFactors, HsvdInvariants, Orientation, SigmaForm,
};
pub use linalg::ToleranceConfig;
pub use matrix::Matrix;
pub use scalar::{RealScalar, Scalar};
pub use signature::Signature;
pub use verify::{check_factors, VerifyReport};

/// Real double-precision matrix.
pub type RealMatrix = Matrix<f64>;
/// Complex double-precision matrix.
pub type ComplexMatrix = Matrix<num_complex::Complex64>;
pub type RealFactors = HsvdFactors<f64>;
pub type ComplexFactors = HsvdFactors<num_complex::Complex64>;
