//! Dense linear algebra the decomposition is built on.

mod eigen;
pub mod random;
mod rotation;
mod svd;
mod tolerance;

pub(crate) use eigen::normalize_phase_column;
pub use eigen::{hermitian_eigendecompose, EigenResult};
pub use random::{gaussian_matrix, seeded_rng, unitary_random};
pub(crate) use svd::null_space;
pub use svd::{jacobi_svd, numerical_rank, singular_values, Svd};
pub use tolerance::ToleranceConfig;
