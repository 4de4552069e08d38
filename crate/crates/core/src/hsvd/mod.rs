mod decompose;
mod invariants;
mod sigma;

pub use decompose::{
    analyze, compute_invariants, eigen_identity_defects, hsvd_left, hsvd_right, ordinary_svd,
    HsvdFactors, SpectralAnalysis,
};
pub use invariants::{derive_k_s, HsvdInvariants};
pub(crate) use sigma::structural_nonzeros;
pub use sigma::{build_sigma_dense, sigma_gram, Orientation, SigmaForm};
