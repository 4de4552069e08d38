use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{HsvdError, Result};
use crate::hsvd::{build_sigma_dense, HsvdFactors, HsvdInvariants, Orientation, SigmaForm};
use crate::linalg::{seeded_rng, unitary_random, ToleranceConfig};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::signature::{j_conjugate, j_unitary_random, Signature};

/// Recipe for a matrix with prescribed invariants and hyperbolic values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthSpec {
    pub signature: Signature,
    pub n: usize,
    pub invariants: HsvdInvariants,
    pub pos_values: Vec<f64>,
    pub neg_values: Vec<f64>,
    pub seed: u64,
    pub max_rapidity: f64,
}

impl SynthSpec {
    /// Spec with values drawn uniformly from `[0.5, 3]`, sorted descending.
    pub fn sampled(
        sig: Signature,
        n: usize,
        jlt: (usize, usize, usize),
        seed: u64,
        max_rapidity: f64,
    ) -> Result<Self> {
        let invariants = HsvdInvariants::new(jlt.0, jlt.1, jlt.2, sig)?;
        invariants.check_fits(sig, n)?;
        let mut rng = seeded_rng(seed ^ 0x5eed_0f_ba1u64);
        let mut draw = |count: usize| {
            let mut v: Vec<f64> = (0..count).map(|_| rng.random_range(0.5..3.0)).collect();
            v.sort_by(|a, b| b.total_cmp(a));
            v
        };
        let pos_values = draw(invariants.positive());
        let neg_values = draw(invariants.t);
        Ok(Self {
            signature: sig,
            n,
            invariants,
            pos_values,
            neg_values,
            seed,
            max_rapidity,
        })
    }

    pub fn sigma_form<R: crate::scalar::RealScalar>(&self) -> SigmaForm<R> {
        SigmaForm {
            orientation: Orientation::Right,
            signature: self.signature,
            n: self.n,
            invariants: self.invariants,
            pos_values: self.pos_values.iter().map(|&v| R::lit(v)).collect(),
            neg_values: self.neg_values.iter().map(|&v| R::lit(v)).collect(),
        }
    }
}

/// Every `(j, l, t)` admissible for the signature and column count.
pub fn feasible_triples(sig: Signature, n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for j in 0..=sig.p().min(sig.q()).min(n) {
        for l in 0..=(n - j) {
            for t in 0..=l {
                if let Ok(inv) = HsvdInvariants::new(j, l, t, sig) {
                    if inv.check_fits(sig, n).is_ok() {
                        out.push((j, l, t));
                    }
                }
            }
        }
    }
    out
}

/// Builds `B = (J V J) Σ U^H` from seeded gauges, so that `V^H B U = Σ`.
///
/// `U = unitary_random(n, seed)` and `V = j_unitary_random(S, seed + 1, max_rapidity)`.
pub fn synth_case<T: Scalar>(spec: &SynthSpec) -> Result<(Matrix<T>, HsvdFactors<T>)> {
    let u: Matrix<T> = unitary_random(spec.n, spec.seed);
    let v: Matrix<T> =
        j_unitary_random(spec.signature, spec.seed.wrapping_add(1), spec.max_rapidity);
    synth_with_gauges(&spec.sigma_form(), &u, &v)
}

/// Same construction with caller-supplied gauges.
pub fn synth_with_gauges<T: Scalar>(
    sigma: &SigmaForm<T::Real>,
    u: &Matrix<T>,
    v: &Matrix<T>,
) -> Result<(Matrix<T>, HsvdFactors<T>)> {
    if sigma.orientation != Orientation::Right {
        return Err(HsvdError::Infeasible(
            "synthesis expects a right-orientation form".into(),
        ));
    }
    let (m, n) = (sigma.m(), sigma.n);
    if u.shape() != (n, n) || v.shape() != (m, m) {
        return Err(HsvdError::DimensionMismatch(format!(
            "gauges are {}x{} and {}x{}, expected {n}x{n} and {m}x{m}",
            u.rows(),
            u.cols(),
            v.rows(),
            v.cols()
        )));
    }
    let dense: Matrix<T> = build_sigma_dense(sigma)?;
    let b = &(&j_conjugate(sigma.signature, v)? * &dense) * &u.adjoint();
    let residual = (&v.adjoint() * &(&b * u)).distance(&dense);
    let truth = HsvdFactors {
        u: u.clone(),
        v: v.clone(),
        sigma: sigma.clone(),
        residual,
        tolerances: ToleranceConfig::default(),
    };
    Ok((b, truth))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hsvd::{compute_invariants, hsvd_right};
    use num_complex::Complex64;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn second_example_form() -> SigmaForm<f64> {
        let s = sig(1, 1);
        SigmaForm {
            orientation: Orientation::Right,
            signature: s,
            n: 1,
            invariants: HsvdInvariants::new(1, 0, 0, s).unwrap(),
            pos_values: vec![],
            neg_values: vec![],
        }
    }

    #[test]
    fn second_example_gauges() {
        let form = second_example_form();
        let (b, _) =
            synth_with_gauges(&form, &Matrix::identity(1), &Matrix::<f64>::identity(2)).unwrap();
        assert_eq!(b, Matrix::column(&[1.0, 1.0]));
        let v0 = Matrix::from_rows(&[[1.25, -0.75], [-0.75, 1.25]]);
        let (b, truth) = synth_with_gauges(&form, &Matrix::identity(1), &v0).unwrap();
        assert_eq!(b, Matrix::column(&[2.0, 2.0]));
        assert_eq!(truth.residual, 0.0);
    }

    #[test]
    fn empty_invariants_give_zero() {
        let spec = SynthSpec::sampled(sig(2, 1), 2, (0, 0, 0), 3, 1.0).unwrap();
        let (b, _) = synth_case::<f64>(&spec).unwrap();
        assert_eq!(b.max_abs(), 0.0);
    }

    #[test]
    fn round_trip_with_degenerate_pair() {
        let spec = SynthSpec::sampled(sig(2, 2), 3, (1, 1, 1), 11, 1.5).unwrap();
        for complex in [false, true] {
            let (inv, vals) = if complex {
                let (b, _) = synth_case::<Complex64>(&spec).unwrap();
                let f = hsvd_right(&b, spec.signature, &ToleranceConfig::default()).unwrap();
                (f.invariants(), f.sorted_values())
            } else {
                let (b, _) = synth_case::<f64>(&spec).unwrap();
                assert_eq!(
                    compute_invariants(&b, spec.signature, &ToleranceConfig::default()).unwrap(),
                    spec.invariants
                );
                let f = hsvd_right(&b, spec.signature, &ToleranceConfig::default()).unwrap();
                (f.invariants(), f.sorted_values())
            };
            assert_eq!(inv, spec.invariants);
            assert!((vals[0] - spec.neg_values[0]).abs() <= 1e-8);
        }
    }

    #[test]
    fn triples_are_feasible_and_complete() {
        let t = feasible_triples(sig(1, 1), 1);
        assert_eq!(t, vec![(0, 0, 0), (0, 1, 0), (0, 1, 1), (1, 0, 0)]);
        assert_eq!(
            feasible_triples(sig(2, 0), 3),
            vec![(0, 0, 0), (0, 1, 0), (0, 2, 0)]
        );
        assert!(SynthSpec::sampled(sig(1, 1), 1, (1, 1, 0), 0, 1.0).is_err());
    }
}
