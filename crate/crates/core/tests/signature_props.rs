use hsvd::linalg::{gaussian_matrix, hermitian_eigendecompose, seeded_rng};
use hsvd::signature::{
    apply_j, hyperbolic_gram_schmidt, hyperexchange_to_junitary, is_j_unitary,
    isotropic_pair_complete, j_gram, j_inner, j_inverse, j_unitary_random, JSign,
};
use hsvd::{Matrix, Signature, ToleranceConfig};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn signature() -> impl Strategy<Value = Signature> {
    (0usize..5, 0usize..5)
        .prop_filter("nonempty", |(p, q)| p + q > 0)
        .prop_map(|(p, q)| Signature::new(p, q).unwrap())
}

fn inertia(g: &Matrix<Complex64>) -> (usize, usize) {
    let e = hermitian_eigendecompose(g, &ToleranceConfig::default()).unwrap();
    (
        e.values.iter().filter(|&&v| v > 0.0).count(),
        e.values.iter().filter(|&&v| v < 0.0).count(),
    )
}

proptest! {
    #[test]
    fn gram_schmidt_inertia_ignores_order(sig in signature(), seed in any::<u64>(), k in 1usize..6) {
        let m = sig.m();
        let k = k.min(m);
        let mut rng = seeded_rng(seed);
        let x: Matrix<Complex64> = gaussian_matrix(m, k, &mut rng);
        let cols = x.columns();
        let out = hyperbolic_gram_schmidt(sig, &cols, 1e-10).unwrap();
        let plus = out.iter().filter(|c| c.sign == JSign::Positive).count();
        prop_assert_eq!((plus, k - plus), inertia(&j_gram(sig, &x, &x).unwrap()));

        let mut shuffled = cols.clone();
        shuffled.shuffle(&mut rng);
        let again = hyperbolic_gram_schmidt(sig, &shuffled, 1e-10).unwrap();
        prop_assert_eq!(again.iter().filter(|c| c.sign == JSign::Positive).count(), plus);

        let q = Matrix::from_columns(m, &out.iter().map(|c| c.vector.clone()).collect::<Vec<_>>());
        let g = j_gram(sig, &q, &q).unwrap();
        let want = Matrix::diag(&out.iter().map(|c| Complex64::new(c.sign.value() as f64, 0.0)).collect::<Vec<_>>());
        prop_assert!(g.distance(&want) <= 1e-8 * (1.0 + x.frobenius_norm_sq()));
    }

    #[test]
    fn isotropic_pairs_satisfy_constraints(p in 1usize..4, q in 1usize..4, seed in any::<u64>(), scale in 0.1f64..10.0) {
        let sig = Signature::new(p, q).unwrap();
        let w: Matrix<Complex64> = j_unitary_random(sig, seed, 1.0);
        let j = p.min(q);
        let c: Vec<Vec<Complex64>> = (0..j)
            .map(|i| {
                let mut e = vec![Complex64::new(0.0, 0.0); sig.m()];
                e[i] = Complex64::new(scale, 0.0);
                e[p + i] = Complex64::new(scale, 0.0);
                w.mul_vec(&e)
            })
            .collect();
        let ambient = Matrix::<Complex64>::identity(sig.m()).columns();
        let tol = ToleranceConfig::default();
        let pairs = isotropic_pair_complete(sig, &c, &ambient, &tol).unwrap();
        let check = |pairs: &[hsvd::signature::IsotropicPair<Complex64>], c: &[Vec<Complex64>]| -> f64 {
            let mut worst = 0.0f64;
            for (i, pi) in pairs.iter().enumerate() {
                let diff: Vec<_> = pi.plus.iter().zip(&pi.minus).map(|(a, b)| a - b).collect();
                worst = worst.max(diff.iter().zip(&c[i]).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max));
                for (k, pk) in pairs.iter().enumerate() {
                    let d = if i == k { 1.0 } else { 0.0 };
                    worst = worst.max((j_inner(sig, &pi.plus, &pk.plus).unwrap() - d).norm());
                    worst = worst.max((j_inner(sig, &pi.minus, &pk.minus).unwrap() + d).norm());
                    worst = worst.max(j_inner(sig, &pi.plus, &pk.minus).unwrap().norm());
                    worst = worst.max((j_inner(sig, &c[i], &pk.dual).unwrap() - 2.0 * d).norm());
                    worst = worst.max(j_inner(sig, &pi.dual, &pk.dual).unwrap().norm());
                }
            }
            worst
        };
        let first = check(&pairs, &c);
        prop_assert!(first <= 1e-10 * (1.0 + w.frobenius_norm_sq()), "{}", first);
        let c2: Vec<Vec<Complex64>> = pairs.iter().map(|pr| pr.plus.iter().zip(&pr.minus).map(|(a, b)| a - b).collect()).collect();
        let again = isotropic_pair_complete(sig, &c2, &ambient, &tol).unwrap();
        prop_assert!(check(&again, &c2) <= 1e-10 * (1.0 + w.frobenius_norm_sq()));
    }

    #[test]
    fn random_j_unitary_group_properties(sig in signature(), seed in any::<u64>(), rap in 0.0f64..1.5) {
        let v: Matrix<Complex64> = j_unitary_random(sig, seed, rap);
        prop_assert!(is_j_unitary(sig, &v, 1e-10).unwrap().0);
        prop_assert!(is_j_unitary(sig, &v.adjoint(), 1e-10).unwrap().0);
        let inv = j_inverse(sig, &v).unwrap();
        prop_assert!((&inv * &v).distance(&Matrix::identity(sig.m())) <= 1e-10);
        prop_assert_eq!(apply_j(sig, &apply_j(sig, &v).unwrap()).unwrap(), v);
    }

    #[test]
    fn hyperexchange_round_trip(sig in signature(), seed in any::<u64>()) {
        let m = sig.m();
        let w: Matrix<f64> = j_unitary_random(sig, seed, 1.5);
        let mut perm: Vec<usize> = (0..m).collect();
        perm.shuffle(&mut seeded_rng(seed));
        let v = w.select_columns(&perm);
        let jhat: Vec<i8> = perm.iter().map(|&i| sig.sign(i)).collect();
        let s = hyperexchange_to_junitary(sig, &v, &jhat, 1e-9 * (1.0 + w.frobenius_norm_sq())).unwrap();
        prop_assert!(is_j_unitary(sig, &(&v * &s), 1e-10 * (1.0 + w.frobenius_norm_sq())).unwrap().0);
        let jh = Matrix::diag(&jhat.iter().map(|&x| x as f64).collect::<Vec<_>>());
        prop_assert_eq!(&(&s * &sig.j_matrix::<f64>()) * &s.transpose(), jh);
    }
}
