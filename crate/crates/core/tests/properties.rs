mod common;

use proptest::prelude::*;
use qubit_plt::criteria::{lorentz_square, partial_transpose, reconstruct_density};
use qubit_plt::linalg::{general_real_eigenvalues, hermitian_eigenvalues, singular_values};
use qubit_plt::states::StateRng;
use qubit_plt::{
    apply_local_unitary, pauli_coefficients, plt_test, product_state, random_ginibre,
    random_separable, BlochVector, Classification, ComplexMatrix4, DensityMatrix, RealMatrix4,
    RngSeed, Tolerances,
};

fn ginibre() -> impl Strategy<Value = DensityMatrix<f64>> {
    any::<u64>().prop_map(|s| random_ginibre(RngSeed(s)))
}

fn bloch() -> impl Strategy<Value = BlochVector<f64>> {
    (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64).prop_map(|(x, y, z)| {
        let n = (x * x + y * y + z * z).sqrt();
        let k = if n > 1.0 { 1.0 / n } else { 1.0 };
        BlochVector::new([x * k, y * k, z * k]).unwrap()
    })
}

fn real_matrix() -> impl Strategy<Value = RealMatrix4<f64>> {
    proptest::array::uniform4(proptest::array::uniform4(-1.0..1.0f64))
        .prop_map(|rows| RealMatrix4::new(rows).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn coefficients_round_trip(rho in ginibre()) {
        let a = pauli_coefficients(&rho).unwrap();
        let back = reconstruct_density(&a).unwrap();
        prop_assert!(back.matrix().max_abs_diff(rho.matrix()) <= 1e-13);
    }

    #[test]
    fn metric_square_is_self_adjoint(rho in ginibre()) {
        let b = lorentz_square(&pauli_coefficients(&rho).unwrap());
        prop_assert!(b.metric_asymmetry() <= 1e-12 * b.matrix().max_abs());
    }

    #[test]
    fn spectrum_survives_local_unitaries(rho in ginibre(), seed in any::<u64>()) {
        let mut rng = StateRng::new(RngSeed(seed));
        let (u, v) = (common::random_su2(&mut rng), common::random_su2(&mut rng));
        let cfg = Tolerances::default();
        let before = plt_test(&rho, &cfg).unwrap();
        let after = plt_test(&apply_local_unitary(&rho, &u, &v).unwrap(), &cfg).unwrap();
        for (x, y) in before.spectrum.lambda.iter().zip(after.spectrum.lambda) {
            prop_assert!((x - y).abs() <= 1e-10);
        }
        prop_assert_eq!(before.verdict.class, after.verdict.class);
    }

    #[test]
    fn scaling_covariance(rho in ginibre(), c in prop::sample::select(vec![1e-3, 0.5, 7.0, 1e3])) {
        let cfg = Tolerances::default();
        let base = plt_test(&rho, &cfg).unwrap();
        let scaled = plt_test(&rho.scaled(c).unwrap(), &cfg).unwrap();
        for (x, y) in base.spectrum.lambda.iter().zip(scaled.spectrum.lambda) {
            prop_assert!((y - c * c * x).abs() <= 1e-10 * c * c * base.spectrum.lambda[0]);
        }
        prop_assert!((scaled.spectrum.t - c * base.spectrum.t).abs() <= 1e-10 * c * base.spectrum.mu[0]);
        prop_assert_eq!(base.verdict.class, scaled.verdict.class);
    }

    #[test]
    fn hermitian_eigenvalues_sum_to_trace(rho in ginibre()) {
        let l = hermitian_eigenvalues(rho.matrix(), 1e-10).unwrap();
        prop_assert!((l.iter().sum::<f64>() - rho.trace()).abs() <= 1e-12);
        prop_assert!(l.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn general_eigenvalues_pair_and_sum(m in real_matrix()) {
        let e = general_real_eigenvalues(&m).unwrap();
        let sum: f64 = e.values.iter().map(|z| z.re).sum();
        prop_assert!((sum - m.trace()).abs() <= 1e-9);
        prop_assert!(e.values.iter().map(|z| z.im).sum::<f64>().abs() <= 1e-9);
        for z in e.values {
            if z.im != 0.0 {
                prop_assert!(e.values.iter().any(|w| (w.re - z.re).abs() <= 1e-9 && (w.im + z.im).abs() <= 1e-9));
            }
        }
    }

    #[test]
    fn singular_values_ignore_unitaries(rho in ginibre(), seed in any::<u64>()) {
        let mut rng = StateRng::new(RngSeed(seed));
        let w = ComplexMatrix4::kron(&common::random_su2(&mut rng), &common::random_su2(&mut rng));
        let m = rho.matrix() * &w;
        let (a, b) = (singular_values(rho.matrix()).unwrap(), singular_values(&m).unwrap());
        for (x, y) in a.iter().zip(b) {
            prop_assert!((x - y).abs() <= 1e-10);
        }
    }

    #[test]
    fn partial_transpose_is_an_involution(rho in ginibre()) {
        let once = DensityMatrix::new(partial_transpose(&rho)).ok();
        if let Some(pt) = once {
            prop_assert!(partial_transpose(&pt).max_abs_diff(rho.matrix()) == 0.0);
        }
        let m = common::partial_transpose(&common::partial_transpose(&common::rho_na(&rho)));
        prop_assert!((m - common::rho_na(&rho)).norm() == 0.0);
    }

    #[test]
    fn product_states_are_never_entangled(a in bloch(), b in bloch()) {
        let r = plt_test(&product_state(a, b), &Tolerances::default()).unwrap();
        prop_assert!(r.spectrum.t >= -1e-9 * r.spectrum.mu[0]);
        prop_assert_ne!(r.verdict.class, Classification::Entangled);
    }

    #[test]
    fn separable_mixtures_are_never_entangled(seed in any::<u64>(), k in 1usize..=16) {
        let rho = random_separable::<f64>(RngSeed(seed), k).unwrap();
        let r = plt_test(&rho, &Tolerances::default()).unwrap();
        prop_assert!(r.spectrum.t >= -1e-9 * r.spectrum.mu[0]);
    }
}
