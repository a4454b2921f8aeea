mod common;

use bhe::channels::{log_negativity_boson, neg_eigenvalue_boson};
use bhe::fock_oracle::{
    bell_state_bosonic, bob_post_state_fermionic, bosonic_block, negativity_numeric,
    partial_transpose, teleportation_fidelity, DualRailQubit, Outcome, TruncatedDensityMatrix,
};
use bhe::geometry::{
    delta, horizon_from_mass, lapse, mass_from_horizon, rotating_horizon, tortoise,
};
use bhe::linalg::{eigenvalues_symmetric, DenseMatrix};
use bhe::modes::{occupation, squeeze, Statistics};
use proptest::prelude::*;

fn stats() -> impl Strategy<Value = Statistics> {
    prop_oneof![Just(Statistics::Boson), Just(Statistics::Fermion)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn mass_horizon_round_trip(d in 4u32..=11, log_rh in -3.0f64..3.0) {
        let r_h = 10f64.powf(log_rh);
        let m = mass_from_horizon(d, r_h).unwrap();
        let back = horizon_from_mass(d, m).unwrap();
        prop_assert!((back / r_h - 1.0).abs() < 1e-12);
        let m2 = mass_from_horizon(d, r_h * 1.001).unwrap();
        prop_assert!(m2 > m);
    }

    #[test]
    fn tortoise_derivative_is_inverse_lapse(d in 4u32..=11, r_h in 0.1f64..10.0, s in 1.01f64..100.0) {
        let r = s * r_h;
        let h = 1e-5 * r;
        let dr = (tortoise(d, r_h, r + h).unwrap() - tortoise(d, r_h, r - h).unwrap()) / (2.0 * h);
        let want = 1.0 / lapse(d, r_h, r).unwrap();
        prop_assert!((dr / want - 1.0).abs() < 1e-6, "d={} r/r_h={}: {} vs {}", d, s, dr, want);
    }

    #[test]
    fn tortoise_matches_quadrature(d in 4u32..=11, r_h in 0.2f64..5.0, s1 in 1.05f64..5.0, ds in 0.1f64..20.0) {
        let (r1, r2) = (s1 * r_h, (s1 + ds) * r_h);
        let closed = tortoise(d, r_h, r2).unwrap() - tortoise(d, r_h, r1).unwrap();
        let quad = common::tortoise_difference(d, r_h, r1, r2);
        prop_assert!((closed - quad).abs() < 1e-8 * quad.abs().max(1.0), "{} vs {}", closed, quad);
    }

    #[test]
    fn rotating_horizon_residual(n in 0u32..=7, mu in 0.01f64..50.0, frac in 0.0f64..0.999) {
        // n = 0 and n = 1 need a < a_max
        let a = match n {
            0 => frac * mu / 2.0,
            1 => frac * mu.sqrt(),
            _ => frac * 10.0,
        };
        let r_h = rotating_horizon(n, mu, a).unwrap();
        let scale = (r_h * r_h).max(a * a).max(mu / r_h.powi(n as i32 - 1));
        prop_assert!(delta(n, mu, a, r_h).abs() < 1e-12 * scale);
    }

    #[test]
    fn squeezing_and_occupation_agree(w in 1e-3f64..50.0, k in 1e-2f64..50.0, st in stats()) {
        let n2 = occupation(w, k, st).unwrap();
        let via_r = squeeze(w, k, st).unwrap().occupation();
        prop_assert!(n2 == via_r || ((n2 - via_r) / n2).abs() < 1e-10);
    }

    #[test]
    fn partial_transpose_involution_and_norms(seed in any::<u64>(), na in 1usize..4, nb in 1usize..6) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let dim = na * nb;
        let mut m = DenseMatrix::zeros(dim);
        for i in 0..dim {
            for j in i..dim {
                let x: f64 = rng.gen_range(-1.0..1.0);
                m[(i, j)] = x;
                m[(j, i)] = x;
            }
        }
        let rho = TruncatedDensityMatrix::new((0..na as u32).collect(), (0..nb as u32).collect(), m, 0.0).unwrap();
        let pt = partial_transpose(&rho);
        prop_assert_eq!(&partial_transpose(&pt), &rho);
        prop_assert_eq!(pt.trace(), rho.trace());
        prop_assert!((pt.matrix().frobenius_norm() - rho.matrix().frobenius_norm()).abs() < 1e-14);
    }

    #[test]
    fn bosonic_states_are_density_matrices(t in 0.0f64..0.8, n_trunc in 20usize..60) {
        let rho = bell_state_bosonic(t.atanh(), n_trunc).unwrap();
        prop_assert!(rho.matrix().max_asymmetry() < 1e-14);
        let ev = eigenvalues_symmetric(rho.matrix()).unwrap();
        prop_assert!(ev[0] >= -1e-10);
        prop_assert!((rho.trace() + rho.trace_deficit() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn block_spectrum_contains_lambda_n(t in 0.01f64..0.95, n in 0u32..30) {
        let r = t.atanh();
        let block = bosonic_block(r, n).unwrap();
        let ev = eigenvalues_symmetric(partial_transpose(&block).matrix()).unwrap();
        let lam = neg_eigenvalue_boson(r, n).unwrap();
        prop_assert!(ev.iter().any(|&e| (e - lam).abs() < 1e-10));
    }

    #[test]
    fn fermionic_fidelity_ignores_amplitudes(r in 0.0f64..std::f64::consts::FRAC_PI_4, theta in -3.2f64..3.2, o in 0usize..4) {
        let q = DualRailQubit::from_angle(theta);
        let outcome = Outcome::ALL[o];
        let rho = bob_post_state_fermionic(r, &q, outcome).unwrap();
        let f = teleportation_fidelity(&rho, &q, outcome).unwrap();
        prop_assert!((f - r.cos().powi(2)).abs() < 1e-12);
    }

    #[test]
    fn series_matches_brute_force(t in 0.0f64..0.9) {
        let r = t.atanh();
        let s = log_negativity_boson(r, 1e-13).unwrap().value;
        prop_assert!((s - common::brute_boson_series(t, 2000)).abs() < 1e-11);
    }
}

#[test]
fn oracle_negativity_converges_in_truncation() {
    for &t in &[0.1, 0.3, 0.5, 0.7] {
        let r = f64::atanh(t);
        for &n in &[20usize, 30, 40] {
            let a = negativity_numeric(&bell_state_bosonic(r, n).unwrap()).unwrap().log_negativity;
            let b = negativity_numeric(&bell_state_bosonic(r, 2 * n).unwrap()).unwrap().log_negativity;
            let bound = t.powi(2 * n as i32);
            assert!((a - b).abs() < bound, "t={t} N={n}: |{a} - {b}| >= {bound:e}");
        }
    }
}

#[test]
fn fermionic_fidelity_over_100_random_qubits() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let r = 0.5;
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let q = DualRailQubit::from_angle(rng.gen_range(0.0..std::f64::consts::TAU));
        let o = Outcome::ALL[rng.gen_range(0..4)];
        let rho = bob_post_state_fermionic(r, &q, o).unwrap();
        worst = worst.max((teleportation_fidelity(&rho, &q, o).unwrap() - r.cos().powi(2)).abs());
    }
    assert!(worst < 1e-12);
}
