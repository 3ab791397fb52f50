//! Closed-form dynamics against brute-force references.

use ergoloss::channels::{
    central_spin_evolve, central_spin_time_average, CentralSpinParams, ChannelModel, QubitChannel,
};
use ergoloss::oracle::{build_hamiltonian, oracle_evolve};
use ergoloss::qstate::{DensityMatrix, Temperature, C64};
use ergoloss::sampling::{random_channel, random_state};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_params(rng: &mut impl Rng, n: usize, zz: bool) -> CentralSpinParams {
    let temps = [
        Temperature::Finite(0.5),
        Temperature::Finite(1.0),
        Temperature::Finite(10.0),
        Temperature::Infinite,
    ];
    CentralSpinParams {
        n,
        omega0: rng.random_range(0.1..5.0),
        omega: rng.random_range(0.1..5.0),
        alpha: rng.random_range(0.01..2.0),
        temperature: temps[rng.random_range(0..temps.len())],
        include_zz: zz,
    }
}

fn entrywise(a: &DensityMatrix, b: &DensityMatrix) -> f64 {
    (*a.matrix() - *b.matrix()).max_abs()
}

#[test]
fn closed_form_matches_unitary_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    let mut worst = 0.0f64;
    for n in 2..=6 {
        for zz in [true, false] {
            for _ in 0..4 {
                let p = random_params(&mut rng, n, zz);
                let rho = random_state(&mut rng);
                for k in 0..8 {
                    let t = 30.0 * k as f64 / 7.0;
                    let fast = central_spin_evolve(&p, &rho, t).unwrap();
                    let slow = oracle_evolve(&p, &rho, t).unwrap();
                    worst = worst.max(entrywise(&fast, &slow));
                }
            }
        }
    }
    assert!(worst <= 1e-8, "max deviation {worst:e}");
}

#[test]
fn block_propagator_matches_matrix_exponential() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for zz in [true, false] {
        let p = random_params(&mut rng, 4, zz);
        let ham = build_hamiltonian(&p).unwrap();
        for t in [0.3, 2.0, 11.0] {
            let generator: DMatrix<C64> = &ham.matrix * C64::new(0.0, -t);
            let err = (ham.propagator(t) - generator.exp()).camax();
            assert!(err < 1e-9, "t={t}: {err:e}");
        }
    }
}

/// Trapezoid mean of `f` over `[0, tau]`.
fn mean_over(tau: f64, steps: usize, f: impl Fn(f64) -> DensityMatrix) -> (f64, C64) {
    let h = tau / steps as f64;
    let (mut p, mut c) = (0.0, C64::new(0.0, 0.0));
    for k in 0..=steps {
        let w = if k == 0 || k == steps { 0.5 } else { 1.0 };
        let rho = f(k as f64 * h);
        p += w * rho.rho11();
        c += rho.rho12() * w;
    }
    (p * h / tau, c * (h / tau))
}

#[test]
fn time_average_matches_oracle_quadrature() {
    let p = CentralSpinParams {
        n: 3,
        omega0: 1.2,
        omega: 0.7,
        alpha: 0.4,
        temperature: Temperature::Finite(1.0),
        include_zz: true,
    };
    let rho = DensityMatrix::from_parts(0.8, C64::new(0.2, -0.1)).unwrap();
    let (p11, c12) = mean_over(1000.0, 10_000, |t| oracle_evolve(&p, &rho, t).unwrap());
    let avg = central_spin_time_average(&p, &rho).unwrap();
    assert!((p11 - avg.rho11()).abs() < 1e-3, "{p11} vs {}", avg.rho11());
    assert!((c12 - avg.rho12()).norm() < 1e-3);
}

#[test]
fn time_averages_match_quadrature_for_random_channels() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let mut checked = 0;
    while checked < 12 {
        let ch: ChannelModel = random_channel(&mut rng);
        let rho = random_state(&mut rng);
        let avg = match ch.time_average(&rho) {
            Ok(a) => a,
            // resonant draws have no closed-form average
            Err(_) => continue,
        };
        let (p11, c12) = mean_over(1.0e4, 200_000, |t| ch.evolve(&rho, t).unwrap());
        assert!((p11 - avg.rho11()).abs() < 1e-3, "{ch:?}: {p11} vs {}", avg.rho11());
        assert!((c12 - avg.rho12()).norm() < 1e-3, "{ch:?}");
        checked += 1;
    }
}
