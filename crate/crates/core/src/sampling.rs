//! Random qubit states, unitaries and channels for randomized checks.

use std::f64::consts::PI;

use rand::Rng;

use crate::channels::{
    CentralSpinParams, ChannelModel, ChannelParams, DephasingParams, MarkovianThermalParams,
};
use crate::qstate::{DensityMatrix, Mat2, Temperature, C64};

/// Smallest eigenvalue used for near-boundary states. Closer to the boundary
/// the eigenvalue itself carries too little relative precision for the
/// relative entropy.
pub const NEAR_BOUNDARY_MIN_EIGENVALUE: f64 = 1e-6;

fn unit_vector<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    let z: f64 = rng.random_range(-1.0..=1.0);
    let phi: f64 = rng.random_range(0.0..2.0 * PI);
    let s = (1.0 - z * z).max(0.0).sqrt();
    [s * phi.cos(), s * phi.sin(), z]
}

fn with_radius(dir: [f64; 3], r: f64) -> DensityMatrix {
    DensityMatrix::from_bloch_vector([dir[0] * r, dir[1] * r, dir[2] * r])
        .expect("radius within the Bloch ball")
}

/// Haar-random pure state.
pub fn random_pure<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    with_radius(unit_vector(rng), 1.0)
}

/// Uniform in the Bloch ball.
pub fn random_mixed<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    let r = rng.random::<f64>().cbrt();
    with_radius(unit_vector(rng), r)
}

/// Full-rank state with smallest eigenvalue log-uniform in `[1e-6, 1e-3]`.
pub fn random_near_boundary<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    let lo = NEAR_BOUNDARY_MIN_EIGENVALUE.ln();
    let lambda = rng.random_range(lo..(1e-3f64).ln()).exp();
    with_radius(unit_vector(rng), 1.0 - 2.0 * lambda)
}

/// Pure, mixed and near-boundary states in roughly equal shares.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    match rng.random_range(0..3) {
        0 => random_pure(rng),
        1 => random_mixed(rng),
        _ => random_near_boundary(rng),
    }
}

/// Haar-random element of SU(2).
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R) -> Mat2 {
    loop {
        let q: [f64; 4] = std::array::from_fn(|_| rng.random_range(-1.0..=1.0));
        let n2: f64 = q.iter().map(|x| x * x).sum();
        if n2 > 1e-6 && n2 <= 1.0 {
            let n = n2.sqrt();
            let a = C64::new(q[0] / n, q[1] / n);
            let b = C64::new(q[2] / n, q[3] / n);
            return Mat2::new(a, -b.conj(), b, a.conj());
        }
    }
}

/// Temperature drawn from zero, infinite and log-uniform finite values.
pub fn random_temperature<R: Rng + ?Sized>(rng: &mut R) -> Temperature {
    match rng.random_range(0..10) {
        0 => Temperature::Zero,
        1 => Temperature::Infinite,
        _ => Temperature::Finite(rng.random_range((0.05f64).ln()..(50.0f64).ln()).exp()),
    }
}

/// One of the three models at random parameters; central spin uses `N ≤ 8`.
pub fn random_channel<R: Rng + ?Sized>(rng: &mut R) -> ChannelModel {
    let params = match rng.random_range(0..3) {
        0 => ChannelParams::MarkovianThermal(MarkovianThermalParams {
            gamma: rng.random_range(0.05..3.0),
            omega0: rng.random_range(0.1..5.0),
            temperature: random_temperature(rng),
        }),
        1 => ChannelParams::Dephasing(DephasingParams {
            omega: rng.random_range(-3.0..3.0),
            gamma_d: rng.random_range(0.01..2.0),
            temperature: random_temperature(rng),
        }),
        _ => ChannelParams::CentralSpin(CentralSpinParams {
            n: rng.random_range(1..=8),
            omega0: rng.random_range(-3.0..3.0),
            omega: rng.random_range(-3.0..3.0),
            alpha: rng.random_range(0.0..2.0),
            temperature: random_temperature(rng),
            include_zz: rng.random(),
        }),
    };
    params.build().expect("sampled parameters are valid")
}
