use serde::{Deserialize, Serialize};

use super::{check_time, PhaseCovariantMap, QubitChannel};
use crate::error::{invalid, Result};
use crate::qstate::{thermal_qubit, DensityMatrix, Temperature, C64};

/// Qubit weakly coupled to a thermal bosonic bath, `H0 = Ω0|1⟩⟨1|`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MarkovianThermalParams {
    pub gamma: f64,
    pub omega0: f64,
    #[serde(rename = "T")]
    pub temperature: Temperature,
}

impl MarkovianThermalParams {
    /// Planck number `n = 1/(e^{Ω0/T} − 1)`; `+∞` at infinite temperature.
    pub fn planck_n(&self) -> f64 {
        1.0 / self.temperature.inverse_scaled(self.omega0).exp_m1()
    }

    /// `n/(2n+1)`, written as `1/(2 + e^{Ω0/T} − 1)` so both limits are exact.
    pub fn excited_fraction(&self) -> f64 {
        1.0 / (2.0 + self.temperature.inverse_scaled(self.omega0).exp_m1())
    }

    /// `γ(2n+1) = γ·coth(Ω0/2T)`.
    pub fn relaxation_rate(&self) -> f64 {
        let x = self.temperature.inverse_scaled(self.omega0);
        self.gamma / (0.5 * x).tanh()
    }
}

#[derive(Clone, Debug)]
pub struct MarkovianChannel {
    params: MarkovianThermalParams,
    excited_fraction: f64,
    rate: f64,
}

impl MarkovianChannel {
    pub fn new(params: MarkovianThermalParams) -> Result<Self> {
        if !(params.gamma > 0.0 && params.gamma.is_finite()) {
            return Err(invalid("gamma", "must be positive and finite"));
        }
        if !(params.omega0 > 0.0 && params.omega0.is_finite()) {
            return Err(invalid("omega0", "must be positive and finite"));
        }
        Ok(MarkovianChannel {
            excited_fraction: params.excited_fraction(),
            rate: params.relaxation_rate(),
            params,
        })
    }

    pub fn params(&self) -> &MarkovianThermalParams {
        &self.params
    }

    fn decay(&self, t: f64) -> f64 {
        // infinite rate at T = ∞: thermalizes instantly for t > 0
        if t == 0.0 {
            1.0
        } else {
            (-self.rate * t).exp()
        }
    }
}

impl QubitChannel for MarkovianChannel {
    fn map_at(&self, t: f64) -> Result<PhaseCovariantMap> {
        check_time(t)?;
        let e = self.decay(t);
        let fill = self.excited_fraction * (1.0 - e);
        let coherence = if t == 0.0 {
            C64::new(1.0, 0.0)
        } else {
            C64::from_polar((-0.5 * self.rate * t).exp(), -self.params.omega0 * t)
        };
        Ok(PhaseCovariantMap {
            k11: e + fill,
            k12: fill,
            coherence,
        })
    }

    fn time_average_map(&self) -> Result<PhaseCovariantMap> {
        Ok(PhaseCovariantMap {
            k11: self.excited_fraction,
            k12: self.excited_fraction,
            coherence: C64::new(0.0, 0.0),
        })
    }

    /// Splitting `Ω0` corresponds to `thermal_qubit(Ω0/2, T)`.
    fn thermal_state(&self) -> DensityMatrix {
        thermal_qubit(0.5 * self.params.omega0, self.params.temperature)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn channel(gamma: f64, omega0: f64, t: Temperature) -> MarkovianChannel {
        MarkovianChannel::new(MarkovianThermalParams {
            gamma,
            omega0,
            temperature: t,
        })
        .unwrap()
    }

    /// RK4 integration of `ρ̇ = i[ρ,H0] + γ(n+1)D[σ−]ρ + γn D[σ+]ρ`,
    /// written out in components.
    fn rk4(gamma: f64, omega0: f64, n: f64, rho0: &DensityMatrix, t: f64) -> (f64, C64) {
        let deriv = |r11: f64, r12: C64| {
            let d11 = -gamma * (n + 1.0) * r11 + gamma * n * (1.0 - r11);
            let d12 = C64::new(0.0, -omega0) * r12 - 0.5 * gamma * (2.0 * n + 1.0) * r12;
            (d11, d12)
        };
        let steps = 20_000;
        let h = t / steps as f64;
        let (mut r11, mut r12) = (rho0.rho11(), rho0.rho12());
        for _ in 0..steps {
            let k1 = deriv(r11, r12);
            let k2 = deriv(r11 + 0.5 * h * k1.0, r12 + 0.5 * h * k1.1);
            let k3 = deriv(r11 + 0.5 * h * k2.0, r12 + 0.5 * h * k2.1);
            let k4 = deriv(r11 + h * k3.0, r12 + h * k3.1);
            r11 += h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0);
            r12 += (k1.1 + k2.1 * 2.0 + k3.1 * 2.0 + k4.1) * (h / 6.0);
        }
        (r11, r12)
    }

    #[test]
    fn identity_at_zero_time() {
        let ch = channel(1.0, 1.0, Temperature::Finite(1.0));
        let rho = DensityMatrix::from_parts(0.3, C64::new(0.2, -0.1)).unwrap();
        assert_eq!(ch.evolve(&rho, 0.0).unwrap(), rho);
        assert!(matches!(ch.evolve(&rho, -1.0), Err(Error::NegativeTime(_))));
    }

    #[test]
    fn matches_master_equation_integration() {
        let p = MarkovianThermalParams {
            gamma: 1.0,
            omega0: 1.0,
            temperature: Temperature::Finite(1.0),
        };
        let ch = MarkovianChannel::new(p.clone()).unwrap();
        for rho in [
            DensityMatrix::excited(),
            DensityMatrix::from_parts(0.4, C64::new(0.3, 0.35)).unwrap(),
        ] {
            let out = ch.evolve(&rho, 0.7).unwrap();
            let (r11, r12) = rk4(1.0, 1.0, p.planck_n(), &rho, 0.7);
            assert!((out.rho11() - r11).abs() <= 1e-8);
            assert!((out.rho12() - r12).norm() <= 1e-8);
        }
    }

    #[test]
    fn long_time_limit_is_thermal() {
        let ch = channel(0.5, 2.0, Temperature::Finite(1.5));
        let n = ch.params().planck_n();
        let out = ch.evolve(&DensityMatrix::excited(), 200.0).unwrap();
        assert!((out.rho11() - n / (2.0 * n + 1.0)).abs() < 1e-14);
        assert!(out.rho12().norm() < 1e-14);
    }

    #[test]
    fn time_average_is_thermal_and_state_independent() {
        for t in [0.3, 1.0, 7.0] {
            let ch = channel(1.3, 0.8, Temperature::Finite(t));
            let a = ch.time_average(&DensityMatrix::excited()).unwrap();
            let b = ch
                .time_average(&DensityMatrix::from_parts(0.2, C64::new(0.1, 0.3)).unwrap())
                .unwrap();
            assert!((*a.matrix() - *b.matrix()).max_abs() < 1e-15);
            let th = ch.thermal_state();
            assert!((a.rho11() - th.rho11()).abs() < 1e-15);
            // ground population 1/(1+e^{−Ω0/T})
            let p = 1.0 / (1.0 + (-0.8 / t).exp());
            assert!((a.rho22() - p).abs() < 1e-15);
        }
        let hot = channel(1.0, 1.0, Temperature::Infinite);
        assert_eq!(hot.time_average(&DensityMatrix::excited()).unwrap(), DensityMatrix::maximally_mixed());
        let cold = channel(1.0, 1.0, Temperature::Zero);
        assert_eq!(cold.time_average(&DensityMatrix::excited()).unwrap(), DensityMatrix::ground());
    }

    #[test]
    fn semigroup_and_fixed_point() {
        let ch = channel(0.7, 1.1, Temperature::Finite(0.9));
        let rho = DensityMatrix::from_parts(0.65, C64::new(-0.2, 0.3)).unwrap();
        for (s, t) in [(0.1, 0.4), (1.0, 2.5), (3.0, 0.01)] {
            let two = ch.evolve(&ch.evolve(&rho, s).unwrap(), t).unwrap();
            let one = ch.evolve(&rho, s + t).unwrap();
            assert!((*two.matrix() - *one.matrix()).max_abs() < 1e-10);
        }
        let fixed = ch.time_average(&rho).unwrap();
        for t in [0.5, 3.0, 40.0] {
            let moved = ch.evolve(&fixed, t).unwrap();
            assert!((*moved.matrix() - *fixed.matrix()).max_abs() < 1e-10);
        }
    }

    #[test]
    fn planck_number_limits() {
        let p = |t| MarkovianThermalParams {
            gamma: 1.0,
            omega0: 1.0,
            temperature: t,
        };
        assert_eq!(p(Temperature::Zero).planck_n(), 0.0);
        assert_eq!(p(Temperature::Infinite).planck_n(), f64::INFINITY);
        let n = p(Temperature::Finite(2.0)).planck_n();
        assert!((n - 1.0 / ((0.5f64).exp() - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_params() {
        let bad = MarkovianThermalParams {
            gamma: 0.0,
            omega0: 1.0,
            temperature: Temperature::Infinite,
        };
        assert!(MarkovianChannel::new(bad).is_err());
    }
}
