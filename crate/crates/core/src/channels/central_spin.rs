//! Central qubit coupled to `N` bath spins, in the Holstein–Primakoff picture.
//!
//! The total Hamiltonian conserves `|1⟩⟨1| + b†b`, so it splits into 2×2
//! blocks `{|1,m⟩, |0,m+1⟩}` for `m = 0..=N` plus the singleton `|0,0⟩`.
//! Block `m` has trace `Λ_m`, half splitting `δ_m`, off-diagonal coupling
//! `c_m` and gap `η_m = 2√(δ_m² + c_m²)`:
//!
//! ```text
//! δ_m  = ω0 − ω/2N − zz·α√N·(1 − (2m+1)/2N)
//! c_m² = 4α²·(m+1)·(1 − m/2N)
//! Λ_m  = −2ω·(1 − (2m+1)/2N) − zz·α/√N
//! ```
//!
//! Setting `m = −1` reproduces the singleton (`c_{−1} = 0`). The bath starts
//! diagonal in the Fock basis with weights `w_n ∝ exp(−(ω/T)·n/N)`.

use serde::{Deserialize, Serialize};

use super::{check_time, PhaseCovariantMap, QubitChannel};
use crate::error::{invalid, Error, Result};
use crate::qstate::{thermal_qubit, DensityMatrix, Temperature, C64};

/// Frequencies of `Δ(t)` below this count as zero.
pub const RESONANCE_FREQUENCY_TOL: f64 = 1e-9;
/// Zero-frequency components of `Δ(t)` lighter than this are ignored.
pub const RESONANCE_WEIGHT_TOL: f64 = 1e-12;

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CentralSpinParams {
    #[serde(rename = "N")]
    pub n: usize,
    pub omega0: f64,
    pub omega: f64,
    pub alpha: f64,
    #[serde(rename = "T")]
    pub temperature: Temperature,
    /// Keep the `−α√N·σz(1 − b†b/N)` term.
    #[serde(default = "yes")]
    pub include_zz: bool,
}

impl CentralSpinParams {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(invalid("N", "must be at least 1"));
        }
        for (name, v) in [("omega0", self.omega0), ("omega", self.omega)] {
            if !v.is_finite() {
                return Err(invalid(name, "must be finite"));
            }
        }
        if !(self.alpha >= 0.0 && self.alpha.is_finite()) {
            return Err(invalid("alpha", "must be non-negative and finite"));
        }
        Ok(())
    }

    fn zz(&self) -> f64 {
        if self.include_zz {
            1.0
        } else {
            0.0
        }
    }

    /// `(δ_m, c_m², Λ_m)` for block `m ≥ −1`.
    fn block(&self, m: f64) -> (f64, f64, f64) {
        let nf = self.n as f64;
        let u = 1.0 - (2.0 * m + 1.0) / (2.0 * nf);
        let detuning = self.omega0 - self.omega / (2.0 * nf) - self.zz() * self.alpha * nf.sqrt() * u;
        let coupling_sq = 4.0 * self.alpha * self.alpha * (m + 1.0) * (1.0 - m / (2.0 * nf));
        let lambda = -2.0 * self.omega * u - self.zz() * self.alpha / nf.sqrt();
        (detuning, coupling_sq, lambda)
    }

    /// Normalized bath weights `w_0..=w_N`.
    pub fn bath_weights(&self) -> Vec<f64> {
        let levels = self.n + 1;
        let nf = self.n as f64;
        match self.temperature {
            Temperature::Infinite => vec![1.0 / levels as f64; levels],
            Temperature::Zero => {
                let mut w = vec![0.0; levels];
                if self.omega > 0.0 {
                    w[0] = 1.0;
                } else if self.omega < 0.0 {
                    w[self.n] = 1.0;
                } else {
                    w.fill(1.0 / levels as f64);
                }
                w
            }
            Temperature::Finite(t) => {
                let exps: Vec<f64> = (0..levels).map(|n| -(self.omega / t) * n as f64 / nf).collect();
                let top = exps.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                let raw: Vec<f64> = exps.iter().map(|e| (e - top).exp()).collect();
                let sum: f64 = raw.iter().sum();
                raw.into_iter().map(|r| r / sum).collect()
            }
        }
    }

    /// `ln Z` with `Z = Σ_n exp(−(ω/T)·(n/N − 1))`; `+∞` at `T = 0` when `ω > 0`.
    pub fn ln_partition(&self) -> f64 {
        let levels = self.n + 1;
        match self.temperature {
            Temperature::Infinite => (levels as f64).ln(),
            Temperature::Zero => {
                if self.omega > 0.0 {
                    f64::INFINITY
                } else if self.omega < 0.0 {
                    0.0
                } else {
                    (levels as f64).ln()
                }
            }
            Temperature::Finite(t) => {
                let nf = self.n as f64;
                let exps: Vec<f64> = (0..levels)
                    .map(|n| -(self.omega / t) * (n as f64 / nf - 1.0))
                    .collect();
                let top = exps.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                top + exps.iter().map(|e| (e - top).exp()).sum::<f64>().ln()
            }
        }
    }
}

/// Per-level quantities for bath occupation `n`. Primed entries belong to
/// block `n − 1`, which carries `|0,n⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LevelKernels {
    pub eta: f64,
    pub eta_prime: f64,
    /// `2δ_n`.
    pub theta: f64,
    /// `−2δ_{n−1}`.
    pub theta_prime: f64,
    pub lambda: f64,
    pub lambda_prime: f64,
    /// Rabi amplitude `c_n²/(δ_n² + c_n²)` of block `n`.
    pub amplitude: f64,
    /// Same for block `n − 1`; zero for `n = 0`.
    pub amplitude_prime: f64,
    pub weight: f64,
}

impl LevelKernels {
    fn x(&self) -> f64 {
        if self.eta > 0.0 {
            self.theta / self.eta
        } else {
            0.0
        }
    }

    fn x_prime(&self) -> f64 {
        if self.eta_prime > 0.0 {
            -self.theta_prime / self.eta_prime
        } else {
            0.0
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CentralSpinKernels {
    pub levels: Vec<LevelKernels>,
    pub ln_partition: f64,
}

impl CentralSpinKernels {
    pub fn new(params: &CentralSpinParams) -> Result<Self> {
        params.validate()?;
        let weights = params.bath_weights();
        let levels = weights
            .iter()
            .enumerate()
            .map(|(n, &weight)| {
                let (d, c2, lambda) = params.block(n as f64);
                let (dp, c2p, lambda_prime) = params.block(n as f64 - 1.0);
                let amp = |d: f64, c2: f64| if c2 > 0.0 { c2 / (d * d + c2) } else { 0.0 };
                LevelKernels {
                    eta: 2.0 * (d * d + c2).sqrt(),
                    eta_prime: 2.0 * (dp * dp + c2p).sqrt(),
                    theta: 2.0 * d,
                    theta_prime: -2.0 * dp,
                    lambda,
                    lambda_prime,
                    amplitude: amp(d, c2),
                    amplitude_prime: amp(dp, c2p),
                    weight,
                }
            })
            .collect();
        Ok(CentralSpinKernels {
            levels,
            ln_partition: params.ln_partition(),
        })
    }

    /// Partition sum `Z`; overflows to `+∞` for very small `T`.
    pub fn partition(&self) -> f64 {
        self.ln_partition.exp()
    }

    pub fn values_at(&self, t: f64) -> ThetaValues {
        let mut theta1 = 0.0;
        let mut theta2 = 0.0;
        let mut delta = C64::new(0.0, 0.0);
        for k in &self.levels {
            if k.weight == 0.0 {
                continue;
            }
            let (s, c) = (0.5 * k.eta * t).sin_cos();
            let (sp, cp) = (0.5 * k.eta_prime * t).sin_cos();
            theta1 += k.weight * k.amplitude * s * s;
            theta2 += k.weight * k.amplitude_prime * sp * sp;
            let phase = C64::from_polar(1.0, -0.5 * (k.lambda - k.lambda_prime) * t);
            delta += phase * C64::new(c, -k.x() * s) * C64::new(cp, -k.x_prime() * sp) * k.weight;
        }
        ThetaValues {
            theta1,
            theta2,
            delta,
        }
    }

    pub fn time_averaged(&self) -> Result<ThetaValues> {
        self.check_resonance()?;
        let (theta1, theta2) = self.levels.iter().fold((0.0, 0.0), |(a, b), k| {
            (a + 0.5 * k.weight * k.amplitude, b + 0.5 * k.weight * k.amplitude_prime)
        });
        Ok(ThetaValues {
            theta1,
            theta2,
            delta: C64::new(0.0, 0.0),
        })
    }

    /// Fails if `Δ(t)` has a weighted zero-frequency component, in which
    /// case the coherence does not average out.
    pub fn check_resonance(&self) -> Result<()> {
        for (n, k) in self.levels.iter().enumerate() {
            let (x, xp) = (k.x(), k.x_prime());
            for s in [1.0, -1.0] {
                for sp in [1.0, -1.0] {
                    let frequency =
                        0.5 * (k.lambda - k.lambda_prime) + 0.5 * s * k.eta + 0.5 * sp * k.eta_prime;
                    let weight = k.weight * 0.25 * (1.0 + s * x) * (1.0 + sp * xp);
                    if frequency.abs() < RESONANCE_FREQUENCY_TOL && weight > RESONANCE_WEIGHT_TOL {
                        return Err(Error::Resonant {
                            level: n,
                            frequency,
                            weight,
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// `Θ1`, `Θ2` and `Δ`, with `ρ11 ↦ (1−Θ1)ρ11 + Θ2·ρ22` and `ρ12 ↦ Δ·ρ12`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThetaValues {
    pub theta1: f64,
    pub theta2: f64,
    pub delta: C64,
}

impl ThetaValues {
    pub fn to_map(&self) -> PhaseCovariantMap {
        PhaseCovariantMap {
            k11: 1.0 - self.theta1,
            k12: self.theta2,
            coherence: self.delta,
        }
    }
}

/// `α → ∞` limit of `(Θ̄1, Θ̄2)` at fixed `N`, `ω` and `T`.
pub fn theta_bars_saturated(params: &CentralSpinParams) -> Result<(f64, f64)> {
    params.validate()?;
    let w = params.bath_weights();
    if !params.include_zz {
        return Ok((0.5, 0.5 * (1.0 - w[0])));
    }
    let nf = params.n as f64;
    let summand = |m: f64| {
        let u = 1.0 - (2.0 * m + 1.0) / (2.0 * nf);
        let v = (m + 1.0) * (1.0 - m / (2.0 * nf));
        2.0 / (4.0 + nf * u * u / v)
    };
    let mut t1 = 0.0;
    let mut t2 = 0.0;
    for (n, wn) in w.iter().enumerate() {
        t1 += wn * summand(n as f64);
        if n >= 1 {
            t2 += wn * summand(n as f64 - 1.0);
        }
    }
    Ok((t1, t2))
}

#[derive(Clone, Debug)]
pub struct CentralSpinChannel {
    params: CentralSpinParams,
    kernels: CentralSpinKernels,
}

impl CentralSpinChannel {
    pub fn new(params: CentralSpinParams) -> Result<Self> {
        let kernels = CentralSpinKernels::new(&params)?;
        Ok(CentralSpinChannel { params, kernels })
    }

    pub fn params(&self) -> &CentralSpinParams {
        &self.params
    }

    pub fn kernels(&self) -> &CentralSpinKernels {
        &self.kernels
    }

    pub fn values_at(&self, t: f64) -> Result<ThetaValues> {
        check_time(t)?;
        Ok(self.kernels.values_at(t))
    }
}

impl QubitChannel for CentralSpinChannel {
    fn map_at(&self, t: f64) -> Result<PhaseCovariantMap> {
        Ok(self.values_at(t)?.to_map())
    }

    fn time_average_map(&self) -> Result<PhaseCovariantMap> {
        Ok(self.kernels.time_averaged()?.to_map())
    }

    fn thermal_state(&self) -> DensityMatrix {
        thermal_qubit(self.params.omega0, self.params.temperature)
    }
}
