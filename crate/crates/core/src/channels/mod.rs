//! Closed-form reduced dynamics of the three qubit models.
//!
//! Every model here is phase covariant: at any time, and for the infinite
//! time average, the dynamical map acts as
//!
//! ```text
//! ρ11 ↦ k11·ρ11 + k12·ρ22,      ρ12 ↦ c·ρ12,
//! ```
//!
//! which [`PhaseCovariantMap`] stores. Models precompute whatever they need
//! at construction and are immutable afterwards.

mod central_spin;
mod dephasing;
mod markovian;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qstate::{DensityMatrix, C64};

pub use central_spin::{
    CentralSpinChannel, CentralSpinKernels, CentralSpinParams, LevelKernels, ThetaValues,
    theta_bars_saturated, RESONANCE_FREQUENCY_TOL, RESONANCE_WEIGHT_TOL,
};
pub use dephasing::{DephasingChannel, DephasingParams};
pub use markovian::{MarkovianChannel, MarkovianThermalParams};

/// `ρ11 ↦ k11·ρ11 + k12·ρ22`, `ρ12 ↦ c·ρ12`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseCovariantMap {
    /// Probability that the excited level stays excited.
    pub k11: f64,
    /// Probability that the ground level becomes excited.
    pub k12: f64,
    pub coherence: C64,
}

impl PhaseCovariantMap {
    pub const IDENTITY: PhaseCovariantMap = PhaseCovariantMap {
        k11: 1.0,
        k12: 0.0,
        coherence: C64::new(1.0, 0.0),
    };

    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        let rho11 = self.k11 * rho.rho11() + self.k12 * rho.rho22();
        DensityMatrix::from_parts(rho11, self.coherence * rho.rho12())
    }

    /// Scaling of the Bloch z component, `k11 − k12`.
    pub fn population_contraction(&self) -> f64 {
        self.k11 - self.k12
    }

    /// Smallest singular value of the linear part of the Bloch map.
    pub fn min_singular_value(&self) -> f64 {
        self.population_contraction().abs().min(self.coherence.norm())
    }
}

/// Common interface of the qubit dynamics.
pub trait QubitChannel {
    fn map_at(&self, t: f64) -> Result<PhaseCovariantMap>;

    /// Map sending `ρ(0)` to the Cesàro mean `lim (1/τ)∫₀^τ ρ(t) dt`.
    fn time_average_map(&self) -> Result<PhaseCovariantMap>;

    /// Thermal state of the system Hamiltonian at the bath temperature.
    fn thermal_state(&self) -> DensityMatrix;

    fn evolve(&self, rho0: &DensityMatrix, t: f64) -> Result<DensityMatrix> {
        self.map_at(t)?.apply(rho0)
    }

    fn time_average(&self, rho0: &DensityMatrix) -> Result<DensityMatrix> {
        self.time_average_map()?.apply(rho0)
    }
}

pub(crate) fn check_time(t: f64) -> Result<()> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::NegativeTime(t))
    }
}

/// Serializable parameter record for any of the three models.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum ChannelParams {
    MarkovianThermal(MarkovianThermalParams),
    Dephasing(DephasingParams),
    CentralSpin(CentralSpinParams),
}

impl ChannelParams {
    pub fn build(&self) -> Result<ChannelModel> {
        Ok(match self {
            ChannelParams::MarkovianThermal(p) => {
                ChannelModel::MarkovianThermal(MarkovianChannel::new(p.clone())?)
            }
            ChannelParams::Dephasing(p) => ChannelModel::Dephasing(DephasingChannel::new(p.clone())?),
            ChannelParams::CentralSpin(p) => {
                ChannelModel::CentralSpin(CentralSpinChannel::new(p.clone())?)
            }
        })
    }
}

#[derive(Clone, Debug)]
pub enum ChannelModel {
    MarkovianThermal(MarkovianChannel),
    Dephasing(DephasingChannel),
    CentralSpin(CentralSpinChannel),
}

impl ChannelModel {
    pub fn params(&self) -> ChannelParams {
        match self {
            ChannelModel::MarkovianThermal(c) => ChannelParams::MarkovianThermal(c.params().clone()),
            ChannelModel::Dephasing(c) => ChannelParams::Dephasing(c.params().clone()),
            ChannelModel::CentralSpin(c) => ChannelParams::CentralSpin(c.params().clone()),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ChannelModel::MarkovianThermal(_) => "markovian_thermal",
            ChannelModel::Dephasing(_) => "dephasing",
            ChannelModel::CentralSpin(_) => "central_spin",
        }
    }

    fn inner(&self) -> &dyn QubitChannel {
        match self {
            ChannelModel::MarkovianThermal(c) => c,
            ChannelModel::Dephasing(c) => c,
            ChannelModel::CentralSpin(c) => c,
        }
    }
}

impl QubitChannel for ChannelModel {
    fn map_at(&self, t: f64) -> Result<PhaseCovariantMap> {
        self.inner().map_at(t)
    }

    fn time_average_map(&self) -> Result<PhaseCovariantMap> {
        self.inner().time_average_map()
    }

    fn thermal_state(&self) -> DensityMatrix {
        self.inner().thermal_state()
    }
}

impl From<MarkovianChannel> for ChannelModel {
    fn from(c: MarkovianChannel) -> Self {
        ChannelModel::MarkovianThermal(c)
    }
}

impl From<DephasingChannel> for ChannelModel {
    fn from(c: DephasingChannel) -> Self {
        ChannelModel::Dephasing(c)
    }
}

impl From<CentralSpinChannel> for ChannelModel {
    fn from(c: CentralSpinChannel) -> Self {
        ChannelModel::CentralSpin(c)
    }
}

pub fn markovian_evolve(
    p: &MarkovianThermalParams,
    rho0: &DensityMatrix,
    t: f64,
) -> Result<DensityMatrix> {
    MarkovianChannel::new(p.clone())?.evolve(rho0, t)
}

pub fn markovian_time_average(p: &MarkovianThermalParams, rho0: &DensityMatrix) -> Result<DensityMatrix> {
    MarkovianChannel::new(p.clone())?.time_average(rho0)
}

pub fn dephasing_evolve(p: &DephasingParams, rho0: &DensityMatrix, t: f64) -> Result<DensityMatrix> {
    DephasingChannel::new(p.clone())?.evolve(rho0, t)
}

pub fn dephasing_time_average(p: &DephasingParams, rho0: &DensityMatrix) -> Result<DensityMatrix> {
    DephasingChannel::new(p.clone())?.time_average(rho0)
}

pub fn central_spin_kernels(p: &CentralSpinParams) -> Result<CentralSpinKernels> {
    CentralSpinKernels::new(p)
}

pub fn central_spin_evolve(p: &CentralSpinParams, rho0: &DensityMatrix, t: f64) -> Result<DensityMatrix> {
    CentralSpinChannel::new(p.clone())?.evolve(rho0, t)
}

pub fn central_spin_time_average(p: &CentralSpinParams, rho0: &DensityMatrix) -> Result<DensityMatrix> {
    CentralSpinChannel::new(p.clone())?.time_average(rho0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstate::Temperature;

    #[test]
    fn params_json_schema() {
        let json = r#"{"model":"central_spin","N":4,"omega0":1.0,"omega":2.0,"alpha":0.5,"T":"inf","include_zz":false}"#;
        let p: ChannelParams = serde_json::from_str(json).unwrap();
        match &p {
            ChannelParams::CentralSpin(c) => {
                assert_eq!(c.n, 4);
                assert_eq!(c.temperature, Temperature::Infinite);
                assert!(!c.include_zz);
            }
            _ => panic!("wrong variant"),
        }
        let back: ChannelParams = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(back, p);

        let m: ChannelParams =
            serde_json::from_str(r#"{"model":"markovian_thermal","gamma":1,"omega0":1,"T":2}"#)
                .unwrap();
        assert!(m.build().is_ok());
        let d: ChannelParams =
            serde_json::from_str(r#"{"model":"dephasing","omega":1,"gamma_d":0.3}"#).unwrap();
        assert!(matches!(d.build().unwrap(), ChannelModel::Dephasing(_)));

        let bad = r#"{"model":"central_spin","N":4,"omega0":1.0,"omega":2.0,"alpha":0.5,"T":1,"bogus":1}"#;
        assert!(serde_json::from_str::<ChannelParams>(bad).is_err());
    }
}
