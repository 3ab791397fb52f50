use serde::{Deserialize, Serialize};

use super::{check_time, PhaseCovariantMap, QubitChannel};
use crate::error::{invalid, Result};
use crate::qstate::{thermal_qubit, DensityMatrix, Temperature, C64};

fn infinite() -> Temperature {
    Temperature::Infinite
}

/// Pure dephasing `ρ̇ = iΩ[σz, ρ] + γd(σzρσz − ρ)`.
///
/// `T` only fixes the thermal reference state of `H = Ω·σz`; it does not
/// enter the dynamics.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DephasingParams {
    pub omega: f64,
    pub gamma_d: f64,
    #[serde(rename = "T", default = "infinite")]
    pub temperature: Temperature,
}

#[derive(Clone, Debug)]
pub struct DephasingChannel {
    params: DephasingParams,
}

impl DephasingChannel {
    pub fn new(params: DephasingParams) -> Result<Self> {
        if !(params.gamma_d > 0.0 && params.gamma_d.is_finite()) {
            return Err(invalid("gamma_d", "must be positive and finite"));
        }
        if !params.omega.is_finite() {
            return Err(invalid("omega", "must be finite"));
        }
        Ok(DephasingChannel { params })
    }

    pub fn params(&self) -> &DephasingParams {
        &self.params
    }
}

impl QubitChannel for DephasingChannel {
    fn map_at(&self, t: f64) -> Result<PhaseCovariantMap> {
        check_time(t)?;
        Ok(PhaseCovariantMap {
            k11: 1.0,
            k12: 0.0,
            coherence: C64::from_polar(
                (-2.0 * self.params.gamma_d * t).exp(),
                2.0 * self.params.omega * t,
            ),
        })
    }

    fn time_average_map(&self) -> Result<PhaseCovariantMap> {
        Ok(PhaseCovariantMap {
            k11: 1.0,
            k12: 0.0,
            coherence: C64::new(0.0, 0.0),
        })
    }

    fn thermal_state(&self) -> DensityMatrix {
        thermal_qubit(self.params.omega, self.params.temperature)
    }
}
