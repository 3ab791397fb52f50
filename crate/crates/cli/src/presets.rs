//! Parameter sets behind the dynamics and uncertainty figures.
//!
//! Each preset fixes some of N, T and α and sweeps the rest. The remaining
//! lists and the frequencies ω0 = 3, ω = 1 are chosen here. All presets use
//! the computational-pole pair.

use std::str::FromStr;

use ergoloss::channels::{CentralSpinParams, ChannelParams};
use ergoloss::distances::DistanceMeasure;
use ergoloss::ergometrics::{PairRestriction, RelationId};
use ergoloss::Temperature;

use crate::config::{SweepAxis, SweepConfig, TimeGrid};

pub const OMEGA0: f64 = 3.0;
pub const OMEGA: f64 = 1.0;
pub const T_MAX: f64 = 50.0;
pub const T_STEP: f64 = 0.05;

pub const FIG1_N: [usize; 4] = [10, 50, 100, 200];
pub const FIG2_T: [f64; 6] = [0.1, 0.5, 1.0, 2.0, 5.0, 10.0];
pub const FIG3_ALPHA: [f64; 3] = [0.05, 0.1, 0.2];
pub const FIG5_T: [f64; 4] = [1.0, 10.0, 100.0, 1000.0];
pub const FIG6_N: [usize; 4] = [100, 200, 500, 1000];
pub const UNCERTAINTY_ALPHA: [f64; 8] = [0.01, 0.05, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    Fig1,
    Fig2,
    Fig3,
    Fig5,
    Fig6,
    Fig6a,
}

impl FromStr for Preset {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "fig1" => Ok(Preset::Fig1),
            "fig2" => Ok(Preset::Fig2),
            "fig3" => Ok(Preset::Fig3),
            "fig5" => Ok(Preset::Fig5),
            "fig6" => Ok(Preset::Fig6),
            "fig6a" => Ok(Preset::Fig6a),
            other => Err(format!("unknown preset `{other}` (fig1, fig2, fig3, fig5, fig6, fig6a)")),
        }
    }
}

/// One output file of a preset.
#[derive(Clone, Debug, PartialEq)]
pub struct PresetRun {
    /// File stem, e.g. `fig1_N10`.
    pub name: String,
    pub config: SweepConfig,
}

fn central(n: usize, alpha: f64, temperature: f64) -> CentralSpinParams {
    CentralSpinParams {
        n,
        omega0: OMEGA0,
        omega: OMEGA,
        alpha,
        temperature: Temperature::finite(temperature).expect("preset temperatures are positive"),
        include_zz: true,
    }
}

fn run(name: String, p: CentralSpinParams, sweep: SweepAxis) -> PresetRun {
    PresetRun {
        name,
        config: SweepConfig {
            channel: ChannelParams::CentralSpin(p),
            sweep,
            measure: DistanceMeasure::TraceDistance,
            relation: RelationId::TraceGlobal,
            restriction: PairRestriction::ComputationalPoles,
            state_pair: None,
            output: None,
        },
    }
}

fn time_axis() -> SweepAxis {
    SweepAxis::Time(TimeGrid::uniform(0.0, T_MAX, T_STEP))
}

fn alpha_axis() -> SweepAxis {
    SweepAxis::Alpha(UNCERTAINTY_ALPHA.to_vec())
}

impl Preset {
    pub fn is_dynamics(&self) -> bool {
        matches!(self, Preset::Fig1 | Preset::Fig2 | Preset::Fig3)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Preset::Fig1 => "fig1",
            Preset::Fig2 => "fig2",
            Preset::Fig3 => "fig3",
            Preset::Fig5 => "fig5",
            Preset::Fig6 => "fig6",
            Preset::Fig6a => "fig6a",
        }
    }

    /// Runs in curve (or panel) order.
    pub fn runs(&self) -> Vec<PresetRun> {
        let id = self.name();
        match self {
            Preset::Fig1 => FIG1_N
                .iter()
                .map(|&n| run(format!("{id}_N{n}"), central(n, 0.1, 1.0), time_axis()))
                .collect(),
            Preset::Fig2 => FIG2_T
                .iter()
                .map(|&t| run(format!("{id}_T{t}"), central(200, 0.1, t), time_axis()))
                .collect(),
            Preset::Fig3 => FIG3_ALPHA
                .iter()
                .map(|&a| run(format!("{id}_alpha{a}"), central(200, a, 1.0), time_axis()))
                .collect(),
            Preset::Fig5 => FIG5_T
                .iter()
                .map(|&t| run(format!("{id}_T{t}"), central(1000, 0.0, t), alpha_axis()))
                .collect(),
            Preset::Fig6 | Preset::Fig6a => {
                let t = if *self == Preset::Fig6 { 10.0 } else { 0.01 };
                FIG6_N
                    .iter()
                    .map(|&n| run(format!("{id}_N{n}"), central(n, 0.0, t), alpha_axis()))
                    .collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_validate() {
        for p in [Preset::Fig1, Preset::Fig2, Preset::Fig3, Preset::Fig5, Preset::Fig6, Preset::Fig6a] {
            let runs = p.runs();
            assert!(!runs.is_empty());
            for r in &runs {
                r.config.validate().unwrap();
                assert!(r.name.starts_with(p.name()));
            }
            assert_eq!(p.name().parse::<Preset>().unwrap(), p);
        }
        assert_eq!(Preset::Fig5.runs()[0].name, "fig5_T1");
    }
}
