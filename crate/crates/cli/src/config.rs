//! JSON sweep configuration.

use std::path::{Path, PathBuf};

use ergoloss::channels::ChannelParams;
use ergoloss::distances::DistanceMeasure;
use ergoloss::ergometrics::{PairRestriction, RelationId};
use ergoloss::Temperature;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid config")]
    Parse(#[from] serde_json::Error),
    #[error("invalid sweep: {0}")]
    Sweep(String),
    #[error("invalid channel")]
    Channel(#[from] ergoloss::Error),
}

/// Time grid as an explicit list or `start..=stop` by `step`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TimeGrid {
    List(Vec<f64>),
    Range { start: f64, stop: f64, step: f64 },
}

impl TimeGrid {
    pub fn uniform(start: f64, stop: f64, step: f64) -> Self {
        TimeGrid::Range { start, stop, step }
    }

    pub fn points(&self) -> Vec<f64> {
        match self {
            TimeGrid::List(v) => v.clone(),
            TimeGrid::Range { start, stop, step } => {
                if !(*step > 0.0) || stop < start {
                    return Vec::new();
                }
                // index-based so that every point is start + k·step exactly
                let n = ((stop - start) / step + 1e-9).floor() as usize;
                (0..=n).map(|k| start + k as f64 * step).collect()
            }
        }
    }
}

/// The single swept parameter. Serialized as a one-key object, e.g.
/// `{"alpha": [0.1, 0.2]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum SweepAxis {
    #[serde(rename = "t")]
    Time(TimeGrid),
    #[serde(rename = "alpha")]
    Alpha(Vec<f64>),
    #[serde(rename = "T")]
    Temperature(Vec<Temperature>),
    #[serde(rename = "N")]
    BathSize(Vec<usize>),
}

impl SweepAxis {
    pub fn column(&self) -> &'static str {
        match self {
            SweepAxis::Time(_) => "t",
            SweepAxis::Alpha(_) => "alpha",
            SweepAxis::Temperature(_) => "T",
            SweepAxis::BathSize(_) => "N",
        }
    }

    pub fn values(&self) -> Vec<f64> {
        match self {
            SweepAxis::Time(g) => g.points(),
            SweepAxis::Alpha(v) => v.clone(),
            SweepAxis::Temperature(v) => v.iter().map(Temperature::as_f64).collect(),
            SweepAxis::BathSize(v) => v.iter().map(|&n| n as f64).collect(),
        }
    }
}

fn default_measure() -> DistanceMeasure {
    DistanceMeasure::TraceDistance
}

fn default_relation() -> RelationId {
    RelationId::TraceGlobal
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub channel: ChannelParams,
    pub sweep: SweepAxis,
    #[serde(default = "default_measure")]
    pub measure: DistanceMeasure,
    #[serde(default = "default_relation")]
    pub relation: RelationId,
    #[serde(default)]
    pub restriction: PairRestriction,
    /// Bloch vectors of the initial pair for state-dependent relations.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub state_pair: Option<[[f64; 3]; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
}

impl SweepConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let cfg: SweepConfig = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        self.channel.build()?;
        let values = self.sweep.values();
        if values.is_empty() {
            return Err(ConfigError::Sweep(format!("`{}` grid is empty", self.sweep.column())));
        }
        if values.iter().any(|v| v.is_nan()) {
            return Err(ConfigError::Sweep("grid contains NaN".into()));
        }
        if values.windows(2).any(|w| w[1] <= w[0]) {
            return Err(ConfigError::Sweep(format!(
                "`{}` grid must be strictly increasing",
                self.sweep.column()
            )));
        }
        let central = matches!(self.channel, ChannelParams::CentralSpin(_));
        match &self.sweep {
            SweepAxis::Time(_) if values[0] < 0.0 || !values.iter().all(|t| t.is_finite()) => {
                return Err(ConfigError::Sweep("times must be finite and non-negative".into()))
            }
            SweepAxis::Alpha(_) | SweepAxis::BathSize(_) if !central => {
                return Err(ConfigError::Sweep(format!(
                    "`{}` sweeps need a central_spin channel",
                    self.sweep.column()
                )))
            }
            _ => {}
        }
        for k in 0..values.len() {
            if !matches!(self.sweep, SweepAxis::Time(_)) {
                self.channel_at(k).build()?;
            }
        }
        if let Some(pair) = &self.state_pair {
            for r in pair {
                ergoloss::DensityMatrix::from_bloch_vector(*r)?;
            }
        }
        Ok(())
    }

    /// Channel parameters at point `k` of a parameter sweep; the base
    /// channel for time sweeps.
    pub fn channel_at(&self, k: usize) -> ChannelParams {
        let mut p = self.channel.clone();
        match (&self.sweep, &mut p) {
            (SweepAxis::Alpha(v), ChannelParams::CentralSpin(c)) => c.alpha = v[k],
            (SweepAxis::BathSize(v), ChannelParams::CentralSpin(c)) => c.n = v[k],
            (SweepAxis::Temperature(v), ChannelParams::CentralSpin(c)) => c.temperature = v[k],
            (SweepAxis::Temperature(v), ChannelParams::MarkovianThermal(c)) => c.temperature = v[k],
            (SweepAxis::Temperature(v), ChannelParams::Dephasing(c)) => c.temperature = v[k],
            _ => {}
        }
        p
    }
}
