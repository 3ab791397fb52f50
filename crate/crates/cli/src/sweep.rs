//! Row-by-row evaluation of a sweep and its CSV form.

use std::io::Write;
use std::path::Path;

use ergoloss::channels::{ChannelParams, QubitChannel};
use ergoloss::distances::DistanceMeasure;
use ergoloss::ergometrics::{
    avg_info_loss, check_relation, info_loss_instant, non_ergodicity_max, RelationId, SearchOptions,
};
use ergoloss::DensityMatrix;

use crate::config::{ConfigError, SweepAxis, SweepConfig};

pub const DYNAMICS_COLUMNS: [&str; 5] = ["t", "I_delta_T", "theta1", "theta2", "abs_delta"];
pub const UNCERTAINTY_COLUMNS: [&str; 4] = ["avg_info_loss", "nonergodicity_max", "lhs_sum", "slack"];

#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

/// 17 significant digits; infinities print as `inf`.
pub fn format_value(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

impl SweepResult {
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[k]).collect())
    }

    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|&x| format_value(x)))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_path(&self, path: &Path) -> csv::Result<()> {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        self.write_csv(std::fs::File::create(path)?)
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("CSV is UTF-8")
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("evaluation failed at {axis} = {value}")]
    Model {
        axis: &'static str,
        value: f64,
        source: ergoloss::Error,
    },
}

fn search_options(cfg: &SweepConfig, base: &SearchOptions) -> SearchOptions {
    SearchOptions {
        restriction: cfg.restriction,
        ..*base
    }
}

fn state_pair(cfg: &SweepConfig) -> Result<Option<(DensityMatrix, DensityMatrix)>, ConfigError> {
    match &cfg.state_pair {
        None => Ok(None),
        Some([a, b]) => Ok(Some((
            DensityMatrix::from_bloch_vector(*a)?,
            DensityMatrix::from_bloch_vector(*b)?,
        ))),
    }
}

/// `I_Δ^T(t)` with the underlying map coefficients. `theta1 = 1 − k11`,
/// `theta2 = k12`, `abs_delta = |c|`, which are the `Θ1`, `Θ2`, `|Δ|`
/// kernels for the central-spin model.
pub fn run_dynamics(cfg: &SweepConfig, base: &SearchOptions) -> Result<SweepResult, SweepError> {
    cfg.validate()?;
    let SweepAxis::Time(grid) = &cfg.sweep else {
        return Err(ConfigError::Sweep("dynamics needs a `t` sweep".into()).into());
    };
    if cfg.measure != DistanceMeasure::TraceDistance {
        return Err(ConfigError::Sweep("dynamics reports the trace-distance loss only".into()).into());
    }
    let opts = search_options(cfg, base);
    let ch = cfg.channel.build().map_err(ConfigError::from)?;
    let mut rows = Vec::new();
    for t in grid.points() {
        let fail = |source| SweepError::Model { axis: "t", value: t, source };
        let map = ch.map_at(t).map_err(fail)?;
        let loss = info_loss_instant(&ch, t, DistanceMeasure::TraceDistance, &opts).map_err(fail)?;
        rows.push(vec![t, loss.value, 1.0 - map.k11, map.k12, map.coherence.norm()]);
    }
    Ok(SweepResult {
        columns: DYNAMICS_COLUMNS.iter().map(|s| s.to_string()).collect(),
        rows,
    })
}

/// Measures used for the loss and non-ergodicity columns of a relation.
pub fn relation_measures(relation: RelationId, measure: DistanceMeasure) -> (DistanceMeasure, DistanceMeasure) {
    let trace = DistanceMeasure::TraceDistance;
    match relation {
        RelationId::RelEntGlobal | RelationId::PairwiseRelEnt | RelationId::StateDependentRelEnt => {
            (trace, DistanceMeasure::RelativeEntropy)
        }
        r if r.takes_measure() => (measure, measure),
        _ => (trace, trace),
    }
}

/// One row per parameter value: `Ī`, `N^M`, the relation's lhs and slack.
pub fn run_uncertainty(cfg: &SweepConfig, base: &SearchOptions) -> Result<SweepResult, SweepError> {
    cfg.validate()?;
    if matches!(cfg.sweep, SweepAxis::Time(_)) {
        return Err(ConfigError::Sweep("uncertainty needs an `alpha`, `T` or `N` sweep".into()).into());
    }
    let opts = search_options(cfg, base);
    let pair = state_pair(cfg)?;
    let (loss_measure, n_measure) = relation_measures(cfg.relation, cfg.measure);
    let axis = cfg.sweep.column();
    let mut rows = Vec::new();
    for (k, value) in cfg.sweep.values().into_iter().enumerate() {
        let fail = |source| SweepError::Model { axis, value, source };
        let params: ChannelParams = cfg.channel_at(k);
        let ch = params.build().map_err(fail)?;
        let loss = avg_info_loss(&ch, loss_measure, &opts).map_err(fail)?;
        let n = non_ergodicity_max(&ch, n_measure, &opts).map_err(fail)?;
        let report = check_relation(&ch, cfg.relation, cfg.measure, pair.as_ref().map(|(a, b)| (a, b)), &opts)
            .map_err(fail)?;
        rows.push(vec![value, loss.value, n.value, report.lhs, report.slack]);
    }
    let mut columns = vec![axis.to_string()];
    columns.extend(UNCERTAINTY_COLUMNS.iter().map(|s| s.to_string()));
    Ok(SweepResult { columns, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_keeps_full_precision() {
        let x = 0.1 + 0.2;
        assert_eq!(format_value(x).parse::<f64>().unwrap(), x);
        assert_eq!(format_value(1.0), "1.0000000000000000e0");
        assert_eq!(format_value(f64::INFINITY), "inf");
    }

    #[test]
    fn markovian_temperature_sweep() {
        let cfg = SweepConfig::from_json(
            r#"{"channel": {"model": "markovian_thermal", "gamma": 0.5, "omega0": 1, "T": 1},
                "sweep": {"T": [0.5, 1, "inf"]}}"#,
        )
        .unwrap();
        let r = run_uncertainty(&cfg, &SearchOptions::default()).unwrap();
        assert_eq!(r.columns, ["T", "avg_info_loss", "nonergodicity_max", "lhs_sum", "slack"]);
        for row in &r.rows {
            assert!((row[1] - 1.0).abs() < 1e-12 && row[2].abs() < 1e-12 && row[4].abs() < 1e-12);
        }
    }

    #[test]
    fn dynamics_needs_time_axis() {
        let cfg = SweepConfig::from_json(
            r#"{"channel": {"model": "dephasing", "omega": 1, "gamma_d": 0.2}, "sweep": {"T": [1]}}"#,
        )
        .unwrap();
        assert!(run_dynamics(&cfg, &SearchOptions::default()).is_err());
    }
}
