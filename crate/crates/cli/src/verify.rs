//! Verification suites behind `verify` and `axioms`.

use ergoloss::channels::{
    central_spin_evolve, theta_bars_saturated, CentralSpinKernels, CentralSpinParams, ChannelModel,
    MarkovianChannel, MarkovianThermalParams, QubitChannel,
};
use ergoloss::distances::axioms::{check_axioms_seeded, AxiomReport};
use ergoloss::distances::{pinsker_gap, DistanceMeasure};
use ergoloss::ergometrics::{
    avg_info_loss, check_relation, non_ergodicity_max, PairRestriction, RelationId, SearchOptions,
};
use ergoloss::oracle::oracle_evolve;
use ergoloss::sampling::{random_channel, random_state};
use ergoloss::{DensityMatrix, Temperature};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Relations are theorems; anything below this is a bug.
pub const SLACK_TOL: f64 = 1e-9;
pub const ORACLE_TOL: f64 = 1e-8;
pub const SATURATION_REL_TOL: f64 = 0.01;
pub const SATURATION_LHS_REL_TOL: f64 = 0.02;
pub const LARGE_ALPHA_TOL: f64 = 1e-4;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<f64>,
    pub tolerance: f64,
}

impl Check {
    /// `|value − expected| ≤ tolerance·|expected|`.
    pub fn relative(name: impl Into<String>, value: f64, expected: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            pass: (value - expected).abs() <= tolerance * expected.abs(),
            value,
            expected: Some(expected),
            tolerance,
        }
    }

    pub fn absolute(name: impl Into<String>, value: f64, expected: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            pass: (value - expected).abs() <= tolerance,
            value,
            expected: Some(expected),
            tolerance,
        }
    }

    /// `value ≥ −tolerance`.
    pub fn nonnegative(name: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            pass: value >= -tolerance,
            value,
            expected: None,
            tolerance,
        }
    }

    /// `value ≤ tolerance`.
    pub fn at_most(name: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            pass: value <= tolerance,
            value,
            expected: None,
            tolerance,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub scope: &'static str,
    pub pass: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

impl VerifyReport {
    fn new(scope: &'static str, checks: Vec<Check>, detail: Option<serde_json::Value>) -> Self {
        VerifyReport {
            scope,
            pass: checks.iter().all(|c| c.pass),
            checks,
            detail,
        }
    }
}

pub fn axiom_reports(measures: &[DistanceMeasure], samples: usize, seed: u64) -> Vec<AxiomReport> {
    measures
        .par_iter()
        .map(|&m| check_axioms_seeded(m, samples, seed))
        .collect()
}

/// Passes when every measure behaves as declared: P1 to P5 for the metrics,
/// P4 and P5 failing with witnesses for the relative entropy.
pub fn verify_axioms(samples: usize, seed: u64) -> VerifyReport {
    let reports = axiom_reports(&DistanceMeasure::ALL, samples, seed);
    let mut checks = Vec::new();
    for r in &reports {
        for (name, c) in r.checks() {
            let should_pass = match name {
                "P4" => r.measure.is_symmetric(),
                "P5" => r.measure.satisfies_triangle(),
                _ => true,
            };
            let witnessed = c.pass || !c.witness_states.is_empty();
            checks.push(Check {
                name: format!("{}/{name}", r.measure),
                pass: c.pass == should_pass && witnessed,
                value: c.worst_violation,
                expected: None,
                tolerance: ergoloss::distances::axioms::AXIOM_TOL,
            });
        }
    }
    VerifyReport::new("axioms", checks, serde_json::to_value(&reports).ok())
}

/// Parameter draw of the oracle comparison.
pub fn random_oracle_params(rng: &mut impl Rng, n: usize, include_zz: bool) -> CentralSpinParams {
    const TEMPS: [Temperature; 4] = [
        Temperature::Finite(0.5),
        Temperature::Finite(1.0),
        Temperature::Finite(10.0),
        Temperature::Infinite,
    ];
    CentralSpinParams {
        n,
        omega0: rng.random_range(0.1..=5.0),
        omega: rng.random_range(0.1..=5.0),
        alpha: rng.random_range(0.01..=2.0),
        temperature: TEMPS[rng.random_range(0..TEMPS.len())],
        include_zz,
    }
}

/// Largest entrywise gap between the closed form and the unitary oracle.
/// `sets` parameter draws per `(N, include_zz)`, 20 times on `[0, 30]`.
pub fn oracle_max_deviation(sets: usize, seed: u64) -> ergoloss::Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let times: Vec<f64> = (0..20).map(|k| 30.0 * k as f64 / 19.0).collect();
    let mut worst = 0.0f64;
    for n in 2..=6 {
        for zz in [true, false] {
            for _ in 0..sets {
                let p = random_oracle_params(&mut rng, n, zz);
                let rho = random_state(&mut rng);
                for &t in &times {
                    let a = central_spin_evolve(&p, &rho, t)?;
                    let b = oracle_evolve(&p, &rho, t)?;
                    worst = worst.max((*a.matrix() - *b.matrix()).max_abs());
                }
            }
        }
    }
    Ok(worst)
}

pub fn verify_oracle(seed: u64) -> ergoloss::Result<VerifyReport> {
    let worst = oracle_max_deviation(20, seed)?;
    Ok(VerifyReport::new(
        "oracle",
        vec![Check::at_most("max_entrywise_deviation", worst, ORACLE_TOL)],
        None,
    ))
}

/// Worst slack of one relation over a sweep.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct SlackSummary {
    pub evaluated: usize,
    pub trivial: usize,
    pub worst_slack: f64,
}

impl SlackSummary {
    fn add(&mut self, slack: f64, trivial: bool) {
        if trivial {
            self.trivial += 1;
            return;
        }
        if self.evaluated == 0 || slack < self.worst_slack {
            self.worst_slack = slack;
        }
        self.evaluated += 1;
    }

    fn merge(mut self, other: SlackSummary) -> SlackSummary {
        if other.evaluated > 0 && (self.evaluated == 0 || other.worst_slack < self.worst_slack) {
            self.worst_slack = other.worst_slack;
        }
        self.evaluated += other.evaluated;
        self.trivial += other.trivial;
        self
    }
}

/// Extra entry for the Pinsker inequality next to the relations.
pub const PINSKER: &str = "pinsker";

#[derive(Clone, Debug, Serialize)]
pub struct InequalitySweep {
    pub configurations: usize,
    /// `(relation, summary)`, relations in [`RelationId::ALL`] order, then
    /// [`PINSKER`].
    pub summaries: Vec<(String, SlackSummary)>,
}

fn draw_configuration(rng: &mut ChaCha8Rng) -> (ChannelModel, DensityMatrix, DensityMatrix) {
    loop {
        let ch = random_channel(rng);
        // resonant central-spin draws have no time average
        if ch.time_average_map().is_ok() {
            return (ch, random_state(rng), random_state(rng));
        }
    }
}

fn sweep_one(
    ch: &ChannelModel,
    a: &DensityMatrix,
    b: &DensityMatrix,
    opts: &SearchOptions,
) -> ergoloss::Result<Vec<SlackSummary>> {
    let mut out = vec![SlackSummary::default(); RelationId::ALL.len() + 1];
    for (k, rel) in RelationId::ALL.into_iter().enumerate() {
        let measures: &[DistanceMeasure] = if rel.takes_measure() {
            &DistanceMeasure::BOUNDED
        } else {
            &[DistanceMeasure::TraceDistance]
        };
        let restrictions: &[PairRestriction] = if rel.needs_pair() {
            &[PairRestriction::Global]
        } else {
            &[PairRestriction::Global, PairRestriction::ComputationalPoles]
        };
        for &m in measures {
            for &restriction in restrictions {
                let o = SearchOptions { restriction, ..*opts };
                let r = check_relation(ch, rel, m, Some((a, b)), &o)?;
                out[k].add(r.slack, r.trivial);
            }
        }
    }
    let th = ch.thermal_state();
    for rho in [a, b] {
        let gap = pinsker_gap(&ch.time_average(rho)?, &th);
        out[RelationId::ALL.len()].add(gap, gap.is_infinite());
    }
    Ok(out)
}

/// Every relation for `configurations` random (channel, pair) draws, each
/// across all bounded measures and both pair restrictions where relevant.
pub fn inequality_sweep(configurations: usize, seed: u64, opts: &SearchOptions) -> ergoloss::Result<InequalitySweep> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<_> = (0..configurations).map(|_| draw_configuration(&mut rng)).collect();
    let per_draw: Vec<Vec<SlackSummary>> = draws
        .par_iter()
        .map(|(ch, a, b)| sweep_one(ch, a, b, opts))
        .collect::<ergoloss::Result<_>>()?;
    let mut total = vec![SlackSummary::default(); RelationId::ALL.len() + 1];
    for row in per_draw {
        for (t, s) in total.iter_mut().zip(row) {
            *t = t.merge(s);
        }
    }
    let names = RelationId::ALL
        .iter()
        .map(|r| r.name().to_string())
        .chain(std::iter::once(PINSKER.to_string()));
    Ok(InequalitySweep {
        configurations,
        summaries: names.zip(total).collect(),
    })
}

/// Grid used by the relation sweep. Soundness does not depend on it: the
/// pole pair and both poles are always evaluated.
pub fn sweep_search_options() -> SearchOptions {
    SearchOptions::default().with_grid(8, 16)
}

pub fn verify_relations(configurations: usize, seed: u64) -> ergoloss::Result<VerifyReport> {
    let sweep = inequality_sweep(configurations, seed, &sweep_search_options())?;
    let checks = sweep
        .summaries
        .iter()
        .map(|(name, s)| Check::nonnegative(name.clone(), s.worst_slack, SLACK_TOL))
        .collect();
    Ok(VerifyReport::new("relations", checks, serde_json::to_value(&sweep).ok()))
}

/// No-zz central spin at the saturation point of the large-bath checks.
pub fn saturation_params(alpha: f64) -> CentralSpinParams {
    CentralSpinParams {
        n: 10_000,
        omega0: crate::presets::OMEGA0,
        omega: crate::presets::OMEGA,
        alpha,
        temperature: Temperature::Finite(1e6),
        include_zz: false,
    }
}

pub const SATURATION_ALPHA: f64 = 1e6;

pub fn saturation_checks() -> ergoloss::Result<Vec<Check>> {
    let p = saturation_params(SATURATION_ALPHA);
    let (s1, s2) = theta_bars_saturated(&p)?;
    let avg = CentralSpinKernels::new(&p)?.time_averaged()?;
    let ch = ergoloss::channels::CentralSpinChannel::new(p)?;
    let poles = SearchOptions::poles();
    let n = non_ergodicity_max(&ch, DistanceMeasure::TraceDistance, &poles)?.value;
    let lhs = check_relation(&ch, RelationId::TraceGlobal, DistanceMeasure::TraceDistance, None, &poles)?.lhs;

    let markovian = MarkovianChannel::new(MarkovianThermalParams {
        gamma: 1.0,
        omega0: 1.0,
        temperature: Temperature::Finite(1.0),
    })?;
    let loss = avg_info_loss(&markovian, DistanceMeasure::TraceDistance, &SearchOptions::default())?.value;

    Ok(vec![
        Check::relative("theta1_bar_saturated", s1, 0.125, SATURATION_REL_TOL),
        Check::relative("theta2_bar_saturated", s2, 0.125, SATURATION_REL_TOL),
        Check::relative("nonergodicity_max_saturated", n, 0.375, SATURATION_REL_TOL),
        Check::relative("lhs_sum_saturated", lhs, 1.0, SATURATION_LHS_REL_TOL),
        Check::absolute("theta1_bar_large_alpha", avg.theta1, s1, LARGE_ALPHA_TOL),
        Check::absolute("markovian_avg_info_loss", loss, 1.0, 1e-9),
    ])
}

pub fn verify_saturation() -> ergoloss::Result<VerifyReport> {
    Ok(VerifyReport::new("saturation", saturation_checks()?, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_relation_sweep_passes() {
        let r = verify_relations(20, 1).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.checks.len(), RelationId::ALL.len() + 1);
    }

    #[test]
    fn summaries_merge() {
        let mut a = SlackSummary::default();
        a.add(0.5, false);
        a.add(f64::INFINITY, true);
        let mut b = SlackSummary::default();
        b.add(0.1, false);
        let m = a.merge(b);
        assert_eq!((m.evaluated, m.trivial), (2, 1));
        assert_eq!(m.worst_slack, 0.1);
    }
}
