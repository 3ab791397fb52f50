//! Information loss, non-ergodicity and the uncertainty relations tying them.
//!
//! Information loss is the largest drop in distinguishability of a pair of
//! initial states under a map (either `Φ_t` or the time average), and
//! non-ergodicity is the distance of the time-averaged state from the
//! thermal state.
//!
//! Maximizations run over pure states. The maps are affine and every
//! implemented distance is convex in each argument, so nothing is lost for
//! the non-ergodicity; for pairs the restriction is part of the definition.
//! All models are phase covariant, which allows fixing one azimuth.

mod relations;
mod search;

use serde::{Deserialize, Serialize};

use crate::channels::{PhaseCovariantMap, QubitChannel};
use crate::distances::{trace_distance, DistanceMeasure};
use crate::error::{Error, Result};
use crate::qstate::{antipodal_pair, pure_from_bloch, BlochAngles, DensityMatrix};

pub use relations::{
    check_relation, check_relation_with_tol, uncertainty_sum_closed_form, RelationId,
    UncertaintyReport, SATURATION_TOL,
};
pub use search::{golden_max, phi_grid, refine, theta_grid, Axis};

use std::f64::consts::PI;

/// Which initial pairs the information loss is maximized over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairRestriction {
    /// All pairs of pure states.
    #[default]
    Global,
    /// Only the `|1⟩, |0⟩` pair.
    ComputationalPoles,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub grid_theta: usize,
    pub grid_phi: usize,
    pub refine: bool,
    pub restriction: PairRestriction,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            grid_theta: 64,
            grid_phi: 128,
            refine: true,
            restriction: PairRestriction::Global,
        }
    }
}

impl SearchOptions {
    pub fn poles() -> Self {
        SearchOptions {
            restriction: PairRestriction::ComputationalPoles,
            ..Default::default()
        }
    }

    pub fn with_grid(mut self, grid_theta: usize, grid_phi: usize) -> Self {
        self.grid_theta = grid_theta;
        self.grid_phi = grid_phi;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMethod {
    ClosedForm,
    Grid,
    PolePair,
    Direct,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct InfoLossResult {
    pub value: f64,
    pub argmax_pair: (BlochAngles, BlochAngles),
    pub method: SearchMethod,
    pub restriction: PairRestriction,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NonErgodicityResult {
    pub value: f64,
    pub divergent: bool,
    /// Maximizing pure initial state, for the maximized variant.
    pub argmax_state: Option<BlochAngles>,
    pub method: SearchMethod,
}

const NORTH: BlochAngles = BlochAngles { theta: 0.0, phi: 0.0 };
const SOUTH: BlochAngles = BlochAngles { theta: PI, phi: 0.0 };

fn require_bounded(measure: DistanceMeasure) -> Result<()> {
    if measure.is_bounded() {
        Ok(())
    } else {
        Err(Error::UnboundedMeasure(measure.name()))
    }
}

fn apply(map: &PhaseCovariantMap, rho: &DensityMatrix) -> DensityMatrix {
    map.apply(rho).expect("channel maps states to states")
}

fn pair_loss(map: &PhaseCovariantMap, measure: DistanceMeasure, a: BlochAngles, b: BlochAngles) -> f64 {
    let (r1, r2) = (pure_from_bloch(a), pure_from_bloch(b));
    measure.eval(&r1, &r2) - measure.eval(&apply(map, &r1), &apply(map, &r2))
}

/// Loss of the `|1⟩, |0⟩` pair.
pub fn pole_pair_info_loss(map: &PhaseCovariantMap, measure: DistanceMeasure) -> Result<InfoLossResult> {
    require_bounded(measure)?;
    Ok(InfoLossResult {
        value: pair_loss(map, measure, NORTH, SOUTH),
        argmax_pair: (NORTH, SOUTH),
        method: SearchMethod::PolePair,
        restriction: PairRestriction::ComputationalPoles,
    })
}

/// Trace-distance loss maximized over all pairs: `1 − min(|k11 − k12|, |c|)`.
///
/// Loss is `|d|(1 − |L d̂|)/2` for Bloch difference `d` and linear part `L`,
/// so the optimum is an antipodal pair along the least contracted axis.
pub fn trace_info_loss_closed_form(map: &PhaseCovariantMap) -> InfoLossResult {
    let a = map.population_contraction().abs();
    let c = map.coherence.norm();
    let argmax_pair = if a <= c {
        (NORTH, SOUTH)
    } else {
        (
            BlochAngles { theta: PI / 2.0, phi: 0.0 },
            BlochAngles { theta: PI / 2.0, phi: PI },
        )
    };
    InfoLossResult {
        value: 1.0 - a.min(c),
        argmax_pair,
        method: SearchMethod::ClosedForm,
        restriction: PairRestriction::Global,
    }
}

/// Trace-distance loss over antipodal pairs by grid search.
pub fn trace_info_loss_grid(map: &PhaseCovariantMap, opts: &SearchOptions) -> InfoLossResult {
    let f = |x: &[f64]| {
        let (r1, r2) = antipodal_pair(BlochAngles::wrapped(x[0], x[1]));
        trace_distance(&r1, &r2).value - trace_distance(&apply(map, &r1), &apply(map, &r2)).value
    };
    let mut best = (vec![0.0, 0.0], f64::NEG_INFINITY);
    for &th in &theta_grid(opts.grid_theta) {
        for &ph in &phi_grid(opts.grid_phi) {
            let v = f(&[th, ph]);
            if v > best.1 {
                best = (vec![th, ph], v);
            }
        }
    }
    if opts.refine {
        let axes = [Axis::polar(opts.grid_theta), Axis::azimuth(opts.grid_phi)];
        best = refine(f, &axes, &best.0, best.1);
    }
    let a = BlochAngles::wrapped(best.0[0], best.0[1]);
    InfoLossResult {
        value: best.1,
        argmax_pair: (a, a.antipode()),
        method: SearchMethod::Grid,
        restriction: PairRestriction::Global,
    }
}

/// Loss over pairs of pure states `(θ1, 0)`, `(θ2, φ2)`.
///
/// The pole pair and an equatorial antipodal pair are always evaluated, so
/// the result is at least the value of either.
pub fn pure_pair_info_loss_grid(
    map: &PhaseCovariantMap,
    measure: DistanceMeasure,
    opts: &SearchOptions,
) -> Result<InfoLossResult> {
    require_bounded(measure)?;
    let f = |x: &[f64]| {
        pair_loss(
            map,
            measure,
            BlochAngles::wrapped(x[0], 0.0),
            BlochAngles::wrapped(x[1], x[2]),
        )
    };
    let mut best = (vec![0.0, PI, 0.0], f(&[0.0, PI, 0.0]));
    let equator = [PI / 2.0, PI / 2.0, PI];
    let v = f(&equator);
    if v > best.1 {
        best = (equator.to_vec(), v);
    }
    let thetas = theta_grid(opts.grid_theta);
    let phis = phi_grid(opts.grid_phi);
    for &t1 in &thetas {
        for &t2 in &thetas {
            for &p2 in &phis {
                let x = [t1, t2, p2];
                let v = f(&x);
                if v > best.1 {
                    best = (x.to_vec(), v);
                }
            }
        }
    }
    if opts.refine {
        let axes = [
            Axis::polar(opts.grid_theta),
            Axis::polar(opts.grid_theta),
            Axis::azimuth(opts.grid_phi),
        ];
        best = refine(f, &axes, &best.0, best.1);
    }
    Ok(InfoLossResult {
        value: best.1,
        argmax_pair: (
            BlochAngles::wrapped(best.0[0], 0.0),
            BlochAngles::wrapped(best.0[1], best.0[2]),
        ),
        method: SearchMethod::Grid,
        restriction: PairRestriction::Global,
    })
}

/// Information loss of a single map under the chosen restriction.
pub fn info_loss_for_map(
    map: &PhaseCovariantMap,
    measure: DistanceMeasure,
    opts: &SearchOptions,
) -> Result<InfoLossResult> {
    require_bounded(measure)?;
    match (opts.restriction, measure) {
        (PairRestriction::ComputationalPoles, _) => pole_pair_info_loss(map, measure),
        (PairRestriction::Global, DistanceMeasure::TraceDistance) => Ok(trace_info_loss_closed_form(map)),
        (PairRestriction::Global, _) => pure_pair_info_loss_grid(map, measure, opts),
    }
}

/// `I_Δ(t)`.
pub fn info_loss_instant(
    ch: &impl QubitChannel,
    t: f64,
    measure: DistanceMeasure,
    opts: &SearchOptions,
) -> Result<InfoLossResult> {
    require_bounded(measure)?;
    info_loss_for_map(&ch.map_at(t)?, measure, opts)
}

/// `Ī_Δ`, the loss between initial and time-averaged states.
pub fn avg_info_loss(ch: &impl QubitChannel, measure: DistanceMeasure, opts: &SearchOptions) -> Result<InfoLossResult> {
    require_bounded(measure)?;
    info_loss_for_map(&ch.time_average_map()?, measure, opts)
}

/// `N_ε(ρ̄) = D(ρ̄, ρ_th)` for the given initial state.
pub fn non_ergodicity(
    ch: &impl QubitChannel,
    rho0: &DensityMatrix,
    measure: DistanceMeasure,
) -> Result<NonErgodicityResult> {
    let d = measure.evaluate(&ch.time_average(rho0)?, &ch.thermal_state());
    Ok(NonErgodicityResult {
        value: d.as_f64(),
        divergent: d.divergent,
        argmax_state: None,
        method: SearchMethod::Direct,
    })
}

/// Trace-distance non-ergodicity maximized over the Bloch sphere.
///
/// With Bloch height `z`, the averaged state sits at transverse radius
/// `|c|√(1−z²)` and height `a·z + e`, so `4D² = |c|²(1−z²) + (a·z + e)²` is a
/// quadratic in `z`.
pub fn trace_non_ergodicity_max_closed_form(map: &PhaseCovariantMap, thermal: &DensityMatrix) -> NonErgodicityResult {
    let a = map.population_contraction();
    let e = map.k11 + map.k12 - 1.0 - thermal.bloch_vector()[2];
    let c2 = map.coherence.norm_sqr();
    let g = |z: f64| 0.5 * (c2 * (1.0 - z * z) + (a * z + e).powi(2)).max(0.0).sqrt();
    let mut candidates = vec![1.0, -1.0];
    let curvature = c2 - a * a;
    if curvature != 0.0 {
        let z = a * e / curvature;
        if z > -1.0 && z < 1.0 {
            candidates.push(z);
        }
    }
    let (z, value) = candidates
        .into_iter()
        .map(|z| (z, g(z)))
        .fold((1.0, f64::NEG_INFINITY), |best, cur| if cur.1 > best.1 { cur } else { best });
    NonErgodicityResult {
        value,
        divergent: false,
        argmax_state: Some(BlochAngles::wrapped(z.clamp(-1.0, 1.0).acos(), 0.0)),
        method: SearchMethod::ClosedForm,
    }
}

/// Non-ergodicity maximized over polar angle by grid and golden refinement.
/// The azimuth is irrelevant because the map and `ρ_th` are phase covariant.
pub fn non_ergodicity_max_grid(
    map: &PhaseCovariantMap,
    thermal: &DensityMatrix,
    measure: DistanceMeasure,
    opts: &SearchOptions,
) -> NonErgodicityResult {
    let eval = |theta: f64| {
        let rho = pure_from_bloch(BlochAngles::wrapped(theta, 0.0));
        measure.evaluate(&apply(map, &rho), thermal)
    };
    let mut best = (0.0, f64::NEG_INFINITY);
    for th in theta_grid(opts.grid_theta) {
        let d = eval(th);
        if d.divergent {
            return NonErgodicityResult {
                value: f64::INFINITY,
                divergent: true,
                argmax_state: Some(BlochAngles::wrapped(th, 0.0)),
                method: SearchMethod::Grid,
            };
        }
        if d.value > best.1 {
            best = (th, d.value);
        }
    }
    if opts.refine {
        let f = |x: &[f64]| eval(x[0]).as_f64();
        let (x, v) = refine(f, &[Axis::polar(opts.grid_theta)], &[best.0], best.1);
        if v.is_infinite() {
            return NonErgodicityResult {
                value: f64::INFINITY,
                divergent: true,
                argmax_state: Some(BlochAngles::wrapped(x[0], 0.0)),
                method: SearchMethod::Grid,
            };
        }
        best = (x[0], v);
    }
    NonErgodicityResult {
        value: best.1,
        divergent: false,
        argmax_state: Some(BlochAngles::wrapped(best.0, 0.0)),
        method: SearchMethod::Grid,
    }
}

fn non_ergodicity_max_poles(map: &PhaseCovariantMap, thermal: &DensityMatrix, measure: DistanceMeasure) -> NonErgodicityResult {
    let mut best = None::<(BlochAngles, f64, bool)>;
    for pole in [NORTH, SOUTH] {
        let d = measure.evaluate(&apply(map, &pure_from_bloch(pole)), thermal);
        let v = d.as_f64();
        if best.is_none_or(|b| v > b.1) {
            best = Some((pole, v, d.divergent));
        }
    }
    let (pole, value, divergent) = best.expect("two poles evaluated");
    NonErgodicityResult {
        value,
        divergent,
        argmax_state: Some(pole),
        method: SearchMethod::PolePair,
    }
}

/// `N_ε^M`, maximized over initial states.
///
/// With [`PairRestriction::ComputationalPoles`] only `|1⟩` and `|0⟩` are tried.
pub fn non_ergodicity_max(
    ch: &impl QubitChannel,
    measure: DistanceMeasure,
    opts: &SearchOptions,
) -> Result<NonErgodicityResult> {
    let map = ch.time_average_map()?;
    let thermal = ch.thermal_state();
    Ok(match (opts.restriction, measure) {
        (PairRestriction::ComputationalPoles, _) => non_ergodicity_max_poles(&map, &thermal, measure),
        (PairRestriction::Global, DistanceMeasure::TraceDistance) => {
            trace_non_ergodicity_max_closed_form(&map, &thermal)
        }
        (PairRestriction::Global, _) => non_ergodicity_max_grid(&map, &thermal, measure, opts),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{
        CentralSpinChannel, CentralSpinParams, ChannelModel, DephasingChannel, DephasingParams,
        MarkovianChannel, MarkovianThermalParams,
    };
    use crate::qstate::{thermal_ground_population, Temperature, C64};

    fn markovian() -> ChannelModel {
        MarkovianChannel::new(MarkovianThermalParams {
            gamma: 0.8,
            omega0: 1.3,
            temperature: Temperature::Finite(0.7),
        })
        .unwrap()
        .into()
    }

    fn dephasing() -> ChannelModel {
        DephasingChannel::new(DephasingParams {
            omega: 0.6,
            gamma_d: 0.3,
            temperature: Temperature::Finite(2.0),
        })
        .unwrap()
        .into()
    }

    fn central(zz: bool) -> CentralSpinChannel {
        CentralSpinChannel::new(CentralSpinParams {
            n: 6,
            omega0: 1.0,
            omega: 2.0,
            alpha: 0.5,
            temperature: Temperature::Finite(1.0),
            include_zz: zz,
        })
        .unwrap()
    }

    #[test]
    fn zero_at_time_zero() {
        let coarse = SearchOptions::default().with_grid(9, 12);
        for ch in [markovian(), dephasing(), central(true).into()] {
            for m in DistanceMeasure::BOUNDED {
                for restriction in [PairRestriction::Global, PairRestriction::ComputationalPoles] {
                    let opts = SearchOptions { restriction, ..coarse };
                    let r = info_loss_instant(&ch, 0.0, m, &opts).unwrap();
                    assert!(r.value.abs() < 1e-12, "{m} {restriction:?}: {}", r.value);
                }
            }
        }
    }

    #[test]
    fn unbounded_measure_rejected() {
        let e = avg_info_loss(&markovian(), DistanceMeasure::RelativeEntropy, &SearchOptions::default());
        assert!(matches!(e, Err(Error::UnboundedMeasure(_))));
    }

    #[test]
    fn markovian_loses_everything() {
        let ch = markovian();
        let r = avg_info_loss(&ch, DistanceMeasure::TraceDistance, &SearchOptions::default()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        let n = non_ergodicity_max(&ch, DistanceMeasure::TraceDistance, &SearchOptions::default()).unwrap();
        assert!(n.value < 1e-12);
        let b = avg_info_loss(&ch, DistanceMeasure::Bures, &SearchOptions::default().with_grid(9, 8)).unwrap();
        assert!((b.value - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn markovian_instant_grid_matches_closed_form() {
        let ch = markovian();
        let fine = SearchOptions::default().with_grid(640, 1280);
        for t in [0.2, 1.0, 3.0] {
            let map = ch.map_at(t).unwrap();
            let exact = trace_info_loss_closed_form(&map);
            let grid = trace_info_loss_grid(&map, &SearchOptions::default());
            assert!((grid.value - exact.value).abs() < 1e-6, "t={t}");
            let dense = trace_info_loss_grid(&map, &fine);
            assert!((dense.value - exact.value).abs() < 1e-6);
            // optimizer lands on an orthogonal pure pair
            let (a, b) = grid.argmax_pair;
            let d0 = trace_distance(&pure_from_bloch(a), &pure_from_bloch(b)).value;
            assert!((d0 - 1.0).abs() < 1e-6);
        }
        // below the crossover the population pair is optimal: 1 − e^{−Γt}
        let p = match ch.params() {
            crate::channels::ChannelParams::MarkovianThermal(p) => p,
            _ => unreachable!(),
        };
        let t = 0.3;
        let expected = 1.0 - (-p.relaxation_rate() * t).exp();
        let poles = pole_pair_info_loss(&ch.map_at(t).unwrap(), DistanceMeasure::TraceDistance).unwrap();
        assert!((poles.value - expected).abs() < 1e-12);
    }

    #[test]
    fn dephasing_pole_pair_keeps_information() {
        let ch = dephasing();
        let poles = avg_info_loss(&ch, DistanceMeasure::TraceDistance, &SearchOptions::poles()).unwrap();
        assert!(poles.value.abs() < 1e-12);
        let global = avg_info_loss(&ch, DistanceMeasure::TraceDistance, &SearchOptions::default()).unwrap();
        assert!((global.value - 1.0).abs() < 1e-12);
        let grid = trace_info_loss_grid(&ch.time_average_map().unwrap(), &SearchOptions::default());
        assert!((grid.value - global.value).abs() < 1e-9);
    }

    #[test]
    fn central_spin_values() {
        for zz in [true, false] {
            let ch = central(zz);
            for t in [0.4, 1.7, 5.0] {
                let v = ch.values_at(t).unwrap();
                let poles = info_loss_instant(&ch, t, DistanceMeasure::TraceDistance, &SearchOptions::poles()).unwrap();
                assert!((poles.value - (1.0 - (1.0 - v.theta1 - v.theta2).abs())).abs() < 1e-12);
                let global = info_loss_instant(&ch, t, DistanceMeasure::TraceDistance, &SearchOptions::default()).unwrap();
                assert!(global.value >= poles.value - 1e-12);
            }
            let avg = ch.kernels().time_averaged().unwrap();
            let poles = avg_info_loss(&ch, DistanceMeasure::TraceDistance, &SearchOptions::poles()).unwrap();
            assert!((poles.value - (1.0 - (1.0 - avg.theta1 - avg.theta2).abs())).abs() < 1e-12);

            let p1 = thermal_ground_population(1.0, Temperature::Finite(1.0));
            let pole_formula = (p1 - avg.theta1).abs().max((1.0 - p1 - avg.theta2).abs());
            for opts in [SearchOptions::default(), SearchOptions::poles()] {
                let n = non_ergodicity_max(&ch, DistanceMeasure::TraceDistance, &opts).unwrap();
                assert!((n.value - pole_formula).abs() < 1e-12);
            }
            let grid = non_ergodicity_max_grid(
                &ch.time_average_map().unwrap(),
                &ch.thermal_state(),
                DistanceMeasure::TraceDistance,
                &SearchOptions::default(),
            );
            assert!((grid.value - pole_formula).abs() < 1e-9);

            let excited = non_ergodicity(&ch, &DensityMatrix::excited(), DistanceMeasure::TraceDistance).unwrap();
            assert!((excited.value - (p1 - avg.theta1).abs()).abs() < 1e-12);
        }
    }

    #[test]
    fn closed_form_non_ergodicity_matches_grid() {
        // map with an interior maximum
        let maps = [
            PhaseCovariantMap { k11: 0.7, k12: 0.2, coherence: C64::new(0.8, 0.1) },
            PhaseCovariantMap { k11: 0.9, k12: 0.05, coherence: C64::new(0.0, 0.3) },
            PhaseCovariantMap::IDENTITY,
        ];
        let thermal = crate::qstate::thermal_qubit(0.4, Temperature::Finite(0.5));
        for map in maps {
            let exact = trace_non_ergodicity_max_closed_form(&map, &thermal);
            let grid = non_ergodicity_max_grid(&map, &thermal, DistanceMeasure::TraceDistance, &SearchOptions::default());
            assert!((exact.value - grid.value).abs() < 1e-9, "{exact:?} {grid:?}");
        }
    }

    #[test]
    fn pure_pair_search_finds_known_optimum() {
        // dephasing average: equatorial pair collapses to one state
        let ch = dephasing();
        let opts = SearchOptions::default().with_grid(16, 16);
        for m in DistanceMeasure::BOUNDED {
            let r = avg_info_loss(&ch, m, &opts).unwrap();
            assert!((r.value - m.max_value()).abs() < 1e-12, "{m}");
        }
        let map = ch.map_at(0.8).unwrap();
        let trace = pure_pair_info_loss_grid(&map, DistanceMeasure::TraceDistance, &opts).unwrap();
        assert!((trace.value - trace_info_loss_closed_form(&map).value).abs() < 1e-6);
    }

    #[test]
    fn relative_entropy_non_ergodicity_diverges_at_zero_temperature() {
        let ch: ChannelModel = DephasingChannel::new(DephasingParams {
            omega: 1.0,
            gamma_d: 0.5,
            temperature: Temperature::Zero,
        })
        .unwrap()
        .into();
        let n = non_ergodicity_max(&ch, DistanceMeasure::RelativeEntropy, &SearchOptions::default()).unwrap();
        assert!(n.divergent && n.value.is_infinite());
        let fixed = non_ergodicity(&ch, &DensityMatrix::ground(), DistanceMeasure::RelativeEntropy).unwrap();
        assert!(!fixed.divergent && fixed.value.abs() < 1e-12);
    }
}
