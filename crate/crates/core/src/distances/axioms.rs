//! Randomized verification of the distance-measure axioms.
//!
//! * P1 `D(ρ,σ) ≥ 0`
//! * P2 `D(ρ,σ) = 0 ⇔ ρ = σ`
//! * P3 `D(Φρ, Φσ) ≤ D(ρ,σ)` for CPTP `Φ`
//! * P4 `D(ρ,σ) = D(σ,ρ)`
//! * P5 `D(ρ,τ) ≤ D(ρ,σ) + D(σ,τ)`
//!
//! Comparisons involving a divergent relative entropy are skipped, so every
//! reported violation is finite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{trace_distance, DistanceMeasure};
use crate::channels::QubitChannel;
use crate::qstate::DensityMatrix;
use crate::sampling::{random_channel, random_state, random_unitary};

pub const AXIOM_TOL: f64 = 1e-9;
/// Pairs used for the `⇐` direction of P2 are at least this far apart in
/// trace distance.
pub const DISTINCT_SEPARATION: f64 = 1e-3;
pub const DEFAULT_SEED: u64 = 0x5eed_a110;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyCheck {
    pub pass: bool,
    /// Largest excess over the allowed bound, zero if none.
    pub worst_violation: f64,
    /// States realizing `worst_violation`; empty when the property holds.
    pub witness_states: Vec<DensityMatrix>,
}

#[derive(Default)]
struct Tracker {
    worst: f64,
    witness: Vec<DensityMatrix>,
}

impl Tracker {
    fn record(&mut self, violation: f64, states: &[DensityMatrix]) {
        if violation.is_finite() && violation > self.worst {
            self.worst = violation;
            self.witness = states.to_vec();
        }
    }

    fn finish(self) -> PropertyCheck {
        let pass = self.worst <= AXIOM_TOL;
        PropertyCheck {
            pass,
            worst_violation: self.worst,
            witness_states: if pass { Vec::new() } else { self.witness },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomReport {
    pub measure: DistanceMeasure,
    pub samples: usize,
    pub p1: PropertyCheck,
    pub p2: PropertyCheck,
    pub p3: PropertyCheck,
    pub p4: PropertyCheck,
    pub p5: PropertyCheck,
}

impl AxiomReport {
    pub fn checks(&self) -> [(&'static str, &PropertyCheck); 5] {
        [
            ("P1", &self.p1),
            ("P2", &self.p2),
            ("P3", &self.p3),
            ("P4", &self.p4),
            ("P5", &self.p5),
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.checks().iter().all(|(_, c)| c.pass)
    }

    /// Whether the result agrees with the measure's declared properties.
    pub fn matches_metadata(&self) -> bool {
        self.p1.pass
            && self.p2.pass
            && self.p3.pass
            && self.p4.pass == self.measure.is_symmetric()
            && self.p5.pass == self.measure.satisfies_triangle()
    }
}

pub fn check_axioms(measure: DistanceMeasure, samples: usize) -> AxiomReport {
    check_axioms_seeded(measure, samples, DEFAULT_SEED)
}

fn distinct_pair<R: Rng>(rng: &mut R) -> (DensityMatrix, DensityMatrix) {
    loop {
        let a = random_state(rng);
        let b = random_state(rng);
        if trace_distance(&a, &b).value >= DISTINCT_SEPARATION {
            return (a, b);
        }
    }
}

/// Random CPTP map: `ρ ↦ (1−p)·V Φ_t(U ρ U†) V† + p·I/2`.
fn random_cptp<R: Rng>(rng: &mut R) -> impl Fn(&DensityMatrix) -> DensityMatrix {
    let channel = random_channel(rng);
    let t: f64 = if rng.random_bool(0.1) {
        0.0
    } else {
        rng.random_range((1e-3f64).ln()..(50.0f64).ln()).exp()
    };
    let map = channel.map_at(t).expect("non-negative time");
    let pre = random_unitary(rng);
    let post = random_unitary(rng);
    let p = if rng.random_bool(0.5) { 0.0 } else { rng.random::<f64>() };
    move |rho: &DensityMatrix| {
        let inner = rho.conjugate(&pre).expect("unitary conjugation");
        let out = map.apply(&inner).expect("channel output is a state");
        let out = out.conjugate(&post).expect("unitary conjugation");
        out.mix(&DensityMatrix::maximally_mixed(), p)
            .expect("mixture of states")
    }
}

pub fn check_axioms_seeded(measure: DistanceMeasure, samples: usize, seed: u64) -> AxiomReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = |a: &DensityMatrix, b: &DensityMatrix| measure.evaluate(a, b);
    let mut p1 = Tracker::default();
    let mut p2 = Tracker::default();
    let mut p3 = Tracker::default();
    let mut p4 = Tracker::default();
    let mut p5 = Tracker::default();

    for _ in 0..samples {
        let (rho, sigma) = distinct_pair(&mut rng);
        let ab = d(&rho, &sigma);

        if !ab.divergent {
            p1.record(-ab.value, &[rho, sigma]);
        }

        // P2, both directions
        let same = d(&rho, &rho);
        p2.record(same.as_f64(), &[rho, rho]);
        if ab.as_f64() <= AXIOM_TOL {
            // distinct states at zero distance: push the violation past the tolerance
            p2.record(2.0 * AXIOM_TOL - ab.as_f64(), &[rho, sigma]);
        }

        let phi = random_cptp(&mut rng);
        let out = d(&phi(&rho), &phi(&sigma));
        if !ab.divergent {
            let excess = if out.divergent { f64::MAX } else { out.value - ab.value };
            p3.record(excess, &[rho, sigma]);
        }

        let ba = d(&sigma, &rho);
        if !ab.divergent && !ba.divergent {
            p4.record((ab.value - ba.value).abs(), &[rho, sigma]);
        }

        // a quarter of the triples put the middle state on the segment
        let (x, y, z) = if rng.random_bool(0.25) {
            let (a, c) = distinct_pair(&mut rng);
            let mid = a.mix(&c, rng.random_range(0.2..0.8)).expect("convex mixture");
            (a, mid, c)
        } else {
            (random_state(&mut rng), random_state(&mut rng), random_state(&mut rng))
        };
        let (xz, xy, yz) = (d(&x, &z), d(&x, &y), d(&y, &z));
        if !(xz.divergent || xy.divergent || yz.divergent) {
            p5.record(xz.value - xy.value - yz.value, &[x, y, z]);
        }
    }

    AxiomReport {
        measure,
        samples,
        p1: p1.finish(),
        p2: p2.finish(),
        p3: p3.finish(),
        p4: p4.finish(),
        p5: p5.finish(),
    }
}
