//! Verifiers for the loss/non-ergodicity uncertainty relations.

use serde::{Deserialize, Serialize};

use super::{avg_info_loss, non_ergodicity, non_ergodicity_max, PairRestriction, SearchOptions};
use crate::channels::{CentralSpinKernels, CentralSpinParams, QubitChannel};
use crate::distances::{trace_distance, DistanceMeasure};
use crate::error::{Error, Result};
use crate::qstate::{thermal_ground_population, DensityMatrix};

/// Default threshold on `slack` for flagging a relation as saturated.
pub const SATURATION_TOL: f64 = 1e-3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationId {
    /// `Ī^T + 2N^{M(T)} ≥ 1`.
    TraceGlobal,
    /// `Ī^T + √(2N^{M(Rel)}) ≥ 1`; trivial unless `ρ_th` is full rank.
    RelEntGlobal,
    /// `Ī + 2N^M ≥ max D` for a bounded measure.
    GeneralGlobal,
    /// `Ī ≥ D(ρ1,ρ2) − N(ρ̄1) − N(ρ̄2)`.
    Pairwise,
    /// `Ī^T ≥ D_T(ρ1,ρ2) − Σ√(S(ρ̄i‖ρ_th)/2)`.
    PairwiseRelEnt,
    /// `Ī^T(ρ1,ρ2) + Σ√(S(ρ̄i‖ρ_th)/2) ≥ D_T(ρ1,ρ2)`.
    StateDependentRelEnt,
    /// `Ī(ρ1,ρ2) + N(ρ̄1) + N(ρ̄2) ≥ D(ρ1,ρ2)`.
    StateDependent,
}

impl RelationId {
    pub const ALL: [RelationId; 7] = [
        RelationId::TraceGlobal,
        RelationId::RelEntGlobal,
        RelationId::GeneralGlobal,
        RelationId::Pairwise,
        RelationId::PairwiseRelEnt,
        RelationId::StateDependentRelEnt,
        RelationId::StateDependent,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RelationId::TraceGlobal => "trace_global",
            RelationId::RelEntGlobal => "rel_ent_global",
            RelationId::GeneralGlobal => "general_global",
            RelationId::Pairwise => "pairwise",
            RelationId::PairwiseRelEnt => "pairwise_rel_ent",
            RelationId::StateDependentRelEnt => "state_dependent_rel_ent",
            RelationId::StateDependent => "state_dependent",
        }
    }

    pub fn needs_pair(&self) -> bool {
        matches!(
            self,
            RelationId::Pairwise
                | RelationId::PairwiseRelEnt
                | RelationId::StateDependentRelEnt
                | RelationId::StateDependent
        )
    }

    /// Whether the caller's measure is used; the others are fixed to trace
    /// distance and relative entropy.
    pub fn takes_measure(&self) -> bool {
        matches!(
            self,
            RelationId::GeneralGlobal | RelationId::Pairwise | RelationId::StateDependent
        )
    }
}

impl std::fmt::Display for RelationId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for RelationId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        RelationId::ALL
            .into_iter()
            .find(|r| r.name() == key)
            .ok_or_else(|| format!("unknown relation `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct UncertaintyReport {
    pub relation_id: RelationId,
    pub measure: DistanceMeasure,
    /// `+∞` (JSON `null`) for a trivial relative-entropy relation.
    pub lhs: f64,
    pub rhs_bound: f64,
    pub slack: f64,
    pub saturated: bool,
    pub trivial: bool,
    pub pair_restriction: PairRestriction,
}

impl UncertaintyReport {
    fn new(
        relation_id: RelationId,
        measure: DistanceMeasure,
        lhs: f64,
        rhs_bound: f64,
        restriction: PairRestriction,
        tol: f64,
    ) -> Self {
        let trivial = lhs.is_infinite();
        let slack = lhs - rhs_bound;
        UncertaintyReport {
            relation_id,
            measure,
            lhs,
            rhs_bound,
            slack,
            saturated: !trivial && slack <= tol,
            trivial,
            pair_restriction: restriction,
        }
    }

    /// Holds up to `tol`; trivial reports always hold.
    pub fn holds(&self, tol: f64) -> bool {
        self.trivial || self.slack >= -tol
    }
}

pub fn check_relation(
    ch: &impl QubitChannel,
    relation: RelationId,
    measure: DistanceMeasure,
    pair: Option<(&DensityMatrix, &DensityMatrix)>,
    opts: &SearchOptions,
) -> Result<UncertaintyReport> {
    check_relation_with_tol(ch, relation, measure, pair, opts, SATURATION_TOL)
}

fn require_symmetric_metric(measure: DistanceMeasure) -> Result<()> {
    if measure.is_symmetric() && measure.satisfies_triangle() {
        Ok(())
    } else {
        Err(Error::UnboundedMeasure(measure.name()))
    }
}

/// `√(S/2)` per state, `+∞` if any relative entropy diverges.
fn rel_ent_terms(ch: &impl QubitChannel, rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<f64> {
    let mut sum = 0.0;
    for rho in [rho1, rho2] {
        let s = non_ergodicity(ch, rho, DistanceMeasure::RelativeEntropy)?;
        if s.divergent {
            return Ok(f64::INFINITY);
        }
        sum += (s.value.max(0.0) / 2.0).sqrt();
    }
    Ok(sum)
}

/// Evaluates one relation.
///
/// `measure` is ignored by the trace/relative-entropy relations (see
/// [`RelationId::takes_measure`]). Pairwise relations always maximize the
/// loss over all pairs, whatever `opts.restriction` says, since the bound
/// holds for the true maximum only.
pub fn check_relation_with_tol(
    ch: &impl QubitChannel,
    relation: RelationId,
    measure: DistanceMeasure,
    pair: Option<(&DensityMatrix, &DensityMatrix)>,
    opts: &SearchOptions,
    saturation_tol: f64,
) -> Result<UncertaintyReport> {
    let trace = DistanceMeasure::TraceDistance;
    let measure = if relation.takes_measure() { measure } else { trace };
    let pair = match (relation.needs_pair(), pair) {
        (true, None) => return Err(Error::MissingStatePair(relation.name())),
        (_, p) => p,
    };
    let global = SearchOptions {
        restriction: PairRestriction::Global,
        ..*opts
    };
    let report = |lhs, rhs, restriction| {
        UncertaintyReport::new(relation, measure, lhs, rhs, restriction, saturation_tol)
    };

    Ok(match relation {
        RelationId::TraceGlobal => {
            let loss = avg_info_loss(ch, trace, opts)?.value;
            let n = non_ergodicity_max(ch, trace, opts)?.value;
            report(loss + 2.0 * n, 1.0, opts.restriction)
        }
        RelationId::GeneralGlobal => {
            require_symmetric_metric(measure)?;
            let loss = avg_info_loss(ch, measure, opts)?.value;
            let n = non_ergodicity_max(ch, measure, opts)?.value;
            report(loss + 2.0 * n, measure.max_value(), opts.restriction)
        }
        RelationId::RelEntGlobal => {
            let loss = avg_info_loss(ch, trace, opts)?.value;
            let n = non_ergodicity_max(ch, DistanceMeasure::RelativeEntropy, opts)?;
            let lhs = if n.divergent {
                f64::INFINITY
            } else {
                loss + (2.0 * n.value.max(0.0)).sqrt()
            };
            report(lhs, 1.0, opts.restriction)
        }
        RelationId::Pairwise => {
            require_symmetric_metric(measure)?;
            let (r1, r2) = pair.expect("checked above");
            let loss = avg_info_loss(ch, measure, &global)?.value;
            let n1 = non_ergodicity(ch, r1, measure)?.value;
            let n2 = non_ergodicity(ch, r2, measure)?.value;
            report(loss, measure.eval(r1, r2) - n1 - n2, PairRestriction::Global)
        }
        RelationId::PairwiseRelEnt => {
            let (r1, r2) = pair.expect("checked above");
            let terms = rel_ent_terms(ch, r1, r2)?;
            let loss = avg_info_loss(ch, trace, &global)?.value;
            let d0 = trace_distance(r1, r2).value;
            // a divergent term makes the bound −∞, the relation trivial
            let lhs = if terms.is_infinite() { f64::INFINITY } else { loss };
            report(lhs, d0 - if terms.is_infinite() { 0.0 } else { terms }, PairRestriction::Global)
        }
        RelationId::StateDependentRelEnt => {
            let (r1, r2) = pair.expect("checked above");
            let d0 = trace_distance(r1, r2).value;
            let dt = trace_distance(&ch.time_average(r1)?, &ch.time_average(r2)?).value;
            let terms = rel_ent_terms(ch, r1, r2)?;
            report(d0 - dt + terms, d0, PairRestriction::Global)
        }
        RelationId::StateDependent => {
            require_symmetric_metric(measure)?;
            let (r1, r2) = pair.expect("checked above");
            let d0 = measure.eval(r1, r2);
            let dt = measure.eval(&ch.time_average(r1)?, &ch.time_average(r2)?);
            let n1 = non_ergodicity(ch, r1, measure)?.value;
            let n2 = non_ergodicity(ch, r2, measure)?.value;
            report(d0 - dt + n1 + n2, d0, PairRestriction::Global)
        }
    })
}

/// Closed-form `Ī^T + 2N^{M(T)}` for the central-spin model over the pole pair:
/// `(1 − |1 − Θ̄1 − Θ̄2|) + 2·max(|p1 − Θ̄1|, |1 − p1 − Θ̄2|)`.
pub fn uncertainty_sum_closed_form(p: &CentralSpinParams) -> Result<f64> {
    let avg = CentralSpinKernels::new(p)?.time_averaged()?;
    let p1 = thermal_ground_population(p.omega0, p.temperature);
    let loss = 1.0 - (1.0 - avg.theta1 - avg.theta2).abs();
    let n = (p1 - avg.theta1).abs().max((1.0 - p1 - avg.theta2).abs());
    Ok(loss + 2.0 * n)
}
