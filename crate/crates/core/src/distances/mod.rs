//! Distinguishability measures on qubit states.
//!
//! Trace, Bures, Hellinger and √JSD are metrics and bounded; the quantum
//! relative entropy is neither symmetric nor a metric and diverges when the
//! support of the first argument is not inside that of the second. All
//! logarithms are natural.

pub mod axioms;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::qstate::{eig_hermitian_2x2, DensityMatrix, Mat2};

pub use axioms::{check_axioms, AxiomReport, PropertyCheck};

/// Eigenvalues at or below this count as zero: outside the support of `σ`
/// for the relative entropy, and dropped inside square roots.
pub const SUPPORT_EIGEN_TOL: f64 = 1e-14;
/// Overlap of `ρ` with a null direction of `σ` that triggers divergence.
pub const SUPPORT_OVERLAP_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceMeasure {
    TraceDistance,
    Bures,
    Hellinger,
    RelativeEntropy,
    SqrtJsd,
}

impl DistanceMeasure {
    pub const ALL: [DistanceMeasure; 5] = [
        DistanceMeasure::TraceDistance,
        DistanceMeasure::Bures,
        DistanceMeasure::Hellinger,
        DistanceMeasure::RelativeEntropy,
        DistanceMeasure::SqrtJsd,
    ];

    pub const BOUNDED: [DistanceMeasure; 4] = [
        DistanceMeasure::TraceDistance,
        DistanceMeasure::Bures,
        DistanceMeasure::Hellinger,
        DistanceMeasure::SqrtJsd,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            DistanceMeasure::TraceDistance => "trace",
            DistanceMeasure::Bures => "bures",
            DistanceMeasure::Hellinger => "hellinger",
            DistanceMeasure::RelativeEntropy => "relative_entropy",
            DistanceMeasure::SqrtJsd => "sqrt_jsd",
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self != DistanceMeasure::RelativeEntropy
    }

    pub fn satisfies_triangle(&self) -> bool {
        *self != DistanceMeasure::RelativeEntropy
    }

    pub fn is_bounded(&self) -> bool {
        *self != DistanceMeasure::RelativeEntropy
    }

    /// Supremum over qubit state pairs, attained by orthogonal pure states.
    pub fn max_value(&self) -> f64 {
        match self {
            DistanceMeasure::TraceDistance => 1.0,
            DistanceMeasure::Bures | DistanceMeasure::Hellinger => std::f64::consts::SQRT_2,
            DistanceMeasure::SqrtJsd => std::f64::consts::LN_2.sqrt(),
            DistanceMeasure::RelativeEntropy => f64::INFINITY,
        }
    }

    pub fn evaluate(&self, rho: &DensityMatrix, sigma: &DensityMatrix) -> DistanceValue {
        match self {
            DistanceMeasure::TraceDistance => trace_distance(rho, sigma),
            DistanceMeasure::Bures => bures_distance(rho, sigma),
            DistanceMeasure::Hellinger => hellinger_distance(rho, sigma),
            DistanceMeasure::RelativeEntropy => relative_entropy(rho, sigma),
            DistanceMeasure::SqrtJsd => sqrt_jsd(rho, sigma),
        }
    }

    /// Numeric value, `+∞` for a divergent relative entropy.
    pub fn eval(&self, rho: &DensityMatrix, sigma: &DensityMatrix) -> f64 {
        self.evaluate(rho, sigma).as_f64()
    }
}

impl fmt::Display for DistanceMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for DistanceMeasure {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "trace" | "trace_distance" => Ok(DistanceMeasure::TraceDistance),
            "bures" => Ok(DistanceMeasure::Bures),
            "hellinger" => Ok(DistanceMeasure::Hellinger),
            "relative_entropy" | "relent" => Ok(DistanceMeasure::RelativeEntropy),
            "sqrt_jsd" | "jsd" => Ok(DistanceMeasure::SqrtJsd),
            other => Err(format!("unknown distance measure `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistanceValue {
    pub value: f64,
    /// Only ever set by [`relative_entropy`].
    pub divergent: bool,
}

impl DistanceValue {
    fn finite(value: f64) -> Self {
        DistanceValue {
            value,
            divergent: false,
        }
    }

    pub fn as_f64(&self) -> f64 {
        if self.divergent {
            f64::INFINITY
        } else {
            self.value
        }
    }
}

/// `½ Tr|ρ − σ|`.
pub fn trace_distance(rho: &DensityMatrix, sigma: &DensityMatrix) -> DistanceValue {
    let diff = *rho.matrix() - *sigma.matrix();
    let e = eig_hermitian_2x2(&diff).expect("difference of Hermitian matrices");
    DistanceValue::finite(0.5 * (e.values[0].abs() + e.values[1].abs()))
}

/// Eigenvalues at or below [`SUPPORT_EIGEN_TOL`] count as zero. Rounding
/// leaves pure states with `λ ~ 1e-17`, and `√λ` would turn that into a
/// `1e-9` shift of the distance.
fn snap(lambda: f64) -> f64 {
    if lambda <= SUPPORT_EIGEN_TOL {
        0.0
    } else {
        lambda
    }
}

fn sqrt_psd(m: &DensityMatrix) -> Mat2 {
    m.eigen().map(|x| snap(x).sqrt())
}

/// Uhlmann fidelity `(Tr √(√ρ σ √ρ))²`.
pub fn fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> f64 {
    let s = sqrt_psd(rho);
    let inner = s * *sigma.matrix() * s;
    let inner = Mat2::new(
        inner.0[0][0],
        0.5 * (inner.0[0][1] + inner.0[1][0].conj()),
        0.5 * (inner.0[1][0] + inner.0[0][1].conj()),
        inner.0[1][1],
    );
    let e = eig_hermitian_2x2(&inner).expect("√ρσ√ρ is Hermitian");
    let root_f: f64 = e.values.iter().map(|x| x.max(0.0).sqrt()).sum();
    (root_f * root_f).min(1.0)
}

/// `√(2(1 − √F))`.
///
/// Evaluated from Bloch vectors `r`, `s` (`d = s − r`) through
/// `1 − F = (|d|² − |r×d|²) / (2(1 − r·s + √((1−r²)(1−s²))))`, which has no
/// cancellation as `σ → ρ`. [`fidelity`] is the matrix square-root route.
pub fn bures_distance(rho: &DensityMatrix, sigma: &DensityMatrix) -> DistanceValue {
    let r = rho.bloch_vector();
    let s = sigma.bloch_vector();
    let d = [s[0] - r[0], s[1] - r[1], s[2] - r[2]];
    let d2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
    if d2 == 0.0 {
        return DistanceValue::finite(0.0);
    }
    let cross = [
        r[1] * d[2] - r[2] * d[1],
        r[2] * d[0] - r[0] * d[2],
        r[0] * d[1] - r[1] * d[0],
    ];
    let c2 = cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2];
    let r_dot_d = r[0] * d[0] + r[1] * d[1] + r[2] * d[2];
    // 4·det = 1 − |r|², taken from the matrix entries
    let det4 = |m: &DensityMatrix| 4.0 * snap(m.rho11() * m.rho22() - m.rho12().norm_sqr());
    let one_minus_dot = det4(rho) - r_dot_d;
    let denom = 2.0 * (one_minus_dot + (det4(rho) * det4(sigma)).sqrt());
    let infidelity = if denom > 1e-300 {
        ((d2 - c2) / denom).clamp(0.0, 1.0)
    } else {
        1.0 - fidelity(rho, sigma)
    };
    let root_f = (1.0 - infidelity).sqrt();
    DistanceValue::finite((2.0 * infidelity / (1.0 + root_f)).max(0.0).sqrt())
}

/// `√(2(1 − Tr √ρ √σ))`, evaluated as the Hilbert–Schmidt norm `‖√ρ − √σ‖₂`.
pub fn hellinger_distance(rho: &DensityMatrix, sigma: &DensityMatrix) -> DistanceValue {
    if rho == sigma {
        return DistanceValue::finite(0.0);
    }
    let diff = sqrt_psd(rho) - sqrt_psd(sigma);
    let norm2: f64 = diff.0.iter().flatten().map(|z| z.norm_sqr()).sum();
    DistanceValue::finite(norm2.sqrt())
}

fn entropy(rho: &DensityMatrix) -> f64 {
    rho.eigen()
        .values
        .iter()
        .filter(|&&l| l > 0.0)
        .map(|&l| -l * l.ln())
        .sum()
}

/// `S(ρ‖σ) = Tr ρ(ln ρ − ln σ)`, flagged divergent on support mismatch.
pub fn relative_entropy(rho: &DensityMatrix, sigma: &DensityMatrix) -> DistanceValue {
    let es = sigma.eigen();
    let mut cross = 0.0;
    for k in 0..2 {
        let v = es.vector(k);
        let pv = rho.matrix().apply(v);
        let overlap = (v[0].conj() * pv[0] + v[1].conj() * pv[1]).re;
        let lambda = es.values[k];
        if lambda <= SUPPORT_EIGEN_TOL {
            if overlap > SUPPORT_OVERLAP_TOL {
                return DistanceValue {
                    value: f64::INFINITY,
                    divergent: true,
                };
            }
            continue;
        }
        cross += overlap * lambda.ln();
    }
    DistanceValue::finite((-entropy(rho) - cross).max(0.0))
}

/// `JSD` as the entropy difference `S(μ) − (S(ρ) + S(σ))/2`. Loses about
/// `1e-16` absolutely, so only use it away from `ρ = σ`.
pub fn jsd_entropy_route(rho: &DensityMatrix, sigma: &DensityMatrix) -> f64 {
    let mid = rho.mix(sigma, 0.5).expect("midpoint of two states is a state");
    entropy(&mid) - 0.5 * (entropy(rho) + entropy(sigma))
}

fn xlogx(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// `φ(v + h) − φ(v)` for `φ(x) = x ln x`, without cancellation at small `h`.
fn xlogx_step(v: f64, h: f64) -> f64 {
    if v <= 0.0 || h.abs() > 0.5 * v {
        xlogx(v + h) - xlogx(v)
    } else {
        h * (v + h).ln() + v * (h / v).ln_1p()
    }
}

/// `½[(1+δ)ln(1+δ) + (1−δ)ln(1−δ)]`, so that the Jensen gap of `φ` at
/// `ū(1 ± δ)` is `ū·k(δ)`.
fn jensen_kernel(delta: f64) -> f64 {
    if delta.abs() > 0.5 {
        0.5 * (xlogx(1.0 + delta) + xlogx(1.0 - delta))
    } else {
        0.5 * ((-delta * delta).ln_1p() + 2.0 * delta * delta.atanh())
    }
}

/// `√JSD` with `JSD(ρ,σ) = S(μ) − (S(ρ) + S(σ))/2`, `μ = (ρ+σ)/2`.
///
/// This equals `½S(ρ‖μ) + ½S(σ‖μ)` and is finite for every pair. Entropy
/// depends only on the Bloch radius, `S = ln 2 − ½F(x)` with
/// `F(x) = φ(1+x) + φ(1−x)`. With radii `a`, `b` of `ρ`, `σ`, `c` of `μ`
/// and `d = (a+b)/2`, the JSD splits into `½[F(d) − F(c)]` plus the Jensen
/// gap of `F` at `a`, `b`; both pieces are built from differences that are
/// formed exactly, so small distances keep full relative precision.
/// [`jsd_entropy_route`] is the direct formula.
pub fn sqrt_jsd(rho: &DensityMatrix, sigma: &DensityMatrix) -> DistanceValue {
    let r = rho.bloch_vector();
    let s = sigma.bloch_vector();
    let m = [0.5 * (r[0] + s[0]), 0.5 * (r[1] + s[1]), 0.5 * (r[2] + s[2])];
    let u = [0.5 * (r[0] - s[0]), 0.5 * (r[1] - s[1]), 0.5 * (r[2] - s[2])];
    let dot = |x: [f64; 3], y: [f64; 3]| x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    let (m2, u2, mu) = (dot(m, m), dot(u, u), dot(m, u));
    if u2 == 0.0 {
        return DistanceValue::finite(0.0);
    }
    let a = dot(r, r).sqrt().min(1.0);
    let b = dot(s, s).sqrt().min(1.0);
    let c = m2.sqrt().min(1.0);
    let d = 0.5 * (a + b);

    // d² − c² = X/2 with X = ab + |u|² − |m|²
    let cross = [
        m[1] * u[2] - m[2] * u[1],
        m[2] * u[0] - m[0] * u[2],
        m[0] * u[1] - m[1] * u[0],
    ];
    let x = if m2 >= u2 {
        let denom = a * b + m2 - u2;
        if denom > 0.0 {
            4.0 * dot(cross, cross) / denom
        } else {
            0.0
        }
    } else {
        a * b + u2 - m2
    };
    let e = if d + c > 0.0 { (0.5 * x / (d + c)).max(0.0) } else { 0.0 };
    let radial = 0.5 * (xlogx_step(1.0 + c, e) + xlogx_step(1.0 - c, -e));

    // a − b = 4 m·u / (a + b)
    let a_minus_b = if a + b > 0.0 { 4.0 * mu / (a + b) } else { 0.0 };
    let upper = (1.0 + d) * jensen_kernel(a_minus_b / (2.0 + a + b));
    let lower = if 2.0 - a - b > 0.0 {
        (1.0 - d) * jensen_kernel((-a_minus_b / (2.0 - a - b)).clamp(-1.0, 1.0))
    } else {
        0.0
    };
    let jsd = radial + 0.5 * (upper + lower);
    DistanceValue::finite(jsd.max(0.0).sqrt())
}

/// `S(ρ‖σ) − 2·D_T(ρ,σ)²`, `+∞` when the relative entropy diverges.
pub fn pinsker_gap(rho: &DensityMatrix, sigma: &DensityMatrix) -> f64 {
    let s = relative_entropy(rho, sigma);
    if s.divergent {
        return f64::INFINITY;
    }
    let t = trace_distance(rho, sigma).value;
    s.value - 2.0 * t * t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstate::C64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{LN_2, SQRT_2};

    fn mixed() -> DensityMatrix {
        DensityMatrix::maximally_mixed()
    }

    #[test]
    fn trace_examples() {
        let g = DensityMatrix::ground();
        let e = DensityMatrix::excited();
        assert!((trace_distance(&g, &e).value - 1.0).abs() < 1e-15);
        assert_eq!(trace_distance(&g, &g).value, 0.0);
        assert!((trace_distance(&mixed(), &g).value - 0.5).abs() < 1e-15);
    }

    #[test]
    fn bures_examples() {
        let g = DensityMatrix::ground();
        let e = DensityMatrix::excited();
        assert_eq!(bures_distance(&mixed(), &mixed()).value, 0.0);
        assert!((bures_distance(&g, &e).value - SQRT_2).abs() < 1e-12);
        // F(I/2, pure) = 1/2; value from mpmath
        assert!((bures_distance(&mixed(), &g).value - 0.765_366_864_730_179_5).abs() < 1e-12);
        assert!((fidelity(&mixed(), &g) - 0.5).abs() < 1e-14);
    }

    #[test]
    fn fidelity_matches_qubit_closed_form() {
        // F = Tr ρσ + 2√(det ρ det σ) for qubits
        let a = DensityMatrix::from_bloch_vector([0.3, -0.2, 0.5]).unwrap();
        let b = DensityMatrix::from_bloch_vector([-0.1, 0.6, 0.2]).unwrap();
        let det = |r: &DensityMatrix| r.rho11() * r.rho22() - r.rho12().norm_sqr();
        let closed = (*a.matrix() * *b.matrix()).trace().re + 2.0 * (det(&a) * det(&b)).sqrt();
        assert!((fidelity(&a, &b) - closed).abs() < 1e-13);
    }

    #[test]
    fn bures_routes_agree() {
        // stable Bloch form vs matrix square-root fidelity
        let states = [
            DensityMatrix::from_bloch_vector([0.3, -0.2, 0.5]).unwrap(),
            DensityMatrix::from_bloch_vector([-0.1, 0.6, 0.2]).unwrap(),
            DensityMatrix::from_bloch_vector([0.0, 0.0, -1.0]).unwrap(),
            DensityMatrix::from_bloch_vector([0.6, 0.0, 0.8]).unwrap(),
            DensityMatrix::maximally_mixed(),
        ];
        for a in &states {
            for b in &states {
                let direct = (2.0 * (1.0 - fidelity(a, b).sqrt())).max(0.0).sqrt();
                assert!((bures_distance(a, b).value - direct).abs() < 1e-7, "{a} {b}");
            }
        }
    }

    #[test]
    fn hellinger_examples() {
        let g = DensityMatrix::ground();
        let e = DensityMatrix::excited();
        assert!(hellinger_distance(&g, &g).value < 1e-7);
        assert!((hellinger_distance(&g, &e).value - SQRT_2).abs() < 1e-12);
        assert!((hellinger_distance(&mixed(), &g).value - 0.765_366_864_730_179_5).abs() < 1e-12);
    }

    #[test]
    fn relative_entropy_examples() {
        let g = DensityMatrix::ground();
        let r = DensityMatrix::from_bloch_vector([0.2, 0.1, -0.4]).unwrap();
        assert!(relative_entropy(&r, &r).value < 1e-14);
        assert!((relative_entropy(&g, &mixed()).value - LN_2).abs() < 1e-14);
        let div = relative_entropy(&mixed(), &g);
        assert!(div.divergent);
        assert_eq!(div.as_f64(), f64::INFINITY);
        // pure-on-pure equal states: support matches, value 0
        assert!(!relative_entropy(&g, &g).divergent);
    }

    #[test]
    fn sqrt_jsd_examples() {
        let g = DensityMatrix::ground();
        let e = DensityMatrix::excited();
        assert_eq!(sqrt_jsd(&g, &g).value, 0.0);
        assert!((sqrt_jsd(&g, &e).value - LN_2.sqrt()).abs() < 1e-14);
        // well separated: both routes are accurate
        let mid = sqrt_jsd(&mixed(), &g).value;
        assert!((mid * mid - jsd_entropy_route(&mixed(), &g)).abs() < 1e-15);
    }

    #[test]
    fn sqrt_jsd_routes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..2000 {
            let a = crate::sampling::random_state(&mut rng);
            let b = crate::sampling::random_state(&mut rng);
            let stable = sqrt_jsd(&a, &b).value.powi(2);
            assert!((stable - jsd_entropy_route(&a, &b)).abs() < 1e-13, "{a} {b}");
            assert!((sqrt_jsd(&b, &a).value - sqrt_jsd(&a, &b).value).abs() < 1e-13);
        }
    }

    #[test]
    fn sqrt_jsd_small_separation() {
        // second order: JSD ≈ ½[u_r²/(1−c²) + u_t²·atanh(c)/c], u = (r−s)/2
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let c: f64 = rng.random_range(0.0..0.999);
            let eps: f64 = 10f64.powf(rng.random_range(-12.0..-7.0));
            let (ur, ut) = (eps * rng.random_range(-1.0..1.0), eps * rng.random_range(-1.0..1.0));
            let r = [ut, 0.0, c + ur];
            let s = [-ut, 0.0, c - ur];
            let a = DensityMatrix::from_bloch_vector(r).unwrap();
            let b = DensityMatrix::from_bloch_vector(s).unwrap();
            let tangential = if c > 0.0 { c.atanh() / c } else { 1.0 };
            let expected = (0.5 * (ur * ur / (1.0 - c * c) + ut * ut * tangential)).sqrt();
            let got = sqrt_jsd(&a, &b).value;
            assert!((got - expected).abs() <= 1e-6 * expected + 1e-15, "c={c} eps={eps}: {got} vs {expected}");
        }
    }

    #[test]
    fn pinsker_examples() {
        let g = DensityMatrix::ground();
        let r = DensityMatrix::from_parts(0.3, C64::new(0.1, 0.2)).unwrap();
        assert!(pinsker_gap(&r, &r).abs() < 1e-12);
        // ln 2 - 1/2, from mpmath
        assert!((pinsker_gap(&g, &mixed()) - 0.19314718055994531).abs() < 1e-14);
        assert_eq!(pinsker_gap(&mixed(), &g), f64::INFINITY);
    }

    #[test]
    fn bounds_attained_by_orthogonal_pure_states() {
        let g = DensityMatrix::ground();
        let e = DensityMatrix::excited();
        for m in DistanceMeasure::BOUNDED {
            assert!((m.eval(&g, &e) - m.max_value()).abs() < 1e-12, "{m}");
        }
    }

    #[test]
    fn measure_names_round_trip() {
        for m in DistanceMeasure::ALL {
            assert_eq!(m.name().parse::<DistanceMeasure>().unwrap(), m);
        }
        assert!("hilbert_schmidt".parse::<DistanceMeasure>().is_err());
    }
}
