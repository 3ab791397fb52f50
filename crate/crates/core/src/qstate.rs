//! Single-qubit density matrices.
//!
//! Every matrix in this crate is written in the ordered basis `{|1⟩, |0⟩}`:
//! row/column 0 is the excited level `|1⟩`, row/column 1 the ground level
//! `|0⟩`. So `ρ11` is the excited population, `ρ22` the ground population
//! and `ρ12 = ⟨1|ρ|0⟩` the coherence.
//!
//! All model parameters are dimensionless: times are measured in units of
//! `1/g`, energies in units of `ħg` and temperatures in units of `ħg/K`,
//! where `g` is the frequency scale of the model Hamiltonian.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-12;
pub const PSD_TOL: f64 = 1e-10;
/// Hermiticity tolerance accepted by [`eig_hermitian_2x2`].
pub const EIG_HERMITIAN_TOL: f64 = 1e-10;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// Plain 2×2 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2(pub [[C64; 2]; 2]);

impl Mat2 {
    pub const fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub const fn zero() -> Self {
        Mat2([[ZERO, ZERO], [ZERO, ZERO]])
    }

    pub const fn identity() -> Self {
        Mat2([[ONE, ZERO], [ZERO, ONE]])
    }

    pub fn diag(a: f64, d: f64) -> Self {
        Mat2::new(C64::from(a), ZERO, ZERO, C64::from(d))
    }

    pub fn pauli_x() -> Self {
        Mat2::new(ZERO, ONE, ONE, ZERO)
    }

    pub fn pauli_y() -> Self {
        Mat2::new(ZERO, C64::new(0.0, -1.0), C64::new(0.0, 1.0), ZERO)
    }

    /// `σz = |1⟩⟨1| − |0⟩⟨0|`.
    pub fn pauli_z() -> Self {
        Mat2::diag(1.0, -1.0)
    }

    /// Outer product `|u⟩⟨v|`.
    pub fn outer(u: [C64; 2], v: [C64; 2]) -> Self {
        Mat2([
            [u[0] * v[0].conj(), u[0] * v[1].conj()],
            [u[1] * v[0].conj(), u[1] * v[1].conj()],
        ])
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Mat2::new(m[0][0].conj(), m[1][0].conj(), m[0][1].conj(), m[1][1].conj())
    }

    pub fn trace(&self) -> C64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn scale(&self, s: C64) -> Self {
        let m = &self.0;
        Mat2::new(m[0][0] * s, m[0][1] * s, m[1][0] * s, m[1][1] * s)
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(C64::from(s))
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    fn hermitian_defect(&self) -> f64 {
        let m = &self.0;
        (m[0][1] - m[1][0].conj())
            .norm()
            .max(m[0][0].im.abs())
            .max(m[1][1].im.abs())
    }

    pub fn apply(&self, v: [C64; 2]) -> [C64; 2] {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1],
            m[1][0] * v[0] + m[1][1] * v[1],
        ]
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, o: Mat2) -> Mat2 {
        let (a, b) = (&self.0, &o.0);
        Mat2::new(
            a[0][0] + b[0][0],
            a[0][1] + b[0][1],
            a[1][0] + b[1][0],
            a[1][1] + b[1][1],
        )
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, o: Mat2) -> Mat2 {
        self + o.scale_re(-1.0)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        let (a, b) = (&self.0, &o.0);
        Mat2::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}

/// Spectral decomposition of a 2×2 Hermitian matrix.
///
/// `values` are sorted descending; column `k` of `vectors` is the unit
/// eigenvector for `values[k]`.
#[derive(Clone, Copy, Debug)]
pub struct Eigen2 {
    pub values: [f64; 2],
    pub vectors: Mat2,
}

impl Eigen2 {
    pub fn vector(&self, k: usize) -> [C64; 2] {
        [self.vectors.0[0][k], self.vectors.0[1][k]]
    }

    /// `V·diag(f(λ))·V†`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Mat2 {
        let v0 = self.vector(0);
        let v1 = self.vector(1);
        Mat2::outer(v0, v0).scale_re(f(self.values[0]))
            + Mat2::outer(v1, v1).scale_re(f(self.values[1]))
    }

    pub fn reconstruct(&self) -> Mat2 {
        self.map(|x| x)
    }
}

/// Closed-form eigendecomposition of a Hermitian 2×2 matrix.
///
/// Writing the matrix as `[[a, b], [b*, d]]` with `b = |b|e^{iβ}`, the
/// eigenvectors are a real rotation by `ϑ/2`, `tan ϑ = 2|b|/(a−d)`, followed
/// by the phase `e^{−iβ}` on the second component. The result is exactly
/// orthonormal by construction.
pub fn eig_hermitian_2x2(m: &Mat2) -> Result<Eigen2> {
    let defect = m.hermitian_defect();
    if !(defect <= EIG_HERMITIAN_TOL) {
        return Err(Error::NotHermitian(defect));
    }
    let a = m.0[0][0].re;
    let d = m.0[1][1].re;
    // average the two off-diagonal estimates so tiny asymmetry does not bias
    let b = (m.0[0][1] + m.0[1][0].conj()) * 0.5;
    let half_gap = 0.5 * (a - d);
    let r = half_gap.hypot(b.norm());
    let mid = 0.5 * (a + d);
    let angle = (2.0 * b.norm()).atan2(a - d);
    let (s, c) = (0.5 * angle).sin_cos();
    let phase = if b.norm() > 0.0 {
        (b / b.norm()).conj()
    } else {
        ONE
    };
    let vectors = Mat2::new(C64::from(c), C64::from(-s), phase * s, phase * c);
    Ok(Eigen2 {
        values: [mid + r, mid - r],
        vectors,
    })
}

/// Polar angles of a pure qubit state `cos(θ/2)|1⟩ + sin(θ/2)e^{−iφ}|0⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlochAngles {
    pub theta: f64,
    pub phi: f64,
}

impl BlochAngles {
    /// Validates `θ ∈ [0, π]` and `φ ∈ [0, 2π)`.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) || !(0.0..2.0 * PI).contains(&phi) {
            return Err(Error::InvalidAngles { theta, phi });
        }
        Ok(BlochAngles { theta, phi })
    }

    /// Clamps `θ` into `[0, π]` and wraps `φ` into `[0, 2π)`.
    pub fn wrapped(theta: f64, phi: f64) -> Self {
        let theta = theta.clamp(0.0, PI);
        let mut phi = phi.rem_euclid(2.0 * PI);
        if phi >= 2.0 * PI {
            phi = 0.0;
        }
        BlochAngles { theta, phi }
    }

    pub const NORTH: BlochAngles = BlochAngles {
        theta: 0.0,
        phi: 0.0,
    };

    pub fn ket(&self) -> [C64; 2] {
        let (s, c) = (0.5 * self.theta).sin_cos();
        [C64::from(c), C64::from_polar(s, -self.phi)]
    }

    /// Angles of the orthogonal (antipodal) state.
    pub fn antipode(&self) -> BlochAngles {
        BlochAngles::wrapped(PI - self.theta, self.phi + PI)
    }
}

/// A validated qubit density matrix in the `{|1⟩, |0⟩}` basis.
///
/// Invariants: Hermitian and unit trace within `1e-12`, both eigenvalues at
/// least `−1e-10`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix(Mat2);

impl DensityMatrix {
    pub fn new(m: Mat2) -> Result<Self> {
        let defect = m.hermitian_defect();
        if !(defect <= HERMITIAN_TOL) {
            return Err(Error::NotHermitian(defect));
        }
        let tr = m.trace().re;
        if !((tr - 1.0).abs() <= TRACE_TOL) {
            return Err(Error::InvalidTrace(tr));
        }
        let low = eig_hermitian_2x2(&m)?.values[1];
        if low < -PSD_TOL {
            return Err(Error::NotPositive(low));
        }
        Ok(DensityMatrix(m))
    }

    /// Builds `[[ρ11, ρ12], [ρ12*, 1−ρ11]]`.
    pub fn from_parts(rho11: f64, rho12: C64) -> Result<Self> {
        DensityMatrix::new(Mat2::new(
            C64::from(rho11),
            rho12,
            rho12.conj(),
            C64::from(1.0 - rho11),
        ))
    }

    /// State with Bloch vector `r` (`|r| ≤ 1`), `ρ = (I + r·σ)/2`.
    pub fn from_bloch_vector(r: [f64; 3]) -> Result<Self> {
        DensityMatrix::from_parts(0.5 * (1.0 + r[2]), C64::new(0.5 * r[0], -0.5 * r[1]))
    }

    pub fn maximally_mixed() -> Self {
        DensityMatrix(Mat2::diag(0.5, 0.5))
    }

    pub fn excited() -> Self {
        DensityMatrix(Mat2::diag(1.0, 0.0))
    }

    pub fn ground() -> Self {
        DensityMatrix(Mat2::diag(0.0, 1.0))
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn rho11(&self) -> f64 {
        self.0 .0[0][0].re
    }

    pub fn rho22(&self) -> f64 {
        self.0 .0[1][1].re
    }

    pub fn rho12(&self) -> C64 {
        self.0 .0[0][1]
    }

    pub fn rho21(&self) -> C64 {
        self.0 .0[1][0]
    }

    pub fn bloch_vector(&self) -> [f64; 3] {
        let c = self.rho12();
        [2.0 * c.re, -2.0 * c.im, self.rho11() - self.rho22()]
    }

    pub fn eigen(&self) -> Eigen2 {
        // validated at construction
        eig_hermitian_2x2(&self.0).expect("density matrix is Hermitian")
    }

    pub fn purity(&self) -> f64 {
        (self.0 * self.0).trace().re
    }

    /// `U ρ U†` for a unitary `U`.
    pub fn conjugate(&self, u: &Mat2) -> Result<Self> {
        let m = *u * self.0 * u.adjoint();
        // symmetrize rounding before validation
        let rho12 = 0.5 * (m.0[0][1] + m.0[1][0].conj());
        let tr = m.trace().re;
        DensityMatrix::from_parts(m.0[0][0].re / tr, rho12 / tr)
    }

    /// Convex combination `(1−p)·self + p·other`.
    pub fn mix(&self, other: &DensityMatrix, p: f64) -> Result<Self> {
        DensityMatrix::new(self.0.scale_re(1.0 - p) + other.0.scale_re(p))
    }
}

impl fmt::Display for DensityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{:.6}, {:.6}{:+.6}i], [., {:.6}]]",
            self.rho11(),
            self.rho12().re,
            self.rho12().im,
            self.rho22()
        )
    }
}

#[derive(Serialize, Deserialize)]
struct DensityMatrixRepr {
    rho11: f64,
    rho12: [f64; 2],
}

impl Serialize for DensityMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DensityMatrixRepr {
            rho11: self.rho11(),
            rho12: [self.rho12().re, self.rho12().im],
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DensityMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = DensityMatrixRepr::deserialize(d)?;
        DensityMatrix::from_parts(r.rho11, C64::new(r.rho12[0], r.rho12[1]))
            .map_err(serde::de::Error::custom)
    }
}

/// Rank-1 projector onto `cos(θ/2)|1⟩ + sin(θ/2)e^{−iφ}|0⟩`.
pub fn pure_from_bloch(angles: BlochAngles) -> DensityMatrix {
    let k = angles.ket();
    let m = Mat2::outer(k, k);
    // rho22 = 1 - rho11 exactly
    DensityMatrix(Mat2::new(m.0[0][0], m.0[0][1], m.0[1][0], C64::from(1.0 - m.0[0][0].re)))
}

/// The orthogonal pure pair `(ψ, ψ⊥)` with
/// `ψ⊥ = sin(θ/2)|1⟩ − cos(θ/2)e^{−iφ}|0⟩`.
pub fn antipodal_pair(angles: BlochAngles) -> (DensityMatrix, DensityMatrix) {
    let (s, c) = (0.5 * angles.theta).sin_cos();
    let perp = [C64::from(s), C64::from_polar(-c, -angles.phi)];
    let a = pure_from_bloch(angles);
    let m = Mat2::outer(perp, perp);
    let b = DensityMatrix(Mat2::new(
        C64::from(1.0 - a.rho11()),
        m.0[0][1],
        m.0[1][0],
        C64::from(a.rho11()),
    ));
    (a, b)
}

/// Dimensionless bath temperature.
///
/// Serialized as a positive number, `"inf"` or `"zero"`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Temperature {
    /// The `T → 0⁺` limit.
    Zero,
    Finite(f64),
    Infinite,
}

impl Temperature {
    pub fn finite(t: f64) -> Result<Self> {
        if t == f64::INFINITY {
            Ok(Temperature::Infinite)
        } else if t > 0.0 && t.is_finite() {
            Ok(Temperature::Finite(t))
        } else {
            Err(Error::InvalidTemperature(t))
        }
    }

    /// `x/T` with the limits `±∞` (Zero) and `0` (Infinite).
    pub fn inverse_scaled(&self, x: f64) -> f64 {
        match *self {
            Temperature::Zero => {
                if x == 0.0 {
                    0.0
                } else {
                    x.signum() * f64::INFINITY
                }
            }
            Temperature::Finite(t) => x / t,
            Temperature::Infinite => 0.0,
        }
    }

    pub fn as_f64(&self) -> f64 {
        match *self {
            Temperature::Zero => 0.0,
            Temperature::Finite(t) => t,
            Temperature::Infinite => f64::INFINITY,
        }
    }
}

impl fmt::Display for Temperature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Temperature::Zero => write!(f, "zero"),
            Temperature::Finite(t) => write!(f, "{t}"),
            Temperature::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum TemperatureRepr {
    Number(f64),
    Word(String),
}

impl Serialize for Temperature {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            Temperature::Zero => s.serialize_str("zero"),
            Temperature::Finite(t) => s.serialize_f64(t),
            Temperature::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Temperature {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match TemperatureRepr::deserialize(d)? {
            TemperatureRepr::Number(t) => Temperature::finite(t).map_err(serde::de::Error::custom),
            TemperatureRepr::Word(w) => match w.to_ascii_lowercase().as_str() {
                "inf" | "infinity" | "+inf" => Ok(Temperature::Infinite),
                "zero" | "0+" => Ok(Temperature::Zero),
                other => Err(serde::de::Error::custom(format!(
                    "unknown temperature `{other}` (expected a positive number, \"inf\" or \"zero\")"
                ))),
            },
        }
    }
}

/// Ground-state population `p1 = ½(1 + tanh(ω0/T))` of the thermal state
/// for `H = ω0·σz`.
pub fn thermal_ground_population(omega0: f64, temperature: Temperature) -> f64 {
    match temperature {
        Temperature::Infinite => 0.5,
        Temperature::Zero => {
            if omega0 > 0.0 {
                1.0
            } else if omega0 < 0.0 {
                0.0
            } else {
                0.5
            }
        }
        Temperature::Finite(t) => 0.5 * (1.0 + (omega0 / t).tanh()),
    }
}

/// `ρ_th = p1|0⟩⟨0| + (1 − p1)|1⟩⟨1|` with `p1` from
/// [`thermal_ground_population`].
pub fn thermal_qubit(omega0: f64, temperature: Temperature) -> DensityMatrix {
    let p1 = thermal_ground_population(omega0, temperature);
    DensityMatrix(Mat2::diag(1.0 - p1, p1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn close(a: &Mat2, b: &Mat2, tol: f64) -> bool {
        (*a - *b).max_abs() <= tol
    }

    #[test]
    fn bloch_poles_and_equator() {
        let north = pure_from_bloch(BlochAngles::new(0.0, 0.0).unwrap());
        assert!(close(north.matrix(), &Mat2::diag(1.0, 0.0), 1e-15));
        let south = pure_from_bloch(BlochAngles::new(PI, 0.0).unwrap());
        assert!(close(south.matrix(), &Mat2::diag(0.0, 1.0), 1e-15));
        let plus = pure_from_bloch(BlochAngles::new(PI / 2.0, 0.0).unwrap());
        let half = C64::from(0.5);
        assert!(close(plus.matrix(), &Mat2::new(half, half, half, half), 1e-15));
    }

    #[test]
    fn angle_validation() {
        assert!(BlochAngles::new(-0.1, 0.0).is_err());
        assert!(BlochAngles::new(0.1, 2.0 * PI).is_err());
        let w = BlochAngles::wrapped(4.0, -1.0);
        assert_eq!(w.theta, PI);
        assert!((w.phi - (2.0 * PI - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn antipodal_pairs() {
        let (a, b) = antipodal_pair(BlochAngles::NORTH);
        assert!(close(a.matrix(), &Mat2::diag(1.0, 0.0), 1e-15));
        assert!(close(b.matrix(), &Mat2::diag(0.0, 1.0), 1e-15));

        let (a, b) = antipodal_pair(BlochAngles::new(PI / 2.0, PI).unwrap());
        assert!((*a.matrix() * *b.matrix()).max_abs() <= 1e-15);
        assert!(close(&(*a.matrix() + *b.matrix()), &Mat2::identity(), 1e-15));
        // the antipode helper addresses the same state
        let b2 = pure_from_bloch(BlochAngles::new(PI / 2.0, PI).unwrap().antipode());
        assert!(close(b.matrix(), b2.matrix(), 1e-15));
    }

    #[test]
    fn random_pure_and_antipodal_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let ang = BlochAngles::new(rng.random_range(0.0..=PI), rng.random_range(0.0..2.0 * PI))
                .unwrap();
            let (a, b) = antipodal_pair(ang);
            let e = a.eigen();
            assert!((e.values[0] - 1.0).abs() <= 1e-12 && e.values[1].abs() <= 1e-12);
            assert!((*a.matrix() * *b.matrix()).max_abs() <= 1e-12);
            assert!(close(&(*a.matrix() + *b.matrix()), &Mat2::identity(), 1e-12));
        }
    }

    #[test]
    fn thermal_limits() {
        let inf = thermal_qubit(1.0, Temperature::Infinite);
        assert_eq!(inf.rho22(), 0.5);
        let zero = thermal_qubit(1.0, Temperature::Zero);
        assert_eq!(*zero.matrix(), Mat2::diag(0.0, 1.0));
        let tiny = thermal_qubit(1.0, Temperature::finite(1e-300).unwrap());
        assert_eq!(tiny.rho22(), 1.0);
        // 0.5 * (1 + tanh 1), evaluated with mpmath at 30 digits
        let one = thermal_qubit(1.0, Temperature::finite(1.0).unwrap());
        assert!((one.rho22() - 0.8807970779778824).abs() < 1e-15);
        assert!(Temperature::finite(0.0).is_err());
        assert!(Temperature::finite(-2.0).is_err());
        assert!(Temperature::finite(f64::NAN).is_err());
    }

    #[test]
    fn thermal_population_decreases_with_temperature() {
        let mut prev = 1.0;
        for k in 1..200 {
            let t = 0.05 * k as f64;
            let p = thermal_ground_population(0.7, Temperature::finite(t).unwrap());
            assert!(p < prev, "p1 not strictly decreasing at T={t}");
            prev = p;
        }
    }

    #[test]
    fn eig_examples() {
        let e = eig_hermitian_2x2(&Mat2::identity()).unwrap();
        assert_eq!(e.values, [1.0, 1.0]);
        let e = eig_hermitian_2x2(&Mat2::diag(-0.3, 2.0)).unwrap();
        assert_eq!(e.values[0], 2.0);
        assert!((e.values[1] + 0.3).abs() < 1e-15);
        assert!(close(&e.reconstruct(), &Mat2::diag(-0.3, 2.0), 1e-15));
        let e = eig_hermitian_2x2(&Mat2::pauli_x()).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-15 && (e.values[1] + 1.0).abs() < 1e-15);
        let bad = Mat2::new(ONE, ONE, ZERO, ONE);
        assert!(matches!(eig_hermitian_2x2(&bad), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn eig_reconstructs_random_hermitian() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let a = rng.random_range(-1.0..1.0);
            let d = rng.random_range(-1.0..1.0);
            let b = C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            let m = Mat2::new(C64::from(a), b, b.conj(), C64::from(d));
            let e = eig_hermitian_2x2(&m).unwrap();
            assert!(e.values[0] >= e.values[1]);
            assert!(close(&e.reconstruct(), &m, 1e-12));
            let v = e.vectors;
            assert!(close(&(v.adjoint() * v), &Mat2::identity(), 1e-12));
        }
    }

    #[test]
    fn density_validation() {
        assert!(matches!(
            DensityMatrix::new(Mat2::diag(0.7, 0.2)),
            Err(Error::InvalidTrace(_))
        ));
        assert!(matches!(
            DensityMatrix::new(Mat2::diag(1.2, -0.2)),
            Err(Error::NotPositive(_))
        ));
        let skew = Mat2::new(C64::from(0.5), C64::new(0.1, 0.0), C64::new(0.2, 0.0), C64::from(0.5));
        assert!(matches!(DensityMatrix::new(skew), Err(Error::NotHermitian(_))));
        assert!(DensityMatrix::from_bloch_vector([0.0, 0.0, 1.0 + 1e-12]).is_ok());
        assert!(DensityMatrix::from_bloch_vector([0.6, 0.0, 0.9]).is_err());
    }

    #[test]
    fn temperature_json() {
        let t: Temperature = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(t, Temperature::Infinite);
        let t: Temperature = serde_json::from_str("2.5").unwrap();
        assert_eq!(t, Temperature::Finite(2.5));
        let t: Temperature = serde_json::from_str("\"zero\"").unwrap();
        assert_eq!(t, Temperature::Zero);
        assert!(serde_json::from_str::<Temperature>("0").is_err());
        assert_eq!(serde_json::to_string(&Temperature::Infinite).unwrap(), "\"inf\"");
    }
}
