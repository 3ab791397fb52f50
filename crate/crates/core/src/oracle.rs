//! Brute-force reference for the central-spin model.
//!
//! Builds the qubit ⊗ boson Hamiltonian on Fock levels `0..=N+1` from its
//! operators, evolves `ρ0 ⊗ ρ_B` exactly and traces out the bath. Nothing
//! here reuses the closed-form kernels of [`crate::channels`].
//!
//! System basis index 0 is `|1⟩`, index 1 is `|0⟩`; the full index is
//! `q·(N+2) + n`.

use nalgebra::DMatrix;

use crate::channels::CentralSpinParams;
use crate::error::{Error, Result};
use crate::qstate::{eig_hermitian_2x2, DensityMatrix, Mat2, Temperature, C64};

pub const ORACLE_MAX_N: usize = 64;

const ZERO: C64 = C64::new(0.0, 0.0);

#[derive(Clone, Debug)]
pub struct TruncatedHamiltonian {
    pub params: CentralSpinParams,
    pub matrix: DMatrix<C64>,
}

/// Invariant subspace of the Hamiltonian: a coupled pair or a single level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    Pair(usize, usize),
    Single(usize),
}

impl TruncatedHamiltonian {
    fn fock(&self) -> usize {
        self.params.n + 2
    }

    pub fn dimension(&self) -> usize {
        2 * self.fock()
    }

    pub fn index(&self, excited: bool, n: usize) -> usize {
        if excited {
            n
        } else {
            self.fock() + n
        }
    }

    /// `{|1,m⟩, |0,m+1⟩}` for `m = 0..=N`, then `|0,0⟩` and `|1,N+1⟩`.
    pub fn blocks(&self) -> Vec<Block> {
        let n = self.params.n;
        let mut out: Vec<Block> = (0..=n)
            .map(|m| Block::Pair(self.index(true, m), self.index(false, m + 1)))
            .collect();
        out.push(Block::Single(self.index(false, 0)));
        out.push(Block::Single(self.index(true, n + 1)));
        out
    }

    fn block_of(&self) -> Vec<usize> {
        let mut id = vec![usize::MAX; self.dimension()];
        for (k, b) in self.blocks().iter().enumerate() {
            match *b {
                Block::Pair(i, j) => {
                    id[i] = k;
                    id[j] = k;
                }
                Block::Single(i) => id[i] = k,
            }
        }
        id
    }

    /// Unitary `exp(−iHt)` assembled from the 2×2 blocks.
    pub fn propagator(&self, t: f64) -> DMatrix<C64> {
        let h = &self.matrix;
        let mut u = DMatrix::from_element(self.dimension(), self.dimension(), ZERO);
        for b in self.blocks() {
            match b {
                Block::Single(i) => u[(i, i)] = C64::from_polar(1.0, -h[(i, i)].re * t),
                Block::Pair(i, j) => {
                    let m = Mat2::new(h[(i, i)], h[(i, j)], h[(j, i)], h[(j, j)]);
                    let e = eig_hermitian_2x2(&m).expect("Hermitian block");
                    let ub = e.vectors
                        * Mat2::new(
                            C64::from_polar(1.0, -e.values[0] * t),
                            ZERO,
                            ZERO,
                            C64::from_polar(1.0, -e.values[1] * t),
                        )
                        * e.vectors.adjoint();
                    let idx = [i, j];
                    for (a, &ra) in idx.iter().enumerate() {
                        for (c, &rc) in idx.iter().enumerate() {
                            u[(ra, rc)] = ub.0[a][c];
                        }
                    }
                }
            }
        }
        u
    }

    /// Eigenvalue gap of each pair block, in block order.
    pub fn block_gaps(&self) -> Vec<f64> {
        let h = &self.matrix;
        self.blocks()
            .into_iter()
            .filter_map(|b| match b {
                Block::Pair(i, j) => {
                    let m = Mat2::new(h[(i, i)], h[(i, j)], h[(j, i)], h[(j, j)]);
                    let e = eig_hermitian_2x2(&m).expect("Hermitian block");
                    Some(e.values[0] - e.values[1])
                }
                Block::Single(_) => None,
            })
            .collect()
    }
}

fn kron(a: &DMatrix<C64>, b: &DMatrix<C64>) -> DMatrix<C64> {
    a.kronecker(b)
}

fn real_diag(values: impl IntoIterator<Item = f64>) -> DMatrix<C64> {
    let v: Vec<C64> = values.into_iter().map(C64::from).collect();
    DMatrix::from_diagonal(&nalgebra::DVector::from_vec(v))
}

/// `H = ω0σz − ω(1 − b†b/N) + 2α[σ+·√(1 − b†b/2N)·b + h.c.] − zz·α√N·σz(1 − b†b/N)`.
pub fn build_hamiltonian(p: &CentralSpinParams) -> Result<TruncatedHamiltonian> {
    p.validate()?;
    if p.n > ORACLE_MAX_N {
        return Err(Error::OracleCapExceeded {
            n: p.n,
            cap: ORACLE_MAX_N,
        });
    }
    let nf = p.n as f64;
    let levels = p.n + 2;
    let one = C64::new(1.0, 0.0);

    let id_q = DMatrix::<C64>::identity(2, 2);
    let id_b = DMatrix::<C64>::identity(levels, levels);
    let sz = real_diag([1.0, -1.0]);
    let mut sp = DMatrix::from_element(2, 2, ZERO);
    sp[(0, 1)] = one;
    let mut b = DMatrix::from_element(levels, levels, ZERO);
    for n in 1..levels {
        b[(n - 1, n)] = C64::from((n as f64).sqrt());
    }
    let number = real_diag((0..levels).map(|n| n as f64));
    let sqrt_factor = real_diag((0..levels).map(|n| (1.0 - n as f64 / (2.0 * nf)).max(0.0).sqrt()));
    let bath_shape = &id_b - &number * C64::from(1.0 / nf);

    let coupling = kron(&sp, &(&sqrt_factor * &b));
    let mut h = kron(&sz, &id_b) * C64::from(p.omega0) - kron(&id_q, &bath_shape) * C64::from(p.omega)
        + (&coupling + coupling.adjoint()) * C64::from(2.0 * p.alpha);
    if p.include_zz {
        h -= kron(&sz, &bath_shape) * C64::from(p.alpha * nf.sqrt());
    }

    let ham = TruncatedHamiltonian {
        params: p.clone(),
        matrix: h,
    };
    let defect = (&ham.matrix - ham.matrix.adjoint()).camax();
    assert!(defect <= 1e-12, "Hamiltonian not Hermitian: {defect:e}");
    let id = ham.block_of();
    for i in 0..ham.dimension() {
        for j in 0..ham.dimension() {
            if id[i] != id[j] {
                assert!(
                    ham.matrix[(i, j)] == ZERO,
                    "entry ({i},{j}) couples different blocks"
                );
            }
        }
    }
    Ok(ham)
}

/// Thermal bath populations over Fock levels `0..=N`.
#[derive(Clone, Debug, PartialEq)]
pub struct BathEnsemble {
    pub weights: Vec<f64>,
}

impl BathEnsemble {
    pub fn new(p: &CentralSpinParams) -> Self {
        let levels = p.n + 1;
        let nf = p.n as f64;
        let energy = |n: usize| -p.omega * (1.0 - n as f64 / nf);
        let weights = match p.temperature {
            Temperature::Infinite => vec![1.0; levels],
            Temperature::Zero => {
                let lowest = (0..levels).map(energy).fold(f64::INFINITY, f64::min);
                (0..levels)
                    .map(|n| if energy(n) == lowest { 1.0 } else { 0.0 })
                    .collect()
            }
            Temperature::Finite(t) => {
                let lowest = (0..levels).map(energy).fold(f64::INFINITY, f64::min);
                (0..levels).map(|n| (-(energy(n) - lowest) / t).exp()).collect()
            }
        };
        let z: f64 = weights.iter().sum();
        BathEnsemble {
            weights: weights.into_iter().map(|w| w / z).collect(),
        }
    }
}

/// `Tr_B[e^{−iHt} (ρ0 ⊗ ρ_B) e^{iHt}]`.
pub fn oracle_evolve(p: &CentralSpinParams, rho0: &DensityMatrix, t: f64) -> Result<DensityMatrix> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::NegativeTime(t));
    }
    let ham = build_hamiltonian(p)?;
    let levels = p.n + 2;
    let bath = BathEnsemble::new(p);
    let rho_b = real_diag((0..levels).map(|n| bath.weights.get(n).copied().unwrap_or(0.0)));
    let m = rho0.matrix();
    let rho_s = DMatrix::from_row_slice(2, 2, &[m.0[0][0], m.0[0][1], m.0[1][0], m.0[1][1]]);

    let u = ham.propagator(t);
    let total = &u * kron(&rho_s, &rho_b) * u.adjoint();

    let mut reduced = [[ZERO; 2]; 2];
    for (a, row) in reduced.iter_mut().enumerate() {
        for (c, entry) in row.iter_mut().enumerate() {
            *entry = (0..levels).map(|n| total[(a * levels + n, c * levels + n)]).sum();
        }
    }
    let rho12 = 0.5 * (reduced[0][1] + reduced[1][0].conj());
    let tr = reduced[0][0].re + reduced[1][1].re;
    DensityMatrix::from_parts(reduced[0][0].re / tr, rho12 / tr)
}
