//! Equivalence checking at desk scale: dense unitaries, sampled product
//! states, and exact tableau comparison for Clifford circuits.

use nalgebra::{Complex, DMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::{Circuit, Gate, GateKind};
use crate::clifford::CliffordTableau;
use crate::error::{Error, Result};

pub type Complex64 = Complex<f64>;

pub const DENSE_LIMIT: usize = 10;
pub const SAMPLED_LIMIT: usize = 14;
pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_TRIALS: usize = 20;
pub const DEFAULT_SEED: u64 = 0x5eed;

const C0: Complex64 = Complex64::new(0.0, 0.0);
const C1: Complex64 = Complex64::new(1.0, 0.0);

fn single_qubit_matrix(kind: GateKind) -> [[Complex64; 2]; 2] {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let i = Complex64::new(0.0, 1.0);
    let w = Complex64::new(r, r);
    match kind {
        GateKind::H => [[C1 * r, C1 * r], [C1 * r, -C1 * r]],
        GateKind::S => [[C1, C0], [C0, i]],
        GateKind::Sdg => [[C1, C0], [C0, -i]],
        GateKind::X => [[C0, C1], [C1, C0]],
        GateKind::Y => [[C0, -i], [i, C0]],
        GateKind::Z => [[C1, C0], [C0, -C1]],
        GateKind::T => [[C1, C0], [C0, w]],
        GateKind::Tdg => [[C1, C0], [C0, w.conj()]],
        GateKind::CX | GateKind::CZ => unreachable!("two-qubit gate"),
    }
}

/// Applies `g` in place; qubit `q` is bit `q` of the amplitude index.
pub fn apply_gate(state: &mut [Complex64], g: &Gate) {
    let qs = g.qubits();
    match g.kind() {
        GateKind::CX => {
            let (c, t) = (1usize << qs[0], 1usize << qs[1]);
            for i in 0..state.len() {
                if i & c != 0 && i & t == 0 {
                    state.swap(i, i | t);
                }
            }
        }
        GateKind::CZ => {
            let m = (1usize << qs[0]) | (1usize << qs[1]);
            for (i, a) in state.iter_mut().enumerate() {
                if i & m == m {
                    *a = -*a;
                }
            }
        }
        k => {
            let u = single_qubit_matrix(k);
            let b = 1usize << qs[0];
            for i in 0..state.len() {
                if i & b == 0 {
                    let (a0, a1) = (state[i], state[i | b]);
                    state[i] = u[0][0] * a0 + u[0][1] * a1;
                    state[i | b] = u[1][0] * a0 + u[1][1] * a1;
                }
            }
        }
    }
}

pub fn simulate(c: &Circuit, state: &mut [Complex64]) {
    debug_assert_eq!(state.len(), 1 << c.num_qubits());
    for g in c.gates() {
        apply_gate(state, g);
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DenseUnitary {
    n: usize,
    matrix: DMatrix<Complex64>,
}

impl DenseUnitary {
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.matrix
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        let p = self.matrix.adjoint() * &self.matrix;
        let id = DMatrix::<Complex64>::identity(self.dim(), self.dim());
        (p - id).iter().all(|z| z.norm() <= tol)
    }
}

pub fn unitary_of(c: &Circuit) -> Result<DenseUnitary> {
    let n = c.num_qubits();
    if n > DENSE_LIMIT {
        return Err(Error::TooManyQubits {
            n,
            limit: DENSE_LIMIT,
        });
    }
    let dim = 1usize << n;
    let mut matrix = DMatrix::<Complex64>::identity(dim, dim);
    for j in 0..dim {
        let col = matrix.column_mut(j);
        simulate(c, col.data.into_slice_mut());
    }
    Ok(DenseUnitary { n, matrix })
}

fn check_dims(a: &Circuit, b: &Circuit) -> Result<()> {
    if a.num_qubits() != b.num_qubits() {
        return Err(Error::DimensionMismatch {
            left: a.num_qubits(),
            right: b.num_qubits(),
        });
    }
    Ok(())
}

/// True iff `ua = e^{iφ}·ub` entrywise within `tol` for some φ.
pub fn unitaries_equal_up_to_phase(
    ua: &DMatrix<Complex64>,
    ub: &DMatrix<Complex64>,
    tol: f64,
) -> bool {
    if ua.shape() != ub.shape() {
        return false;
    }
    // phase from the largest entry of ua† ub
    let p = ua.adjoint() * ub;
    let Some(big) = p
        .iter()
        .copied()
        .max_by(|x, y| x.norm().total_cmp(&y.norm()))
    else {
        return true;
    };
    if big.norm() == 0.0 {
        return false;
    }
    let phase = big / big.norm();
    ua.iter()
        .zip(ub.iter())
        .all(|(x, y)| (x * phase - y).norm() <= tol)
}

pub fn equivalent_dense(a: &Circuit, b: &Circuit, tol: f64) -> Result<bool> {
    check_dims(a, b)?;
    let ua = unitary_of(a)?;
    let ub = unitary_of(b)?;
    Ok(unitaries_equal_up_to_phase(&ua.matrix, &ub.matrix, tol))
}

fn random_product_state(n: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    let mut state = vec![C1];
    for _ in 0..n {
        // uniform on the Bloch sphere
        let cos_t: f64 = rng.gen_range(-1.0..=1.0);
        let half = cos_t.acos() / 2.0;
        let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let a0 = Complex64::new(half.cos(), 0.0);
        let a1 = Complex64::from_polar(half.sin(), phi);
        // new qubit is the next high bit
        let mut next = Vec::with_capacity(state.len() * 2);
        next.extend(state.iter().map(|s| s * a0));
        next.extend(state.iter().map(|s| s * a1));
        state = next;
    }
    state
}

pub fn equivalent_sampled_seeded(
    a: &Circuit,
    b: &Circuit,
    trials: usize,
    tol: f64,
    seed: u64,
) -> Result<bool> {
    check_dims(a, b)?;
    let n = a.num_qubits();
    if n > SAMPLED_LIMIT {
        return Err(Error::TooManyQubits {
            n,
            limit: SAMPLED_LIMIT,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let psi = random_product_state(n, &mut rng);
        let mut sa = psi.clone();
        let mut sb = psi;
        simulate(a, &mut sa);
        simulate(b, &mut sb);
        let overlap: Complex64 = sa.iter().zip(&sb).map(|(x, y)| x.conj() * y).sum();
        if overlap.norm() < 1.0 - tol {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn equivalent_sampled(a: &Circuit, b: &Circuit, trials: usize, tol: f64) -> Result<bool> {
    equivalent_sampled_seeded(a, b, trials, tol, DEFAULT_SEED)
}

pub fn equivalent_clifford(a: &Circuit, b: &Circuit) -> Result<bool> {
    check_dims(a, b)?;
    Ok(CliffordTableau::from_circuit(a)? == CliffordTableau::from_circuit(b)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Clifford,
    Dense,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equivalent(Method),
    NotEquivalent(Method),
    Unverifiable,
}

impl Verdict {
    pub fn is_equivalent(self) -> bool {
        matches!(self, Verdict::Equivalent(_))
    }
}

/// Picks the cheapest sound check for the pair: tableaux when both are
/// Clifford, dense up to six qubits, sampled up to the simulation limit.
pub fn check_auto(a: &Circuit, b: &Circuit, seed: u64) -> Result<Verdict> {
    check_dims(a, b)?;
    let n = a.num_qubits();
    let (method, ok) = if a.is_clifford() && b.is_clifford() {
        (Method::Clifford, equivalent_clifford(a, b)?)
    } else if n <= 6 {
        (Method::Dense, equivalent_dense(a, b, DEFAULT_TOL)?)
    } else if n <= SAMPLED_LIMIT {
        let ok = equivalent_sampled_seeded(a, b, DEFAULT_TRIALS, DEFAULT_TOL, seed)?;
        (Method::Sampled, ok)
    } else {
        return Ok(Verdict::Unverifiable);
    };
    Ok(if ok {
        Verdict::Equivalent(method)
    } else {
        Verdict::NotEquivalent(method)
    })
}
