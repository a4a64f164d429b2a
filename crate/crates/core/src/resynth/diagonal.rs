//! Parity-network synthesis of diagonal rotation tableaux.

use crate::bits::BitVec;
use crate::circuit::{Circuit, Gate};
use crate::clifford::CliffordTableau;
use crate::error::{Error, Result};
use crate::rotation::PauliRotationTableau;

/// A synthesized circuit plus the Clifford still owed after it:
/// `unitary(input) = deferred · unitary(circuit)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthesisOutcome {
    pub circuit: Circuit,
    pub deferred: CliffordTableau,
}

/// Phase gates realizing `diag(1, e^{ikπ/4})` on `q`, up to global phase.
pub(crate) fn phase_gates(k: u8, q: usize) -> Vec<Gate> {
    match k % 8 {
        0 => vec![],
        1 => vec![Gate::t(q)],
        2 => vec![Gate::s(q)],
        3 => vec![Gate::s(q), Gate::t(q)],
        4 => vec![Gate::z(q)],
        5 => vec![Gate::z(q), Gate::t(q)],
        6 => vec![Gate::sdg(q)],
        _ => vec![Gate::tdg(q)],
    }
}

/// Wire parities of a CX network together with the inverse matrix, so the
/// expansion of a target parity over current wires is one row-XOR pass.
struct ParityState {
    wires: Vec<BitVec>,
    inv_rows: Vec<BitVec>,
}

impl ParityState {
    fn new(n: usize) -> Self {
        let unit: Vec<BitVec> = (0..n).map(|i| BitVec::unit(n, i)).collect();
        ParityState {
            wires: unit.clone(),
            inv_rows: unit,
        }
    }

    fn expansion(&self, z: &BitVec) -> BitVec {
        let mut c = BitVec::zeros(z.len());
        for i in z.iter_ones() {
            c.xor_assign(&self.inv_rows[i]);
        }
        c
    }

    fn cx(&mut self, control: usize, target: usize) {
        let src = self.wires[control].clone();
        self.wires[target].xor_assign(&src);
        for row in &mut self.inv_rows {
            if row.get(target) {
                row.flip(control);
            }
        }
    }
}

/// Columns are processed in order; each target parity is built on the
/// wire (among those in its expansion) whose current parity is closest in
/// Hamming distance, ties to the lowest index. No uncompute is emitted: the
/// accumulated CX network comes back as the deferred tableau.
pub fn synth_diagonal_prt(s: &PauliRotationTableau) -> Result<SynthesisOutcome> {
    if !s.is_diagonal() {
        return Err(Error::NonDiagonal);
    }
    let n = s.num_qubits();
    let mut state = ParityState::new(n);
    let mut circuit = Circuit::new(n);
    let mut network = CliffordTableau::identity(n);
    for col in s.columns() {
        let z = col.pauli().z();
        if col.phase_k() == 0 || z.is_zero() {
            continue;
        }
        let support = state.expansion(z);
        let pivot = support
            .iter_ones()
            .min_by_key(|&w| (state.wires[w].hamming(z), w))
            .expect("nonzero parity has nonempty expansion");
        for w in support.iter_ones().filter(|&w| w != pivot) {
            state.cx(w, pivot);
            network.append_cx(w, pivot);
            circuit.push_unchecked(Gate::cx(w, pivot));
        }
        debug_assert_eq!(&state.wires[pivot], z);
        for g in phase_gates(col.phase_k(), pivot) {
            circuit.push_unchecked(g);
        }
    }
    Ok(SynthesisOutcome {
        circuit,
        deferred: network.inverse(),
    })
}
