//! Pauli rotation tableaux with angles quantized to multiples of π/4.
//!
//! A column `(P, k)` is the rotation `R_P(kπ/4) = exp(-i·kπ/8·P)`. Stored
//! Pauli strings always carry a positive sign: `R_{-P}(θ) = R_P(-θ)`, so a
//! negative sign is absorbed into the angle.

use std::collections::HashMap;
use std::fmt;

use crate::bits::BitVec;
use crate::circuit::Gate;
use crate::clifford::CliffordTableau;
use crate::error::{Error, Result};
use crate::pauli::PauliString;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RotationColumn {
    pauli: PauliString,
    phase_k: u8,
}

impl RotationColumn {
    pub fn new(pauli: PauliString, phase_k: i64) -> Self {
        let k = phase_k.rem_euclid(8) as u8;
        if pauli.sign() {
            RotationColumn {
                pauli: pauli.with_sign(false),
                phase_k: (8 - k) % 8,
            }
        } else {
            RotationColumn { pauli, phase_k: k }
        }
    }

    #[inline]
    pub fn pauli(&self) -> &PauliString {
        &self.pauli
    }

    #[inline]
    pub fn phase_k(&self) -> u8 {
        self.phase_k
    }

    /// Odd multiples of π/4 are the non-Clifford rotations.
    pub fn is_t_like(&self) -> bool {
        self.phase_k % 2 == 1
    }
}

impl fmt::Debug for RotationColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {}·π/4", self.pauli, self.phase_k)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct PauliRotationTableau {
    n: usize,
    columns: Vec<RotationColumn>,
}

impl PauliRotationTableau {
    pub fn new(n: usize) -> Self {
        PauliRotationTableau {
            n,
            columns: Vec::new(),
        }
    }

    pub fn from_columns(n: usize, columns: Vec<RotationColumn>) -> Result<Self> {
        let mut s = Self::new(n);
        for c in columns {
            s.push(c)?;
        }
        Ok(s)
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn columns(&self) -> &[RotationColumn] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn push(&mut self, column: RotationColumn) -> Result<()> {
        if column.pauli.num_qubits() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: column.pauli.num_qubits(),
            });
        }
        self.columns.push(column);
        Ok(())
    }

    pub fn is_diagonal(&self) -> bool {
        self.columns.iter().all(|c| c.pauli.is_diagonal())
    }

    pub fn t_count(&self) -> usize {
        self.columns.iter().filter(|c| c.is_t_like()).count()
    }

    /// Replaces every column `P` by `U P U†`; the circuit "rotations, then
    /// `t`" equals "`t`, then the returned rotations".
    pub fn conjugate_by(&self, t: &CliffordTableau) -> Result<Self> {
        if t.num_qubits() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: t.num_qubits(),
            });
        }
        let columns = self
            .columns
            .iter()
            .map(|c| RotationColumn::new(t.conjugate_unchecked(&c.pauli), c.phase_k as i64))
            .collect();
        Ok(PauliRotationTableau { n: self.n, columns })
    }

    /// Phase folding with the default optimizer.
    pub fn fold_phases(&self) -> Result<FoldResult> {
        PhaseFolding.optimize(self)
    }
}

impl fmt::Display for PauliRotationTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.columns {
            writeln!(f, "{:?}", c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliRotationTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Output of a T-count optimizer: a diagonal tableau plus a diagonal
/// Clifford residue with `unitary(input) = residue · unitary(prt)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldResult {
    pub prt: PauliRotationTableau,
    pub residue: CliffordTableau,
}

/// Replacement point for stronger T-count optimizers. Implementations take a
/// diagonal tableau and must preserve its unitary up to global phase.
pub trait TCountOptimizer {
    fn optimize(&self, prt: &PauliRotationTableau) -> Result<FoldResult>;
}

/// Merges rotations with equal parity and moves even-angle leftovers into
/// a Clifford residue.
#[derive(Debug, Clone, Copy, Default)]
pub struct PhaseFolding;

impl TCountOptimizer for PhaseFolding {
    fn optimize(&self, prt: &PauliRotationTableau) -> Result<FoldResult> {
        if !prt.is_diagonal() {
            return Err(Error::NonDiagonal);
        }
        let n = prt.n;
        let mut slot: HashMap<&BitVec, usize> = HashMap::new();
        let mut merged: Vec<(&BitVec, u8)> = Vec::new();
        for c in &prt.columns {
            let z = c.pauli.z();
            match slot.get(z) {
                Some(&i) => merged[i].1 = (merged[i].1 + c.phase_k) % 8,
                None => {
                    slot.insert(z, merged.len());
                    merged.push((z, c.phase_k));
                }
            }
        }
        let mut out = PauliRotationTableau::new(n);
        let mut residue = CliffordTableau::identity(n);
        for (z, k) in merged {
            if k == 0 || z.is_zero() {
                // identity-axis rotations are a global phase
                continue;
            }
            if k % 2 == 1 {
                out.columns.push(RotationColumn::new(
                    PauliString::from_z(z.clone()),
                    k as i64,
                ));
            } else {
                append_diagonal_clifford(&mut residue, z, k / 2);
            }
        }
        Ok(FoldResult { prt: out, residue })
    }
}

/// Appends `S^m` on the parity `z` (CX ladder onto a pivot, phase, unladder).
pub(crate) fn append_diagonal_clifford(t: &mut CliffordTableau, z: &BitVec, m: u8) {
    let pivot = z.first_one().expect("nonzero parity");
    let ladder: Vec<Gate> = z
        .iter_ones()
        .filter(|&q| q != pivot)
        .map(|q| Gate::cx(q, pivot))
        .collect();
    for g in &ladder {
        t.append_gate(g);
    }
    for _ in 0..m % 4 {
        t.append_s(pivot);
    }
    for g in ladder.iter().rev() {
        t.append_gate(g);
    }
}
