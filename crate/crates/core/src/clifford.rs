//! Clifford tableaux stored as the images of the Pauli generators.
//!
//! Column `i < n` holds `U X_i U†` and column `n + i` holds `U Z_i U†`.
//! Appending a gate conjugates every column (the row operations on the
//! z/x rows); prepending a gate recombines columns.

use std::fmt;

use crate::circuit::{Circuit, Gate, GateKind};
use crate::error::{Error, Result};
use crate::pauli::PauliString;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The gate acts before the tableau in circuit order.
    Prepend,
    /// The gate acts after the tableau in circuit order.
    Append,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CliffordTableau {
    n: usize,
    columns: Vec<PauliString>,
}

impl CliffordTableau {
    pub fn identity(n: usize) -> Self {
        let mut columns = Vec::with_capacity(2 * n);
        for i in 0..n {
            columns.push(PauliString::single_x(n, i).expect("in range"));
        }
        for i in 0..n {
            columns.push(PauliString::single_z(n, i).expect("in range"));
        }
        CliffordTableau { n, columns }
    }

    /// Builds a tableau from generator images; checks the symplectic
    /// commutation pattern.
    pub fn from_images(x_images: Vec<PauliString>, z_images: Vec<PauliString>) -> Option<Self> {
        let n = x_images.len();
        if z_images.len() != n
            || x_images
                .iter()
                .chain(&z_images)
                .any(|p| p.num_qubits() != n)
        {
            return None;
        }
        let mut columns = x_images;
        columns.extend(z_images);
        let t = CliffordTableau { n, columns };
        t.is_symplectic().then_some(t)
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn x_image(&self, q: usize) -> &PauliString {
        &self.columns[q]
    }

    #[inline]
    pub fn z_image(&self, q: usize) -> &PauliString {
        &self.columns[self.n + q]
    }

    pub fn columns(&self) -> &[PauliString] {
        &self.columns
    }

    pub fn is_identity(&self) -> bool {
        *self == CliffordTableau::identity(self.n)
    }

    /// Image of `X_i` anticommutes with image of `Z_i`; every other pair commutes.
    pub fn is_symplectic(&self) -> bool {
        let n = self.n;
        for a in 0..2 * n {
            for b in a + 1..2 * n {
                let expect = !(b == a + n && a < n);
                if self.columns[a].commutes_unchecked(&self.columns[b]) != expect {
                    return false;
                }
            }
        }
        true
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: n,
            });
        }
        Ok(())
    }

    fn check_gate(&self, g: &Gate) -> Result<()> {
        if !g.kind().is_clifford() {
            return Err(Error::NonClifford(g.kind()));
        }
        if let Some(&q) = g.qubits().iter().find(|&&q| q >= self.n) {
            return Err(Error::QubitOutOfRange {
                index: q,
                n: self.n,
            });
        }
        Ok(())
    }

    pub fn apply_gate(&mut self, g: &Gate, side: Side) -> Result<()> {
        self.check_gate(g)?;
        match side {
            Side::Append => self.append_gate(g),
            Side::Prepend => self.prepend_gate(g),
        }
        Ok(())
    }

    pub fn with_gate(mut self, g: &Gate, side: Side) -> Result<Self> {
        self.apply_gate(g, side)?;
        Ok(self)
    }

    // -- append: row operations --

    pub(crate) fn append_h(&mut self, q: usize) {
        self.columns.iter_mut().for_each(|c| c.conj_h(q));
    }

    pub(crate) fn append_s(&mut self, q: usize) {
        self.columns.iter_mut().for_each(|c| c.conj_s(q));
    }

    pub(crate) fn append_cx(&mut self, c: usize, t: usize) {
        self.columns.iter_mut().for_each(|p| p.conj_cx(c, t));
    }

    pub(crate) fn append_gate(&mut self, g: &Gate) {
        let q = g.qubits();
        match g.kind() {
            GateKind::H => self.append_h(q[0]),
            GateKind::S => self.append_s(q[0]),
            GateKind::Sdg => {
                self.append_s(q[0]);
                self.append_s(q[0]);
                self.append_s(q[0]);
            }
            GateKind::Z => {
                self.append_s(q[0]);
                self.append_s(q[0]);
            }
            GateKind::X => {
                self.append_h(q[0]);
                self.append_gate(&Gate::z(q[0]));
                self.append_h(q[0]);
            }
            GateKind::Y => {
                self.append_gate(&Gate::x(q[0]));
                self.append_gate(&Gate::z(q[0]));
            }
            GateKind::CX => self.append_cx(q[0], q[1]),
            GateKind::CZ => {
                self.append_h(q[1]);
                self.append_cx(q[0], q[1]);
                self.append_h(q[1]);
            }
            GateKind::T | GateKind::Tdg => unreachable!("checked by caller"),
        }
    }

    // -- prepend: column operations --

    pub(crate) fn prepend_h(&mut self, q: usize) {
        self.columns.swap(q, self.n + q);
    }

    pub(crate) fn prepend_s(&mut self, q: usize) {
        // S X S† = Y = i·X·Z
        let z = self.columns[self.n + q].clone();
        let x = &mut self.columns[q];
        let k = x.mul_assign_phase(&z) + 1;
        debug_assert!(k.is_multiple_of(2));
        x.set_sign(k % 4 == 2);
    }

    pub(crate) fn prepend_cx(&mut self, c: usize, t: usize) {
        let xt = self.columns[t].clone();
        self.columns[c].mul_assign_hermitian(&xt);
        let zc = self.columns[self.n + c].clone();
        self.columns[self.n + t].mul_assign_hermitian(&zc);
    }

    pub(crate) fn prepend_gate(&mut self, g: &Gate) {
        let q = g.qubits();
        match g.kind() {
            GateKind::H => self.prepend_h(q[0]),
            GateKind::S => self.prepend_s(q[0]),
            GateKind::Sdg => {
                self.prepend_s(q[0]);
                self.prepend_s(q[0]);
                self.prepend_s(q[0]);
            }
            GateKind::Z => {
                self.prepend_s(q[0]);
                self.prepend_s(q[0]);
            }
            GateKind::X => {
                self.prepend_h(q[0]);
                self.prepend_gate(&Gate::z(q[0]));
                self.prepend_h(q[0]);
            }
            GateKind::Y => {
                self.prepend_gate(&Gate::z(q[0]));
                self.prepend_gate(&Gate::x(q[0]));
            }
            GateKind::CX => self.prepend_cx(q[0], q[1]),
            GateKind::CZ => {
                self.prepend_h(q[1]);
                self.prepend_cx(q[0], q[1]);
                self.prepend_h(q[1]);
            }
            GateKind::T | GateKind::Tdg => unreachable!("checked by caller"),
        }
    }

    /// `U P U†` for the unitary `U` this tableau represents.
    pub fn conjugate(&self, p: &PauliString) -> Result<PauliString> {
        self.check_dim(p.num_qubits())?;
        Ok(self.conjugate_unchecked(p))
    }

    pub(crate) fn conjugate_unchecked(&self, p: &PauliString) -> PauliString {
        // P = (-1)^r i^{|x∧z|} X^x Z^z
        let n = self.n;
        let mut acc = PauliString::identity(n);
        let mut k = 2 * p.sign() as u32;
        for q in p.x().iter_ones() {
            k += acc.mul_assign_phase(&self.columns[q]) as u32;
            acc.set_sign(false);
        }
        for q in p.z().iter_ones() {
            k += acc.mul_assign_phase(&self.columns[n + q]) as u32;
            acc.set_sign(false);
        }
        let ys: usize = p
            .x()
            .words()
            .iter()
            .zip(p.z().words())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum();
        k += ys as u32;
        debug_assert!(k.is_multiple_of(2), "conjugate left the real Pauli group");
        acc.set_sign(k % 4 == 2);
        acc
    }

    /// Tableau of `first` followed by `second` in circuit order.
    pub fn compose(first: &CliffordTableau, second: &CliffordTableau) -> Result<CliffordTableau> {
        first.check_dim(second.n)?;
        Ok(CliffordTableau {
            n: first.n,
            columns: first
                .columns
                .iter()
                .map(|c| second.conjugate_unchecked(c))
                .collect(),
        })
    }

    pub fn then(&self, next: &CliffordTableau) -> CliffordTableau {
        CliffordTableau::compose(self, next).expect("dimension mismatch in composition")
    }

    pub fn inverse(&self) -> CliffordTableau {
        let n = self.n;
        // binary part: M^{-1} = Ω Mᵀ Ω; signs fixed by conjugating back
        let mut columns = Vec::with_capacity(2 * n);
        for j in 0..2 * n {
            let (gen_row_z, i) = if j < n { (true, j) } else { (false, j - n) };
            let mut p = PauliString::identity(n);
            for k in 0..n {
                let from_z = &self.columns[n + k];
                let from_x = &self.columns[k];
                let (bx, bz) = if gen_row_z {
                    (from_z.z().get(i), from_x.z().get(i))
                } else {
                    (from_z.x().get(i), from_x.x().get(i))
                };
                p.x_mut().set(k, bx);
                p.z_mut().set(k, bz);
            }
            columns.push(p);
        }
        for (j, col) in columns.iter_mut().enumerate() {
            let back = self.conjugate_unchecked(col);
            debug_assert!({
                let gen = if j < n {
                    PauliString::single_x(n, j).unwrap()
                } else {
                    PauliString::single_z(n, j - n).unwrap()
                };
                back.clone().with_sign(false) == gen
            });
            if back.sign() {
                col.negate();
            }
        }
        CliffordTableau { n, columns }
    }

    pub fn from_circuit(c: &Circuit) -> Result<CliffordTableau> {
        let mut t = CliffordTableau::identity(c.num_qubits());
        for g in c.gates() {
            t.apply_gate(g, Side::Append)?;
        }
        Ok(t)
    }

    /// Maps every diagonal Pauli to a diagonal Pauli, i.e. is implementable
    /// without Hadamards.
    pub fn is_hfree(&self) -> bool {
        (0..self.n).all(|q| self.z_image(q).is_diagonal())
    }
}

impl fmt::Display for CliffordTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.n {
            writeln!(f, "X_{q} ↦ {}", self.x_image(q))?;
        }
        for q in 0..self.n {
            writeln!(f, "Z_{q} ↦ {}", self.z_image(q))?;
        }
        Ok(())
    }
}

impl fmt::Debug for CliffordTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
