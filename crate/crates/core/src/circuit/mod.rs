//! Gate-level Clifford+T circuits.

pub mod qasm;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GateKind {
    H,
    S,
    Sdg,
    X,
    Y,
    Z,
    T,
    Tdg,
    CX,
    CZ,
}

impl GateKind {
    pub const ALL: [GateKind; 10] = [
        GateKind::H,
        GateKind::S,
        GateKind::Sdg,
        GateKind::X,
        GateKind::Y,
        GateKind::Z,
        GateKind::T,
        GateKind::Tdg,
        GateKind::CX,
        GateKind::CZ,
    ];

    pub fn arity(self) -> usize {
        match self {
            GateKind::CX | GateKind::CZ => 2,
            _ => 1,
        }
    }

    pub fn is_clifford(self) -> bool {
        !matches!(self, GateKind::T | GateKind::Tdg)
    }

    /// Rotation angle in units of π/4 for the diagonal phase gates
    /// (`P(kπ/4) = diag(1, e^{ikπ/4})`), `None` for everything else.
    pub fn phase_k(self) -> Option<u8> {
        match self {
            GateKind::T => Some(1),
            GateKind::S => Some(2),
            GateKind::Z => Some(4),
            GateKind::Sdg => Some(6),
            GateKind::Tdg => Some(7),
            _ => None,
        }
    }

    pub fn qasm_name(self) -> &'static str {
        match self {
            GateKind::H => "h",
            GateKind::S => "s",
            GateKind::Sdg => "sdg",
            GateKind::X => "x",
            GateKind::Y => "y",
            GateKind::Z => "z",
            GateKind::T => "t",
            GateKind::Tdg => "tdg",
            GateKind::CX => "cx",
            GateKind::CZ => "cz",
        }
    }

    pub fn inverse(self) -> GateKind {
        match self {
            GateKind::S => GateKind::Sdg,
            GateKind::Sdg => GateKind::S,
            GateKind::T => GateKind::Tdg,
            GateKind::Tdg => GateKind::T,
            k => k,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gate {
    kind: GateKind,
    qubits: [usize; 2],
}

impl Gate {
    pub fn new(kind: GateKind, qubits: &[usize]) -> Result<Gate> {
        if qubits.len() != kind.arity() {
            return Err(Error::Arity {
                kind,
                expected: kind.arity(),
                got: qubits.len(),
            });
        }
        if qubits.len() == 2 && qubits[0] == qubits[1] {
            return Err(Error::RepeatedQubit {
                kind,
                qubit: qubits[0],
            });
        }
        let mut q = [0; 2];
        q[..qubits.len()].copy_from_slice(qubits);
        Ok(Gate { kind, qubits: q })
    }

    fn one(kind: GateKind, q: usize) -> Gate {
        Gate {
            kind,
            qubits: [q, 0],
        }
    }

    fn two(kind: GateKind, a: usize, b: usize) -> Gate {
        assert_ne!(a, b, "two-qubit gate on a single qubit");
        Gate {
            kind,
            qubits: [a, b],
        }
    }

    pub fn h(q: usize) -> Gate {
        Gate::one(GateKind::H, q)
    }
    pub fn s(q: usize) -> Gate {
        Gate::one(GateKind::S, q)
    }
    pub fn sdg(q: usize) -> Gate {
        Gate::one(GateKind::Sdg, q)
    }
    pub fn x(q: usize) -> Gate {
        Gate::one(GateKind::X, q)
    }
    pub fn y(q: usize) -> Gate {
        Gate::one(GateKind::Y, q)
    }
    pub fn z(q: usize) -> Gate {
        Gate::one(GateKind::Z, q)
    }
    pub fn t(q: usize) -> Gate {
        Gate::one(GateKind::T, q)
    }
    pub fn tdg(q: usize) -> Gate {
        Gate::one(GateKind::Tdg, q)
    }
    pub fn cx(control: usize, target: usize) -> Gate {
        Gate::two(GateKind::CX, control, target)
    }
    pub fn cz(a: usize, b: usize) -> Gate {
        Gate::two(GateKind::CZ, a, b)
    }

    #[inline]
    pub fn kind(&self) -> GateKind {
        self.kind
    }

    #[inline]
    pub fn qubits(&self) -> &[usize] {
        &self.qubits[..self.kind.arity()]
    }

    #[inline]
    pub fn is_two_qubit(&self) -> bool {
        self.kind.arity() == 2
    }

    pub fn inverse(&self) -> Gate {
        Gate {
            kind: self.kind.inverse(),
            qubits: self.qubits,
        }
    }
}

impl fmt::Debug for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.qubits() {
            [q] => write!(f, "{:?}({q})", self.kind),
            [a, b] => write!(f, "{:?}({a},{b})", self.kind),
            _ => unreachable!(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metrics {
    pub t_count: usize,
    pub twoq_count: usize,
    pub h_count: usize,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    n: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n: usize) -> Circuit {
        Circuit {
            n,
            gates: Vec::new(),
        }
    }

    pub fn from_gates(n: usize, gates: impl IntoIterator<Item = Gate>) -> Result<Circuit> {
        let mut c = Circuit::new(n);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        if let Some(&q) = gate.qubits().iter().find(|&&q| q >= self.n) {
            return Err(Error::QubitOutOfRange {
                index: q,
                n: self.n,
            });
        }
        self.gates.push(gate);
        Ok(())
    }

    /// Appends all gates of `other`, which must act on the same register.
    pub fn extend(&mut self, other: &Circuit) -> Result<()> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    pub(crate) fn push_unchecked(&mut self, gate: Gate) {
        debug_assert!(gate.qubits().iter().all(|&q| q < self.n));
        self.gates.push(gate);
    }

    pub fn is_clifford(&self) -> bool {
        self.gates.iter().all(|g| g.kind().is_clifford())
    }

    pub fn inverse(&self) -> Circuit {
        Circuit {
            n: self.n,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
        }
    }

    pub fn metrics(&self) -> Metrics {
        count_gates(self)
    }
}

pub fn count_gates(c: &Circuit) -> Metrics {
    let mut m = Metrics {
        total: c.len(),
        ..Metrics::default()
    };
    for g in c.gates() {
        match g.kind() {
            GateKind::T | GateKind::Tdg => m.t_count += 1,
            GateKind::CX | GateKind::CZ => m.twoq_count += 1,
            GateKind::H => m.h_count += 1,
            _ => {}
        }
    }
    m
}
