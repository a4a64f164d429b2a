use thiserror::Error;

use crate::circuit::GateKind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },

    #[error("qubit index {index} out of range for {n} qubits")]
    QubitOutOfRange { index: usize, n: usize },

    #[error("gate {kind:?} has repeated qubit {qubit}")]
    RepeatedQubit { kind: GateKind, qubit: usize },

    #[error("gate {kind:?} expects {expected} qubits, got {got}")]
    Arity {
        kind: GateKind,
        expected: usize,
        got: usize,
    },

    #[error("gate {0:?} is not a Clifford gate")]
    NonClifford(GateKind),

    #[error("rotation tableau is not diagonal")]
    NonDiagonal,

    #[error("{n} qubits exceeds the simulation limit of {limit}")]
    TooManyQubits { n: usize, limit: usize },

    #[error("pauli string has an imaginary coefficient")]
    ImaginaryPhase,

    #[error("cannot parse pauli string {0:?}")]
    BadPauli(String),

    #[error(transparent)]
    Parse(#[from] crate::circuit::qasm::ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
