//! Tableau-based Clifford+T optimization.
//!
//! A circuit is partitioned into alternating diagonal Pauli rotation
//! tableaux and Clifford tableaux, phases are folded to cut the T-count,
//! and a circuit is extracted again either eagerly (every tableau
//! synthesized in place) or lazily (Clifford synthesis deferred and
//! merged forward, one full Clifford at the end).
//!
//! ```
//! use lazy_qco::{optimize, Circuit, Gate, Strategy};
//!
//! let c = Circuit::from_gates(2, [Gate::cx(0, 1), Gate::t(1), Gate::t(1)]).unwrap();
//! let out = optimize(&c, Strategy::Lazy).unwrap();
//! assert_eq!(out.metrics().t_count, 0);
//! ```

pub mod bench;
pub mod bits;
pub mod circuit;
pub mod clifford;
pub mod error;
pub mod pauli;
pub mod pipeline;
pub mod resynth;
pub mod rotation;
pub mod verify;

pub use bits::BitVec;
pub use circuit::qasm::{parse_qasm, write_qasm, ParseError};
pub use circuit::{count_gates, Circuit, Gate, GateKind, Metrics};
pub use clifford::{CliffordTableau, Side};
pub use error::{Error, Result};
pub use pauli::PauliString;
pub use pipeline::{Pipeline, PipelineStats, Segment};
pub use resynth::{optimize, Strategy};
pub use rotation::{
    FoldResult, PauliRotationTableau, PhaseFolding, RotationColumn, TCountOptimizer,
};
