//! Circuit extraction from a segmented pipeline.
//!
//! The eager strategy synthesizes every tableau on the spot. The lazy
//! strategy keeps a carried Clifford `D`: parity-network uncomputes are
//! merged into the next Clifford, only the H-free prefix and the Hadamard
//! layer of that merge are emitted, and the H-free remainder is pushed
//! through the following rotation tableau. One full Clifford synthesis
//! happens at the very end.

mod clifford;
mod diagonal;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use clifford::{synth_clifford_full, synth_hfree, synth_hfree_split, HFreeSplit};
pub use diagonal::{synth_diagonal_prt, SynthesisOutcome};

use crate::circuit::{Circuit, Gate};
use crate::clifford::CliffordTableau;
use crate::error::Result;
use crate::pipeline::Pipeline;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Eager,
    Lazy,
}

impl Strategy {
    pub const ALL: [Strategy; 2] = [Strategy::Eager, Strategy::Lazy];
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Eager => "eager",
            Strategy::Lazy => "lazy",
        })
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "eager" => Ok(Strategy::Eager),
            "lazy" => Ok(Strategy::Lazy),
            _ => Err(format!("unknown strategy `{s}` (expected eager or lazy)")),
        }
    }
}

pub fn eager_resynthesize(p: &Pipeline) -> Result<Circuit> {
    let mut out = Circuit::new(p.num_qubits());
    for seg in p.segments() {
        let outcome = synth_diagonal_prt(&seg.prt)?;
        out.extend(&outcome.circuit)?;
        out.extend(&synth_clifford_full(&outcome.deferred))?;
        out.extend(&synth_clifford_full(&seg.cliff))?;
    }
    Ok(out)
}

pub fn lazy_resynthesize(p: &Pipeline) -> Result<Circuit> {
    let n = p.num_qubits();
    let mut out = Circuit::new(n);
    let mut carried = CliffordTableau::identity(n);
    for seg in p.segments() {
        // [D, S] = [S', D] with S' = D† S D
        let swapped = seg.prt.conjugate_by(&carried.inverse())?;
        let folded = swapped.fold_phases()?;
        carried = CliffordTableau::compose(&folded.residue, &carried)?;

        let outcome = synth_diagonal_prt(&folded.prt)?;
        out.extend(&outcome.circuit)?;

        let merged = CliffordTableau::compose(
            &outcome.deferred,
            &CliffordTableau::compose(&carried, &seg.cliff)?,
        )?;
        let split = synth_hfree_split(&merged);
        out.extend(&split.hfree)?;
        for &q in &split.h_qubits {
            out.push(Gate::h(q))?;
        }
        carried = split.residual;
    }
    out.extend(&synth_clifford_full(&carried))?;
    Ok(out)
}

pub fn resynthesize(p: &Pipeline, strategy: Strategy) -> Result<Circuit> {
    match strategy {
        Strategy::Eager => eager_resynthesize(p),
        Strategy::Lazy => lazy_resynthesize(p),
    }
}

/// Partition, phase folding, then extraction with the chosen strategy.
pub fn optimize(c: &Circuit, strategy: Strategy) -> Result<Circuit> {
    let pipeline = Pipeline::partition(c)?.optimize_tcount()?;
    resynthesize(&pipeline, strategy)
}
