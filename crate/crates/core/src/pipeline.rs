//! Alternating diagonal-rotation / Clifford segments.
//!
//! Each segment applies its rotation tableau first and its Clifford tableau
//! second. Phase gates are pushed backwards through the running Clifford;
//! a new segment starts only when the pushed axis stops being diagonal.

use crate::circuit::{Circuit, GateKind};
use crate::clifford::{CliffordTableau, Side};
use crate::error::Result;
use crate::pauli::PauliString;
use crate::rotation::{PauliRotationTableau, PhaseFolding, RotationColumn, TCountOptimizer};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub prt: PauliRotationTableau,
    pub cliff: CliffordTableau,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pipeline {
    n: usize,
    segments: Vec<Segment>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineStats {
    pub t_count: usize,
    pub segment_count: usize,
    pub max_prt_width: usize,
}

impl Pipeline {
    pub fn new(n: usize, segments: Vec<Segment>) -> Self {
        debug_assert!(segments
            .iter()
            .all(|s| s.prt.num_qubits() == n && s.cliff.num_qubits() == n && s.prt.is_diagonal()));
        Pipeline { n, segments }
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn partition(c: &Circuit) -> Result<Pipeline> {
        let n = c.num_qubits();
        let mut segments = Vec::new();
        let mut prt = PauliRotationTableau::new(n);
        let mut cliff = CliffordTableau::identity(n);
        // inverse of `cliff`, maintained by prepending inverse gates
        let mut cliff_inv = CliffordTableau::identity(n);
        for g in c.gates() {
            let phase = match g.kind() {
                GateKind::X | GateKind::Y => None,
                k => k.phase_k(),
            };
            match phase {
                Some(k) => {
                    let q = g.qubits()[0];
                    let axis = cliff_inv.conjugate_unchecked(&PauliString::single_z(n, q)?);
                    if axis.is_diagonal() {
                        prt.push(RotationColumn::new(axis, k as i64))?;
                    } else {
                        segments.push(Segment {
                            prt: std::mem::replace(&mut prt, PauliRotationTableau::new(n)),
                            cliff: std::mem::replace(&mut cliff, CliffordTableau::identity(n)),
                        });
                        cliff_inv = CliffordTableau::identity(n);
                        prt.push(RotationColumn::new(PauliString::single_z(n, q)?, k as i64))?;
                    }
                }
                None => {
                    cliff.apply_gate(g, Side::Append)?;
                    cliff_inv.apply_gate(&g.inverse(), Side::Prepend)?;
                }
            }
        }
        segments.push(Segment { prt, cliff });
        Ok(Pipeline { n, segments })
    }

    pub fn optimize_tcount(&self) -> Result<Pipeline> {
        self.optimize_tcount_with(&PhaseFolding)
    }

    /// Runs `optimizer` on every rotation tableau; residues are folded into
    /// the segment's Clifford, ahead of it in circuit order.
    pub fn optimize_tcount_with(&self, optimizer: &dyn TCountOptimizer) -> Result<Pipeline> {
        let segments = self
            .segments
            .iter()
            .map(|s| {
                let folded = optimizer.optimize(&s.prt)?;
                Ok(Segment {
                    prt: folded.prt,
                    cliff: CliffordTableau::compose(&folded.residue, &s.cliff)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Pipeline {
            n: self.n,
            segments,
        })
    }

    pub fn stats(&self) -> PipelineStats {
        PipelineStats {
            t_count: self.t_count(),
            segment_count: self.segments.len(),
            max_prt_width: self.segments.iter().map(|s| s.prt.len()).max().unwrap_or(0),
        }
    }

    pub fn t_count(&self) -> usize {
        self.segments.iter().map(|s| s.prt.t_count()).sum()
    }
}

pub fn partition(c: &Circuit) -> Result<Pipeline> {
    Pipeline::partition(c)
}

pub fn optimize_tcount(p: &Pipeline) -> Result<Pipeline> {
    p.optimize_tcount()
}

pub fn pipeline_stats(p: &Pipeline) -> PipelineStats {
    p.stats()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Gate;

    fn circ(n: usize, gates: &[Gate]) -> Circuit {
        Circuit::from_gates(n, gates.iter().copied()).unwrap()
    }

    fn rot(s: &str, k: i64) -> RotationColumn {
        RotationColumn::new(s.parse().unwrap(), k)
    }

    #[test]
    fn clifford_only_is_one_segment() {
        let c = circ(2, &[Gate::h(0), Gate::cx(0, 1), Gate::x(1)]);
        let p = Pipeline::partition(&c).unwrap();
        assert_eq!(p.segments().len(), 1);
        assert!(p.segments()[0].prt.is_empty());
        assert_eq!(
            p.segments()[0].cliff,
            CliffordTableau::from_circuit(&c).unwrap()
        );
        assert_eq!(
            p.stats(),
            PipelineStats {
                t_count: 0,
                segment_count: 1,
                max_prt_width: 0
            }
        );
    }

    #[test]
    fn hadamard_between_t_forces_cut() {
        let p = Pipeline::partition(&circ(1, &[Gate::t(0), Gate::h(0), Gate::t(0)])).unwrap();
        let segs = p.segments();
        assert_eq!(segs.len(), 2);
        assert_eq!(segs[0].prt.columns(), &[rot("Z", 1)]);
        assert_eq!(
            segs[0].cliff,
            CliffordTableau::from_circuit(&circ(1, &[Gate::h(0)])).unwrap()
        );
        assert_eq!(segs[1].prt.columns(), &[rot("Z", 1)]);
        assert!(segs[1].cliff.is_identity());
    }

    #[test]
    fn t_after_cx_picks_up_parity() {
        let p = Pipeline::partition(&circ(2, &[Gate::cx(0, 1), Gate::t(1)])).unwrap();
        let segs = p.segments();
        assert_eq!(segs.len(), 1);
        assert_eq!(segs[0].prt.columns(), &[rot("ZZ", 1)]);
        assert_eq!(
            segs[0].cliff,
            CliffordTableau::from_circuit(&circ(2, &[Gate::cx(0, 1)])).unwrap()
        );
    }

    #[test]
    fn undone_hadamard_does_not_cut() {
        let c = circ(1, &[Gate::t(0), Gate::h(0), Gate::h(0), Gate::t(0)]);
        assert_eq!(Pipeline::partition(&c).unwrap().segments().len(), 1);
    }

    #[test]
    fn folding_examples() {
        let p = Pipeline::partition(&circ(1, &[Gate::t(0), Gate::t(0)])).unwrap();
        let o = p.optimize_tcount().unwrap();
        assert!(o.segments()[0].prt.is_empty());
        assert_eq!(
            o.segments()[0].cliff,
            CliffordTableau::from_circuit(&circ(1, &[Gate::s(0)])).unwrap()
        );

        let p = Pipeline::partition(&circ(1, &[Gate::t(0); 4])).unwrap();
        assert_eq!(p.t_count(), 4);
        let o = p.optimize_tcount().unwrap();
        assert_eq!(o.t_count(), 0);
        assert_eq!(
            o.segments()[0].cliff,
            CliffordTableau::from_circuit(&circ(1, &[Gate::z(0)])).unwrap()
        );

        let c = circ(2, &[Gate::t(0), Gate::cx(0, 1), Gate::t(1)]);
        let p = Pipeline::partition(&c).unwrap();
        assert_eq!(p.optimize_tcount().unwrap(), p);
    }

    #[test]
    fn stats_of_single_t() {
        let p = Pipeline::partition(&circ(1, &[Gate::t(0)])).unwrap();
        assert_eq!(p.stats().t_count, 1);
        assert_eq!(p.stats().max_prt_width, 1);
    }
}
