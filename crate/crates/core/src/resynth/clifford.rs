//! Clifford tableau synthesis.
//!
//! Every Clifford is written as `hfree · H-layer · residual` (circuit order),
//! where the H-layer touches exactly `rank` qubits, `rank` being the rank of
//! the x-block of the inverse's Z-images. The H-free residual is reduced to
//! the identity by Gaussian elimination with CX, then phase and sign cleanup.

use crate::circuit::{Circuit, Gate};
use crate::clifford::CliffordTableau;
use crate::pauli::PauliString;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HFreeSplit {
    pub hfree: Circuit,
    pub h_qubits: Vec<usize>,
    pub residual: CliffordTableau,
}

/// CZ over {S, Sdg, CX}: the phase `(-1)^{ab}` written as `i^a i^b i^{-(a⊕b)}`.
pub(crate) fn cz_gates(a: usize, b: usize) -> [Gate; 5] {
    [
        Gate::s(a),
        Gate::s(b),
        Gate::cx(a, b),
        Gate::sdg(b),
        Gate::cx(a, b),
    ]
}

pub fn synth_hfree_split(t: &CliffordTableau) -> HFreeSplit {
    let n = t.num_qubits();
    let inv = t.inverse();
    let mut cols: Vec<PauliString> = (0..n).map(|q| inv.z_image(q).clone()).collect();
    let mut gates: Vec<Gate> = Vec::new();

    // column echelon form of the x-block, using free basis changes
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, column)
    for c in 0..n {
        for &(p, pc) in &pivots {
            if cols[c].x().get(p) {
                let other = cols[pc].clone();
                xor_bits(&mut cols[c], &other);
            }
        }
        if let Some(p) = cols[c].x().first_one() {
            for &(_, pc) in &pivots {
                if cols[pc].x().get(p) {
                    let other = cols[c].clone();
                    xor_bits(&mut cols[pc], &other);
                }
            }
            pivots.push((p, c));
        }
    }
    let mut in_q = vec![false; n];
    for &(p, _) in &pivots {
        in_q[p] = true;
    }

    // clear non-pivot rows with CX(pivot row → row)
    for &(p, pc) in &pivots {
        let rows: Vec<usize> = cols[pc].x().iter_ones().filter(|&q| !in_q[q]).collect();
        for q in rows {
            for col in cols.iter_mut() {
                col.conj_cx(p, q);
            }
            gates.push(Gate::cx(p, q));
        }
    }

    // the pivot block of z is symmetric; clear it with CZ and S
    for (i, &(pi, ci)) in pivots.iter().enumerate() {
        for &(pj, _) in &pivots[i + 1..] {
            if cols[ci].z().get(pj) {
                let (a, b) = (pi.min(pj), pi.max(pj));
                gates.extend(cz_gates(a, b));
            }
        }
    }
    for &(p, pc) in &pivots {
        if cols[pc].z().get(p) {
            gates.push(Gate::s(p));
        }
    }

    let mut h_qubits: Vec<usize> = pivots.iter().map(|&(p, _)| p).collect();
    h_qubits.sort_unstable();

    let mut residual = t.clone();
    for g in &gates {
        residual.prepend_gate(&g.inverse());
    }
    for &q in &h_qubits {
        residual.prepend_h(q);
    }
    debug_assert!(residual.is_hfree(), "split residual is not H-free");

    let mut hfree = Circuit::new(n);
    for g in gates {
        hfree.push_unchecked(g);
    }
    HFreeSplit {
        hfree,
        h_qubits,
        residual,
    }
}

fn xor_bits(dst: &mut PauliString, src: &PauliString) {
    dst.x_mut().xor_assign(src.x());
    dst.z_mut().xor_assign(src.z());
}

/// Synthesizes an H-free tableau over {CX, S, Sdg, X, Z}.
pub fn synth_hfree(t: &CliffordTableau) -> Circuit {
    assert!(t.is_hfree(), "synth_hfree requires an H-free tableau");
    let n = t.num_qubits();
    let mut work = t.clone();
    let mut applied: Vec<Gate> = Vec::new();
    let mut apply = |work: &mut CliffordTableau, g: Gate| {
        work.append_gate(&g);
        applied.push(g);
    };

    // Z-images to ±Z_i by row additions
    for i in 0..n {
        if !work.z_image(i).z().get(i) {
            let r = (i + 1..n)
                .find(|&r| work.z_image(i).z().get(r))
                .expect("z-block of an H-free tableau is invertible");
            apply(&mut work, Gate::cx(i, r));
        }
        let rows: Vec<usize> = work
            .z_image(i)
            .z()
            .iter_ones()
            .filter(|&r| r != i)
            .collect();
        for r in rows {
            apply(&mut work, Gate::cx(r, i));
        }
    }

    // X-images are now X_i·Z^{b_i} with b symmetric
    for i in 0..n {
        for j in i + 1..n {
            if work.x_image(i).z().get(j) {
                for g in cz_gates(i, j) {
                    apply(&mut work, g);
                }
            }
        }
        if work.x_image(i).z().get(i) {
            apply(&mut work, Gate::s(i));
        }
    }

    for i in 0..n {
        if work.x_image(i).sign() {
            apply(&mut work, Gate::z(i));
        }
        if work.z_image(i).sign() {
            apply(&mut work, Gate::x(i));
        }
    }
    debug_assert!(work.is_identity());

    let mut c = Circuit::new(n);
    for g in applied.iter().rev() {
        c.push_unchecked(g.inverse());
    }
    c
}

/// Full synthesis: split, Hadamard layer, then the H-free residual.
pub fn synth_clifford_full(t: &CliffordTableau) -> Circuit {
    let split = synth_hfree_split(t);
    let mut c = split.hfree;
    for &q in &split.h_qubits {
        c.push_unchecked(Gate::h(q));
    }
    c.extend(&synth_hfree(&split.residual))
        .expect("same register");
    c
}
