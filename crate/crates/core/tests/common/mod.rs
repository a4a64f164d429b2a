//! Dense matrix oracles built from textbook gate matrices. Nothing here
//! goes through the tableau code or the crate's own simulator.
#![allow(dead_code)]

use lazy_qco::{Circuit, CliffordTableau, Gate, GateKind, PauliRotationTableau, PauliString};
use nalgebra::{Complex, DMatrix};

pub type C = Complex<f64>;
pub type M = DMatrix<C>;

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

pub fn m2(a: [[C; 2]; 2]) -> M {
    M::from_row_slice(2, 2, &[a[0][0], a[0][1], a[1][0], a[1][1]])
}

pub fn id(dim: usize) -> M {
    M::identity(dim, dim)
}

pub fn pauli_1q(ch: char) -> M {
    let (o, l, i) = (c(0., 0.), c(1., 0.), c(0., 1.));
    match ch {
        'I' => m2([[l, o], [o, l]]),
        'X' => m2([[o, l], [l, o]]),
        'Y' => m2([[o, -i], [i, o]]),
        'Z' => m2([[l, o], [o, -l]]),
        _ => panic!("bad pauli {ch}"),
    }
}

/// Operator on `n` qubits with `m` on qubit `q` (qubit 0 = least
/// significant index bit, so it is the rightmost Kronecker factor).
pub fn embed(n: usize, q: usize, m: &M) -> M {
    let mut acc = id(1);
    for k in (0..n).rev() {
        let f = if k == q { m.clone() } else { id(2) };
        acc = acc.kronecker(&f);
    }
    acc
}

pub fn pauli_matrix(p: &PauliString) -> M {
    let s = p.to_string();
    let (sign, body) = s.split_at(1);
    let n = body.len();
    let mut acc = id(1);
    for ch in body.chars().rev() {
        acc = acc.kronecker(&pauli_1q(ch));
    }
    debug_assert_eq!(acc.nrows(), 1 << n);
    if sign == "-" {
        -acc
    } else {
        acc
    }
}

pub fn gate_1q(kind: GateKind) -> M {
    let (o, l, i) = (c(0., 0.), c(1., 0.), c(0., 1.));
    let r = 0.5f64.sqrt();
    let w = C::from_polar(1.0, std::f64::consts::FRAC_PI_4);
    match kind {
        GateKind::H => m2([[c(r, 0.), c(r, 0.)], [c(r, 0.), c(-r, 0.)]]),
        GateKind::S => m2([[l, o], [o, i]]),
        GateKind::Sdg => m2([[l, o], [o, -i]]),
        GateKind::X => pauli_1q('X'),
        GateKind::Y => pauli_1q('Y'),
        GateKind::Z => pauli_1q('Z'),
        GateKind::T => m2([[l, o], [o, w]]),
        GateKind::Tdg => m2([[l, o], [o, w.conj()]]),
        _ => panic!("not a single-qubit gate"),
    }
}

pub fn gate_matrix(n: usize, g: &Gate) -> M {
    let q = g.qubits();
    match g.kind() {
        GateKind::CX | GateKind::CZ => {
            let dim = 1usize << n;
            let (a, b) = (1usize << q[0], 1usize << q[1]);
            let mut m = M::zeros(dim, dim);
            for col in 0..dim {
                if g.kind() == GateKind::CX {
                    let row = if col & a != 0 { col ^ b } else { col };
                    m[(row, col)] = c(1., 0.);
                } else {
                    let s = if col & a != 0 && col & b != 0 {
                        -1.
                    } else {
                        1.
                    };
                    m[(col, col)] = c(s, 0.);
                }
            }
            m
        }
        k => embed(n, q[0], &gate_1q(k)),
    }
}

pub fn circuit_matrix(circ: &Circuit) -> M {
    let n = circ.num_qubits();
    let mut u = id(1 << n);
    for g in circ.gates() {
        u = gate_matrix(n, g) * u;
    }
    u
}

/// `exp(-i·kπ/8·P)`.
pub fn rotation_matrix(p: &PauliString, k: u8) -> M {
    let th = k as f64 * std::f64::consts::PI / 8.0;
    let pm = pauli_matrix(p);
    id(pm.nrows()) * c(th.cos(), 0.) - pm * c(0., th.sin())
}

pub fn prt_matrix(s: &PauliRotationTableau) -> M {
    let mut u = id(1 << s.num_qubits());
    for col in s.columns() {
        u = rotation_matrix(col.pauli(), col.phase_k()) * u;
    }
    u
}

/// Reconstructs the unitary of a tableau from its images: `U|0⟩` spans the
/// joint +1 eigenspace of the Z-images, and `U|b⟩ = ∏ img(X_i)^{b_i} U|0⟩`.
pub fn tableau_matrix(t: &CliffordTableau) -> M {
    let n = t.num_qubits();
    let dim = 1usize << n;
    let mut proj = id(dim);
    for q in 0..n {
        proj = (id(dim) + pauli_matrix(t.z_image(q))) * c(0.5, 0.) * proj;
    }
    let best = (0..dim)
        .max_by(|&a, &b| proj.column(a).norm().total_cmp(&proj.column(b).norm()))
        .unwrap();
    let v0 = proj.column(best).into_owned();
    let v0 = &v0 / c(v0.norm(), 0.);
    let mut u = M::zeros(dim, dim);
    for b in 0..dim {
        let mut v = v0.clone();
        for q in 0..n {
            if b >> q & 1 == 1 {
                v = pauli_matrix(t.x_image(q)) * v;
            }
        }
        u.set_column(b, &v);
    }
    u
}

pub fn close(a: &M, b: &M, tol: f64) -> bool {
    a.shape() == b.shape() && a.iter().zip(b.iter()).all(|(x, y)| (x - y).norm() <= tol)
}

pub fn equal_up_to_phase(a: &M, b: &M, tol: f64) -> bool {
    if a.shape() != b.shape() {
        return false;
    }
    let (idx, _) = a
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.norm().total_cmp(&y.1.norm()))
        .unwrap();
    let (x, y) = (a.as_slice()[idx], b.as_slice()[idx]);
    if y.norm() < 1e-12 {
        return false;
    }
    let phase = x / y;
    close(a, &(b * phase), tol)
}

pub fn circ(n: usize, gates: &[Gate]) -> Circuit {
    Circuit::from_gates(n, gates.iter().copied()).unwrap()
}

/// Every gate placement on `n ≤ 2` qubits.
pub fn all_gates(n: usize) -> Vec<Gate> {
    let mut out = Vec::new();
    for kind in GateKind::ALL {
        if kind.arity() == 1 {
            out.extend((0..n).map(|q| Gate::new(kind, &[q]).unwrap()));
        } else {
            for a in 0..n {
                for b in 0..n {
                    if a != b {
                        out.push(Gate::new(kind, &[a, b]).unwrap());
                    }
                }
            }
        }
    }
    out
}

/// All `2·4^n` signed Pauli strings.
pub fn all_signed_paulis(n: usize) -> Vec<PauliString> {
    let mut out = Vec::new();
    for code in 0..(1usize << (2 * n)) {
        let body: String = (0..n)
            .map(|q| ['I', 'X', 'Y', 'Z'][(code >> (2 * q)) & 3])
            .collect();
        for sign in ["+", "-"] {
            out.push(format!("{sign}{body}").parse().unwrap());
        }
    }
    out
}

pub fn random_tableau(n: usize, seed: u64) -> CliffordTableau {
    let c = lazy_qco::bench::generators::random_clifford(n, 6 * n * n + 10, seed);
    CliffordTableau::from_circuit(&c).unwrap()
}
