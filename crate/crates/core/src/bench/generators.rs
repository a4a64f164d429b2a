//! Synthetic benchmark families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::qasm::ccx_network;
use crate::circuit::{Circuit, Gate, GateKind};

fn build(n: usize, gates: Vec<Gate>) -> Circuit {
    Circuit::from_gates(n, gates).expect("generator indices are in range")
}

/// Toffolis on every window `(i, i+1, i+2)`; needs `n >= 3`.
pub fn toffoli_chain(n: usize) -> Circuit {
    assert!(n >= 3, "toffoli chain needs at least 3 qubits");
    let mut g = Vec::new();
    for i in 0..n - 2 {
        g.extend(ccx_network(i, i + 1, i + 2));
    }
    build(n, g)
}

/// Cuccaro ripple-carry adder on `bits`-bit registers: qubit 0 is the
/// carry-in, then interleaved `b_i, a_i`, then the carry-out.
pub fn ripple_adder(bits: usize) -> Circuit {
    assert!(bits >= 1);
    let n = 2 * bits + 2;
    let b = |i: usize| 1 + 2 * i;
    let a = |i: usize| 2 + 2 * i;
    let mut g = Vec::new();
    let maj = |g: &mut Vec<Gate>, c: usize, b: usize, a: usize| {
        g.push(Gate::cx(a, b));
        g.push(Gate::cx(a, c));
        g.extend(ccx_network(c, b, a));
    };
    let uma = |g: &mut Vec<Gate>, c: usize, b: usize, a: usize| {
        g.extend(ccx_network(c, b, a));
        g.push(Gate::cx(a, c));
        g.push(Gate::cx(c, b));
    };
    maj(&mut g, 0, b(0), a(0));
    for i in 1..bits {
        maj(&mut g, a(i - 1), b(i), a(i));
    }
    g.push(Gate::cx(a(bits - 1), n - 1));
    for i in (1..bits).rev() {
        uma(&mut g, a(i - 1), b(i), a(i));
    }
    uma(&mut g, 0, b(0), a(0));
    build(n, g)
}

/// `h + 1` diagonal blocks separated by `h` Hadamard walls. Each block is a
/// CX ladder with a T after every link, so every wall forces a cut and every
/// block needs a parity network.
pub fn alternating_ht(n: usize, h: usize) -> Circuit {
    assert!(n >= 2);
    let mut g = Vec::new();
    for block in 0..=h {
        if block > 0 {
            g.extend((0..n).map(Gate::h));
        }
        g.push(Gate::t(0));
        for i in 0..n - 1 {
            g.push(Gate::cx(i, i + 1));
            g.push(if (block + i) % 2 == 0 {
                Gate::t(i + 1)
            } else {
                Gate::tdg(i + 1)
            });
        }
    }
    build(n, g)
}

const CLIFFORD_1Q: [GateKind; 6] = [
    GateKind::H,
    GateKind::S,
    GateKind::Sdg,
    GateKind::X,
    GateKind::Y,
    GateKind::Z,
];

fn random_gate(n: usize, rng: &mut ChaCha8Rng, allow_t: bool, p2: f64) -> Gate {
    if n >= 2 && rng.gen_bool(p2) {
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        return if rng.gen_bool(0.8) {
            Gate::cx(a, b)
        } else {
            Gate::cz(a, b)
        };
    }
    let q = rng.gen_range(0..n);
    if allow_t && rng.gen_bool(0.35) {
        return if rng.gen_bool(0.5) {
            Gate::t(q)
        } else {
            Gate::tdg(q)
        };
    }
    let kind = CLIFFORD_1Q[rng.gen_range(0..CLIFFORD_1Q.len())];
    Gate::new(kind, &[q]).expect("single-qubit gate")
}

pub fn random_clifford_t(n: usize, len: usize, seed: u64) -> Circuit {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    build(
        n,
        (0..len)
            .map(|_| random_gate(n, &mut rng, true, 0.3))
            .collect(),
    )
}

/// A random Clifford circuit long enough (`len` gates) to scramble `n`
/// qubits when `len` is a few times `n²`.
pub fn random_clifford(n: usize, len: usize, seed: u64) -> Circuit {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    build(
        n,
        (0..len)
            .map(|_| random_gate(n, &mut rng, false, 0.4))
            .collect(),
    )
}

/// The fixed synthetic corpus used by the equivalence suite and the
/// `generate` command.
pub fn standard_corpus() -> Vec<(String, Circuit)> {
    let mut out = Vec::new();
    for n in 3..=6 {
        out.push((format!("toffoli_chain_{n}"), toffoli_chain(n)));
    }
    for bits in 1..=5 {
        out.push((format!("adder_{bits}"), ripple_adder(bits)));
    }
    for n in [4, 6, 8] {
        for h in [1, 2, 4, 8, 16] {
            out.push((format!("alt_n{n}_h{h}"), alternating_ht(n, h)));
        }
    }
    for (i, (n, len)) in [
        (2, 30),
        (3, 40),
        (4, 60),
        (5, 80),
        (6, 100),
        (8, 120),
        (10, 150),
        (12, 200),
    ]
    .into_iter()
    .enumerate()
    {
        out.push((
            format!("random_{n}q_{i}"),
            random_clifford_t(n, len, 1000 + i as u64),
        ));
    }
    out.push(("clifford_only_4q".to_string(), random_clifford(4, 60, 77)));
    out
}
