//! Acceptance suite. Runs as a plain binary (no libtest harness) and prints
//! one PASS/FAIL line per criterion; exits nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use common::*;
use lazy_qco::bench::{self, generators, Report, Verified};
use lazy_qco::resynth::{resynthesize, synth_clifford_full, synth_hfree_split};
use lazy_qco::verify::{equivalent_dense, equivalent_sampled, DEFAULT_TOL, DEFAULT_TRIALS};
use lazy_qco::{
    optimize, write_qasm, Circuit, CliffordTableau, Gate, PauliRotationTableau, Pipeline,
    RotationColumn, Strategy,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn equivalence_suite() -> Outcome {
    let start = Instant::now();
    let corpus = generators::standard_corpus();
    ensure(corpus.len() >= 30, || {
        format!("corpus has only {} circuits", corpus.len())
    })?;
    let (mut dense, mut sampled) = (0, 0);
    for (name, c) in &corpus {
        let n = c.num_qubits();
        ensure(n <= 12, || format!("{name}: {n} qubits"))?;
        for s in Strategy::ALL {
            let out = optimize(c, s).map_err(|e| format!("{name}/{s}: {e}"))?;
            let ok = if n <= 6 {
                dense += 1;
                equivalent_dense(c, &out, DEFAULT_TOL).unwrap()
            } else {
                sampled += 1;
                equivalent_sampled(c, &out, DEFAULT_TRIALS, DEFAULT_TOL).unwrap()
            };
            ensure(ok, || format!("{name}/{s}: output not equivalent"))?;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, || format!("took {secs:.1}s"))?;
    Ok(format!(
        "{} circuits, {dense} dense + {sampled} sampled checks, {secs:.2}s",
        corpus.len()
    ))
}

fn primitive_oracles() -> Outcome {
    let mut checks = 0usize;
    for n in 1..=2 {
        let paulis = all_signed_paulis(n);
        for p in &paulis {
            let pm = pauli_matrix(p);
            for q in &paulis {
                let qm = pauli_matrix(q);
                let prod = &pm * &qm;
                let commutes = close(&prod, &(&qm * &pm), 1e-12);
                ensure(p.commutes(q).unwrap() == commutes, || {
                    format!("commutes({p}, {q})")
                })?;
                let (r, k) = p.multiply(q).unwrap();
                let ik = [c(1., 0.), c(0., 1.), c(-1., 0.), c(0., -1.)][k as usize];
                ensure(close(&(pauli_matrix(&r) * ik), &prod, 1e-12), || {
                    format!("multiply({p}, {q}) = i^{k} {r}")
                })?;
                checks += 2;
            }
        }
        for g in all_gates(n).iter().filter(|g| g.kind().is_clifford()) {
            let t = CliffordTableau::from_circuit(&circ(n, &[*g])).unwrap();
            let gm = gate_matrix(n, g);
            for p in &paulis {
                let want = &gm * pauli_matrix(p) * gm.adjoint();
                let got = t.conjugate(p).unwrap();
                ensure(close(&pauli_matrix(&got), &want, 1e-12), || {
                    format!("conjugate({g:?}, {p}) = {got}")
                })?;
                for k in 0..8 {
                    let s = PauliRotationTableau::from_columns(
                        n,
                        vec![RotationColumn::new(p.clone(), k)],
                    )
                    .unwrap();
                    let want = &gm * rotation_matrix(p, k as u8) * gm.adjoint();
                    let got = s.conjugate_by(&t).unwrap();
                    // angles live mod 2π, so rotations are defined up to sign
                    ensure(equal_up_to_phase(&prt_matrix(&got), &want, 1e-12), || {
                        format!("conjugate_by({g:?}, {p}, k={k})")
                    })?;
                }
                checks += 9;
            }
        }
    }
    Ok(format!("{checks} exhaustive checks at n <= 2"))
}

fn synthesis_round_trips() -> Outcome {
    for n in [2, 4, 6, 8] {
        for i in 0..100 {
            let t = random_tableau(n, 7000 + 100 * n as u64 + i);
            let c = synth_clifford_full(&t);
            ensure(CliffordTableau::from_circuit(&c).unwrap() == t, || {
                format!("round trip failed at n={n}, sample {i}")
            })?;
            let split = synth_hfree_split(&t);
            ensure(split.residual.is_hfree(), || {
                format!("residual not H-free at n={n}, sample {i}")
            })?;
            let mut front = split.hfree.clone();
            for &q in &split.h_qubits {
                front.push(Gate::h(q)).unwrap();
            }
            let front = CliffordTableau::from_circuit(&front).unwrap();
            ensure(front.then(&split.residual) == t, || {
                format!("split composition failed at n={n}, sample {i}")
            })?;
        }
    }
    Ok("400 tableaux at n in {2,4,6,8}".into())
}

fn t_count_behavior() -> Outcome {
    let pipe = |gates: &[Gate]| {
        let p = Pipeline::partition(&circ(1, gates)).unwrap();
        (p.t_count(), p.optimize_tcount().unwrap())
    };
    let (_, p) = pipe(&[Gate::t(0); 2]);
    ensure(p.t_count() == 0, || "[T,T] kept a T".into())?;
    let (_, p) = pipe(&[Gate::t(0); 4]);
    ensure(p.t_count() == 0, || "T^4 kept a T".into())?;
    let z = CliffordTableau::from_circuit(&circ(1, &[Gate::z(0)])).unwrap();
    ensure(p.segments()[0].cliff == z, || "T^4 residue is not Z".into())?;
    let (_, p) = pipe(&[Gate::t(0); 8]);
    ensure(
        p.t_count() == 0 && p.segments()[0].cliff.is_identity(),
        || "T^8 residue is not the identity".into(),
    )?;

    let mut circuits: Vec<(String, Circuit)> = generators::standard_corpus();
    for seed in 0..40 {
        let n = 2 + (seed as usize % 5);
        circuits.push((
            format!("random_{seed}"),
            generators::random_clifford_t(n, 60, seed),
        ));
    }
    let mut saved = 0;
    for (name, c) in &circuits {
        let p = Pipeline::partition(c).unwrap();
        let o = p.optimize_tcount().unwrap();
        ensure(o.t_count() <= p.t_count(), || {
            format!("{name}: folding increased the T-count")
        })?;
        saved += p.t_count() - o.t_count();
        for s in Strategy::ALL {
            let out = resynthesize(&o, s).unwrap();
            ensure(out.metrics().t_count == o.t_count(), || {
                format!(
                    "{name}/{s}: output T-count {} vs pipeline {}",
                    out.metrics().t_count,
                    o.t_count()
                )
            })?;
        }
    }
    Ok(format!(
        "{} circuits, {saved} T gates folded away",
        circuits.len()
    ))
}

fn lazy_vs_eager() -> Outcome {
    let hs = [2usize, 4, 8, 16];
    let ns = [4usize, 6, 8];
    let mut eager = [0usize; 4];
    let mut lazy = [0usize; 4];
    let mut per_n = Vec::new();
    for &n in &ns {
        let mut row = Vec::new();
        for (i, &h) in hs.iter().enumerate() {
            let c = generators::alternating_ht(n, h);
            let e = optimize(&c, Strategy::Eager).unwrap().metrics().twoq_count;
            let l = optimize(&c, Strategy::Lazy).unwrap().metrics().twoq_count;
            eager[i] += e;
            lazy[i] += l;
            row.push(format!("{:.2}", e as f64 / l as f64));
        }
        per_n.push(format!("n={n}: {}", row.join(" ")));
    }
    let total_e: usize = eager.iter().sum();
    let total_l: usize = lazy.iter().sum();
    ensure(total_l <= total_e, || {
        format!("lazy {total_l} > eager {total_e}")
    })?;
    let ratios: Vec<f64> = eager
        .iter()
        .zip(&lazy)
        .map(|(&e, &l)| e as f64 / l as f64)
        .collect();
    let shown: Vec<String> = ratios.iter().map(|r| format!("{r:.2}")).collect();
    ensure(ratios.windows(2).all(|w| w[1] >= w[0]), || {
        format!("summed ratio not monotone in h: {}", shown.join(" "))
    })?;
    Ok(format!(
        "2Q lazy {total_l} <= eager {total_e}; eager/lazy over h={hs:?}: {} (per n: {})",
        shown.join(" "),
        per_n.join("; ")
    ))
}

fn overhead_metric() -> Outcome {
    let pct = bench::overhead_pct(409, 610).unwrap();
    ensure(bench::format_pct(Some(pct)) == "49.1", || {
        format!("got {pct}")
    })?;
    let pre = Circuit::from_gates(2, std::iter::repeat_n(Gate::cx(0, 1), 409)).unwrap();
    let post = Circuit::from_gates(2, std::iter::repeat_n(Gate::cx(0, 1), 610)).unwrap();
    let rec = bench::record_for(
        "worked",
        &pre,
        &post,
        Strategy::Lazy,
        1.0,
        Verified::Skipped,
    );
    ensure(rec.overhead_2q_pct == Some(49.1), || {
        format!("record holds {:?}", rec.overhead_2q_pct)
    })?;
    let report = Report::new(vec![rec], vec![]);
    ensure(report.to_csv().contains(",49.1,"), || {
        "CSV lacks 49.1".into()
    })?;
    ensure(
        report.to_json().contains("\"overhead_2q_pct\": 49.1"),
        || "JSON lacks 49.1".into(),
    )?;
    Ok("(610 - 409) / 409 -> 49.1%".into())
}

fn determinism() -> Outcome {
    for (name, c) in generators::standard_corpus() {
        for s in Strategy::ALL {
            let a = optimize(&c, s).unwrap();
            let b = optimize(&c, s).unwrap();
            ensure(
                write_qasm(&a) == write_qasm(&b) && a.metrics() == b.metrics(),
                || format!("{name}/{s} differs between runs"),
            )?;
        }
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let input = dir.path().join("in.qasm");
    std::fs::write(&input, write_qasm(&generators::ripple_adder(4))).unwrap();
    let mut outputs = Vec::new();
    for run in 0..2 {
        let out = dir.path().join(format!("out{run}.qasm"));
        let status = Command::new(env!("CARGO_BIN_EXE_lazy-qco"))
            .args([
                "optimize",
                "--strategy",
                "lazy",
                "--verify",
                "--seed",
                "42",
                "--in",
            ])
            .arg(&input)
            .arg("--out")
            .arg(&out)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(status.status.success(), || {
            String::from_utf8_lossy(&status.stderr).into_owned()
        })?;
        outputs.push(std::fs::read(&out).unwrap());
    }
    ensure(outputs[0] == outputs[1], || "CLI outputs differ".into())?;
    Ok("library and CLI outputs byte-identical across runs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 equivalence suite", equivalence_suite),
        ("2 primitive oracles", primitive_oracles),
        ("3 synthesis round-trips", synthesis_round_trips),
        ("4 T-count behavior", t_count_behavior),
        ("5 lazy vs eager 2Q", lazy_vs_eager),
        ("6 overhead metric", overhead_metric),
        ("7 determinism", determinism),
    ];
    let mut failed = 0;
    for (label, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(msg)
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {label}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {label}: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
