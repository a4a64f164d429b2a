use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use lazy_qco::bench::{self, generators, Report, Verified};
use lazy_qco::verify::{self, Method, Verdict};
use lazy_qco::{parse_qasm, write_qasm, Circuit, Strategy};

const EXIT_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNVERIFIABLE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "lazy-qco",
    version,
    about = "Clifford+T T-count optimizer with eager and lazy resynthesis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Optimize one QASM file.
    Optimize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        output: PathBuf,
        #[arg(long, default_value = "lazy")]
        strategy: Strategy,
        /// Check the result against the input before writing it.
        #[arg(long)]
        verify: bool,
        /// Write a JSON report record.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Seed for sampled verification.
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
    /// Run both strategies over every .qasm file in a directory.
    Compare {
        #[arg(long)]
        corpus: PathBuf,
        /// Report path; `.csv` selects CSV, anything else JSON.
        #[arg(long)]
        report: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Print gate counts.
    Stats {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Check two circuits for equivalence up to global phase.
    Verify {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
    /// Write the synthetic benchmark corpus as QASM files.
    Generate {
        #[arg(long)]
        out: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

fn read_circuit(path: &Path) -> Result<Circuit, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    parse_qasm(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn name_of(path: &Path) -> String {
    path.file_stem().map_or_else(
        || path.display().to_string(),
        |s| s.to_string_lossy().into_owned(),
    )
}

fn cmd_optimize(
    input: &Path,
    output: &Path,
    strategy: Strategy,
    check: bool,
    report: Option<&Path>,
    seed: u64,
) -> Result<(), Failure> {
    let c = read_circuit(input)?;
    let (out, record) =
        bench::run_one(&name_of(input), &c, strategy, check, seed).map_err(|e| Failure {
            code: EXIT_FAILED,
            message: e.to_string(),
        })?;
    if let Some(path) = report {
        write_file(path, &Report::new(vec![record.clone()], vec![]).to_json())?;
    }
    match record.verified {
        Verified::No => {
            return Err(Failure {
                code: EXIT_FAILED,
                message: "optimized circuit is not equivalent to the input".into(),
            })
        }
        Verified::Skipped if check => {
            eprintln!(
                "warning: {} qubits is beyond desk-scale verification",
                c.num_qubits()
            );
        }
        _ => {}
    }
    write_file(output, &write_qasm(&out))?;
    let m = record.post;
    println!(
        "{strategy}: t {} -> {}, 2q {} -> {}, overhead {}%",
        record.pre.t_count,
        m.t_count,
        record.pre.twoq_count,
        m.twoq_count,
        bench::format_pct(record.overhead_2q_pct),
    );
    Ok(())
}

fn cmd_compare(corpus: &Path, report: &Path, jobs: usize) -> Result<(), Failure> {
    let r = bench::compare_corpus(corpus, jobs)
        .map_err(|e| input_error(format!("{}: {e}", corpus.display())))?;
    r.write_to(report)
        .map_err(|e| input_error(format!("{}: {e}", report.display())))?;
    for f in &r.failures {
        eprintln!("failed: {}: {}", f.name, f.error);
    }
    for s in &r.aggregate.strategies {
        println!(
            "{}: {} circuits, 2q {} -> {}, average overhead {}%",
            s.strategy,
            s.circuits,
            s.total_pre_2q,
            s.total_post_2q,
            bench::format_pct(s.average_overhead_2q_pct),
        );
    }
    if let Some(g) = r.aggregate.geomean_runtime_ratio {
        println!("geomean runtime ratio eager/lazy: {g:.2}");
    }
    Ok(())
}

fn cmd_stats(input: &Path) -> Result<(), Failure> {
    let c = read_circuit(input)?;
    let m = c.metrics();
    println!("n: {}", c.num_qubits());
    println!("t: {}", m.t_count);
    println!("2q: {}", m.twoq_count);
    println!("h: {}", m.h_count);
    println!("total: {}", m.total);
    Ok(())
}

fn cmd_verify(a: &Path, b: &Path, seed: u64) -> Result<(), Failure> {
    let ca = read_circuit(a)?;
    let cb = read_circuit(b)?;
    if ca.num_qubits() != cb.num_qubits() {
        return Err(Failure {
            code: EXIT_FAILED,
            message: format!(
                "not equivalent: {} vs {} qubits",
                ca.num_qubits(),
                cb.num_qubits()
            ),
        });
    }
    let verdict = verify::check_auto(&ca, &cb, seed).map_err(|e| Failure {
        code: EXIT_FAILED,
        message: e.to_string(),
    })?;
    let method = |m: Method| match m {
        Method::Clifford => "tableau",
        Method::Dense => "dense unitary",
        Method::Sampled => "sampled states",
    };
    match verdict {
        Verdict::Equivalent(m) => {
            println!("equivalent ({})", method(m));
            Ok(())
        }
        Verdict::NotEquivalent(m) => Err(Failure {
            code: EXIT_FAILED,
            message: format!("not equivalent ({})", method(m)),
        }),
        Verdict::Unverifiable => Err(Failure {
            code: EXIT_UNVERIFIABLE,
            message: format!("unverifiable at desk scale: {} qubits", ca.num_qubits()),
        }),
    }
}

fn cmd_generate(out: &Path) -> Result<(), Failure> {
    fs::create_dir_all(out).map_err(|e| input_error(format!("{}: {e}", out.display())))?;
    let corpus = generators::standard_corpus();
    for (name, c) in &corpus {
        write_file(&out.join(format!("{name}.qasm")), &write_qasm(c))?;
    }
    println!("wrote {} circuits to {}", corpus.len(), out.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Optimize {
            input,
            output,
            strategy,
            verify,
            report,
            seed,
        } => cmd_optimize(input, output, *strategy, *verify, report.as_deref(), *seed),
        Command::Compare {
            corpus,
            report,
            jobs,
        } => cmd_compare(corpus, report, *jobs),
        Command::Stats { input } => cmd_stats(input),
        Command::Verify { a, b, seed } => cmd_verify(a, b, *seed),
        Command::Generate { out } => cmd_generate(out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
