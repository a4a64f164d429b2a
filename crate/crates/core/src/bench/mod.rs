//! Benchmark harness and reports.

pub mod generators;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::circuit::qasm::parse_qasm;
use crate::circuit::{Circuit, Metrics};
use crate::error::Result;
use crate::pipeline::Pipeline;
use crate::resynth::{resynthesize, Strategy};
use crate::verify::{check_auto, Verdict};

pub const SCHEMA_VERSION: u32 = 1;

pub const CSV_HEADER: [&str; 10] = [
    "name",
    "n",
    "pre_t",
    "pre_2q",
    "post_t",
    "post_2q",
    "overhead_pct",
    "runtime_ms",
    "strategy",
    "verified",
];

/// `100·(post − pre)/pre`, undefined for an empty baseline.
pub fn overhead_pct(pre_2q: usize, post_2q: usize) -> Option<f64> {
    if pre_2q == 0 {
        return None;
    }
    Some(100.0 * (post_2q as f64 - pre_2q as f64) / pre_2q as f64)
}

pub fn round1(x: f64) -> f64 {
    (x * 10.0).round() / 10.0
}

pub fn format_pct(x: Option<f64>) -> String {
    x.map_or_else(String::new, |v| format!("{v:.1}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verified {
    Yes,
    No,
    Skipped,
}

impl From<Verdict> for Verified {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Equivalent(_) => Verified::Yes,
            Verdict::NotEquivalent(_) => Verified::No,
            Verdict::Unverifiable => Verified::Skipped,
        }
    }
}

impl fmt::Display for Verified {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verified::Yes => "true",
            Verified::No => "false",
            Verified::Skipped => "skipped",
        })
    }
}

impl Serialize for Verified {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Verified::Yes => s.serialize_bool(true),
            Verified::No => s.serialize_bool(false),
            Verified::Skipped => s.serialize_str("skipped"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub name: String,
    pub n: usize,
    pub strategy: Strategy,
    pub pre: Metrics,
    pub post: Metrics,
    /// Rounded to one decimal; `None` when the input has no 2Q gates.
    pub overhead_2q_pct: Option<f64>,
    pub runtime_ms: f64,
    pub verified: Verified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub name: String,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StrategySummary {
    pub strategy: Strategy,
    pub circuits: usize,
    /// Arithmetic mean of the per-circuit overheads that are defined.
    pub average_overhead_2q_pct: Option<f64>,
    pub total_pre_t: usize,
    pub total_pre_2q: usize,
    pub total_post_2q: usize,
    pub total_post_t: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Aggregate {
    pub strategies: Vec<StrategySummary>,
    /// Geometric mean over circuits of eager runtime / lazy runtime.
    pub geomean_runtime_ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub records: Vec<Record>,
    pub failures: Vec<Failure>,
    pub aggregate: Aggregate,
}

impl Report {
    pub fn new(records: Vec<Record>, failures: Vec<Failure>) -> Report {
        let aggregate = aggregate(&records);
        Report {
            schema: SCHEMA_VERSION,
            records,
            failures,
            aggregate,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER).expect("in-memory write");
        for r in &self.records {
            w.write_record([
                r.name.clone(),
                r.n.to_string(),
                r.pre.t_count.to_string(),
                r.pre.twoq_count.to_string(),
                r.post.t_count.to_string(),
                r.post.twoq_count.to_string(),
                format_pct(r.overhead_2q_pct),
                format!("{:.3}", r.runtime_ms),
                r.strategy.to_string(),
                r.verified.to_string(),
            ])
            .expect("in-memory write");
        }
        for s in &self.aggregate.strategies {
            w.write_record([
                "AVERAGE".to_string(),
                String::new(),
                s.total_pre_t.to_string(),
                s.total_pre_2q.to_string(),
                s.total_post_t.to_string(),
                s.total_post_2q.to_string(),
                format_pct(s.average_overhead_2q_pct),
                String::new(),
                s.strategy.to_string(),
                String::new(),
            ])
            .expect("in-memory write");
        }
        if let Some(r) = self.aggregate.geomean_runtime_ratio {
            let mut row = vec![String::new(); CSV_HEADER.len()];
            row[0] = "GEOMEAN_RATIO".to_string();
            row[7] = format!("{r:.3}");
            row[8] = "eager/lazy".to_string();
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    /// CSV for a `.csv` path, JSON otherwise.
    pub fn write_to(&self, path: &Path) -> std::io::Result<()> {
        let is_csv = path
            .extension()
            .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
        fs::write(
            path,
            if is_csv {
                self.to_csv()
            } else {
                self.to_json()
            },
        )
    }
}

pub fn aggregate(records: &[Record]) -> Aggregate {
    let strategies = Strategy::ALL
        .iter()
        .filter_map(|&strategy| {
            let rs: Vec<&Record> = records.iter().filter(|r| r.strategy == strategy).collect();
            if rs.is_empty() {
                return None;
            }
            let defined: Vec<f64> = rs.iter().filter_map(|r| r.overhead_2q_pct).collect();
            let average = (!defined.is_empty())
                .then(|| round1(defined.iter().sum::<f64>() / defined.len() as f64));
            Some(StrategySummary {
                strategy,
                circuits: rs.len(),
                average_overhead_2q_pct: average,
                total_pre_t: rs.iter().map(|r| r.pre.t_count).sum(),
                total_pre_2q: rs.iter().map(|r| r.pre.twoq_count).sum(),
                total_post_2q: rs.iter().map(|r| r.post.twoq_count).sum(),
                total_post_t: rs.iter().map(|r| r.post.t_count).sum(),
            })
        })
        .collect();

    let mut logs = Vec::new();
    for e in records.iter().filter(|r| r.strategy == Strategy::Eager) {
        let lazy = records
            .iter()
            .find(|r| r.strategy == Strategy::Lazy && r.name == e.name);
        if let Some(l) = lazy {
            if e.runtime_ms > 0.0 && l.runtime_ms > 0.0 {
                logs.push((e.runtime_ms / l.runtime_ms).ln());
            }
        }
    }
    let geomean_runtime_ratio =
        (!logs.is_empty()).then(|| (logs.iter().sum::<f64>() / logs.len() as f64).exp());
    Aggregate {
        strategies,
        geomean_runtime_ratio,
    }
}

/// Runs partition, folding and extraction, timing only those three steps.
pub fn run_timed(c: &Circuit, strategy: Strategy) -> Result<(Circuit, f64)> {
    let start = Instant::now();
    let pipeline = Pipeline::partition(c)?.optimize_tcount()?;
    let out = resynthesize(&pipeline, strategy)?;
    Ok((out, start.elapsed().as_secs_f64() * 1e3))
}

pub fn record_for(
    name: &str,
    input: &Circuit,
    output: &Circuit,
    strategy: Strategy,
    runtime_ms: f64,
    verified: Verified,
) -> Record {
    let pre = input.metrics();
    let post = output.metrics();
    Record {
        name: name.to_string(),
        n: input.num_qubits(),
        strategy,
        pre,
        post,
        overhead_2q_pct: overhead_pct(pre.twoq_count, post.twoq_count).map(round1),
        runtime_ms,
        verified,
    }
}

/// Optimizes one circuit, optionally verifying the result.
pub fn run_one(
    name: &str,
    c: &Circuit,
    strategy: Strategy,
    verify: bool,
    seed: u64,
) -> Result<(Circuit, Record)> {
    let (out, ms) = run_timed(c, strategy)?;
    let verified = if verify {
        check_auto(c, &out, seed)?.into()
    } else {
        Verified::Skipped
    };
    let rec = record_for(name, c, &out, strategy, ms, verified);
    Ok((out, rec))
}

/// All `.qasm` files directly under `dir`, sorted by file name.
pub fn corpus_files(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|e| e == "qasm"))
        .collect();
    files.sort();
    Ok(files)
}

fn file_stem(p: &Path) -> String {
    p.file_stem().map_or_else(
        || p.display().to_string(),
        |s| s.to_string_lossy().into_owned(),
    )
}

/// Runs both strategies on every file. Files are independent and processed
/// on `jobs` threads; the report keeps file order.
pub fn compare_corpus(dir: &Path, jobs: usize) -> std::io::Result<Report> {
    let files = corpus_files(dir)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(std::io::Error::other)?;
    let results: Vec<std::result::Result<Vec<Record>, Failure>> = pool.install(|| {
        files
            .par_iter()
            .map(|path| {
                let name = file_stem(path);
                let fail = |error: String| Failure {
                    name: name.clone(),
                    error,
                };
                let text = fs::read_to_string(path).map_err(|e| fail(e.to_string()))?;
                let c = parse_qasm(&text).map_err(|e| fail(e.to_string()))?;
                Strategy::ALL
                    .iter()
                    .map(|&s| {
                        run_one(&name, &c, s, false, 0)
                            .map(|(_, r)| r)
                            .map_err(|e| fail(e.to_string()))
                    })
                    .collect()
            })
            .collect()
    });
    let mut records = Vec::new();
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(rs) => records.extend(rs),
            Err(f) => failures.push(f),
        }
    }
    Ok(Report::new(records, failures))
}
