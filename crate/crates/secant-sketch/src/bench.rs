//! Timing and accuracy benchmark over operator families.

use std::fmt::Write as _;
use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use secant_sketch_core::datasets::{sample, Geometry, SampleSpec};
use secant_sketch_core::operators::{BlockParams, Distribution, OperatorSpec, SorsParams};
use secant_sketch_core::rng::derive_seed;
use secant_sketch_core::{LinearOperator, TransformKind};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const CSV_VERSION: &str = "# secant-sketch v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Sors,
    Block,
    #[serde(alias = "gaussian")]
    Subgaussian,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Self::Sors => "sors",
            Self::Block => "block",
            Self::Subgaussian => "subgaussian",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sors" => Ok(Self::Sors),
            "block" => Ok(Self::Block),
            "subgaussian" | "gaussian" => Ok(Self::Subgaussian),
            other => Err(format!("unknown method `{other}` (sors, block, subgaussian)")),
        }
    }
}

/// Embedding dimension as a function of `N`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MRule {
    Fixed(usize),
    Fraction(f64),
}

impl MRule {
    pub fn resolve(self, n: usize) -> usize {
        match self {
            Self::Fixed(m) => m,
            Self::Fraction(f) => ((f * n as f64).floor() as usize).max(1),
        }
    }
}

/// Intermediate dimension of the block operator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum M1Rule {
    Fixed(usize),
    /// `⌊√N⌋`, lowered to a power of two for the Hadamard transform.
    Sqrt,
}

impl M1Rule {
    pub fn resolve(self, n: usize, kind: TransformKind) -> usize {
        match self {
            Self::Fixed(m1) => m1,
            Self::Sqrt => {
                let r = (n as f64).sqrt().floor() as usize;
                let r = if (r + 1) * (r + 1) <= n { r + 1 } else { r };
                if kind == TransformKind::Hadamard && r > 0 {
                    1 << r.ilog2()
                } else {
                    r.max(1)
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct BenchConfig {
    #[serde(rename = "N")]
    pub sizes: Vec<usize>,
    pub methods: Vec<Method>,
    pub m: MRule,
    pub m1: M1Rule,
    pub transform: TransformKind,
    /// Entry law of the dense factor in the block and sub-gaussian methods.
    pub dist: Distribution,
    pub set_size: usize,
    pub repetitions: usize,
    pub seed: u64,
    pub timing: bool,
    pub warmup: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            sizes: vec![1 << 10, 1 << 12, 1 << 14],
            methods: vec![Method::Sors, Method::Block],
            m: MRule::Fraction(0.25),
            m1: M1Rule::Sqrt,
            transform: TransformKind::Dft,
            dist: Distribution::Gaussian,
            set_size: 100,
            repetitions: 100,
            seed: 0,
            timing: true,
            warmup: true,
        }
    }
}

impl BenchConfig {
    /// Recipe for one method at one size.
    pub fn recipe(&self, method: Method, n: usize, seed: u64) -> OperatorSpec {
        let m = self.m.resolve(n);
        match method {
            Method::Sors => OperatorSpec::Sors(SorsParams::new(n, m, self.transform, seed)),
            Method::Block => {
                let mut p = BlockParams::new(n, self.m1.resolve(n, self.transform), m, self.transform, seed);
                p.dist = self.dist;
                OperatorSpec::Block(p)
            }
            Method::Subgaussian => OperatorSpec::SubGaussian { n, m, dist: self.dist, seed },
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::Config(msg.to_string()));
        if self.sizes.is_empty() {
            return bad("no sizes given");
        }
        if self.methods.is_empty() {
            return bad("no methods given");
        }
        if self.set_size == 0 || self.repetitions == 0 {
            return bad("set size and repetitions must be positive");
        }
        if let MRule::Fraction(f) = self.m {
            if !(f > 0.0 && f <= 1.0) {
                return bad("m fraction must lie in (0, 1]");
            }
        }
        for &n in &self.sizes {
            for &method in &self.methods {
                let r = self.recipe(method, n, 0);
                if method == Method::Subgaussian {
                    // construction cost is the dense matrix itself; check shape only
                    if self.m.resolve(n) == 0 {
                        return bad("m must be positive");
                    }
                    continue;
                }
                r.build().map_err(|e| {
                    let hint = if method == Method::Block {
                        format!(" (m = {} but m1 = {}; block needs m <= m1 <= sqrt N, try --m or --m1)", self.m.resolve(n), self.m1.resolve(n, self.transform))
                    } else {
                        String::new()
                    };
                    Error::Config(format!("{} at N={n}: {e}{hint}", method.name()))
                })?;
            }
        }
        Ok(())
    }
}

/// One measured repetition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    #[serde(rename = "N")]
    pub n: usize,
    pub method: Method,
    pub m: usize,
    pub m1: Option<usize>,
    pub rep: usize,
    pub seed: u64,
    pub time_ns: u64,
    pub max_rel_err: f64,
    pub mean_rel_err: f64,
    pub flops: u64,
}

/// Mean and spread over the repetitions of one `(N, method)` cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    #[serde(rename = "N")]
    pub n: usize,
    pub method: Method,
    pub m: usize,
    pub m1: Option<usize>,
    pub reps: usize,
    pub time_ns_mean: f64,
    pub time_ns_sd: f64,
    pub time_ns_median: f64,
    pub max_rel_err_mean: f64,
    pub max_rel_err_sd: f64,
    pub mean_rel_err_mean: f64,
    pub flops: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub samples: Vec<Sample>,
    pub aggregates: Vec<Aggregate>,
    pub threads: usize,
    pub timing: bool,
}

impl BenchReport {
    pub fn aggregate(&self, n: usize, method: Method) -> Option<&Aggregate> {
        self.aggregates.iter().find(|a| a.n == n && a.method == method)
    }
}

/// Seed of repetition `rep` at size `n`; every method sees the same point set.
pub fn rep_seed(seed: u64, n: usize, rep: usize) -> u64 {
    derive_seed(derive_seed(seed, n as u64), rep as u64)
}

fn method_index(method: Method) -> u64 {
    match method {
        Method::Sors => 1,
        Method::Block => 2,
        Method::Subgaussian => 3,
    }
}

fn run_one(config: &BenchConfig, n: usize, method: Method, rep: usize) -> Result<Sample> {
    let seed = rep_seed(config.seed, n, rep);
    let points = sample(&SampleSpec::new(Geometry::GaussianCloud, n, config.set_size, derive_seed(seed, 0)))?;
    let recipe = config.recipe(method, n, derive_seed(seed, method_index(method)));
    let op = recipe.build()?;
    let mut out = vec![0.0; op.rows() * points.len()];
    let map_all = |out: &mut [f64]| -> Result<()> {
        for (x, y) in points.iter().zip(out.chunks_exact_mut(op.rows())) {
            op.apply_into(x, y)?;
        }
        Ok(())
    };
    if config.warmup && config.timing {
        map_all(&mut out)?;
    }
    let start = Instant::now();
    map_all(&mut out)?;
    let time_ns = (start.elapsed().as_nanos() as u64).max(1);

    let (mut max, mut sum) = (0.0f64, 0.0);
    for (x, y) in points.iter().zip(out.chunks_exact(op.rows())) {
        let nx = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        let ny = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        let e = (ny - nx).abs() / nx;
        max = max.max(e);
        sum += e;
    }
    let m1 = match recipe {
        OperatorSpec::Block(p) => Some(p.m1),
        _ => None,
    };
    Ok(Sample {
        n,
        method,
        m: config.m.resolve(n),
        m1,
        rep,
        seed,
        time_ns: if config.timing { time_ns } else { 0 },
        max_rel_err: max,
        mean_rel_err: sum / points.len() as f64,
        flops: op.flops(),
    })
}

fn mean_sd(v: &[f64]) -> (f64, f64) {
    let n = v.len() as f64;
    let mean = v.iter().sum::<f64>() / n;
    if v.len() < 2 {
        return (mean, 0.0);
    }
    let var = v.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let k = v.len();
    if k % 2 == 1 {
        v[k / 2]
    } else {
        0.5 * (v[k / 2 - 1] + v[k / 2])
    }
}

fn aggregate(cell: &[Sample]) -> Aggregate {
    let first = &cell[0];
    let times: Vec<f64> = cell.iter().map(|s| s.time_ns as f64).collect();
    let errs: Vec<f64> = cell.iter().map(|s| s.max_rel_err).collect();
    let (time_ns_mean, time_ns_sd) = mean_sd(&times);
    let (max_rel_err_mean, max_rel_err_sd) = mean_sd(&errs);
    let means: Vec<f64> = cell.iter().map(|s| s.mean_rel_err).collect();
    Aggregate {
        n: first.n,
        method: first.method,
        m: first.m,
        m1: first.m1,
        reps: cell.len(),
        time_ns_mean,
        time_ns_sd,
        time_ns_median: median(times),
        max_rel_err_mean,
        max_rel_err_sd,
        mean_rel_err_mean: mean_sd(&means).0,
        flops: first.flops,
    }
}

/// Runs every `(N, method, repetition)` cell on a pool of `threads` workers
/// (`0` picks the machine default).
pub fn run(config: &BenchConfig, threads: usize) -> Result<BenchReport> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let cells: Vec<(usize, Method, usize)> = config
        .sizes
        .iter()
        .flat_map(|&n| {
            config
                .methods
                .iter()
                .flat_map(move |&m| (0..config.repetitions).map(move |r| (n, m, r)))
        })
        .collect();
    let samples: Vec<Sample> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(n, method, rep)| run_one(config, n, method, rep))
            .collect::<Result<_>>()
    })?;
    let aggregates = samples.chunks(config.repetitions).map(aggregate).collect();
    Ok(BenchReport { samples, aggregates, threads: pool.current_num_threads(), timing: config.timing })
}

fn num(v: f64) -> String {
    format!("{v:?}")
}

fn opt(v: Option<usize>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

/// Writes the versioned CSV: detail rows, each cell followed by its
/// aggregate row (`rep = agg`). Timing columns are dropped when the report
/// was produced without timing.
pub fn write_csv<W: Write>(w: &mut W, report: &BenchReport) -> Result<()> {
    let t = report.timing;
    let mut header = String::from("N,method,m,m1,rep,seed");
    if t {
        header.push_str(",time_ns");
    }
    header.push_str(",max_rel_err,mean_rel_err");
    if t {
        header.push_str(",time_ns_sd,time_ns_median");
    }
    header.push_str(",max_rel_err_sd,flops,threads");
    writeln!(w, "{CSV_VERSION}")?;
    writeln!(w, "{header}")?;
    let reps = report.samples.len() / report.aggregates.len().max(1);
    for (cell, agg) in report.samples.chunks(reps.max(1)).zip(&report.aggregates) {
        for s in cell {
            let mut line = format!("{},{},{},{},{},{}", s.n, s.method.name(), s.m, opt(s.m1), s.rep, s.seed);
            if t {
                write!(line, ",{}", s.time_ns).unwrap();
            }
            write!(line, ",{},{}", num(s.max_rel_err), num(s.mean_rel_err)).unwrap();
            if t {
                line.push_str(",,");
            }
            write!(line, ",,{},{}", s.flops, report.threads).unwrap();
            writeln!(w, "{line}")?;
        }
        let a = agg;
        let mut line = format!("{},{},{},{},agg,", a.n, a.method.name(), a.m, opt(a.m1));
        if t {
            write!(line, ",{}", num(a.time_ns_mean)).unwrap();
        }
        write!(line, ",{},{}", num(a.max_rel_err_mean), num(a.mean_rel_err_mean)).unwrap();
        if t {
            write!(line, ",{},{}", num(a.time_ns_sd), num(a.time_ns_median)).unwrap();
        }
        write!(line, ",{},{},{}", num(a.max_rel_err_sd), a.flops, report.threads).unwrap();
        writeln!(w, "{line}")?;
    }
    Ok(())
}
