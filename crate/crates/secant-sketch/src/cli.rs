//! Command-line front end.
//!
//! Exit codes: 0 success, 2 usage or invalid input, 3 guard violation
//! (too many supports, matrix too large), 4 infeasible bound (a warning
//! instead with `--warn-infeasible`).

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use secant_sketch_core::bounds::{self, BoundKind, BoundReport, ConstantsRegistry, FastFamily};
use secant_sketch_core::datasets::{self, Geometry, SampleSpec};
use secant_sketch_core::geometry::{self, Catalog, ManifoldDescriptor};
use secant_sketch_core::operators::{materialize, Distribution, OperatorSpec};
use secant_sketch_core::rng::derive_seed;
use secant_sketch_core::verify::{self, DistortionOptions, Task};
use secant_sketch_core::{PointSet, TransformKind};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bench::{self, BenchConfig, M1Rule, MRule, Method};
use crate::io::{self as pio, Format};

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_INFEASIBLE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "secant-sketch", version, about = "Fast Johnson-Lindenstrauss embeddings: benchmarks, bounds and empirical checks")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Master seed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// JSON file with settings for the subcommand; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output file (stdout when absent).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Constants used by the bound calculators.
    #[arg(long, global = true, default_value = "unit", value_parser = ["unit", "empirical"])]
    pub constants_profile: String,
    /// Report infeasible bounds on stderr instead of exiting with 4.
    #[arg(long, global = true)]
    pub warn_infeasible: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Time and measure accuracy of embedding families on Gaussian point sets.
    Bench(BenchArgs),
    /// Evaluate an embedding-dimension bound.
    Bounds(BoundsArgs),
    /// Distortion of an operator over the secants of a point set.
    Distort(DistortArgs),
    /// Brute-force restricted isometry constants.
    Rip(RipArgs),
    /// Covering-number bounds for a manifold.
    Cover(CoverArgs),
    /// Draw a point set from a test geometry.
    Sample(SampleArgs),
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Ambient dimensions, comma separated.
    #[arg(long = "n", value_delimiter = ',')]
    pub sizes: Vec<usize>,
    /// Methods among sors, block, subgaussian.
    #[arg(long, value_delimiter = ',')]
    pub methods: Vec<Method>,
    /// Fixed embedding dimension.
    #[arg(long, conflicts_with = "m_fraction")]
    pub m: Option<usize>,
    /// Embedding dimension as a fraction of N.
    #[arg(long)]
    pub m_fraction: Option<f64>,
    /// Fixed intermediate dimension of the block method (default: floor(sqrt N)).
    #[arg(long)]
    pub m1: Option<usize>,
    #[arg(long)]
    pub transform: Option<TransformKind>,
    /// Entry law of the dense factors.
    #[arg(long)]
    pub dist: Option<Distribution>,
    /// Points per set.
    #[arg(long)]
    pub set_size: Option<usize>,
    #[arg(long)]
    pub reps: Option<usize>,
    /// Leave out timing columns (output is then reproducible byte for byte).
    #[arg(long)]
    pub no_timing: bool,
    #[arg(long)]
    pub no_warmup: bool,
    /// Emit the JSON report instead of CSV.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Bound name (see `bounds --list`) or one of the aliases 1.3, 1.4, 1.5.
    #[arg(long, required_unless_present = "list")]
    pub thm: Option<String>,
    #[arg(long)]
    pub list: bool,
    #[arg(long)]
    pub eps: Option<f64>,
    #[arg(long)]
    pub p: Option<f64>,
    /// Manifold complexity beta.
    #[arg(long)]
    pub beta: Option<f64>,
    /// Catalog manifold supplying beta and the width bound.
    #[arg(long)]
    pub manifold: Option<String>,
    /// Ambient dimension.
    #[arg(long = "n")]
    pub n: Option<usize>,
    /// Bounded-orthonormal-system constant.
    #[arg(long, default_value_t = std::f64::consts::SQRT_2)]
    pub k: f64,
    /// Cardinality of a finite set.
    #[arg(long)]
    pub card: Option<f64>,
    /// Sparsity.
    #[arg(long)]
    pub s: Option<u64>,
    /// Subspace dimension.
    #[arg(long)]
    pub d: Option<u64>,
    /// Gaussian width of the unit secants.
    #[arg(long)]
    pub width: Option<f64>,
    /// Level parameter of the multiresolution bound.
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
}

#[derive(Debug, Args)]
pub struct DistortArgs {
    /// Operator recipe: inline JSON or a JSON file.
    #[arg(long)]
    pub op: String,
    /// Point file (.bin, .csv, .json).
    #[arg(long, conflicts_with = "dataset")]
    pub points: Option<PathBuf>,
    /// Sample specification: inline JSON or a JSON file.
    #[arg(long)]
    pub dataset: Option<String>,
    #[arg(long)]
    pub format: Option<Format>,
    /// Adds an ε-JL verdict.
    #[arg(long)]
    pub eps: Option<f64>,
    /// Also evaluate through the materialized dense matrix and report the difference.
    #[arg(long)]
    pub oracle: bool,
    /// Secants sampled for large sets.
    #[arg(long, default_value_t = verify::DEFAULT_SECANT_SAMPLE)]
    pub sample_size: u64,
}

#[derive(Debug, Args)]
pub struct RipArgs {
    /// Operator recipe: inline JSON or a JSON file.
    #[arg(long)]
    pub op: String,
    /// Sparsity, or a range `lo..hi` (inclusive).
    #[arg(long)]
    pub s: String,
    /// Seeds to draw; reports a success rate for `ric <= eps`.
    #[arg(long, requires = "eps")]
    pub trials: Option<u64>,
    #[arg(long)]
    pub eps: Option<f64>,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    /// Catalog name (sphere2, disk2, circle, ...) or a descriptor JSON file.
    pub target: String,
    #[arg(long, value_delimiter = ',', required = true)]
    pub eps: Vec<f64>,
    /// Compare with a greedy cover of a sample.
    #[arg(long)]
    pub empirical: bool,
    #[arg(long, default_value_t = 5000)]
    pub samples: usize,
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    /// gaussian, sphere<d>, disk<d>, circle, interval, swissroll.
    #[arg(long, conflicts_with = "spec")]
    pub geometry: Option<Geometry>,
    /// Ambient dimension.
    #[arg(long = "n")]
    pub n: Option<usize>,
    #[arg(long)]
    pub count: Option<usize>,
    /// Full sample specification: inline JSON or a JSON file.
    #[arg(long)]
    pub spec: Option<String>,
    /// Place the geometry on the first coordinates instead of a random frame.
    #[arg(long)]
    pub canonical: bool,
    #[arg(long)]
    pub format: Option<Format>,
}

/// An error carrying its exit code.
#[derive(Debug)]
struct Exit(i32, anyhow::Error);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.1)
    }
}

impl std::error::Error for Exit {}

fn exit_code(err: &anyhow::Error) -> i32 {
    if let Some(Exit(code, _)) = err.downcast_ref::<Exit>() {
        return *code;
    }
    let guard = |e: &secant_sketch_core::Error| {
        matches!(e, secant_sketch_core::Error::TooManySupports { .. } | secant_sketch_core::Error::TooLarge { .. })
    };
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<secant_sketch_core::Error>() {
            if guard(e) {
                return EXIT_GUARD;
            }
        }
        if let Some(crate::Error::Core(e)) = cause.downcast_ref::<crate::Error>() {
            if guard(e) {
                return EXIT_GUARD;
            }
        }
    }
    EXIT_USAGE
}

/// Parses `args` and runs the subcommand, returning the process exit code.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    match run(&cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            exit_code(&e)
        }
    }
}

fn output<'a>(global: &Global, stdout: &'a mut dyn Write) -> anyhow::Result<Box<dyn Write + 'a>> {
    Ok(match &global.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )),
        None => Box::new(stdout),
    })
}

fn emit_json<T: Serialize>(global: &Global, stdout: &mut dyn Write, value: &T) -> anyhow::Result<()> {
    let mut w = output(global, stdout)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn config_value(global: &Global) -> anyhow::Result<Option<Value>> {
    global
        .config
        .as_ref()
        .map(|p| {
            let f = File::open(p).with_context(|| format!("cannot open {}", p.display()))?;
            Ok(serde_json::from_reader(io::BufReader::new(f))?)
        })
        .transpose()
}

pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> anyhow::Result<()> {
    let g = &cli.global;
    match &cli.command {
        Command::Bench(a) => cmd_bench(g, a, stdout),
        Command::Bounds(a) => cmd_bounds(g, a, stdout, stderr),
        Command::Distort(a) => cmd_distort(g, a, stdout),
        Command::Rip(a) => cmd_rip(g, a, stdout),
        Command::Cover(a) => cmd_cover(g, a, stdout, stderr),
        Command::Sample(a) => cmd_sample(g, a, stdout),
    }
}

/// Defaults, then the config file, then flags.
pub fn bench_config(g: &Global, a: &BenchArgs) -> anyhow::Result<BenchConfig> {
    let mut c: BenchConfig = match config_value(g)? {
        Some(v) => serde_json::from_value(v).context("bench config")?,
        None => BenchConfig::default(),
    };
    if !a.sizes.is_empty() {
        c.sizes = a.sizes.clone();
    }
    if !a.methods.is_empty() {
        c.methods = a.methods.clone();
    }
    if let Some(m) = a.m {
        c.m = MRule::Fixed(m);
    }
    if let Some(f) = a.m_fraction {
        c.m = MRule::Fraction(f);
    }
    if let Some(m1) = a.m1 {
        c.m1 = M1Rule::Fixed(m1);
    }
    if let Some(t) = a.transform {
        c.transform = t;
    }
    if let Some(d) = a.dist {
        c.dist = d;
    }
    if let Some(n) = a.set_size {
        c.set_size = n;
    }
    if let Some(r) = a.reps {
        c.repetitions = r;
    }
    if let Some(s) = g.seed {
        c.seed = s;
    }
    if a.no_timing {
        c.timing = false;
    }
    if a.no_warmup {
        c.warmup = false;
    }
    Ok(c)
}

fn cmd_bench(g: &Global, a: &BenchArgs, stdout: &mut dyn Write) -> anyhow::Result<()> {
    let config = bench_config(g, a)?;
    let report = bench::run(&config, g.threads)?;
    if a.json {
        return emit_json(g, stdout, &report);
    }
    let mut w = output(g, stdout)?;
    bench::write_csv(&mut w, &report)?;
    w.flush()?;
    Ok(())
}

fn catalog(name: &str) -> anyhow::Result<ManifoldDescriptor> {
    Catalog::get(name).ok_or_else(|| anyhow!("unknown manifold `{name}` (known: {})", Catalog::NAMES.join(", ")))
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> anyhow::Result<T> {
    v.ok_or_else(|| anyhow!("--{flag} is required for this bound"))
}

pub fn evaluate_bound(a: &BoundsArgs, reg: &ConstantsRegistry) -> anyhow::Result<BoundReport> {
    let kind: BoundKind = need(a.thm.as_deref(), "thm")?
        .parse()
        .map_err(|_| anyhow!("unknown bound `{}`", a.thm.as_deref().unwrap_or_default()))?;
    let manifold = a.manifold.as_deref().map(catalog).transpose()?;
    let beta = || -> anyhow::Result<f64> {
        match (a.beta, &manifold) {
            (Some(b), _) => Ok(b),
            (None, Some(m)) => Ok(geometry::secant_alpha(m)?.beta),
            _ => bail!("--beta or --manifold is required for this bound"),
        }
    };
    let width = || -> anyhow::Result<f64> {
        match (a.width, &manifold) {
            (Some(w), _) => Ok(w),
            (None, Some(m)) => Ok(geometry::secant_width_bound(m)?),
            _ => bail!("--width or --manifold is required for this bound"),
        }
    };
    let eps = need(a.eps, "eps")?;
    let p = need(a.p, "p")?;
    let n = || need(a.n, "n");
    let k = a.k;
    Ok(match kind {
        BoundKind::Subgaussian => bounds::m_subgaussian(beta()?, eps, p, reg)?,
        BoundKind::Sors => bounds::m_sors(beta()?, eps, p, n()?, k, reg)?,
        BoundKind::Block => bounds::m_block(beta()?, eps, p, n()?, reg)?,
        BoundKind::SubgaussianInfinite => bounds::m_subgaussian_infinite(width()?, eps, p, reg)?,
        BoundKind::SorsInfinite => bounds::m_sors_infinite(width()?, eps, p, n()?, k, reg)?,
        BoundKind::FiniteSubgaussian => bounds::m_finite_subgaussian(need(a.card, "card")?, eps, p, reg)?,
        BoundKind::FiniteSors => bounds::m_finite_sors(need(a.card, "card")?, eps, p, n()?, k, reg)?,
        BoundKind::SobRip => bounds::m_sob_rip(need(a.s, "s")?, eps, p, n()?, k, reg)?,
        BoundKind::SobMrip => bounds::m_sob_mrip(need(a.s, "s")?, eps, p, n()?, k, reg)?,
        BoundKind::Mrip => {
            let n = n()?;
            let f = |s, e, q| bounds::m_sob_rip(s, e, q, n, k, reg).map(|r| r.formula_value);
            bounds::m_mrip(&f, need(a.s, "s")?, eps, p, n, a.a)?
        }
        BoundKind::FastFinite => {
            bounds::m_fast_family(FastFamily::FiniteSets { cardinality: need(a.card, "card")? }, eps, p, n()?, k, reg)?
        }
        BoundKind::FastSubspace => bounds::m_fast_family(FastFamily::Subspace { d: need(a.d, "d")? }, eps, p, n()?, k, reg)?,
        BoundKind::FastRip => bounds::m_fast_family(FastFamily::Rip { s: need(a.s, "s")? }, eps, p, n()?, k, reg)?,
        BoundKind::FastMrip => bounds::m_fast_family(FastFamily::Mrip { s: need(a.s, "s")? }, eps, p, n()?, k, reg)?,
        BoundKind::FastInfinite => bounds::m_fast_family(FastFamily::Infinite { width: width()? }, eps, p, n()?, k, reg)?,
    })
}

fn cmd_bounds(g: &Global, a: &BoundsArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> anyhow::Result<()> {
    if a.list {
        let names: Vec<&str> = BoundKind::ALL.iter().map(|k| k.name()).collect();
        return emit_json(g, stdout, &names);
    }
    let mut reg = ConstantsRegistry::by_name(&g.constants_profile).expect("checked by clap");
    if let Some(v) = config_value(g)? {
        // {"constants": {"name": value}} overrides single constants
        if let Some(map) = v.get("constants").and_then(Value::as_object) {
            for (name, val) in map {
                let val = val.as_f64().ok_or_else(|| anyhow!("constant {name} is not a number"))?;
                reg = reg.with(name, val);
            }
        }
    }
    let report = evaluate_bound(a, &reg)?;
    writeln!(
        stderr,
        "{}: m >= {:.6} (ceil {}) from {}{}",
        report.bound,
        report.m_required,
        report.m_ceil,
        report.formula,
        report.m1.map(|m1| format!(", m1 = {m1}")).unwrap_or_default()
    )?;
    emit_json(g, stdout, &report)?;
    if !report.feasible {
        let msg = format!("bound infeasible: {}", report.feasibility_reason);
        if g.warn_infeasible {
            writeln!(stderr, "warning: {msg}")?;
        } else {
            return Err(Exit(EXIT_INFEASIBLE, anyhow!(msg)).into());
        }
    }
    Ok(())
}

fn seeded(spec: OperatorSpec, seed: Option<u64>) -> OperatorSpec {
    match seed {
        Some(s) => spec.with_seed(s),
        None => spec,
    }
}

fn load_dataset(g: &Global, points: &Option<PathBuf>, dataset: &Option<String>, format: Option<Format>) -> anyhow::Result<PointSet> {
    match (points, dataset) {
        (Some(path), _) => Ok(pio::load_points(path, format)?),
        (None, Some(spec)) => {
            let mut spec: SampleSpec = pio::json_arg(spec)?;
            if let Some(s) = g.seed {
                spec.seed = s;
            }
            Ok(datasets::sample(&spec)?)
        }
        (None, None) => bail!("give --points or --dataset"),
    }
}

fn cmd_distort(g: &Global, a: &DistortArgs, stdout: &mut dyn Write) -> anyhow::Result<()> {
    let spec = seeded(pio::json_arg(&a.op)?, g.seed);
    let op = spec.build()?;
    let points = load_dataset(g, &a.points, &a.dataset, a.format)?;
    let opts = DistortionOptions { sample_size: a.sample_size, seed: g.seed.unwrap_or(0), ..DistortionOptions::default() };
    let report = verify::distortion_with(&*op, &points, &opts)?;
    let mut out = json!({ "operator": spec, "points": points.len(), "report": report });
    if let Some(eps) = a.eps {
        out["epsilon"] = json!(eps);
        out["jl_verdict"] = json!(report.max_sq_err <= eps);
    }
    if a.oracle {
        let dense = materialize(&*op)?;
        let r = verify::distortion_with(&dense, &points, &opts)?;
        let diff = (r.max_norm_rel_err - report.max_norm_rel_err)
            .abs()
            .max((r.max_sq_err - report.max_sq_err).abs())
            .max((r.mean_norm_rel_err - report.mean_norm_rel_err).abs())
            .max((r.mean_sq_err - report.mean_sq_err).abs());
        out["oracle"] = json!({ "report": r, "max_abs_diff": diff });
    }
    emit_json(g, stdout, &out)
}

fn sparsities(s: &str) -> anyhow::Result<Vec<usize>> {
    let parse = |t: &str| t.trim().parse::<usize>().with_context(|| format!("bad sparsity `{t}`"));
    Ok(match s.split_once("..") {
        Some((lo, hi)) => (parse(lo)?..=parse(hi.trim_start_matches('='))?).collect(),
        None => vec![parse(s)?],
    })
}

fn cmd_rip(g: &Global, a: &RipArgs, stdout: &mut dyn Write) -> anyhow::Result<()> {
    let spec: OperatorSpec = pio::json_arg(&a.op)?;
    let ss = sparsities(&a.s)?;
    if let Some(trials) = a.trials {
        let eps = a.eps.expect("required by clap");
        let seed = g.seed.unwrap_or(0);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(g.threads).build()?;
        let mut rows = Vec::new();
        for &s in &ss {
            if trials < 30 {
                bail!("need at least 30 trials");
            }
            let outcomes: Vec<bool> = pool.install(|| {
                (0..trials)
                    .into_par_iter()
                    .map(|t| {
                        let f = |sd: u64| spec.with_seed(sd).build();
                        verify::trial(&f, Task::Sparsity(s), eps, derive_seed(seed, t))
                    })
                    .collect::<secant_sketch_core::Result<_>>()
            })?;
            let est = verify::estimate(outcomes.iter().filter(|&&b| b).count() as u64, trials);
            rows.push(json!({ "s": s, "epsilon": eps, "estimate": est }));
        }
        return emit_json(g, stdout, &json!({ "operator": spec, "success": rows }));
    }
    let op = seeded(spec.clone(), g.seed).build()?;
    let dense = materialize(&*op)?;
    let reports = ss
        .iter()
        .map(|&s| verify::ric_of_matrix(&dense, s))
        .collect::<secant_sketch_core::Result<Vec<_>>>()?;
    emit_json(g, stdout, &json!({ "operator": seeded(spec, g.seed), "ric": reports }))
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverRow {
    pub epsilon: f64,
    pub cover: f64,
    pub ln_cover: f64,
    pub cover_formula: String,
    pub cover_terms: Vec<f64>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub secant_cover: Option<f64>,
    pub secant_formula: Option<String>,
    pub width_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub greedy: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dominates: Option<bool>,
}

fn descriptor_arg(target: &str) -> anyhow::Result<ManifoldDescriptor> {
    if let Some(d) = Catalog::get(target) {
        return Ok(d);
    }
    if Path::new(target).exists() || target.trim_start().starts_with('{') {
        let d: ManifoldDescriptor = pio::json_arg(target)?;
        d.validate()?;
        return Ok(d);
    }
    bail!("`{target}` is neither a catalog name ({}) nor a descriptor file", Catalog::NAMES.join(", "))
}

pub fn cover_rows(desc: &ManifoldDescriptor, eps: &[f64]) -> anyhow::Result<Vec<CoverRow>> {
    let alpha = geometry::secant_alpha(desc).ok();
    let width = geometry::secant_width_bound(desc).ok();
    eps.iter()
        .map(|&e| {
            let c = geometry::cover(desc, e)?;
            let sc = geometry::secant_cover(desc, e).or_else(|_| geometry::secant_cover_special(desc, e)).ok();
            Ok(CoverRow {
                epsilon: e,
                cover: c.count,
                ln_cover: c.ln_count,
                cover_formula: c.formula,
                cover_terms: c.terms,
                alpha: alpha.map(|a| a.alpha),
                beta: alpha.map(|a| a.beta),
                secant_cover: sc.as_ref().map(|s| s.count),
                secant_formula: sc.map(|s| s.formula),
                width_bound: width,
                greedy: None,
                dominates: None,
            })
        })
        .collect()
}

fn cmd_cover(g: &Global, a: &CoverArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> anyhow::Result<()> {
    let desc = descriptor_arg(&a.target)?;
    let mut rows = cover_rows(&desc, &a.eps)?;
    if a.empirical {
        let geom: Geometry = desc
            .name
            .parse()
            .map_err(|_| anyhow!("no sampler for `{}`; --empirical needs a catalog manifold", desc.name))?;
        let spec = SampleSpec {
            embedding: datasets::Embedding::Canonical,
            ..SampleSpec::new(geom, desc.n, a.samples, g.seed.unwrap_or(0))
        };
        let pts = datasets::sample(&spec)?;
        for row in &mut rows {
            let size = verify::greedy_cover(&pts, row.epsilon)?.size;
            row.greedy = Some(size);
            row.dominates = Some(size as f64 <= row.cover);
        }
    }
    if a.csv {
        let mut w = output(g, stdout)?;
        writeln!(w, "epsilon,cover,alpha,beta,secant_cover,width_bound,greedy")?;
        let o = |v: Option<f64>| v.map(|v| format!("{v:?}")).unwrap_or_default();
        for r in &rows {
            writeln!(
                w,
                "{:?},{:?},{},{},{},{},{}",
                r.epsilon,
                r.cover,
                o(r.alpha),
                o(r.beta),
                o(r.secant_cover),
                o(r.width_bound),
                r.greedy.map(|v| v.to_string()).unwrap_or_default()
            )?;
        }
        w.flush()?;
    } else {
        emit_json(g, stdout, &json!({ "manifold": desc, "bounds": rows }))?;
    }
    if let Some(r) = rows.iter().find(|r| r.dominates == Some(false)) {
        writeln!(stderr, "greedy cover {} exceeds the bound {} at eps {}", r.greedy.unwrap(), r.cover, r.epsilon)?;
        bail!("empirical cover exceeds the theoretical bound");
    }
    Ok(())
}

fn cmd_sample(g: &Global, a: &SampleArgs, stdout: &mut dyn Write) -> anyhow::Result<()> {
    let mut spec = match (&a.spec, config_value(g)?) {
        (Some(s), _) => pio::json_arg::<SampleSpec>(s)?,
        (None, Some(v)) => serde_json::from_value(v).context("sample config")?,
        (None, None) => {
            let geometry = need(a.geometry, "geometry")?;
            let n = a.n.unwrap_or_else(|| geometry.local_dim(1));
            SampleSpec::new(geometry, n, a.count.unwrap_or(100), 0)
        }
    };
    if let Some(gm) = a.geometry {
        spec.geometry = gm;
    }
    if let Some(n) = a.n {
        spec.n = n;
    }
    if let Some(c) = a.count {
        spec.count = c;
    }
    if let Some(s) = g.seed {
        spec.seed = s;
    }
    if a.canonical {
        spec.embedding = datasets::Embedding::Canonical;
    }
    let pts = datasets::sample(&spec)?;
    let format = a.format.or_else(|| g.out.as_deref().and_then(Format::from_path)).unwrap_or(Format::Csv);
    let mut w = output(g, stdout)?;
    pio::write_points(&mut w, &pts, format)?;
    w.flush()?;
    Ok(())
}
