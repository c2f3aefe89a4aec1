//! Empirical checks of embedding quality: secant distortion, ε-JL verdicts,
//! brute-force restricted isometry constants, greedy covers and success
//! rates over seeds.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng as _;
use serde::{Deserialize, Serialize};

use crate::linalg::singular_values;
use crate::math::{norm2, sqrt, KahanSum};
use crate::operators::{materialize, LinearOperator};
use crate::points::PointSet;
use crate::rng::{self, derive_seed};
use crate::{Error, Result};

/// Number of points up to which every secant is evaluated.
pub const EXACT_POINT_LIMIT: usize = 2000;
/// Default number of sampled secants above [`EXACT_POINT_LIMIT`].
pub const DEFAULT_SECANT_SAMPLE: u64 = 1_000_000;
/// Largest number of supports [`ric_bruteforce`] will enumerate.
pub const SUPPORT_LIMIT: u64 = 1_000_000;
/// 97.5% standard normal quantile.
pub const Z_95: f64 = 1.959963984540054;

/// Both distortion metrics over the unit secants of a point set.
///
/// `max_norm_rel_err` is `|‖Au‖ − 1|` and `max_sq_err` is `|‖Au‖² − 1|`,
/// maximized over unit secants `u`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistortionReport {
    pub max_norm_rel_err: f64,
    pub max_sq_err: f64,
    pub mean_norm_rel_err: f64,
    pub mean_sq_err: f64,
    pub secants: u64,
    pub exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistortionOptions {
    pub exact_point_limit: usize,
    pub sample_size: u64,
    pub seed: u64,
}

impl Default for DistortionOptions {
    fn default() -> Self {
        Self { exact_point_limit: EXACT_POINT_LIMIT, sample_size: DEFAULT_SECANT_SAMPLE, seed: 0 }
    }
}

fn images(op: &dyn LinearOperator, points: &PointSet) -> Result<Vec<Vec<f64>>> {
    if points.dim() != op.cols() {
        return Err(Error::DimensionMismatch { expected: op.cols(), actual: points.dim() });
    }
    points.iter().map(|x| op.apply(x)).collect()
}

struct Accumulator {
    max_norm: f64,
    max_sq: f64,
    sum_norm: KahanSum,
    sum_sq: KahanSum,
    count: u64,
}

impl Accumulator {
    fn new() -> Self {
        Self { max_norm: 0.0, max_sq: 0.0, sum_norm: KahanSum::default(), sum_sq: KahanSum::default(), count: 0 }
    }

    /// Adds the secant between points `x`, `y` with images `ax`, `ay`.
    fn push(&mut self, x: &[f64], y: &[f64], ax: &[f64], ay: &[f64]) {
        let len = sqrt(x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum());
        if len == 0.0 {
            return;
        }
        let r = sqrt(ax.iter().zip(ay).map(|(a, b)| (a - b) * (a - b)).sum()) / len;
        let e_norm = (r - 1.0).abs();
        let e_sq = (r * r - 1.0).abs();
        self.max_norm = self.max_norm.max(e_norm);
        self.max_sq = self.max_sq.max(e_sq);
        self.sum_norm.add(e_norm);
        self.sum_sq.add(e_sq);
        self.count += 1;
    }

    fn finish(self, exact: bool) -> Result<DistortionReport> {
        if self.count == 0 {
            return Err(Error::TooFewPoints);
        }
        let n = self.count as f64;
        Ok(DistortionReport {
            max_norm_rel_err: self.max_norm,
            max_sq_err: self.max_sq,
            mean_norm_rel_err: self.sum_norm.total() / n,
            mean_sq_err: self.sum_sq.total() / n,
            secants: self.count,
            exact,
        })
    }
}

/// Distortion over every secant (up to [`EXACT_POINT_LIMIT`] points) or a
/// seeded sample of [`DEFAULT_SECANT_SAMPLE`] secants.
pub fn distortion(op: &dyn LinearOperator, points: &PointSet) -> Result<DistortionReport> {
    distortion_with(op, points, &DistortionOptions::default())
}

pub fn distortion_with(
    op: &dyn LinearOperator,
    points: &PointSet,
    opts: &DistortionOptions,
) -> Result<DistortionReport> {
    let n = points.len();
    if n < 2 {
        return Err(Error::TooFewPoints);
    }
    // A(x − y) = Ax − Ay, so each point is mapped once.
    let img = images(op, points)?;
    let mut acc = Accumulator::new();
    if n <= opts.exact_point_limit {
        for i in 0..n {
            for j in i + 1..n {
                acc.push(points.point(i), points.point(j), &img[i], &img[j]);
            }
        }
        acc.finish(true)
    } else {
        let mut rng = rng::stream(opts.seed, rng::SUBSAMPLE, 0);
        for _ in 0..opts.sample_size {
            let i = rng.random_range(0..n);
            let mut j = rng.random_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            acc.push(points.point(i), points.point(j), &img[i], &img[j]);
        }
        acc.finish(false)
    }
}

/// `(max, mean)` of `|‖Ax‖ − ‖x‖| / ‖x‖` over the points themselves.
pub fn point_norm_errors(op: &dyn LinearOperator, points: &PointSet) -> Result<(f64, f64)> {
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    let img = images(op, points)?;
    let mut max = 0.0f64;
    let mut sum = KahanSum::default();
    for (x, ax) in points.iter().zip(&img) {
        let nx = norm2(x);
        if nx == 0.0 {
            continue;
        }
        let e = (norm2(ax) - nx).abs() / nx;
        max = max.max(e);
        sum.add(e);
    }
    Ok((max, sum.total() / points.len() as f64))
}

/// Whether `op` is an ε-JL embedding of the point set.
pub fn jl_verdict(op: &dyn LinearOperator, points: &PointSet, epsilon: f64) -> Result<bool> {
    Ok(distortion(op, points)?.max_sq_err <= epsilon)
}

/// Restricted isometry constant of one order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RicReport {
    pub s: usize,
    pub ric: f64,
    pub support: Vec<usize>,
    pub supports: u64,
}

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let s = idx.len();
    let mut i = s;
    while i > 0 && idx[i - 1] == n - s + i - 1 {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    idx[i - 1] += 1;
    for j in i..s {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

/// Exact RIC of order `s` by enumerating every support.
pub fn ric_bruteforce(op: &dyn LinearOperator, s: usize) -> Result<RicReport> {
    let a = materialize(op)?;
    ric_of_matrix(&a, s)
}

pub fn ric_of_matrix(a: &crate::Matrix, s: usize) -> Result<RicReport> {
    let n = a.ncols();
    if s == 0 || s > n {
        return Err(Error::Parameter("sparsity must lie in [1, N]"));
    }
    let count = binomial(n as u64, s as u64);
    if count > SUPPORT_LIMIT {
        return Err(Error::TooManySupports { count: count as f64, limit: SUPPORT_LIMIT as f64 });
    }
    let mut idx: Vec<usize> = (0..s).collect();
    let mut best = (-1.0f64, idx.clone());
    loop {
        let sv = singular_values(&a.select_columns(&idx));
        let hi = sv[0] * sv[0] - 1.0;
        let lo = 1.0 - sv[s.min(sv.len()) - 1].powi(2);
        // fewer rows than s: the smallest singular value is zero
        let lo = if a.nrows() < s { 1.0 } else { lo };
        let e = hi.max(lo);
        if e > best.0 {
            best = (e, idx.clone());
        }
        if !next_combination(&mut idx, n) {
            break;
        }
    }
    Ok(RicReport { s, ric: best.0, support: best.1, supports: count })
}

/// Success count with a 95% Wilson score interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuccessEstimate {
    pub successes: u64,
    pub trials: u64,
    pub rate: f64,
    pub lower: f64,
    pub upper: f64,
}

/// Wilson score interval for `k` successes in `n` trials.
pub fn wilson(k: u64, n: u64, z: f64) -> (f64, f64) {
    let nf = n as f64;
    let p = k as f64 / nf;
    let z2 = z * z;
    let denom = 1.0 + z2 / nf;
    let centre = (p + z2 / (2.0 * nf)) / denom;
    let half = z * sqrt(p * (1.0 - p) / nf + z2 / (4.0 * nf * nf)) / denom;
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

/// What a trial operator must achieve.
#[derive(Debug, Clone, Copy)]
pub enum Task<'a> {
    /// ε-JL embedding of a point set.
    Points(&'a PointSet),
    /// RIC of the given order at most ε.
    Sparsity(usize),
}

pub type Factory<'a> = dyn Fn(u64) -> Result<Box<dyn LinearOperator>> + 'a;

/// Fraction of seeds `derive_seed(seed, t)`, `t < trials`, for which the
/// operator built by `factory` passes `task` at level `epsilon`.
pub fn success_probability(
    factory: &Factory<'_>,
    task: Task<'_>,
    epsilon: f64,
    trials: u64,
    seed: u64,
) -> Result<SuccessEstimate> {
    if trials < 30 {
        return Err(Error::Parameter("need at least 30 trials"));
    }
    let mut successes = 0;
    for t in 0..trials {
        if trial(factory, task, epsilon, derive_seed(seed, t))? {
            successes += 1;
        }
    }
    Ok(estimate(successes, trials))
}

/// Outcome of a single seed.
pub fn trial(factory: &Factory<'_>, task: Task<'_>, epsilon: f64, seed: u64) -> Result<bool> {
    let op = factory(seed)?;
    Ok(match task {
        Task::Points(points) => jl_verdict(&*op, points, epsilon)?,
        Task::Sparsity(s) => ric_bruteforce(&*op, s)?.ric <= epsilon,
    })
}

pub fn estimate(successes: u64, trials: u64) -> SuccessEstimate {
    let (lower, upper) = wilson(successes, trials, Z_95);
    SuccessEstimate { successes, trials, rate: successes as f64 / trials as f64, lower, upper }
}

/// Centres chosen by farthest-point traversal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GreedyCover {
    pub centers: Vec<usize>,
    pub size: usize,
    /// Largest distance from a point to its nearest centre.
    pub radius: f64,
}

/// Farthest-point greedy ε-cover of a finite set, centres drawn from the set.
pub fn greedy_cover(points: &PointSet, epsilon: f64) -> Result<GreedyCover> {
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    if !(epsilon >= 0.0) {
        return Err(Error::Parameter("epsilon must be nonnegative"));
    }
    let dist = |a: &[f64], b: &[f64]| sqrt(a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum());
    let n = points.len();
    let mut nearest = vec![f64::INFINITY; n];
    let mut centers = Vec::new();
    let mut next = 0;
    loop {
        centers.push(next);
        let c = points.point(next);
        let mut far = (0.0f64, next);
        for (i, d) in nearest.iter_mut().enumerate() {
            *d = d.min(dist(c, points.point(i)));
            if *d > far.0 {
                far = (*d, i);
            }
        }
        if far.0 <= epsilon {
            let size = centers.len();
            return Ok(GreedyCover { centers, size, radius: far.0 });
        }
        next = far.1;
    }
}

fn canonical_sign(u: &mut [f64]) {
    if let Some(&first) = u.iter().find(|v| v.abs() > 1e-12) {
        if first < 0.0 {
            u.iter_mut().for_each(|v| *v = -*v);
        }
    }
}

fn key(u: &[f64]) -> Vec<i64> {
    u.iter().map(|v| (v * 1e9).round() as i64).collect()
}

/// Seeded sample of at most `count` unit secants, identified up to sign.
///
/// When `count` covers every pair all pairs are used; otherwise pairs are
/// drawn uniformly without repetition.
pub fn secant_sample(points: &PointSet, count: usize, seed: u64) -> Result<PointSet> {
    let n = points.len();
    let pairs = n.saturating_mul(n.saturating_sub(1)) / 2;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut add = |i: usize, j: usize, out: &mut Vec<f64>| {
        let mut u: Vec<f64> = points.point(i).iter().zip(points.point(j)).map(|(a, b)| a - b).collect();
        let len = norm2(&u);
        if len == 0.0 {
            return;
        }
        u.iter_mut().for_each(|v| *v /= len);
        canonical_sign(&mut u);
        if seen.insert(key(&u)) {
            out.extend_from_slice(&u);
        }
    };
    if count >= pairs {
        for i in 0..n {
            for j in i + 1..n {
                add(i, j, &mut out);
            }
        }
    } else {
        let mut rng = rng::stream(seed, rng::SAMPLE, 0);
        let mut used = BTreeSet::new();
        while used.len() < count {
            let i = rng.random_range(0..n);
            let j = rng.random_range(0..n);
            if i != j && used.insert((i.min(j), i.max(j))) {
                add(i.min(j), i.max(j), &mut out);
            }
        }
    }
    if out.is_empty() {
        return Err(Error::TooFewPoints);
    }
    PointSet::new(points.dim(), out)
}
