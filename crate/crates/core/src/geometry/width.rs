use alloc::vec::Vec;

use rand_distr::StandardNormal;
use rand::Rng as _;
use serde::{Deserialize, Serialize};

use crate::math::{dot, sqrt, KahanSum};
use crate::points::PointSet;
use crate::rng;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WidthEstimate {
    pub estimate: f64,
    pub std_error: f64,
    pub trials: usize,
}

/// Monte-Carlo estimate of `E sup_{x∈T} ⟨g, x⟩`.
///
/// Gaussian vectors are drawn in antithetic pairs `(g, −g)`; each pair
/// contributes the mean of its two suprema, and the standard error is taken
/// over pairs. Pair `i` uses its own sub-stream, so the result does not
/// depend on evaluation order.
pub fn width_montecarlo(points: &PointSet, trials: usize, seed: u64) -> Result<WidthEstimate> {
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    if trials < 2 {
        return Err(Error::Parameter("at least two trials are required"));
    }
    let pairs = trials / 2;
    let n = points.dim();
    let mut g = Vec::with_capacity(n);
    let mut sum = KahanSum::default();
    let mut sum_sq = KahanSum::default();
    for i in 0..pairs {
        let mut r = rng::stream(seed, rng::SUBSAMPLE, i as u64);
        g.clear();
        g.extend((0..n).map(|_| r.sample::<f64, _>(StandardNormal)));
        let (mut hi, mut lo) = (f64::NEG_INFINITY, f64::INFINITY);
        for x in points.iter() {
            let v = dot(&g, x);
            hi = hi.max(v);
            lo = lo.min(v);
        }
        // sup over -g is -inf over g
        let v = 0.5 * (hi - lo);
        sum.add(v);
        sum_sq.add(v * v);
    }
    let k = pairs as f64;
    let mean = sum.total() / k;
    let std_error = if pairs > 1 {
        let var = (sum_sq.total() - k * mean * mean).max(0.0) / (k - 1.0);
        sqrt(var / k)
    } else {
        f64::INFINITY
    };
    Ok(WidthEstimate { estimate: mean, std_error, trials: 2 * pairs })
}
