use alloc::vec;
use alloc::vec::Vec;

use rand::Rng as _;
use serde::{Deserialize, Serialize};

use super::{check_len, Family, LinearOperator};
use crate::math::{log2, sqrt};
use crate::rng;
use crate::transforms::{TransformKind, TransformPlan};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SorsParams {
    #[serde(rename = "N")]
    pub n: usize,
    pub m: usize,
    pub transform: TransformKind,
    pub seed: u64,
    /// Random sign diagonal `D`; without it the operator is a plain
    /// subsampled orthonormal basis matrix.
    #[serde(default = "yes")]
    pub signs: bool,
}

fn yes() -> bool {
    true
}

impl SorsParams {
    pub fn new(n: usize, m: usize, transform: TransformKind, seed: u64) -> Self {
        Self { n, m, transform, seed, signs: true }
    }
}

/// `√(N/m) · R · U · D`: `m` rows of an orthonormal transform drawn uniformly
/// with replacement, applied after a Rademacher sign flip.
#[derive(Debug, Clone)]
pub struct Sors {
    plan: TransformPlan,
    rows: Vec<usize>,
    signs: Option<Vec<f64>>,
    scale: f64,
    seed: u64,
}

impl Sors {
    pub fn new(p: SorsParams) -> Result<Self> {
        if p.m == 0 || p.n == 0 {
            return Err(Error::Parameter("operator dimensions must be positive"));
        }
        let plan = TransformPlan::new(p.transform, p.n)?;
        let mut r = rng::stream(p.seed, rng::ROWS, 0);
        let rows = (0..p.m).map(|_| r.random_range(0..p.n)).collect();
        let signs = p.signs.then(|| {
            let mut r = rng::stream(p.seed, rng::SIGNS, 0);
            (0..p.n).map(|_| if r.random::<bool>() { 1.0 } else { -1.0 }).collect()
        });
        Ok(Self { plan, rows, signs, scale: sqrt(p.n as f64 / p.m as f64), seed: p.seed })
    }

    /// Operator with an explicit row selection and optional sign diagonal.
    pub fn from_parts(
        transform: TransformKind,
        n: usize,
        rows: Vec<usize>,
        signs: Option<Vec<f64>>,
    ) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Parameter("at least one row is required"));
        }
        if let Some(&bad) = rows.iter().find(|&&r| r >= n) {
            return Err(Error::DimensionMismatch { expected: n, actual: bad });
        }
        if let Some(s) = &signs {
            check_len(n, s.len())?;
        }
        let plan = TransformPlan::new(transform, n)?;
        let scale = sqrt(n as f64 / rows.len() as f64);
        Ok(Self { plan, rows, signs, scale, seed: 0 })
    }

    pub fn selected_rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn signs(&self) -> Option<&[f64]> {
        self.signs.as_deref()
    }

    pub fn transform(&self) -> TransformKind {
        self.plan.kind()
    }

    /// Number of selected rows `m` (complex rows count once).
    pub fn m(&self) -> usize {
        self.rows.len()
    }
}

impl LinearOperator for Sors {
    fn rows(&self) -> usize {
        if self.plan.kind().is_complex() {
            2 * self.rows.len()
        } else {
            self.rows.len()
        }
    }

    fn cols(&self) -> usize {
        self.plan.len()
    }

    fn apply_into(&self, x: &[f64], out: &mut [f64]) -> Result<()> {
        check_len(self.cols(), x.len())?;
        check_len(self.rows(), out.len())?;
        let signed;
        let input = match &self.signs {
            Some(d) => {
                signed = x.iter().zip(d).map(|(a, s)| a * s).collect::<Vec<_>>();
                &signed[..]
            }
            None => x,
        };
        let mut full = vec![0.0; self.plan.output_len()];
        self.plan.apply_into(input, &mut full)?;
        if self.plan.kind().is_complex() {
            for (o, &r) in out.chunks_exact_mut(2).zip(&self.rows) {
                o[0] = self.scale * full[2 * r];
                o[1] = self.scale * full[2 * r + 1];
            }
        } else {
            for (o, &r) in out.iter_mut().zip(&self.rows) {
                *o = self.scale * full[r];
            }
        }
        Ok(())
    }

    fn flops(&self) -> u64 {
        let n = self.plan.len() as f64;
        (self.plan.kind().flop_constant() as f64 * n * log2(n)) as u64 + 2 * self.plan.len() as u64
    }

    fn family(&self) -> Family {
        Family::Sors
    }

    fn seed(&self) -> u64 {
        self.seed
    }
}
