use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::{check_len, Family, LinearOperator};
use crate::math::sqrt;
use crate::rng;
use crate::{Error, Result};

/// Entry distribution of a sub-gaussian matrix (mean 0, variance 1).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Distribution {
    Gaussian,
    #[default]
    Rademacher,
}

impl Distribution {
    pub fn sample<R: rand::Rng + ?Sized>(self, rng: &mut R) -> f64 {
        match self {
            Self::Gaussian => rng.sample(StandardNormal),
            Self::Rademacher => {
                if rng.random::<bool>() {
                    1.0
                } else {
                    -1.0
                }
            }
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Gaussian => "gaussian",
            Self::Rademacher => "rademacher",
        })
    }
}

impl FromStr for Distribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gaussian" | "normal" => Ok(Self::Gaussian),
            "rademacher" | "sign" => Ok(Self::Rademacher),
            _ => Err(Error::Parameter("unknown distribution")),
        }
    }
}

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        check_len(rows * cols, data.len())?;
        Ok(Self { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Submatrix made of the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |i, k| self.get(i, cols[k]))
    }

    /// `Aᵀ A`.
    pub fn gram(&self) -> Self {
        let n = self.cols;
        let mut g = Self::zeros(n, n);
        for r in 0..self.rows {
            let row = self.row(r);
            for i in 0..n {
                let ri = row[i];
                for j in i..n {
                    let v = g.get(i, j) + ri * row[j];
                    g.set(i, j, v);
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                let v = g.get(j, i);
                g.set(i, j, v);
            }
        }
        g
    }

    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        let mut out = vec![0.0; self.rows];
        self.apply_into(x, &mut out)?;
        Ok(out)
    }

    pub fn scale_in_place(&mut self, s: f64) {
        self.data.iter_mut().for_each(|v| *v *= s);
    }
}

impl LinearOperator for Matrix {
    fn rows(&self) -> usize {
        self.rows
    }

    fn cols(&self) -> usize {
        self.cols
    }

    fn apply_into(&self, x: &[f64], out: &mut [f64]) -> Result<()> {
        check_len(self.cols, x.len())?;
        check_len(self.rows, out.len())?;
        for (o, row) in out.iter_mut().zip(self.data.chunks_exact(self.cols.max(1))) {
            *o = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
        Ok(())
    }

    fn flops(&self) -> u64 {
        2 * (self.rows * self.cols) as u64
    }

    fn family(&self) -> Family {
        Family::Dense
    }
}

/// Dense `m × N` matrix with i.i.d. entries, scaled by `1/√m`.
#[derive(Debug, Clone)]
pub struct SubGaussian {
    matrix: Matrix,
    dist: Distribution,
    seed: u64,
}

impl SubGaussian {
    pub fn new(m: usize, n: usize, dist: Distribution, seed: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Parameter("operator dimensions must be positive"));
        }
        if m.saturating_mul(n) > 1 << 28 {
            return Err(Error::TooLarge { rows: m, cols: n, limit: 1 << 28 });
        }
        let scale = 1.0 / sqrt(m as f64);
        let mut data = Vec::with_capacity(m * n);
        for i in 0..m {
            let mut r = rng::stream(seed, rng::DENSE, i as u64);
            data.extend((0..n).map(|_| dist.sample(&mut r) * scale));
        }
        Ok(Self { matrix: Matrix { rows: m, cols: n, data }, dist, seed })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn distribution(&self) -> Distribution {
        self.dist
    }
}

impl LinearOperator for SubGaussian {
    fn rows(&self) -> usize {
        self.matrix.rows
    }

    fn cols(&self) -> usize {
        self.matrix.cols
    }

    fn apply_into(&self, x: &[f64], out: &mut [f64]) -> Result<()> {
        self.matrix.apply_into(x, out)
    }

    fn flops(&self) -> u64 {
        self.matrix.flops()
    }

    fn family(&self) -> Family {
        Family::SubGaussian
    }

    fn seed(&self) -> u64 {
        self.seed
    }
}
