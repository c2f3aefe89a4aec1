use alloc::vec;
use alloc::vec::Vec;

use rand::Rng as _;
use serde::{Deserialize, Serialize};

use super::dense::{Distribution, Matrix};
use super::sors::{Sors, SorsParams};
use super::{check_len, Family, LinearOperator};
use crate::math::{log2, sqrt};
use crate::rng;
use crate::transforms::TransformKind;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlockParams {
    #[serde(rename = "N")]
    pub n: usize,
    pub m1: usize,
    pub m2: usize,
    pub transform: TransformKind,
    #[serde(default)]
    pub dist: Distribution,
    pub seed: u64,
    #[serde(default = "yes")]
    pub use_outer_sign: bool,
    #[serde(default)]
    pub use_inner_sign: bool,
}

fn yes() -> bool {
    true
}

impl BlockParams {
    pub fn new(n: usize, m1: usize, m2: usize, transform: TransformKind, seed: u64) -> Self {
        Self {
            n,
            m1,
            m2,
            transform,
            dist: Distribution::Rademacher,
            seed,
            use_outer_sign: true,
            use_inner_sign: false,
        }
    }
}

/// Two-stage operator `E = (1/√m2) · B · C · D'`.
///
/// `C` is block diagonal with `⌈N/m1²⌉` copies of one `m1 × m1²` SORS matrix
/// (scale `√m1`); the last input chunk is zero-padded when `m1²` does not
/// divide `N`. `B` is an `m2 × m1⌈N/m1²⌉` matrix with i.i.d. entries and `D'`
/// an optional length-`N` sign diagonal.
#[derive(Debug, Clone)]
pub struct Block {
    params: BlockParams,
    inner: Sors,
    chunks: usize,
    // pre-scaled by 1/√m2
    mixer: Matrix,
    outer_signs: Option<Vec<f64>>,
}

impl Block {
    pub fn new(p: BlockParams) -> Result<Self> {
        if p.n == 0 || p.m1 == 0 || p.m2 == 0 {
            return Err(Error::Parameter("operator dimensions must be positive"));
        }
        if p.m2 > p.m1 {
            return Err(Error::Shape("m2 must not exceed m1"));
        }
        let block_len = p.m1.checked_mul(p.m1).ok_or(Error::Parameter("m1 too large"))?;
        let inner = Sors::new(SorsParams {
            n: block_len,
            m: p.m1,
            transform: p.transform,
            seed: p.seed,
            signs: p.use_inner_sign,
        })?;
        let chunks = p.n.div_ceil(block_len);
        let mid = p.m1 * chunks;
        if p.m2.saturating_mul(mid) > 1 << 28 {
            return Err(Error::TooLarge { rows: p.m2, cols: mid, limit: 1 << 28 });
        }
        let scale = 1.0 / sqrt(p.m2 as f64);
        let mut data = Vec::with_capacity(p.m2 * mid);
        for i in 0..p.m2 {
            let mut r = rng::stream(p.seed, rng::MIXER, i as u64);
            data.extend((0..mid).map(|_| p.dist.sample(&mut r) * scale));
        }
        let mixer = Matrix::from_row_major(p.m2, mid, data)?;
        let outer_signs = p.use_outer_sign.then(|| {
            let mut r = rng::stream(p.seed, rng::OUTER_SIGNS, 0);
            (0..p.n).map(|_| if r.random::<bool>() { 1.0 } else { -1.0 }).collect()
        });
        Ok(Self { params: p, inner, chunks, mixer, outer_signs })
    }

    pub fn params(&self) -> &BlockParams {
        &self.params
    }

    pub fn chunks(&self) -> usize {
        self.chunks
    }

    /// Length `m1 · ⌈N/m1²⌉` of `C x` (complex entries count once).
    pub fn intermediate_len(&self) -> usize {
        self.params.m1 * self.chunks
    }

    pub fn inner(&self) -> &Sors {
        &self.inner
    }

    /// Computes `C D' x` into `mid` (real length `inner.rows() · chunks`).
    pub fn apply_stage_one(&self, x: &[f64], mid: &mut [f64]) -> Result<()> {
        check_len(self.params.n, x.len())?;
        let block_len = self.params.m1 * self.params.m1;
        let out_len = self.inner.rows();
        check_len(out_len * self.chunks, mid.len())?;
        let mut chunk = vec![0.0; block_len];
        for (c, dst) in mid.chunks_exact_mut(out_len).enumerate() {
            let start = c * block_len;
            let end = (start + block_len).min(self.params.n);
            let src = &x[start..end];
            match &self.outer_signs {
                Some(d) => {
                    for ((o, v), s) in chunk.iter_mut().zip(src).zip(&d[start..end]) {
                        *o = v * s;
                    }
                }
                None => chunk[..src.len()].copy_from_slice(src),
            }
            chunk[src.len()..].iter_mut().for_each(|v| *v = 0.0);
            self.inner.apply_into(&chunk, dst)?;
        }
        Ok(())
    }
}

impl LinearOperator for Block {
    fn rows(&self) -> usize {
        if self.params.transform.is_complex() {
            2 * self.params.m2
        } else {
            self.params.m2
        }
    }

    fn cols(&self) -> usize {
        self.params.n
    }

    fn apply_into(&self, x: &[f64], out: &mut [f64]) -> Result<()> {
        check_len(self.rows(), out.len())?;
        let mut mid = vec![0.0; self.inner.rows() * self.chunks];
        self.apply_stage_one(x, &mut mid)?;
        if self.params.transform.is_complex() {
            for (i, o) in out.chunks_exact_mut(2).enumerate() {
                let (mut re, mut im) = (0.0, 0.0);
                for (b, z) in self.mixer.row(i).iter().zip(mid.chunks_exact(2)) {
                    re += b * z[0];
                    im += b * z[1];
                }
                o[0] = re;
                o[1] = im;
            }
            Ok(())
        } else {
            self.mixer.apply_into(&mid, out)
        }
    }

    fn flops(&self) -> u64 {
        let (m1, m2) = (self.params.m1 as f64, self.params.m2 as f64);
        let chunks = self.chunks as f64;
        let c = self.params.transform.flop_constant() as f64;
        let block = m1 * m1;
        (chunks * c * block * log2(block) + m2 * m1 * chunks) as u64
    }

    fn family(&self) -> Family {
        Family::BlockStructured
    }

    fn seed(&self) -> u64 {
        self.params.seed
    }
}
