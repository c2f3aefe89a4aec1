//! Orthonormal transforms: Walsh–Hadamard, DCT-II and the complex DFT.
//!
//! Every transform is normalized so its matrix `U` is orthonormal (unitary
//! for the DFT). The complex DFT maps a real vector of length `n` to `n`
//! complex values, returned interleaved as `[re_0, im_0, re_1, im_1, ...]`,
//! so its output has length `2n` and the Euclidean norm is preserved.

mod fft;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

pub use fft::{Complex, Fft};

use crate::math::{cos, sin, sqrt, PI, SQRT_2};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TransformKind {
    Hadamard,
    Dct2,
    #[serde(alias = "complexdft", alias = "fft")]
    Dft,
}

impl TransformKind {
    pub const ALL: [TransformKind; 3] = [Self::Hadamard, Self::Dct2, Self::Dft];

    pub fn name(self) -> &'static str {
        match self {
            Self::Hadamard => "hadamard",
            Self::Dct2 => "dct2",
            Self::Dft => "dft",
        }
    }

    pub fn is_complex(self) -> bool {
        matches!(self, Self::Dft)
    }

    /// Whether a plan of length `n` can be built.
    pub fn accepts(self, n: usize) -> bool {
        n >= 1 && (self != Self::Hadamard || n.is_power_of_two())
    }

    /// Known bound on `√n · max |u_ij|`.
    pub fn bos_constant(self, n: usize) -> f64 {
        match self {
            Self::Dct2 if n > 1 => SQRT_2,
            _ => 1.0,
        }
    }

    /// Per-element constant `c_t` of the `c_t · n · log2 n` cost model.
    pub fn flop_constant(self) -> u64 {
        match self {
            Self::Hadamard | Self::Dct2 => 5,
            Self::Dft => 10,
        }
    }

    /// Real output length for an input of length `n`.
    pub fn output_len(self, n: usize) -> usize {
        if self.is_complex() {
            2 * n
        } else {
            n
        }
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TransformKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hadamard" | "wht" => Ok(Self::Hadamard),
            "dct" | "dct2" => Ok(Self::Dct2),
            "dft" | "fft" | "complexdft" => Ok(Self::Dft),
            _ => Err(Error::Parameter("unknown transform kind")),
        }
    }
}

#[derive(Debug, Clone)]
enum Kernel {
    Hadamard,
    Dct { fft: Fft, twiddle: Vec<Complex> },
    Dft { fft: Fft },
}

/// A reusable transform of fixed kind and length. Immutable and `Sync`.
#[derive(Debug, Clone)]
pub struct TransformPlan {
    kind: TransformKind,
    n: usize,
    kernel: Kernel,
}

impl TransformPlan {
    pub fn new(kind: TransformKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidLength { len: n, reason: "length must be positive" });
        }
        let kernel = match kind {
            TransformKind::Hadamard => {
                if !n.is_power_of_two() {
                    return Err(Error::InvalidLength {
                        len: n,
                        reason: "Hadamard length must be a power of two",
                    });
                }
                Kernel::Hadamard
            }
            TransformKind::Dct2 => Kernel::Dct {
                fft: Fft::new(n),
                twiddle: (0..n)
                    .map(|k| Complex::cis(-PI * k as f64 / (2 * n) as f64))
                    .collect(),
            },
            TransformKind::Dft => Kernel::Dft { fft: Fft::new(n) },
        };
        Ok(Self { kind, n, kernel })
    }

    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn output_len(&self) -> usize {
        self.kind.output_len(self.n)
    }

    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        let mut out = vec![0.0; self.output_len()];
        self.apply_into(x, &mut out)?;
        Ok(out)
    }

    /// Writes `U x` into `out`, which must have length [`output_len`](Self::output_len).
    pub fn apply_into(&self, x: &[f64], out: &mut [f64]) -> Result<()> {
        check_len(self.n, x.len())?;
        check_len(self.output_len(), out.len())?;
        let n = self.n;
        match &self.kernel {
            Kernel::Hadamard => {
                out.copy_from_slice(x);
                fwht(out);
                let s = 1.0 / sqrt(n as f64);
                out.iter_mut().for_each(|v| *v *= s);
            }
            Kernel::Dct { fft, twiddle } => {
                // Makhoul: even samples ascending, odd samples descending
                let mut buf = vec![Complex::ZERO; n];
                for k in 0..n.div_ceil(2) {
                    buf[k].re = x[2 * k];
                }
                for k in 0..n / 2 {
                    buf[n - 1 - k].re = x[2 * k + 1];
                }
                fft.forward(&mut buf);
                let (s0, s) = dct_scales(n);
                for k in 0..n {
                    let y = (twiddle[k] * buf[k]).re;
                    out[k] = y * if k == 0 { s0 } else { s };
                }
            }
            Kernel::Dft { fft } => {
                let mut buf: Vec<Complex> = x.iter().map(|&v| Complex::new(v, 0.0)).collect();
                fft.forward(&mut buf);
                let s = 1.0 / sqrt(n as f64);
                for (k, c) in buf.iter().enumerate() {
                    out[2 * k] = c.re * s;
                    out[2 * k + 1] = c.im * s;
                }
            }
        }
        Ok(())
    }

    /// Applies `U*`. For the DFT the input is interleaved complex of length
    /// `2n` and the real part of the result is returned.
    pub fn inverse(&self, y: &[f64]) -> Result<Vec<f64>> {
        check_len(self.output_len(), y.len())?;
        let n = self.n;
        let mut out = vec![0.0; n];
        match &self.kernel {
            Kernel::Hadamard => {
                out.copy_from_slice(y);
                fwht(&mut out);
                let s = 1.0 / sqrt(n as f64);
                out.iter_mut().for_each(|v| *v *= s);
            }
            Kernel::Dct { fft, twiddle } => {
                let (s0, s) = dct_scales(n);
                let z = |k: usize| if k == 0 { y[0] / s0 } else { y[k] / s };
                let mut buf = vec![Complex::ZERO; n];
                for k in 0..n {
                    let zk = z(k);
                    let zr = if k == 0 { 0.0 } else { z(n - k) };
                    buf[k] = twiddle[k].conj() * Complex::new(zk, -zr);
                }
                fft.inverse(&mut buf);
                let inv = 1.0 / n as f64;
                for k in 0..n.div_ceil(2) {
                    out[2 * k] = buf[k].re * inv;
                }
                for k in 0..n / 2 {
                    out[2 * k + 1] = buf[n - 1 - k].re * inv;
                }
            }
            Kernel::Dft { fft } => {
                let mut buf: Vec<Complex> =
                    y.chunks_exact(2).map(|c| Complex::new(c[0], c[1])).collect();
                fft.inverse(&mut buf);
                let s = 1.0 / sqrt(n as f64);
                for (o, c) in out.iter_mut().zip(&buf) {
                    *o = c.re * s;
                }
            }
        }
        Ok(out)
    }

    /// `√n · max |u_ij|`, measured by transforming every basis vector.
    pub fn measured_bos_constant(&self) -> f64 {
        let n = self.n;
        let mut e = vec![0.0; n];
        let mut col = vec![0.0; self.output_len()];
        let mut max = 0.0f64;
        for j in 0..n {
            e[j] = 1.0;
            self.apply_into(&e, &mut col).expect("lengths match");
            e[j] = 0.0;
            if self.kind.is_complex() {
                for c in col.chunks_exact(2) {
                    max = max.max(sqrt(c[0] * c[0] + c[1] * c[1]));
                }
            } else {
                for &v in &col {
                    max = max.max(v.abs());
                }
            }
        }
        sqrt(n as f64) * max
    }

    /// Cost-model flop count of one application.
    pub fn flops(&self) -> u64 {
        let n = self.n as f64;
        (self.kind.flop_constant() as f64 * n * crate::math::log2(n)) as u64
    }
}

fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, actual })
    }
}

fn dct_scales(n: usize) -> (f64, f64) {
    (sqrt(1.0 / n as f64), sqrt(2.0 / n as f64))
}

/// Unnormalized in-place fast Walsh–Hadamard transform in natural order.
pub fn fwht(x: &mut [f64]) {
    let n = x.len();
    debug_assert!(n.is_power_of_two());
    let mut h = 1;
    while h < n {
        for block in x.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (u, v) = (*a, *b);
                *a = u + v;
                *b = u - v;
            }
        }
        h *= 2;
    }
}

/// Dense `O(n²)` evaluation of the orthonormal transform straight from its
/// entry formula. Shares no code with [`TransformPlan`].
pub fn apply_naive(kind: TransformKind, x: &[f64]) -> Result<Vec<f64>> {
    let n = x.len();
    if !kind.accepts(n) {
        return Err(Error::InvalidLength { len: n, reason: "unsupported length" });
    }
    let nf = n as f64;
    let out = match kind {
        TransformKind::Hadamard => {
            let s = 1.0 / sqrt(nf);
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if (i & j).count_ones() % 2 == 0 { x[j] } else { -x[j] })
                        .sum::<f64>()
                        * s
                })
                .collect()
        }
        TransformKind::Dct2 => (0..n)
            .map(|k| {
                let c = if k == 0 { sqrt(1.0 / nf) } else { sqrt(2.0 / nf) };
                c * (0..n)
                    .map(|j| x[j] * cos(PI * ((2 * j + 1) * k) as f64 / (2.0 * nf)))
                    .sum::<f64>()
            })
            .collect(),
        TransformKind::Dft => {
            let s = 1.0 / sqrt(nf);
            let mut out = Vec::with_capacity(2 * n);
            for k in 0..n {
                let (mut re, mut im) = (0.0, 0.0);
                for (j, &v) in x.iter().enumerate() {
                    let theta = -2.0 * PI * ((j * k) % n) as f64 / nf;
                    re += v * cos(theta);
                    im += v * sin(theta);
                }
                out.push(re * s);
                out.push(im * s);
            }
            out
        }
    };
    Ok(out)
}
