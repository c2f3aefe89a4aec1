//! Complex FFT of any length: iterative radix-2 for powers of two, Bluestein's
//! chirp-z reduction otherwise.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use crate::math::{cos, sin, PI};

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub const ZERO: Self = Self { re: 0.0, im: 0.0 };

    #[inline]
    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    /// `exp(i·theta)`.
    #[inline]
    pub fn cis(theta: f64) -> Self {
        Self::new(cos(theta), sin(theta))
    }

    #[inline]
    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    #[inline]
    pub fn scale(self, s: f64) -> Self {
        Self::new(self.re * s, self.im * s)
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.re * self.re + self.im * self.im
    }
}

impl Add for Complex {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for Complex {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for Complex {
    type Output = Self;
    #[inline]
    fn mul(self, o: Self) -> Self {
        Self::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

#[derive(Debug, Clone)]
struct Radix2 {
    n: usize,
    // exp(-2πik/n) for k < n/2
    twiddles: Vec<Complex>,
    bitrev: Vec<u32>,
}

impl Radix2 {
    fn new(n: usize) -> Self {
        debug_assert!(n.is_power_of_two());
        let bits = n.trailing_zeros();
        let twiddles = (0..n / 2)
            .map(|k| Complex::cis(-2.0 * PI * k as f64 / n as f64))
            .collect();
        let bitrev = (0..n as u32)
            .map(|i| if bits == 0 { 0 } else { i.reverse_bits() >> (32 - bits) })
            .collect();
        Self { n, twiddles, bitrev }
    }

    fn run(&self, buf: &mut [Complex], inverse: bool) {
        let n = self.n;
        for i in 0..n {
            let j = self.bitrev[i] as usize;
            if i < j {
                buf.swap(i, j);
            }
        }
        let mut len = 2;
        while len <= n {
            let half = len / 2;
            let stride = n / len;
            for start in (0..n).step_by(len) {
                for k in 0..half {
                    let mut w = self.twiddles[k * stride];
                    if inverse {
                        w = w.conj();
                    }
                    let a = buf[start + k];
                    let b = buf[start + k + half] * w;
                    buf[start + k] = a + b;
                    buf[start + k + half] = a - b;
                }
            }
            len <<= 1;
        }
    }
}

#[derive(Debug, Clone)]
struct Bluestein {
    inner: Radix2,
    // exp(-iπk²/n)
    chirp: Vec<Complex>,
    // FFT of the conjugate chirp, wrapped to the padded length
    kernel: Vec<Complex>,
}

impl Bluestein {
    fn new(n: usize) -> Self {
        let m = (2 * n - 1).next_power_of_two();
        let inner = Radix2::new(m);
        let two_n = 2 * n as u128;
        let chirp: Vec<Complex> = (0..n)
            .map(|k| {
                // reduce k² mod 2n exactly before converting to an angle
                let r = (k as u128 * k as u128) % two_n;
                Complex::cis(-PI * r as f64 / n as f64)
            })
            .collect();
        let mut kernel = vec![Complex::ZERO; m];
        kernel[0] = chirp[0].conj();
        for k in 1..n {
            kernel[k] = chirp[k].conj();
            kernel[m - k] = chirp[k].conj();
        }
        inner.run(&mut kernel, false);
        Self { inner, chirp, kernel }
    }

    fn forward(&self, buf: &mut [Complex]) {
        let n = buf.len();
        let m = self.inner.n;
        let mut work = vec![Complex::ZERO; m];
        for k in 0..n {
            work[k] = buf[k] * self.chirp[k];
        }
        self.inner.run(&mut work, false);
        for (w, &h) in work.iter_mut().zip(&self.kernel) {
            *w = *w * h;
        }
        self.inner.run(&mut work, true);
        let scale = 1.0 / m as f64;
        for k in 0..n {
            buf[k] = work[k].scale(scale) * self.chirp[k];
        }
    }
}

#[derive(Debug, Clone)]
enum Engine {
    Radix2(Radix2),
    Bluestein(Bluestein),
}

/// Unnormalized DFT plan: `forward` computes `X_k = Σ x_j e^{-2πijk/n}`,
/// `inverse` the same with `+i` (no `1/n`).
#[derive(Debug, Clone)]
pub struct Fft {
    n: usize,
    engine: Engine,
}

impl Fft {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let engine = if n.is_power_of_two() {
            Engine::Radix2(Radix2::new(n))
        } else {
            Engine::Bluestein(Bluestein::new(n))
        };
        Self { n, engine }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn forward(&self, buf: &mut [Complex]) {
        assert_eq!(buf.len(), self.n);
        match &self.engine {
            Engine::Radix2(r) => r.run(buf, false),
            Engine::Bluestein(b) => b.forward(buf),
        }
    }

    pub fn inverse(&self, buf: &mut [Complex]) {
        assert_eq!(buf.len(), self.n);
        match &self.engine {
            Engine::Radix2(r) => r.run(buf, true),
            Engine::Bluestein(b) => {
                for v in buf.iter_mut() {
                    *v = v.conj();
                }
                b.forward(buf);
                for v in buf.iter_mut() {
                    *v = v.conj();
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn naive(x: &[Complex]) -> Vec<Complex> {
        let n = x.len();
        (0..n)
            .map(|k| {
                x.iter().enumerate().fold(Complex::ZERO, |acc, (j, &v)| {
                    let r = (j * k) % n;
                    acc + v * Complex::cis(-2.0 * PI * r as f64 / n as f64)
                })
            })
            .collect()
    }

    #[test]
    fn matches_naive_dft() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for n in [1usize, 2, 3, 5, 8, 12, 17, 32, 100] {
            let x: Vec<Complex> = (0..n)
                .map(|_| Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect();
            let want = naive(&x);
            let mut got = x.clone();
            let fft = Fft::new(n);
            fft.forward(&mut got);
            for (a, b) in got.iter().zip(&want) {
                assert!((*a - *b).norm_sq().sqrt() < 1e-10, "n={n}");
            }
            fft.inverse(&mut got);
            for (a, b) in got.iter().zip(&x) {
                assert!((a.scale(1.0 / n as f64) - *b).norm_sq().sqrt() < 1e-12, "n={n}");
            }
        }
    }
}
