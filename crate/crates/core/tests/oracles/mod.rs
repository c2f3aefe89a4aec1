//! Independent reference implementations used by the integration and
//! acceptance tests. Nothing here shares code with the library paths it
//! checks.
#![allow(dead_code)]

pub mod formulas {
    //! Bound formulas written as direct products of their factors.

    use std::f64::consts::E;

    fn sq(x: f64) -> f64 {
        x * x
    }

    fn ln_clamped(x: f64) -> f64 {
        x.max(E).ln()
    }

    pub fn subgaussian(c: f64, beta: f64, eps: f64, p: f64) -> f64 {
        c * sq(beta.ln().sqrt() + (2.0 / p).ln().sqrt()) / sq(eps)
    }

    pub fn subgaussian_infinite(c: f64, w: f64, eps: f64, p: f64) -> f64 {
        c * sq(w + (2.0 / p).ln().sqrt()) / sq(eps)
    }

    pub fn sors(c0: f64, c1: f64, q: f64, eps: f64, p: f64, n: f64, k: f64) -> f64 {
        let l2p = (2.0 / p).ln();
        c0 / sq(eps) * sq(k) * q * sq(ln_clamped(c1 * q * l2p * sq(k) / sq(eps))) * l2p
            * (2.0 * E * n / p).ln()
    }

    pub fn block(c4: f64, beta: f64, eps: f64, p: f64, n: f64) -> f64 {
        c4 * beta.ln() * (n / (eps * p)).ln() * (1.0 / p).ln() / sq(eps)
    }

    pub fn block_threshold(c2: f64, c3: f64, eps: f64, p: f64, n: f64) -> f64 {
        c2 * sq(eps) * n.sqrt() / ln_clamped(c3 * n / (eps * p)).powi(6)
    }

    pub fn finite_subgaussian(c: f64, card: f64, eps: f64, p: f64) -> f64 {
        c * (2.0 * card / p).ln() / sq(eps)
    }

    pub fn finite_sors(c0: f64, c1: f64, c2: f64, card: f64, eps: f64, p: f64, n: f64, k: f64) -> f64 {
        c0 * sq(k) / sq(eps)
            * (c1 * card / p).ln()
            * (sq(ln_clamped((c2 * card / p).ln() * sq(k) / eps)) * (E * n).ln() + (2.0 * E / p).ln())
    }

    pub fn sob_rip(a0: f64, a1: f64, s: f64, eps: f64, p: f64, n: f64, k: f64) -> f64 {
        a0 / sq(eps) * sq(k) * s * ((E * n).ln() * sq(ln_clamped(a1 * s * sq(k) / eps)) + (E / p).ln())
    }

    pub fn sob_mrip(c0: f64, c1: f64, s: f64, eps: f64, p: f64, n: f64, k: f64) -> f64 {
        c0 / sq(eps) * sq(k) * s * (E * n / p).ln() * sq(ln_clamped(c1 * s * sq(k) / sq(eps)))
    }

    pub fn fast_finite_m2(c3: f64, card: f64, eps: f64, p: f64) -> f64 {
        c3 * (4.0 * card / p).ln() / sq(eps)
    }

    /// Smallest `m1` in `[⌈m2⌉, ⌊√N⌋]` meeting the intermediate-dimension inequality.
    pub fn fast_finite_m1(c: [f64; 3], card: f64, eps: f64, p: f64, n: f64, k: f64, m2: f64) -> Option<u64> {
        let lo = (m2.ceil() as u64).max(1);
        let hi = n.sqrt().floor() as u64;
        (lo..=hi).find(|&m1| {
            let q = n * card / (sq(m1 as f64) * p);
            let need = c[0] * sq(k) / sq(eps)
                * (c[1] * q).ln()
                * sq(ln_clamped((c[2] * q).ln() * sq(k) / eps))
                * (4.0 * E * n / p).ln();
            m1 as f64 >= need
        })
    }

    /// Intermediate dimension implied by a set of log-size `ln_card`, clamped to `[m2, √N]`.
    pub fn implied_m1(c: f64, ln_card: f64, eps: f64, p: f64, n: f64, k: f64, m2: f64) -> u64 {
        let raw = c * sq(k) / sq(eps) * ((n / p).ln() + ln_card) * (n * sq(k) / (eps * p)).ln().powi(3);
        let lo = (m2.max(1.0)).ceil() as u64;
        (raw.ceil() as u64).max(lo).min(n.sqrt().floor() as u64)
    }

    pub fn fast_subspace(c: f64, d: f64, eps: f64, p: f64) -> f64 {
        c * d / sq(eps) * (1.0 / (eps * p.powf(1.0 / d))).ln()
    }

    pub fn fast_rip(c: f64, s: f64, eps: f64, p: f64, n: f64) -> f64 {
        c * s / sq(eps) * (n / (eps * p.powf(1.0 / s))).ln()
    }

    pub fn fast_infinite(c4: f64, w: f64, eps: f64, p: f64, n: f64) -> f64 {
        c4 * sq(w) * (n / (eps * p)).ln() * (1.0 / p).ln() / sq(eps)
    }

    /// Direct transcription of the level maximum, with sparsities capped at `n`.
    pub fn mrip(f: &dyn Fn(u64, f64, f64) -> f64, s: u64, eps: f64, p: f64, n: u64, a: f64) -> f64 {
        let levels = (n as f64 / s as f64).log2().ceil().max(0.0) + 1.0;
        let pp = p / levels;
        let cap = |x: f64| (x as u64).clamp(1, n);
        let mut terms = vec![f(cap(2.0 * (a * a * s as f64 / (eps * eps)).ceil()), a * a / 2.0, pp)];
        let big_l = (2.0 * (a / eps).log2()).min(levels);
        let mut l = 0;
        while (l as f64) < big_l {
            terms.push(f(cap(2f64.powi(l) * s as f64), 2f64.powf(l as f64 / 2.0) * eps, pp));
            l += 1;
        }
        terms.into_iter().fold(f64::NEG_INFINITY, f64::max)
    }
}

pub mod fidelity;

pub mod transforms {
    use std::f64::consts::PI;

    /// Dense orthonormal matrix of the transform; DFT rows are split into
    /// interleaved real and imaginary rows.
    pub fn matrix(kind: &str, n: usize) -> Vec<Vec<f64>> {
        let nf = n as f64;
        match kind {
            "hadamard" => {
                // Sylvester doubling H_{2k} = [[H, H], [H, -H]]
                let mut h = vec![vec![1.0]];
                while h.len() < n {
                    let k = h.len();
                    let mut next = vec![vec![0.0; 2 * k]; 2 * k];
                    for i in 0..k {
                        for j in 0..k {
                            next[i][j] = h[i][j];
                            next[i][j + k] = h[i][j];
                            next[i + k][j] = h[i][j];
                            next[i + k][j + k] = -h[i][j];
                        }
                    }
                    h = next;
                }
                let s = nf.sqrt().recip();
                h.into_iter().map(|r| r.into_iter().map(|v| v * s).collect()).collect()
            }
            "dct2" => (0..n)
                .map(|k| {
                    let c = if k == 0 { (1.0 / nf).sqrt() } else { (2.0 / nf).sqrt() };
                    (0..n).map(|j| c * (PI * (j as f64 + 0.5) * k as f64 / nf).cos()).collect()
                })
                .collect(),
            "dft" => (0..n)
                .flat_map(|k| {
                    let w = |j: usize| -2.0 * PI * (j * k) as f64 / nf;
                    let s = nf.sqrt().recip();
                    [
                        (0..n).map(|j| w(j).cos() * s).collect::<Vec<_>>(),
                        (0..n).map(|j| w(j).sin() * s).collect::<Vec<_>>(),
                    ]
                })
                .collect(),
            _ => panic!("unknown transform {kind}"),
        }
    }

    pub fn apply(a: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
        a.iter().map(|r| r.iter().zip(x).map(|(u, v)| u * v).sum()).collect()
    }
}

pub mod ric {
    //! Restricted isometry constants from eigenvalues of Gram submatrices.

    /// Eigenvalues of a symmetric matrix (cyclic Jacobi rotations).
    pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
        let n = a.len();
        for _ in 0..100 {
            let off: f64 = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| a[i][j] * a[i][j])
                .sum();
            if off < 1e-30 {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    if a[p][q].abs() < 1e-300 {
                        continue;
                    }
                    let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let t = if theta == 0.0 { 1.0 } else { t };
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let (akp, akq) = (a[k][p], a[k][q]);
                        a[k][p] = c * akp - s * akq;
                        a[k][q] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let (apk, aqk) = (a[p][k], a[q][k]);
                        a[p][k] = c * apk - s * aqk;
                        a[q][k] = s * apk + c * aqk;
                    }
                }
            }
        }
        (0..n).map(|i| a[i][i]).collect()
    }

    fn combinations(n: usize, s: usize, f: &mut dyn FnMut(&[usize])) {
        let mut idx: Vec<usize> = (0..s).collect();
        loop {
            f(&idx);
            let mut i = s;
            while i > 0 && idx[i - 1] == n - s + i - 1 {
                i -= 1;
            }
            if i == 0 {
                return;
            }
            idx[i - 1] += 1;
            for j in i..s {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    /// RIC of order `s` for a dense matrix given as rows.
    pub fn ric(rows: &[Vec<f64>], s: usize) -> f64 {
        let n = rows[0].len();
        let mut worst = 0.0f64;
        combinations(n, s, &mut |support| {
            let g: Vec<Vec<f64>> = support
                .iter()
                .map(|&i| support.iter().map(|&j| rows.iter().map(|r| r[i] * r[j]).sum()).collect())
                .collect();
            for ev in symmetric_eigenvalues(g) {
                worst = worst.max((ev - 1.0).abs());
            }
        });
        worst
    }
}

pub mod dense {
    //! Dense reference evaluation of an operator from its materialized columns.

    pub fn distortion_norm_errors(cols: &[Vec<f64>], points: &[Vec<f64>]) -> (f64, f64) {
        // (max, mean) of | ‖A u‖ − 1 | over unit secants
        let m = cols[0].len();
        let mut max = 0.0f64;
        let mut sum = 0.0;
        let mut count = 0usize;
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                let diff: Vec<f64> = points[i].iter().zip(&points[j]).map(|(a, b)| a - b).collect();
                let len = diff.iter().map(|v| v * v).sum::<f64>().sqrt();
                let mut y = vec![0.0; m];
                for (k, v) in diff.iter().enumerate() {
                    for r in 0..m {
                        y[r] += cols[k][r] * v / len;
                    }
                }
                let e = (y.iter().map(|v| v * v).sum::<f64>().sqrt() - 1.0).abs();
                max = max.max(e);
                sum += e;
                count += 1;
            }
        }
        (max, sum / count as f64)
    }
}
