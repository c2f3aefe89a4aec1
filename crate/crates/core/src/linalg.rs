//! Small dense routines: singular values and orthonormal frames.

use alloc::vec;
use alloc::vec::Vec;

use rand_distr::StandardNormal;

use crate::math::{dot, norm2, sqrt};
use crate::operators::Matrix;

/// Singular values of `a` in descending order (one-sided Jacobi).
///
/// Returns `a.ncols()` values; when there are more columns than rows the
/// trailing ones are zero up to rounding.
pub fn singular_values(a: &Matrix) -> Vec<f64> {
    let (m, n) = (a.nrows(), a.ncols());
    let mut cols: Vec<Vec<f64>> = (0..n).map(|j| a.column(j)).collect();
    for _sweep in 0..60 {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha = dot(&cols[p], &cols[p]);
                let beta = dot(&cols[q], &cols[q]);
                let gamma = dot(&cols[p], &cols[q]);
                if gamma == 0.0 || gamma.abs() <= 1e-15 * sqrt(alpha * beta) {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + sqrt(1.0 + zeta * zeta));
                let t = if zeta == 0.0 { 1.0 } else { t };
                let c = 1.0 / sqrt(1.0 + t * t);
                let s = c * t;
                let (lo, hi) = cols.split_at_mut(q);
                let (cp, cq) = (&mut lo[p], &mut hi[0]);
                for i in 0..m {
                    let (x, y) = (cp[i], cq[i]);
                    cp[i] = c * x - s * y;
                    cq[i] = s * x + c * y;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<f64> = cols.iter().map(|c| norm2(c)).collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// `k` orthonormal vectors in `R^n` (Gram–Schmidt on Gaussian vectors, with
/// one reorthogonalization pass). Requires `k ≤ n`.
pub fn random_orthonormal_frame<R: rand::Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Vec<Vec<f64>> {
    assert!(k <= n, "frame wider than the ambient space");
    let mut frame: Vec<Vec<f64>> = Vec::with_capacity(k);
    while frame.len() < k {
        let mut v: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        for _ in 0..2 {
            for q in &frame {
                let c = dot(&v, q);
                v.iter_mut().zip(q).for_each(|(a, b)| *a -= c * b);
            }
        }
        let len = norm2(&v);
        if len > 1e-8 {
            v.iter_mut().for_each(|a| *a /= len);
            frame.push(v);
        }
    }
    frame
}

/// Maps local coordinates `x ∈ R^k` to `Σ x_i f_i ∈ R^n`.
pub fn embed(frame: &[Vec<f64>], local: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n];
    for (c, f) in local.iter().zip(frame) {
        out.iter_mut().zip(f).for_each(|(o, v)| *o += c * v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn diagonal_singular_values() {
        let a = Matrix::from_fn(3, 3, |i, j| if i == j { [3.0, -1.0, 2.0][i] } else { 0.0 });
        let s = singular_values(&a);
        assert!((s[0] - 3.0).abs() < 1e-14 && (s[1] - 2.0).abs() < 1e-14 && (s[2] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rank_one() {
        let a = Matrix::from_fn(4, 2, |i, j| (i + 1) as f64 * (j + 1) as f64);
        let s = singular_values(&a);
        // ‖u‖·‖v‖ with u = (1,2,3,4), v = (1,2)
        assert!((s[0] - (30.0f64).sqrt() * 5.0f64.sqrt()).abs() < 1e-12);
        assert!(s[1].abs() < 1e-12);
    }

    #[test]
    fn frame_is_orthonormal() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let f = random_orthonormal_frame(10, 6, &mut rng);
        for i in 0..6 {
            for j in 0..6 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot(&f[i], &f[j]) - want).abs() < 1e-14);
            }
        }
    }
}
