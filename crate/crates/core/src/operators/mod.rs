//! Matrix-free embedding operators.
//!
//! All operators implement [`LinearOperator`]. Outputs are real vectors; an
//! operator built on the complex DFT returns `m` complex values interleaved,
//! so its [`rows`](LinearOperator::rows) is `2m`.

mod block;
mod dense;
mod simple;
mod sors;
mod spec;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

pub use block::{Block, BlockParams};
pub use dense::{Distribution, Matrix, SubGaussian};
pub use simple::{Composite, Identity, Scaled};
pub use sors::{Sors, SorsParams};
pub use spec::OperatorSpec;

use crate::{Error, Result};

/// Largest `rows * cols` that [`materialize`] will allocate.
pub const MATERIALIZE_LIMIT: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    SubGaussian,
    Sors,
    #[serde(rename = "block")]
    BlockStructured,
    Identity,
    Scaled,
    Composite,
    Dense,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::SubGaussian => "subgaussian",
            Self::Sors => "sors",
            Self::BlockStructured => "block",
            Self::Identity => "identity",
            Self::Scaled => "scaled",
            Self::Composite => "composite",
            Self::Dense => "dense",
        })
    }
}

pub trait LinearOperator: Send + Sync + fmt::Debug {
    /// Real output length.
    fn rows(&self) -> usize;

    fn cols(&self) -> usize;

    /// Writes `A x` into `out` (length [`rows`](Self::rows)).
    fn apply_into(&self, x: &[f64], out: &mut [f64]) -> Result<()>;

    fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        let mut out = vec![0.0; self.rows()];
        self.apply_into(x, &mut out)?;
        Ok(out)
    }

    /// Model count of arithmetic operations per application.
    fn flops(&self) -> u64;

    fn family(&self) -> Family;

    fn seed(&self) -> u64 {
        0
    }
}

impl<T: LinearOperator + ?Sized> LinearOperator for alloc::boxed::Box<T> {
    fn rows(&self) -> usize {
        (**self).rows()
    }
    fn cols(&self) -> usize {
        (**self).cols()
    }
    fn apply_into(&self, x: &[f64], out: &mut [f64]) -> Result<()> {
        (**self).apply_into(x, out)
    }
    fn flops(&self) -> u64 {
        (**self).flops()
    }
    fn family(&self) -> Family {
        (**self).family()
    }
    fn seed(&self) -> u64 {
        (**self).seed()
    }
}

/// Dense matrix whose column `j` is `A e_j`.
pub fn materialize<A: LinearOperator + ?Sized>(op: &A) -> Result<Matrix> {
    let (m, n) = (op.rows(), op.cols());
    if m.saturating_mul(n) > MATERIALIZE_LIMIT {
        return Err(Error::TooLarge { rows: m, cols: n, limit: MATERIALIZE_LIMIT });
    }
    let mut out = Matrix::zeros(m, n);
    let mut e = vec![0.0; n];
    let mut col = vec![0.0; m];
    for j in 0..n {
        e[j] = 1.0;
        op.apply_into(&e, &mut col)?;
        e[j] = 0.0;
        for (i, &v) in col.iter().enumerate() {
            out.set(i, j, v);
        }
    }
    Ok(out)
}

pub(crate) fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, actual })
    }
}
