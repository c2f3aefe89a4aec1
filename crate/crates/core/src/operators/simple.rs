use alloc::boxed::Box;
use alloc::vec;

use super::{check_len, Family, LinearOperator};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Identity {
    n: usize,
}

impl Identity {
    pub fn new(n: usize) -> Self {
        Self { n }
    }
}

impl LinearOperator for Identity {
    fn rows(&self) -> usize {
        self.n
    }

    fn cols(&self) -> usize {
        self.n
    }

    fn apply_into(&self, x: &[f64], out: &mut [f64]) -> Result<()> {
        check_len(self.n, x.len())?;
        check_len(self.n, out.len())?;
        out.copy_from_slice(x);
        Ok(())
    }

    fn flops(&self) -> u64 {
        self.n as u64
    }

    fn family(&self) -> Family {
        Family::Identity
    }
}

/// `factor · A`.
#[derive(Debug)]
pub struct Scaled {
    factor: f64,
    inner: Box<dyn LinearOperator>,
}

impl Scaled {
    pub fn new(factor: f64, inner: Box<dyn LinearOperator>) -> Self {
        Self { factor, inner }
    }
}

impl LinearOperator for Scaled {
    fn rows(&self) -> usize {
        self.inner.rows()
    }

    fn cols(&self) -> usize {
        self.inner.cols()
    }

    fn apply_into(&self, x: &[f64], out: &mut [f64]) -> Result<()> {
        self.inner.apply_into(x, out)?;
        out.iter_mut().for_each(|v| *v *= self.factor);
        Ok(())
    }

    fn flops(&self) -> u64 {
        self.inner.flops() + self.inner.rows() as u64
    }

    fn family(&self) -> Family {
        Family::Scaled
    }

    fn seed(&self) -> u64 {
        self.inner.seed()
    }
}

/// `outer ∘ inner`.
#[derive(Debug)]
pub struct Composite {
    outer: Box<dyn LinearOperator>,
    inner: Box<dyn LinearOperator>,
}

impl Composite {
    pub fn new(outer: Box<dyn LinearOperator>, inner: Box<dyn LinearOperator>) -> Result<Self> {
        if outer.cols() != inner.rows() {
            return Err(Error::DimensionMismatch { expected: outer.cols(), actual: inner.rows() });
        }
        Ok(Self { outer, inner })
    }
}

impl LinearOperator for Composite {
    fn rows(&self) -> usize {
        self.outer.rows()
    }

    fn cols(&self) -> usize {
        self.inner.cols()
    }

    fn apply_into(&self, x: &[f64], out: &mut [f64]) -> Result<()> {
        let mut mid = vec![0.0; self.inner.rows()];
        self.inner.apply_into(x, &mut mid)?;
        self.outer.apply_into(&mid, out)
    }

    fn flops(&self) -> u64 {
        self.outer.flops() + self.inner.flops()
    }

    fn family(&self) -> Family {
        Family::Composite
    }

    fn seed(&self) -> u64 {
        self.inner.seed()
    }
}
