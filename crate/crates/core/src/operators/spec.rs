use alloc::boxed::Box;

use serde::{Deserialize, Serialize};

use super::{
    Block, BlockParams, Composite, Distribution, Identity, LinearOperator, Scaled, SorsParams,
    SubGaussian,
};
use super::sors::Sors;
use crate::Result;

/// Serializable operator recipe, tagged by `family`.
///
/// ```json
/// {"family": "block", "N": 4096, "m1": 64, "m2": 32, "transform": "dct2", "seed": 7}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum OperatorSpec {
    #[serde(alias = "gaussian")]
    SubGaussian {
        #[serde(rename = "N")]
        n: usize,
        m: usize,
        #[serde(default)]
        dist: Distribution,
        #[serde(default)]
        seed: u64,
    },
    Sors(SorsParams),
    Block(BlockParams),
    Identity {
        #[serde(rename = "N")]
        n: usize,
    },
    Scaled {
        factor: f64,
        inner: Box<OperatorSpec>,
    },
    Composite {
        outer: Box<OperatorSpec>,
        inner: Box<OperatorSpec>,
    },
}

impl OperatorSpec {
    pub fn build(&self) -> Result<Box<dyn LinearOperator>> {
        Ok(match self {
            Self::SubGaussian { n, m, dist, seed } => Box::new(SubGaussian::new(*m, *n, *dist, *seed)?),
            Self::Sors(p) => Box::new(Sors::new(*p)?),
            Self::Block(p) => Box::new(Block::new(*p)?),
            Self::Identity { n } => Box::new(Identity::new(*n)),
            Self::Scaled { factor, inner } => Box::new(Scaled::new(*factor, inner.build()?)),
            Self::Composite { outer, inner } => {
                Box::new(Composite::new(outer.build()?, inner.build()?)?)
            }
        })
    }

    /// Same recipe with its seed replaced (nested recipes get derived seeds).
    pub fn with_seed(&self, seed: u64) -> Self {
        let mut s = self.clone();
        match &mut s {
            Self::SubGaussian { seed: old, .. } => *old = seed,
            Self::Sors(p) => p.seed = seed,
            Self::Block(p) => p.seed = seed,
            Self::Identity { .. } => {}
            Self::Scaled { inner, .. } => **inner = inner.with_seed(seed),
            Self::Composite { outer, inner } => {
                **outer = outer.with_seed(crate::rng::derive_seed(seed, 0));
                **inner = inner.with_seed(crate::rng::derive_seed(seed, 1));
            }
        }
        s
    }

    pub fn cols(&self) -> usize {
        match self {
            Self::SubGaussian { n, .. } | Self::Identity { n } => *n,
            Self::Sors(p) => p.n,
            Self::Block(p) => p.n,
            Self::Scaled { inner, .. } => inner.cols(),
            Self::Composite { inner, .. } => inner.cols(),
        }
    }
}
