//! Embedding-dimension calculators.
//!
//! Each calculator evaluates one sufficient lower bound on the number of
//! rows `m` and returns a [`BoundReport`] carrying the inputs, the constants
//! it read and any feasibility restriction. The absolute constants live in a
//! [`ConstantsRegistry`]; the `unit` profile sets them all to 1.
//!
//! Wherever a formula contains `ln²(x)` (or a higher power of a logarithm
//! of a compound expression), `x` is clamped to at least `e` so the factor
//! stays at least 1 and monotone; every clamp is listed in the report.

mod formulas;
mod registry;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

pub use formulas::*;
pub use registry::{Constant, ConstantsRegistry, NAMES as CONSTANT_NAMES};

use crate::math::{ceil, exp_saturating};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// Manifold, dense sub-gaussian matrix.
    Subgaussian,
    /// Manifold, SORS matrix.
    Sors,
    /// Manifold, two-stage block matrix.
    Block,
    SubgaussianInfinite,
    SorsInfinite,
    FiniteSubgaussian,
    FiniteSors,
    SobRip,
    SobMrip,
    Mrip,
    FastFinite,
    FastSubspace,
    FastRip,
    FastMrip,
    FastInfinite,
}

impl BoundKind {
    pub const ALL: [BoundKind; 15] = [
        Self::Subgaussian,
        Self::Sors,
        Self::Block,
        Self::SubgaussianInfinite,
        Self::SorsInfinite,
        Self::FiniteSubgaussian,
        Self::FiniteSors,
        Self::SobRip,
        Self::SobMrip,
        Self::Mrip,
        Self::FastFinite,
        Self::FastSubspace,
        Self::FastRip,
        Self::FastMrip,
        Self::FastInfinite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Subgaussian => "subgaussian",
            Self::Sors => "sors",
            Self::Block => "block",
            Self::SubgaussianInfinite => "subgaussian_infinite",
            Self::SorsInfinite => "sors_infinite",
            Self::FiniteSubgaussian => "finite_subgaussian",
            Self::FiniteSors => "finite_sors",
            Self::SobRip => "sob_rip",
            Self::SobMrip => "sob_mrip",
            Self::Mrip => "mrip",
            Self::FastFinite => "fast_finite",
            Self::FastSubspace => "fast_subspace",
            Self::FastRip => "fast_rip",
            Self::FastMrip => "fast_mrip",
            Self::FastInfinite => "fast_infinite",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundKind {
    type Err = Error;

    /// Accepts the snake-case names plus the short aliases `1.3`, `1.4`, `1.5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase().replace('-', "_");
        match s.as_str() {
            "1.3" => return Ok(Self::Subgaussian),
            "1.4" => return Ok(Self::Sors),
            "1.5" => return Ok(Self::Block),
            _ => {}
        }
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or(Error::Parameter("unknown bound"))
    }
}

/// An evaluated embedding-dimension bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound: BoundKind,
    /// `max(formula_value, 1)`.
    pub m_required: f64,
    pub m_ceil: u64,
    /// The formula as evaluated, before the floor at 1.
    pub formula_value: f64,
    pub feasible: bool,
    pub feasibility_reason: String,
    pub formula: String,
    pub inputs: BTreeMap<String, f64>,
    pub constants: BTreeMap<String, f64>,
    pub constants_profile: String,
    /// Intermediate dimension for the two-stage constructions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m1: Option<u64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub clamped: Vec<String>,
}

/// Collects inputs, constant reads and clamps while a formula is evaluated.
pub(crate) struct Recorder<'a> {
    registry: &'a ConstantsRegistry,
    inputs: BTreeMap<String, f64>,
    constants: BTreeMap<String, f64>,
    details: BTreeMap<String, f64>,
    clamped: Vec<String>,
}

impl<'a> Recorder<'a> {
    pub(crate) fn new(registry: &'a ConstantsRegistry) -> Self {
        Self {
            registry,
            inputs: BTreeMap::new(),
            constants: BTreeMap::new(),
            details: BTreeMap::new(),
            clamped: Vec::new(),
        }
    }

    pub(crate) fn input(&mut self, name: &str, v: f64) -> &mut Self {
        self.inputs.insert(name.to_string(), v);
        self
    }

    pub(crate) fn c(&mut self, name: &str) -> f64 {
        let v = self.registry.get(name);
        self.constants.insert(name.to_string(), v);
        v
    }

    pub(crate) fn detail(&mut self, name: &str, v: f64) {
        self.details.insert(name.to_string(), v);
    }

    /// `ln(max(x, e))`, recording the clamp under `label`.
    pub(crate) fn ln_at_least_one(&mut self, label: &str, x: f64) -> f64 {
        if x < crate::math::E {
            if !self.clamped.iter().any(|c| c == label) {
                self.clamped.push(label.to_string());
            }
            1.0
        } else {
            crate::math::ln(x)
        }
    }

    pub(crate) fn finish_ln(
        self,
        bound: BoundKind,
        ln_value: f64,
        formula: &str,
        feasible: bool,
        reason: &str,
        m1: Option<u64>,
    ) -> BoundReport {
        self.finish(bound, exp_saturating(ln_value), formula, feasible, reason, m1)
    }

    pub(crate) fn finish(
        self,
        bound: BoundKind,
        value: f64,
        formula: &str,
        feasible: bool,
        reason: &str,
        m1: Option<u64>,
    ) -> BoundReport {
        let m_required = value.max(1.0);
        BoundReport {
            bound,
            m_required,
            m_ceil: if m_required.is_finite() { ceil(m_required) as u64 } else { u64::MAX },
            formula_value: value,
            feasible,
            feasibility_reason: reason.to_string(),
            formula: formula.to_string(),
            inputs: self.inputs,
            constants: self.constants,
            constants_profile: self.registry.profile.clone(),
            m1,
            details: self.details,
            clamped: self.clamped,
        }
    }
}
