use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Constant {
    pub value: f64,
    pub provenance: String,
}

/// Named absolute constants used by the bound calculators.
///
/// Every constant a formula reads is recorded in its [`BoundReport`](super::BoundReport).
/// Names missing from the registry evaluate to 1 and are reported as
/// `uncalibrated`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantsRegistry {
    pub profile: String,
    pub constants: BTreeMap<String, Constant>,
}

/// Every constant name the calculators read.
pub const NAMES: &[&str] = &[
    "subgaussian.c_prime",
    "sors.c0",
    "sors.c1",
    "block.c1",
    "block.c2",
    "block.c3",
    "block.c4",
    "finite_subgaussian.c",
    "finite_sors.c0",
    "finite_sors.c1",
    "finite_sors.c2",
    "sob_rip.a0",
    "sob_rip.a1",
    "sob_mrip.c0",
    "sob_mrip.c1",
    "fast_finite.c0",
    "fast_finite.c1",
    "fast_finite.c2",
    "fast_finite.c3",
    "fast_finite.set_cap",
    "fast_subspace.c",
    "fast_subspace.c_prime",
    "fast_rip.c",
    "fast_rip.c_prime",
    "fast_rip.c_dprime",
    "fast_mrip.c1",
    "fast_mrip.c2",
    "fast_mrip.c3",
    "fast_infinite.c1",
    "fast_infinite.c2",
    "fast_infinite.c3",
    "fast_infinite.c4",
    "fast.m1",
];

const UNCALIBRATED: &str = "uncalibrated";

impl ConstantsRegistry {
    /// Every constant set to 1.
    pub fn unit() -> Self {
        let mut r = Self { profile: "unit".to_string(), constants: BTreeMap::new() };
        for name in NAMES {
            r.constants.insert(
                name.to_string(),
                Constant { value: 1.0, provenance: UNCALIBRATED.to_string() },
            );
        }
        r
    }

    /// Constants fitted at desk scale so that operators sized by the
    /// calculators reach the target success rate. Constants that were not
    /// fitted stay at 1.
    pub fn empirical() -> Self {
        let mut r = Self::unit();
        r.profile = "empirical".to_string();
        let fitted = "fitted: Gaussian operators of this size embed 100 Gaussian points in R^1024 at eps=0.3 for 197 of 200 seeds (p=0.1)";
        r.set("finite_subgaussian.c", 6.0, fitted);
        r.set("subgaussian.c_prime", 6.0, "copied from finite_subgaussian.c, not fitted separately");
        let rip = "fitted: 200 of 200 Hadamard SORS seeds have RIC_2 <= 0.5 at N=64, K=1, p=0.1";
        r.set("sob_rip.a0", 0.5, rip);
        r.set("sob_rip.a1", 1.0, rip);
        r
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "unit" => Some(Self::unit()),
            "empirical" => Some(Self::empirical()),
            _ => None,
        }
    }

    pub fn get(&self, name: &str) -> f64 {
        self.constants.get(name).map_or(1.0, |c| c.value)
    }

    pub fn provenance(&self, name: &str) -> &str {
        self.constants.get(name).map_or(UNCALIBRATED, |c| c.provenance.as_str())
    }

    /// Replaces one constant in place.
    pub fn set(&mut self, name: &str, value: f64, provenance: &str) {
        self.constants
            .insert(name.to_string(), Constant { value, provenance: provenance.to_string() });
    }

    /// A new snapshot with one constant replaced.
    pub fn with(&self, name: &str, value: f64) -> Self {
        let mut r = self.clone();
        r.set(name, value, "user override");
        r
    }

    pub fn all_positive(&self) -> bool {
        self.constants.values().all(|c| c.value > 0.0 && c.value.is_finite())
    }
}

impl Default for ConstantsRegistry {
    fn default() -> Self {
        Self::unit()
    }
}
