use alloc::string::String;
use core::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::math::{exp, ln, ln_unit_sphere_area};
use crate::{Error, Result};

/// Reach of a set; `Infinite` for convex sets and for isolated points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Reach {
    Finite(f64),
    Infinite,
}

impl Reach {
    pub fn value(self) -> f64 {
        match self {
            Self::Finite(v) => v,
            Self::Infinite => f64::INFINITY,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Self::Infinite)
    }

    pub fn from_value(v: f64) -> Self {
        if v.is_infinite() {
            Self::Infinite
        } else {
            Self::Finite(v)
        }
    }
}

impl Serialize for Reach {
    fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        match self {
            Self::Finite(v) => s.serialize_f64(*v),
            Self::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Reach {
    fn deserialize<D: Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Reach;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a positive number or \"inf\"")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> core::result::Result<Reach, E> {
                Ok(Reach::from_value(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> core::result::Result<Reach, E> {
                Ok(Reach::Finite(v as f64))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> core::result::Result<Reach, E> {
                Ok(Reach::Finite(v as f64))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> core::result::Result<Reach, E> {
                match v {
                    "inf" | "Inf" | "infinity" | "Infinity" | "∞" => Ok(Reach::Infinite),
                    _ => v.parse::<f64>().map(Reach::from_value).map_err(E::custom),
                }
            }
        }
        d.deserialize_any(V)
    }
}

fn infinite() -> Reach {
    Reach::Infinite
}

/// Parameters of a compact smooth `d`-dimensional submanifold of `R^N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifoldDescriptor {
    #[serde(default)]
    pub name: String,
    pub d: u32,
    #[serde(rename = "N")]
    pub n: usize,
    /// `d`-dimensional volume (for `d = 0`, the number of points).
    pub volume: f64,
    /// `(d−1)`-dimensional volume of the boundary; 0 when it is empty.
    #[serde(default)]
    pub boundary_volume: f64,
    pub reach: Reach,
    /// Smallest reach among the boundary components.
    #[serde(default = "infinite")]
    pub boundary_reach: Reach,
}

impl ManifoldDescriptor {
    /// `τ = min(τ_M, μ_∂M)`.
    pub fn tau(&self) -> f64 {
        self.reach.value().min(self.boundary_reach.value())
    }

    pub fn has_boundary(&self) -> bool {
        self.boundary_volume > 0.0
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.volume > 0.0) || !self.volume.is_finite() {
            return Err(Error::Descriptor("volume must be positive and finite"));
        }
        if !(self.boundary_volume >= 0.0) || !self.boundary_volume.is_finite() {
            return Err(Error::Descriptor("boundary volume must be nonnegative and finite"));
        }
        for r in [self.reach, self.boundary_reach] {
            if let Reach::Finite(v) = r {
                if !(v > 0.0) {
                    return Err(Error::Descriptor("reach must be positive"));
                }
            }
        }
        if self.d as usize > self.n {
            return Err(Error::Descriptor("intrinsic dimension exceeds ambient dimension"));
        }
        if self.d == 0 && self.boundary_volume > 0.0 {
            return Err(Error::Descriptor("a finite point set has no boundary"));
        }
        if !self.has_boundary() && self.d >= 1 {
            if let Reach::Finite(tau) = self.reach {
                // closed manifolds are at least as large as the sphere of radius tau
                let ln_ratio = ln(self.volume) - self.d as f64 * ln(tau);
                let ln_min = ln_unit_sphere_area(self.d);
                if ln_ratio < ln_min - 1e-12 {
                    return Err(Error::Descriptor(
                        "volume too small for its reach (V/tau^d < H^d(S^d))",
                    ));
                }
            }
        }
        Ok(())
    }

    /// Same manifold scaled by `factor` in `R^N`.
    pub fn scaled(&self, factor: f64) -> Self {
        let scale_reach = |r: Reach| match r {
            Reach::Finite(v) => Reach::Finite(v * factor),
            Reach::Infinite => Reach::Infinite,
        };
        let d = self.d as f64;
        Self {
            name: self.name.clone(),
            d: self.d,
            n: self.n,
            volume: if self.d == 0 { self.volume } else { self.volume * exp(d * ln(factor)) },
            boundary_volume: self.boundary_volume * exp((d - 1.0).max(0.0) * ln(factor)),
            reach: scale_reach(self.reach),
            boundary_reach: scale_reach(self.boundary_reach),
        }
    }
}
