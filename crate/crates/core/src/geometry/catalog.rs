use alloc::format;
use alloc::string::ToString;

use super::descriptor::{ManifoldDescriptor, Reach};
use super::{omega, sphere_area};
use crate::math::PI;

/// Unit sphere `S^d ⊂ R^{d+1}`.
pub fn sphere(d: u32) -> ManifoldDescriptor {
    ManifoldDescriptor {
        name: format!("sphere{d}"),
        d,
        n: d as usize + 1,
        volume: sphere_area(d),
        boundary_volume: 0.0,
        reach: Reach::Finite(1.0),
        boundary_reach: Reach::Infinite,
    }
}

/// Unit disk `D^d ⊂ R^d`, bounded by the unit sphere `S^{d−1}`.
pub fn disk(d: u32) -> ManifoldDescriptor {
    assert!(d >= 1);
    ManifoldDescriptor {
        name: format!("disk{d}"),
        d,
        n: d as usize,
        volume: omega(d),
        boundary_volume: sphere_area(d - 1),
        reach: Reach::Infinite,
        boundary_reach: if d == 1 { Reach::Infinite } else { Reach::Finite(1.0) },
    }
}

pub fn circle() -> ManifoldDescriptor {
    let mut s = sphere(1);
    s.name = "circle".to_string();
    s
}

/// `[0, 1] ⊂ R`; the boundary is its two endpoints.
pub fn interval() -> ManifoldDescriptor {
    ManifoldDescriptor {
        name: "interval".to_string(),
        d: 1,
        n: 1,
        volume: 1.0,
        boundary_volume: 2.0,
        reach: Reach::Infinite,
        boundary_reach: Reach::Infinite,
    }
}

/// Planar annulus `1 ≤ |x| ≤ 2`.
pub fn annulus() -> ManifoldDescriptor {
    ManifoldDescriptor {
        name: "annulus".to_string(),
        d: 2,
        n: 2,
        volume: 3.0 * PI,
        boundary_volume: 6.0 * PI,
        reach: Reach::Finite(1.0),
        boundary_reach: Reach::Finite(1.0),
    }
}

/// Named lookup for the built-in descriptors.
pub struct Catalog;

impl Catalog {
    /// Accepts `sphere<d>`, `disk<d>`, `circle`, `interval`, `annulus`.
    pub fn get(name: &str) -> Option<ManifoldDescriptor> {
        let name = name.trim().to_ascii_lowercase();
        match name.as_str() {
            "circle" => return Some(circle()),
            "interval" => return Some(interval()),
            "annulus" => return Some(annulus()),
            _ => {}
        }
        let parse = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<u32>().ok());
        if let Some(d) = parse("sphere").or_else(|| parse("s")) {
            return Some(sphere(d));
        }
        if let Some(d) = parse("disk").or_else(|| parse("d")) {
            return (d >= 1).then(|| disk(d));
        }
        None
    }

    pub const NAMES: [&'static str; 5] = ["sphere<d>", "disk<d>", "circle", "interval", "annulus"];
}
