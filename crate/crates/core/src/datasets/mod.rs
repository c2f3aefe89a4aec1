//! Seeded samplers for test geometries, placed isometrically in `R^N`.

use alloc::vec::Vec;

use rand::Rng as _;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::geometry::{self, ManifoldDescriptor};
use crate::linalg::{embed, random_orthonormal_frame};
use crate::math::{cos, norm2, powf, sin, PI};
use crate::points::PointSet;
use crate::rng::{self, Rng};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Geometry {
    /// i.i.d. standard normal coordinates in `R^N`.
    GaussianCloud,
    /// Unit sphere `S^d ⊂ R^{d+1}`.
    Sphere { d: u32 },
    /// Unit disk `D^d ⊂ R^d`.
    Disk { d: u32 },
    Circle,
    /// `[0, 1]`.
    Interval,
    /// `(t cos t, h, t sin t)` with `t ∈ [3π/2, 9π/2]`, `h ∈ [0, 21]`.
    SwissRoll,
}

impl Geometry {
    /// Dimension of the space the geometry is sampled in before embedding.
    pub fn local_dim(self, ambient: usize) -> usize {
        match self {
            Self::GaussianCloud => ambient,
            Self::Sphere { d } => d as usize + 1,
            Self::Disk { d } => d as usize,
            Self::Circle => 2,
            Self::Interval => 1,
            Self::SwissRoll => 3,
        }
    }

    /// Built-in descriptor, or `None` where no reach is certified.
    pub fn descriptor(self) -> Option<ManifoldDescriptor> {
        match self {
            Self::Sphere { d } => Some(geometry::sphere(d)),
            Self::Disk { d } if d >= 1 => Some(geometry::disk(d)),
            Self::Circle => Some(geometry::circle()),
            Self::Interval => Some(geometry::interval()),
            _ => None,
        }
    }
}

impl core::str::FromStr for Geometry {
    type Err = Error;

    /// `gaussian`, `sphere<d>`, `disk<d>`, `circle`, `interval`, `swissroll`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase().replace(['-', '_'], "");
        let dim = |prefix: &str| s.strip_prefix(prefix).and_then(|d| d.parse::<u32>().ok());
        Ok(match s.as_str() {
            "gaussian" | "gaussiancloud" => Self::GaussianCloud,
            "circle" => Self::Circle,
            "interval" => Self::Interval,
            "swissroll" => Self::SwissRoll,
            _ => {
                if let Some(d) = dim("sphere") {
                    Self::Sphere { d }
                } else if let Some(d) = dim("disk") {
                    Self::Disk { d }
                } else {
                    return Err(Error::Parameter("unknown geometry"));
                }
            }
        })
    }
}

/// Placement of the sampled geometry in the ambient space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Embedding {
    /// Seeded random orthonormal frame.
    #[default]
    Frame,
    /// First coordinates, zero elsewhere.
    Canonical,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleSpec {
    pub geometry: Geometry,
    #[serde(rename = "N")]
    pub n: usize,
    pub count: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub embedding: Embedding,
}

impl SampleSpec {
    pub fn new(geometry: Geometry, n: usize, count: usize, seed: u64) -> Self {
        Self { geometry, n, count, seed, embedding: Embedding::Frame }
    }
}

fn gaussian_vec(rng: &mut Rng, k: usize) -> Vec<f64> {
    (0..k).map(|_| rng.sample(StandardNormal)).collect()
}

fn unit_vec(rng: &mut Rng, k: usize) -> Vec<f64> {
    loop {
        let mut v = gaussian_vec(rng, k);
        let len = norm2(&v);
        if len > 1e-300 {
            v.iter_mut().for_each(|x| *x /= len);
            return v;
        }
    }
}

fn check(spec: &SampleSpec) -> Result<usize> {
    if spec.count == 0 {
        return Err(Error::DimensionError("need at least one point"));
    }
    if spec.n == 0 {
        return Err(Error::DimensionError("ambient dimension must be positive"));
    }
    match spec.geometry {
        Geometry::Disk { d: 0 } => return Err(Error::DimensionError("disk dimension must be positive")),
        Geometry::Sphere { d: 0 } => return Err(Error::DimensionError("sphere dimension must be positive")),
        _ => {}
    }
    let k = spec.geometry.local_dim(spec.n);
    if k > spec.n {
        return Err(Error::DimensionError("geometry does not fit in the ambient space"));
    }
    Ok(k)
}

/// Points in the geometry's own coordinates (`local_dim` columns).
pub fn sample_local(spec: &SampleSpec) -> Result<PointSet> {
    let k = check(spec)?;
    let n = spec.count;
    let mut data = Vec::with_capacity(n * k);
    let grid_t = libm::ceil(libm::sqrt(n as f64)) as usize;
    let grid_h = n.div_ceil(grid_t);
    for i in 0..n {
        let mut rng = rng::stream(spec.seed, rng::SAMPLE, i as u64);
        match spec.geometry {
            Geometry::GaussianCloud => data.extend(gaussian_vec(&mut rng, k)),
            Geometry::Sphere { .. } => data.extend(unit_vec(&mut rng, k)),
            Geometry::Circle => {
                let t = rng.random_range(0.0..2.0 * PI);
                data.extend([cos(t), sin(t)]);
            }
            Geometry::Disk { d } => {
                let r = powf(rng.random::<f64>(), 1.0 / d as f64);
                data.extend(unit_vec(&mut rng, k).into_iter().map(|x| r * x));
            }
            Geometry::Interval => data.push(match i {
                0 => 0.0,
                _ if i + 1 == n => 1.0,
                _ => rng.random::<f64>(),
            }),
            Geometry::SwissRoll => {
                let (a, b) = ((i % grid_t) as f64, (i / grid_t) as f64);
                let t = 1.5 * PI + 3.0 * PI * (a + rng.random::<f64>()) / grid_t as f64;
                let h = 21.0 * (b + rng.random::<f64>()) / grid_h as f64;
                data.extend([t * cos(t), h, t * sin(t)]);
            }
        }
    }
    PointSet::new(k, data)
}

/// Samples `spec.count` points and places them in `R^N`.
pub fn sample(spec: &SampleSpec) -> Result<PointSet> {
    let local = sample_local(spec)?;
    let k = local.dim();
    if spec.geometry == Geometry::GaussianCloud {
        return Ok(local);
    }
    let mut data = Vec::with_capacity(spec.count * spec.n);
    match spec.embedding {
        Embedding::Canonical => {
            for x in local.iter() {
                data.extend_from_slice(x);
                data.resize(data.len() + spec.n - k, 0.0);
            }
        }
        Embedding::Frame => {
            let frame = random_orthonormal_frame(spec.n, k, &mut rng::stream(spec.seed, rng::FRAME, 0));
            for x in local.iter() {
                data.extend(embed(&frame, x, spec.n));
            }
        }
    }
    PointSet::new(spec.n, data)
}

/// Catalog descriptor for a geometry; [`Error::Descriptor`] where none is certified.
pub fn descriptor_for(geometry: Geometry) -> Result<ManifoldDescriptor> {
    geometry.descriptor().ok_or(Error::Descriptor("no certified reach for this geometry"))
}
