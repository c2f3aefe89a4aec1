//! Structured Johnson–Lindenstrauss embeddings without the standard library.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! - fast orthonormal transform kernels ([`transforms`]) with dense reference
//!   evaluations,
//! - seeded matrix-free embedding operators ([`operators`]): dense sub-gaussian
//!   maps, subsampled orthonormal transforms with random signs, and the
//!   two-stage block construction `E = B·C`,
//! - closed-form manifold covering, secant and Gaussian-width bounds
//!   ([`geometry`]),
//! - embedding-dimension calculators with an explicit constants registry
//!   ([`bounds`]),
//! - empirical oracles: secant distortion, brute-force restricted isometry
//!   constants, greedy covers and success-rate estimation ([`verify`]),
//! - seeded samplers for the test geometries ([`datasets`]).
//!
//! All randomness is derived from a 64-bit seed through [`rng`], so every
//! operator and sample is reproducible bit-for-bit.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod datasets;
mod error;
pub mod geometry;
pub mod linalg;
pub mod math;
pub mod operators;
pub mod points;
pub mod rng;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use operators::{LinearOperator, Matrix};
pub use points::PointSet;
pub use transforms::{TransformKind, TransformPlan};
