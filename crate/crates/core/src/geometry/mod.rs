//! Manifold descriptors, covering-number and secant bounds, Gaussian width.
//!
//! Count-valued bounds are carried in log space next to their linear value,
//! since `β/ε^{4d}` overflows `f64` already for moderate `d`. An infinite
//! reach makes every curvature correction factor exactly 1.

mod catalog;
mod descriptor;
mod width;

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

pub use catalog::{annulus, circle, disk, interval, sphere, Catalog};
pub use descriptor::{ManifoldDescriptor, Reach};
pub use width::{width_montecarlo, WidthEstimate};

use crate::math::{exp_saturating, ln, ln_add_exp, ln_unit_ball_volume, ln_unit_sphere_area, sqrt};
use crate::{Error, Result};

/// A covering-number upper bound at radius `epsilon`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverBound {
    pub epsilon: f64,
    pub count: f64,
    pub ln_count: f64,
    pub formula: String,
    /// Additive pieces of `count` when the formula is a sum.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<f64>,
}

impl CoverBound {
    /// Counts below one are raised to one: any nonempty set needs a center.
    fn from_ln(epsilon: f64, ln_count: f64, formula: &str, terms: Vec<f64>) -> Self {
        let ln_count = ln_count.max(0.0);
        Self { epsilon, count: exp_saturating(ln_count), ln_count, formula: formula.to_string(), terms }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SecantAlpha {
    pub d: u32,
    pub alpha: f64,
    pub beta: f64,
    pub ln_alpha: f64,
    pub ln_beta: f64,
}

/// Volume `ω_d` of the unit ball in `R^d`.
pub fn omega(d: u32) -> f64 {
    exp_saturating(ln_unit_ball_volume(d))
}

/// `H^d(S^d)`, the area of the unit sphere in `R^{d+1}`.
pub fn sphere_area(d: u32) -> f64 {
    exp_saturating(ln_unit_sphere_area(d))
}

/// `ln(1 − r²/(k τ²))`, zero for infinite reach.
fn ln_curvature(r: f64, k: f64, tau: f64) -> f64 {
    if tau.is_infinite() {
        0.0
    } else {
        ln(1.0 - r * r / (k * tau * tau))
    }
}

/// Minimum volume of an intrinsic ball of radius `r` in a `d`-manifold of
/// reach `tau`: `ω_d (1 − r²/6τ²)^{d−1} r^d`.
pub fn gunther_ball_volume(d: u32, tau: f64, r: f64) -> Result<f64> {
    if d < 2 {
        return Err(Error::Domain("ball volume bound needs d >= 2"));
    }
    if !(tau > 0.0) || !(r > 0.0) || r >= sqrt(6.0) * tau {
        return Err(Error::Domain("radius must lie in (0, sqrt(6) tau)"));
    }
    let ln_v = ln_unit_ball_volume(d) + (d - 1) as f64 * ln_curvature(r, 6.0, tau) + d as f64 * ln(r);
    Ok(exp_saturating(ln_v))
}

fn check_descriptor(m: &ManifoldDescriptor) -> Result<()> {
    m.validate()
}

/// Radius at which `ε^a (1 − ε²/(k τ²))^b` peaks. Past it the cover formula
/// grows with `ε`; since an `r`-cover is also an `ε`-cover for `ε ≥ r`, the
/// terms are evaluated at `min(ε, r*)` so counts never increase with `ε`.
fn capped_radius(eps: f64, a: f64, b: f64, k: f64, tau: f64) -> f64 {
    if tau.is_infinite() || b <= 0.0 {
        return eps;
    }
    eps.min(sqrt(a * k / (a + 2.0 * b)) * tau)
}

/// `ln` of the interior cover term `V/(ω_d (1 − ε²/24τ²)^{d−1} (ε/2)^d)`.
fn ln_interior_term(volume: f64, d: u32, tau: f64, eps: f64) -> f64 {
    let eps = capped_radius(eps, d as f64, d as f64 - 1.0, 24.0, tau);
    ln(volume)
        - ln_unit_ball_volume(d)
        - (d as f64 - 1.0) * ln_curvature(eps, 24.0, tau)
        - d as f64 * ln(eps / 2.0)
}

/// Cover bound for a manifold without boundary.
pub fn cover_no_boundary(m: &ManifoldDescriptor, eps: f64) -> Result<CoverBound> {
    check_descriptor(m)?;
    if m.boundary_volume > 0.0 {
        return Err(Error::Domain("descriptor has a boundary"));
    }
    if !(eps > 0.0) {
        return Err(Error::Domain("epsilon must be positive"));
    }
    if m.d == 0 {
        return Ok(CoverBound::from_ln(eps, ln(m.volume), "V", vec![]));
    }
    let tau = m.reach.value();
    if eps >= 2.0 * sqrt(6.0) * tau {
        return Err(Error::Domain("epsilon must be below 2 sqrt(6) tau"));
    }
    Ok(CoverBound::from_ln(
        eps,
        ln_interior_term(m.volume, m.d, tau, eps),
        "V/(omega_d (1-eps^2/(24 tau^2))^(d-1) (eps/2)^d)",
        vec![],
    ))
}

/// Cover bound for a manifold with nonempty boundary: interior plus collar.
pub fn cover_with_boundary(m: &ManifoldDescriptor, eps: f64) -> Result<CoverBound> {
    check_descriptor(m)?;
    if !(m.boundary_volume > 0.0) {
        return Err(Error::Domain("descriptor has no boundary"));
    }
    let (tau, mu) = (m.reach.value(), m.boundary_reach.value());
    let limit = (4.0 * sqrt(6.0) * mu).min(2.0 * sqrt(6.0) * tau);
    if !(eps > 0.0) || eps > limit {
        return Err(Error::Domain("epsilon outside (0, min(4 sqrt(6) mu, 2 sqrt(6) tau)]"));
    }
    if m.d == 1 {
        let terms = vec![m.volume / eps, m.boundary_volume];
        let ln_c = ln_add_exp(ln(terms[0]), ln(terms[1]));
        return Ok(CoverBound::from_ln(eps, ln_c, "V/eps + V_bd", terms));
    }
    let d = m.d;
    let ln_inner = ln_interior_term(m.volume, d, tau, eps);
    let r = capped_radius(eps, d as f64 - 1.0, d as f64 - 2.0, 96.0, mu);
    let ln_collar = ln(m.boundary_volume)
        - ln_unit_ball_volume(d - 1)
        - (d as f64 - 2.0) * ln_curvature(r, 96.0, mu)
        - (d as f64 - 1.0) * ln(r / 4.0);
    Ok(CoverBound::from_ln(
        eps,
        ln_add_exp(ln_inner, ln_collar),
        "V/(omega_d (1-eps^2/(24 tau^2))^(d-1) (eps/2)^d) + V_bd/(omega_(d-1) (1-eps^2/(96 mu^2))^(d-2) (eps/4)^(d-1))",
        vec![exp_saturating(ln_inner), exp_saturating(ln_collar)],
    ))
}

/// Dispatches on whether the descriptor has a boundary.
pub fn cover(m: &ManifoldDescriptor, eps: f64) -> Result<CoverBound> {
    if m.boundary_volume > 0.0 {
        cover_with_boundary(m, eps)
    } else {
        cover_no_boundary(m, eps)
    }
}

/// The complexity pair `(α, β)` of a manifold with finite reach.
pub fn secant_alpha(m: &ManifoldDescriptor) -> Result<SecantAlpha> {
    check_descriptor(m)?;
    if m.d == 0 {
        return Err(Error::Domain("d = 0: use the special-case secant cover"));
    }
    if m.reach.is_infinite() {
        return Err(Error::InfiniteReach);
    }
    let d = m.d;
    let tau = m.tau();
    let ln_alpha = if d == 1 {
        let a = 20.0 * m.volume / tau;
        if m.boundary_volume > 0.0 {
            ln_add_exp(ln(a), ln(m.boundary_volume))
        } else {
            ln(a)
        }
    } else {
        let ln_inner = ln(m.volume) - ln_unit_ball_volume(d) + d as f64 * ln(41.0 / tau);
        if m.boundary_volume > 0.0 {
            let ln_collar = ln(m.boundary_volume) - ln_unit_ball_volume(d - 1)
                + (d as f64 - 1.0) * ln(81.0 / tau);
            ln_add_exp(ln_inner, ln_collar)
        } else {
            ln_inner
        }
    };
    // β = α(α + c) with c = 2 for curves and 3^d otherwise
    let ln_c = if d == 1 { ln(2.0) } else { d as f64 * ln(3.0) };
    let ln_beta = ln_alpha + ln_add_exp(ln_alpha, ln_c);
    Ok(SecantAlpha {
        d,
        alpha: exp_saturating(ln_alpha),
        beta: exp_saturating(ln_beta),
        ln_alpha,
        ln_beta,
    })
}

/// Cover bound for the closure of the unit secants, `β/ε^{4d}`.
pub fn secant_cover(m: &ManifoldDescriptor, eps: f64) -> Result<CoverBound> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::Domain("epsilon must lie in (0, 1)"));
    }
    let sa = secant_alpha(m)?;
    let formula = if m.d == 1 { "(alpha^2 + 2 alpha)/eps^4" } else { "(alpha^2 + 3^d alpha)/eps^(4d)" };
    Ok(CoverBound::from_ln(eps, sa.ln_beta - 4.0 * m.d as f64 * ln(eps), formula, vec![]))
}

/// Secant cover for a finite set (`V²`) or a convex set (`(1 + 2/ε)^d`).
pub fn secant_cover_special(m: &ManifoldDescriptor, eps: f64) -> Result<CoverBound> {
    check_descriptor(m)?;
    if !(eps > 0.0) {
        return Err(Error::Domain("epsilon must be positive"));
    }
    if m.d == 0 {
        Ok(CoverBound::from_ln(eps, 2.0 * ln(m.volume), "V^2", vec![]))
    } else if m.reach.is_infinite() {
        Ok(CoverBound::from_ln(eps, m.d as f64 * ln(1.0 + 2.0 / eps), "(1 + 2/eps)^d", vec![]))
    } else {
        Err(Error::NotSpecial)
    }
}

/// Upper bound `8√2 √(ln β + 4d)` on the Gaussian width of the unit secants.
pub fn secant_width_bound(m: &ManifoldDescriptor) -> Result<f64> {
    if m.d < 2 {
        return Err(Error::Domain("width bound requires d >= 2"));
    }
    let sa = secant_alpha(m)?;
    Ok(8.0 * crate::math::SQRT_2 * sqrt(sa.ln_beta + 4.0 * m.d as f64))
}

/// Size bound `(3/δ)^d` for a `δ`-net of the unit sphere in `R^d`.
pub fn sphere_net_bound(d: u32, delta: f64) -> Result<f64> {
    if d < 1 || !(delta > 0.0) {
        return Err(Error::Domain("need d >= 1 and delta > 0"));
    }
    Ok(crate::math::powi(3.0 / delta, d as i32))
}

/// Closed-form sphere cover `3.4 √d (2.1/ε)^d`, valid for `0 < ε < 1`.
pub fn sphere_cover_closed_form(d: u32, eps: f64) -> f64 {
    3.4 * sqrt(d as f64) * exp_saturating(d as f64 * ln(2.1 / eps))
}

/// Closed-form disk cover `(2/ε)^d + 2π (4.05/ε)^{d−1}`.
pub fn disk_cover_closed_form(d: u32, eps: f64) -> f64 {
    exp_saturating(d as f64 * ln(2.0 / eps))
        + 2.0 * crate::math::PI * exp_saturating((d as f64 - 1.0) * ln(4.05 / eps))
}

/// Closed-form secant cover of `S^d`, `20 d 41^{2d} / ε^{4d}`.
pub fn sphere_secant_closed_form(d: u32, eps: f64) -> f64 {
    let d_f = d as f64;
    exp_saturating(ln(20.0 * d_f) + 2.0 * d_f * ln(41.0) - 4.0 * d_f * ln(eps))
}
