use alloc::format;
use alloc::string::String;

use serde::{Deserialize, Serialize};

use super::{BoundKind, BoundReport, ConstantsRegistry, Recorder};
use crate::math::{ceil, exp, floor, ln, ln_add_exp, log2, powf, sqrt, E, SQRT_2};
use crate::{Error, Result};

fn open_unit(x: f64, msg: &'static str) -> Result<()> {
    if x > 0.0 && x < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(msg))
    }
}

fn check_eps_p(eps: f64, p: f64) -> Result<()> {
    open_unit(eps, "epsilon must lie in (0, 1)")?;
    open_unit(p, "p must lie in (0, 1)")
}

fn check_beta(beta: f64) -> Result<()> {
    if beta > 1.0 && !beta.is_nan() {
        Ok(())
    } else {
        Err(Error::Domain("beta must exceed 1"))
    }
}

fn check_k(k: f64) -> Result<()> {
    if k >= 1.0 && k.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain("the BOS constant K must be at least 1"))
    }
}

fn check_cardinality(card: f64) -> Result<()> {
    if card >= 1.0 && !card.is_nan() {
        Ok(())
    } else {
        Err(Error::Domain("the set must have at least one element"))
    }
}

/// `m ≥ c′ (√ln β + √ln(2/p))² / ε²` for a manifold and a dense sub-gaussian matrix.
pub fn m_subgaussian(beta: f64, eps: f64, p: f64, reg: &ConstantsRegistry) -> Result<BoundReport> {
    check_beta(beta)?;
    check_eps_p(eps, p)?;
    let mut r = Recorder::new(reg);
    r.input("beta", beta).input("epsilon", eps).input("p", p);
    let c = r.c("subgaussian.c_prime");
    let root = sqrt(ln(beta)) + sqrt(ln(2.0 / p));
    let ln_m = ln(c) + 2.0 * ln(root) - 2.0 * ln(eps);
    Ok(r.finish_ln(BoundKind::Subgaussian, ln_m, "c' (sqrt(ln beta) + sqrt(ln(2/p)))^2 / eps^2", true, "", None))
}

/// `m ≥ c′ (w + √ln(2/p))² / ε²` for a set whose unit vectors have Gaussian width `w`.
pub fn m_subgaussian_infinite(width: f64, eps: f64, p: f64, reg: &ConstantsRegistry) -> Result<BoundReport> {
    if !(width > 0.0) {
        return Err(Error::Domain("width must be positive"));
    }
    check_eps_p(eps, p)?;
    let mut r = Recorder::new(reg);
    r.input("width", width).input("epsilon", eps).input("p", p);
    let c = r.c("subgaussian.c_prime");
    let ln_m = ln(c) + 2.0 * ln(width + sqrt(ln(2.0 / p))) - 2.0 * ln(eps);
    Ok(r.finish_ln(BoundKind::SubgaussianInfinite, ln_m, "c' (w + sqrt(ln(2/p)))^2 / eps^2", true, "", None))
}

/// Shared shape of the SORS manifold and infinite-set bounds with complexity
/// `q` (`ln β` or `w²`):
/// `(c0/ε²) K² q ln²(c1 q ln(2/p) K²/ε²) ln(2/p) ln(2eN/p)`.
fn sors_shape(
    bound: BoundKind,
    q: f64,
    eps: f64,
    p: f64,
    n: usize,
    k: f64,
    mut r: Recorder<'_>,
) -> BoundReport {
    let c0 = r.c("sors.c0");
    let c1 = r.c("sors.c1");
    let l2p = ln(2.0 / p);
    let inner = r.ln_at_least_one("ln^2 argument", c1 * q * l2p * k * k / (eps * eps));
    let ln_m = ln(c0) - 2.0 * ln(eps) + 2.0 * ln(k) + ln(q) + 2.0 * ln(inner) + ln(l2p)
        + ln(ln(2.0 * E * n as f64 / p));
    let formula = if bound == BoundKind::Sors {
        "(c0/eps^2) K^2 ln(beta) ln^2(c1 ln(beta) ln(2/p) K^2/eps^2) ln(2/p) ln(2eN/p)"
    } else {
        "(c0/eps^2) K^2 w^2 ln^2(c1 w^2 ln(2/p) K^2/eps^2) ln(2/p) ln(2eN/p)"
    };
    r.finish_ln(bound, ln_m, formula, true, "", None)
}

/// SORS bound for a manifold with complexity `β`.
pub fn m_sors(beta: f64, eps: f64, p: f64, n: usize, k: f64, reg: &ConstantsRegistry) -> Result<BoundReport> {
    check_beta(beta)?;
    check_eps_p(eps, p)?;
    check_k(k)?;
    if n == 0 {
        return Err(Error::Domain("N must be positive"));
    }
    let mut r = Recorder::new(reg);
    r.input("beta", beta).input("epsilon", eps).input("p", p).input("N", n as f64).input("K", k);
    Ok(sors_shape(BoundKind::Sors, ln(beta), eps, p, n, k, r))
}

/// SORS bound for a set whose unit vectors have Gaussian width `w`.
pub fn m_sors_infinite(width: f64, eps: f64, p: f64, n: usize, k: f64, reg: &ConstantsRegistry) -> Result<BoundReport> {
    if !(width > 0.0) {
        return Err(Error::Domain("width must be positive"));
    }
    check_eps_p(eps, p)?;
    check_k(k)?;
    if n == 0 {
        return Err(Error::Domain("N must be positive"));
    }
    let mut r = Recorder::new(reg);
    r.input("width", width).input("epsilon", eps).input("p", p).input("N", n as f64).input("K", k);
    Ok(sors_shape(BoundKind::SorsInfinite, width * width, eps, p, n, k, r))
}

fn check_fast_domain(n: usize, eps: f64, p: f64, p_low: f64, p_high: f64) -> Result<()> {
    if n < 50 {
        return Err(Error::Domain("N must be at least 50"));
    }
    open_unit(eps, "epsilon must lie in (0, 1)")?;
    if !(p > p_low && p < p_high) {
        return Err(Error::Domain("p outside its admissible window"));
    }
    Ok(())
}

/// Intermediate dimension `m1` implied by a set of log-cardinality `ln_card`:
/// `c‴ K²/ε² ln(N|S|/p) ln³(N K²/(ε p))`, clamped to `[m2, ⌊√N⌋]`.
fn implied_m1(r: &mut Recorder<'_>, ln_card: f64, eps: f64, p: f64, n: usize, k: f64, m2: f64) -> u64 {
    let c = r.c("fast.m1");
    let nf = n as f64;
    let raw = c * k * k / (eps * eps) * (ln(nf / p) + ln_card) * powf(ln(nf * k * k / (eps * p)), 3.0);
    r.detail("m1_formula", raw);
    let hi = floor(sqrt(nf)) as u64;
    let lo = ceil(m2.max(1.0)) as u64;
    let m1 = (ceil(raw) as u64).max(lo);
    if m1 > hi {
        r.clamped.push(String::from("m1 capped at floor(sqrt(N))"));
        hi
    } else {
        if ceil(raw) < lo as f64 {
            r.clamped.push(String::from("m1 raised to m2"));
        }
        m1
    }
}

/// Block-construction bound for a manifold: `m2 ≥ c4 ln β ln(N/εp) ln(1/p)/ε²`,
/// feasible when `ln β ≤ c2 ε² √N / ln⁶(c3 N/εp)`.
pub fn m_block(beta: f64, eps: f64, p: f64, n: usize, reg: &ConstantsRegistry) -> Result<BoundReport> {
    check_beta(beta)?;
    let mut r = Recorder::new(reg);
    r.input("beta", beta).input("epsilon", eps).input("p", p).input("N", n as f64);
    let c1 = r.c("block.c1");
    check_fast_domain(n, eps, p, exp(-c1 * n as f64), 1.0 / 3.0)?;
    let (c2, c3, c4) = (r.c("block.c2"), r.c("block.c3"), r.c("block.c4"));
    let nf = n as f64;
    let lb = ln(beta);
    let l6 = r.ln_at_least_one("ln^6 argument", c3 * nf / (eps * p));
    let threshold = c2 * eps * eps * sqrt(nf) / powf(l6, 6.0);
    r.detail("ln_beta", lb);
    r.detail("ln_beta_threshold", threshold);
    let feasible = lb <= threshold;
    let ln_m = ln(c4) + ln(lb) + ln(ln(nf / (eps * p))) + ln(ln(1.0 / p)) - 2.0 * ln(eps);
    let m2 = exp(ln_m);
    r.detail("K", SQRT_2);
    let m1 = implied_m1(&mut r, lb, eps, p, n, SQRT_2, m2);
    let reason = if feasible {
        String::new()
    } else {
        format!("ln(beta) = {lb:.6e} exceeds c2 eps^2 sqrt(N)/ln^6(c3 N/(eps p)) = {threshold:.6e}")
    };
    Ok(r.finish_ln(
        BoundKind::Block,
        ln_m,
        "c4 ln(beta) ln(N/(eps p)) ln(1/p) / eps^2",
        feasible,
        &reason,
        Some(m1),
    ))
}

/// `m ≥ c″ ln(2|S|/p)/ε²` for a finite set and a dense sub-gaussian matrix.
pub fn m_finite_subgaussian(cardinality: f64, eps: f64, p: f64, reg: &ConstantsRegistry) -> Result<BoundReport> {
    check_cardinality(cardinality)?;
    check_eps_p(eps, p)?;
    let mut r = Recorder::new(reg);
    r.input("cardinality", cardinality).input("epsilon", eps).input("p", p);
    let c = r.c("finite_subgaussian.c");
    let ln_m = ln(c) + ln(ln(2.0 / p) + ln(cardinality)) - 2.0 * ln(eps);
    Ok(r.finish_ln(BoundKind::FiniteSubgaussian, ln_m, "c'' ln(2|S|/p) / eps^2", true, "", None))
}

/// SORS bound for a finite set:
/// `c0′ (K²/ε²) ln(c1′|S|/p) (ln²(ln(c2′|S|/p) K²/ε) ln(eN) + ln(2e/p))`.
pub fn m_finite_sors(cardinality: f64, eps: f64, p: f64, n: usize, k: f64, reg: &ConstantsRegistry) -> Result<BoundReport> {
    check_cardinality(cardinality)?;
    check_eps_p(eps, p)?;
    check_k(k)?;
    if n == 0 {
        return Err(Error::Domain("N must be positive"));
    }
    let mut r = Recorder::new(reg);
    r.input("cardinality", cardinality).input("epsilon", eps).input("p", p).input("N", n as f64).input("K", k);
    let (c0, c1, c2) = (r.c("finite_sors.c0"), r.c("finite_sors.c1"), r.c("finite_sors.c2"));
    let ln_card = ln(cardinality);
    let l1 = ln(c1) + ln_card - ln(p);
    if !(l1 > 0.0) {
        return Err(Error::Domain("c1'|S|/p must exceed 1"));
    }
    let l2 = ln(c2) + ln_card - ln(p);
    let inner = r.ln_at_least_one("ln^2 argument", l2 * k * k / eps);
    let ln_sum = ln_add_exp(2.0 * ln(inner) + ln(1.0 + ln(n as f64)), ln(ln(2.0 * E / p)));
    let ln_m = ln(c0) + 2.0 * ln(k) - 2.0 * ln(eps) + ln(l1) + ln_sum;
    Ok(r.finish_ln(
        BoundKind::FiniteSors,
        ln_m,
        "c0' (K^2/eps^2) ln(c1'|S|/p) (ln^2(ln(c2'|S|/p) K^2/eps) ln(eN) + ln(2e/p))",
        true,
        "",
        None,
    ))
}

fn check_sparsity(s: u64, n: usize) -> Result<()> {
    if s >= 1 && s as usize <= n {
        Ok(())
    } else {
        Err(Error::Domain("sparsity must lie in [1, N]"))
    }
}

/// RIP bound for SOB matrices:
/// `(a0′/ε²) K² s (ln(eN) ln²(a1′ s K²/ε) + ln(e/p))`.
pub fn m_sob_rip(s: u64, eps: f64, p: f64, n: usize, k: f64, reg: &ConstantsRegistry) -> Result<BoundReport> {
    check_sparsity(s, n)?;
    check_eps_p(eps, p)?;
    check_k(k)?;
    let mut r = Recorder::new(reg);
    r.input("s", s as f64).input("epsilon", eps).input("p", p).input("N", n as f64).input("K", k);
    let (a0, a1) = (r.c("sob_rip.a0"), r.c("sob_rip.a1"));
    let sf = s as f64;
    let inner = r.ln_at_least_one("ln^2 argument", a1 * sf * k * k / eps);
    let ln_sum = ln_add_exp(ln(1.0 + ln(n as f64)) + 2.0 * ln(inner), ln(1.0 - ln(p)));
    let ln_m = ln(a0) - 2.0 * ln(eps) + 2.0 * ln(k) + ln(sf) + ln_sum;
    Ok(r.finish_ln(
        BoundKind::SobRip,
        ln_m,
        "(a0'/eps^2) K^2 s (ln(eN) ln^2(a1' s K^2/eps) + ln(e/p))",
        true,
        "",
        None,
    ))
}

/// MRIP bound for SOB matrices: `(c0′/ε²) K² s ln(eN/p) ln²(c1′ s K²/ε²)`.
pub fn m_sob_mrip(s: u64, eps: f64, p: f64, n: usize, k: f64, reg: &ConstantsRegistry) -> Result<BoundReport> {
    check_sparsity(s, n)?;
    check_eps_p(eps, p)?;
    check_k(k)?;
    let mut r = Recorder::new(reg);
    r.input("s", s as f64).input("epsilon", eps).input("p", p).input("N", n as f64).input("K", k);
    let (c0, c1) = (r.c("sob_mrip.c0"), r.c("sob_mrip.c1"));
    let sf = s as f64;
    let inner = r.ln_at_least_one("ln^2 argument", c1 * sf * k * k / (eps * eps));
    let ln_m = ln(c0) - 2.0 * ln(eps) + 2.0 * ln(k) + ln(sf) + ln(1.0 + ln(n as f64) - ln(p))
        + 2.0 * ln(inner);
    Ok(r.finish_ln(BoundKind::SobMrip, ln_m, "(c0'/eps^2) K^2 s ln(eN/p) ln^2(c1' s K^2/eps^2)", true, "", None))
}

/// Number of dyadic levels `⌈log₂(N/s)⌉ + 1`.
pub fn mrip_levels(n: usize, s: u64) -> u64 {
    ceil(log2(n as f64 / s as f64)).max(0.0) as u64 + 1
}

/// Converts an RIP bound `f(s′, ε′, p′)` into an MRIP bound by taking the
/// maximum over the base term and the dyadic levels `0 ≤ l < L` with
/// `L = min(2 log₂(a/ε), ⌈log₂(N/s)⌉ + 1)`. Sparsities are capped at `N`.
pub fn m_mrip(
    f: &dyn Fn(u64, f64, f64) -> Result<f64>,
    s: u64,
    eps: f64,
    p: f64,
    n: usize,
    a: f64,
) -> Result<BoundReport> {
    check_sparsity(s, n)?;
    check_eps_p(eps, p)?;
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain("a must lie in (0, 1]"));
    }
    let reg = ConstantsRegistry::unit();
    let mut r = Recorder::new(&reg);
    r.input("s", s as f64).input("epsilon", eps).input("p", p).input("N", n as f64).input("a", a);
    let levels = mrip_levels(n, s);
    let p_level = p / levels as f64;
    let cap = |x: f64| -> u64 { (x as u64).min(n as u64).max(1) };
    let base_s = cap(2.0 * ceil(a * a * s as f64 / (eps * eps)));
    let mut best = f(base_s, a * a / 2.0, p_level)?;
    let mut arg = -1.0;
    let big_l = (2.0 * log2(a / eps)).min(levels as f64);
    let mut l = 0u32;
    while (l as f64) < big_l {
        let v = f(cap(powf(2.0, l as f64) * s as f64), powf(2.0, l as f64 / 2.0) * eps, p_level)?;
        if v > best {
            best = v;
            arg = l as f64;
        }
        l += 1;
    }
    r.detail("levels", levels as f64);
    r.detail("L", big_l);
    r.detail("argmax_level", arg);
    r.detail("base_sparsity", base_s as f64);
    Ok(r.finish(
        BoundKind::Mrip,
        best,
        "max{f(2 ceil(a^2 s/eps^2), a^2/2, p'), max_{0<=l<L} f(2^l s, 2^(l/2) eps, p')}",
        true,
        "",
        None,
    ))
}

/// The fast two-stage variants, each with its own complexity parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum FastFamily {
    FiniteSets { cardinality: f64 },
    Subspace { d: u64 },
    Rip { s: u64 },
    Mrip { s: u64 },
    Infinite { width: f64 },
}

/// Bounds for the fast two-stage construction, returning `m`, the implied
/// `m1` and the regime restriction of each variant.
pub fn m_fast_family(
    family: FastFamily,
    eps: f64,
    p: f64,
    n: usize,
    k: f64,
    reg: &ConstantsRegistry,
) -> Result<BoundReport> {
    check_k(k)?;
    let nf = n as f64;
    let mut r = Recorder::new(reg);
    r.input("epsilon", eps).input("p", p).input("N", nf).input("K", k);
    match family {
        FastFamily::FiniteSets { cardinality } => {
            check_cardinality(cardinality)?;
            if nf < 4.0 * E {
                return Err(Error::Domain("N must be at least 4e"));
            }
            check_eps_p(eps, p)?;
            r.input("cardinality", cardinality);
            let (c0, c1, c2, c3) = (
                r.c("fast_finite.c0"),
                r.c("fast_finite.c1"),
                r.c("fast_finite.c2"),
                r.c("fast_finite.c3"),
            );
            let cap_c = r.c("fast_finite.set_cap");
            let ln_m2 = ln(c3) + ln(ln(4.0 / p) + ln(cardinality)) - 2.0 * ln(eps);
            let m2 = exp(ln_m2);
            // smallest admissible m1 in [m2, √N]
            let hi = floor(sqrt(nf)) as u64;
            let lo = (ceil(m2) as u64).max(1);
            let ln_card = ln(cardinality);
            let mut chosen = None;
            for m1 in lo..=hi {
                let q = ln(nf) + ln_card - 2.0 * ln(m1 as f64) - ln(p);
                let t1 = ln(c1) + q;
                let t2 = ln(c2) + q;
                let inner = r.ln_at_least_one("ln^2 argument", t2 * k * k / eps);
                let need = c0 * k * k / (eps * eps) * t1 * inner * inner * ln(4.0 * E * nf / p);
                if m1 as f64 >= need {
                    chosen = Some(m1);
                    break;
                }
            }
            let l3 = r.ln_at_least_one("ln^3 argument", nf / (eps * p));
            let ln_cap = ln(p / nf) + cap_c * eps * eps * sqrt(nf) / powf(l3, 3.0);
            r.detail("ln_set_cap", ln_cap);
            let (feasible, reason) = match chosen {
                Some(_) => (true, String::new()),
                None => (false, format!("no m1 in [{lo}, {hi}] satisfies the intermediate-dimension bound")),
            };
            Ok(r.finish_ln(
                BoundKind::FastFinite,
                ln_m2,
                "m2 >= c3 ln(4|S|/p)/eps^2; sqrt(N) >= m1 >= c0 (K^2/eps^2) ln(c1 N|S|/(m1^2 p)) ln^2(ln(c2 N|S|/(m1^2 p)) K^2/eps) ln(4eN/p)",
                feasible,
                &reason,
                Some(chosen.unwrap_or(hi)),
            ))
        }
        FastFamily::Subspace { d } => {
            if d == 0 {
                return Err(Error::Domain("subspace dimension must be positive"));
            }
            if n < 50 {
                return Err(Error::Domain("N must be at least 50"));
            }
            check_eps_p(eps, p)?;
            r.input("d", d as f64);
            let (c, cp) = (r.c("fast_subspace.c"), r.c("fast_subspace.c_prime"));
            let df = d as f64;
            let l4 = r.ln_at_least_one("ln^4 argument", nf / (eps * p));
            let cap = c * eps * eps * sqrt(nf) / powf(l4, 4.0) - 1.0;
            r.detail("d_max", cap);
            let ln_m = ln(cp) + ln(df) - 2.0 * ln(eps) + ln(-ln(eps) - ln(p) / df);
            let m = exp(ln_m);
            let m1 = implied_m1(&mut r, df * ln(48.0 / eps), eps, p, n, k, m);
            let feasible = df <= cap;
            let reason = if feasible { String::new() } else { format!("d = {d} exceeds {cap:.6e}") };
            Ok(r.finish_ln(BoundKind::FastSubspace, ln_m, "c' d eps^-2 ln(1/(eps p^(1/d)))", feasible, &reason, Some(m1)))
        }
        FastFamily::Rip { s } | FastFamily::Mrip { s } => {
            let mrip = matches!(family, FastFamily::Mrip { .. });
            check_sparsity(s, n)?;
            let sf = s as f64;
            r.input("s", sf);
            let (p_low, eps_high) = if mrip {
                (exp(-nf) * mrip_levels(n, s) as f64, 1.0)
            } else {
                (exp(-nf), 1.0 / 3.0)
            };
            check_fast_domain(n, eps, p, p_low, 1.0 / 3.0)?;
            if eps >= eps_high {
                return Err(Error::Domain("epsilon must lie in (0, 1/3)"));
            }
            let (c, cp, cm) = if mrip {
                (r.c("fast_mrip.c1"), r.c("fast_mrip.c2"), r.c("fast_mrip.c3"))
            } else {
                (r.c("fast_rip.c"), r.c("fast_rip.c_prime"), r.c("fast_rip.c_dprime"))
            };
            let l5 = r.ln_at_least_one("ln^5 argument", cp * nf / (eps * p));
            let cap = c * eps * eps * sqrt(nf) / powf(l5, 5.0);
            r.detail("s_max", cap);
            let ln_m = ln(cm) + ln(sf) - 2.0 * ln(eps) + ln(ln(nf / eps) - ln(p) / sf);
            let m = exp(ln_m);
            let m1 = implied_m1(&mut r, sf * ln(48.0 * E * nf / (sf * eps)), eps, p, n, k, m);
            let feasible = sf <= cap;
            let reason = if feasible { String::new() } else { format!("s = {s} exceeds {cap:.6e}") };
            let kind = if mrip { BoundKind::FastMrip } else { BoundKind::FastRip };
            Ok(r.finish_ln(kind, ln_m, "c s eps^-2 ln(N/(eps p^(1/s)))", feasible, &reason, Some(m1)))
        }
        FastFamily::Infinite { width } => {
            if !(width > 0.0) || !width.is_finite() {
                return Err(Error::Domain("width must be positive"));
            }
            r.input("width", width);
            let c1 = r.c("fast_infinite.c1");
            check_fast_domain(n, eps, p, exp(-c1 * nf), 1.0 / 3.0)?;
            let (c2, c3, c4) = (r.c("fast_infinite.c2"), r.c("fast_infinite.c3"), r.c("fast_infinite.c4"));
            let w2 = width * width;
            let l6 = r.ln_at_least_one("ln^6 argument", c3 * nf / (eps * p));
            let cap = c2 * eps * eps * sqrt(nf) / powf(l6, 6.0);
            r.detail("width_sq_max", cap);
            let ln_m = ln(c4) + ln(w2) + ln(ln(nf / (eps * p))) + ln(ln(1.0 / p)) - 2.0 * ln(eps);
            let m = exp(ln_m);
            let m1 = implied_m1(&mut r, w2, eps, p, n, k, m);
            let feasible = w2 <= cap;
            let reason = if feasible { String::new() } else { format!("w^2 = {w2:.6e} exceeds {cap:.6e}") };
            Ok(r.finish_ln(
                BoundKind::FastInfinite,
                ln_m,
                "c4 w^2 ln(N/(eps p)) ln(1/p) / eps^2",
                feasible,
                &reason,
                Some(m1),
            ))
        }
    }
}

/// `ε_t ≤ (t/s) ε_{2s}`.
pub fn ric_scale(eps_2s: f64, s: u64, t: u64) -> Result<f64> {
    if s == 0 || t < s || !(eps_2s >= 0.0) {
        return Err(Error::Domain("need 1 <= s <= t and eps >= 0"));
    }
    Ok(t as f64 / s as f64 * eps_2s)
}

/// `(2⌈s/k⌉, k·ε)`: the sparsity whose RIC must stay below `ε` to certify
/// order `s` at level `kε`.
pub fn ric_scale_ceil(eps: f64, s: u64, k: f64) -> Result<(u64, f64)> {
    if s == 0 || !(k >= 1.0) || !(eps >= 0.0) {
        return Err(Error::Domain("need s >= 1, k >= 1 and eps >= 0"));
    }
    Ok((2 * ceil(s as f64 / k) as u64, k * eps))
}

/// `(ln (N/s)^s, ln (eN/s)^s)`, bracketing `ln C(N, s)`.
pub fn binom_bounds(n: u64, s: u64) -> Result<(f64, f64)> {
    if s == 0 || s > n {
        return Err(Error::Domain("need N >= s >= 1"));
    }
    let r = n as f64 / s as f64;
    Ok((s as f64 * ln(r), s as f64 * (1.0 + ln(r))))
}
