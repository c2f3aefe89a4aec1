//! Library bound calculators checked against the direct-product oracles on a
//! seeded parameter lattice, plus monotonicity sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use secant_sketch_core::bounds::{self, ConstantsRegistry, FastFamily, CONSTANT_NAMES};

use super::formulas as o;

pub const LATTICE_POINTS: usize = 100;
pub const REL_TOL: f64 = 1e-12;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

#[derive(Debug, Clone, Copy)]
pub struct LatticePoint {
    pub eps: f64,
    pub p: f64,
    pub beta: f64,
    pub n: usize,
    pub k: f64,
    pub card: f64,
    pub s: u64,
    pub d: u64,
    pub w: f64,
}

pub fn lattice(seed: u64) -> Vec<(LatticePoint, ConstantsRegistry)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..LATTICE_POINTS)
        .map(|_| {
            let n = 1usize << rng.random_range(6..=24);
            let pt = LatticePoint {
                eps: rng.random_range(0.02..0.33),
                p: rng.random_range(0.001..0.33),
                beta: rng.random_range(0.5f64..60.0).exp(),
                n,
                k: rng.random_range(1.0..2.0),
                card: rng.random_range(0.0f64..40.0).exp(),
                s: rng.random_range(1..=64.min(n as u64)),
                d: rng.random_range(1..=20),
                w: rng.random_range(0.5..60.0),
            };
            let mut reg = ConstantsRegistry::unit();
            for name in CONSTANT_NAMES {
                reg.set(name, rng.random_range(0.25..4.0), "lattice");
            }
            (pt, reg)
        })
        .collect()
}

/// Every disagreement between library and oracle on the lattice, as text.
pub fn lattice_failures(seed: u64) -> Vec<String> {
    let mut bad = Vec::new();
    fn check(bad: &mut Vec<String>, what: &str, i: usize, lib: f64, want: f64) {
        if !(rel(lib, want) <= REL_TOL) {
            bad.push(format!("{what} #{i}: library {lib:e} vs oracle {want:e}"));
        }
    }
    for (i, (pt, reg)) in lattice(seed).into_iter().enumerate() {
        let LatticePoint { eps, p, beta, n, k, card, s, d, w } = pt;
        let nf = n as f64;
        let c = |name: &str| reg.get(name);

        let r = bounds::m_subgaussian(beta, eps, p, &reg).unwrap();
        check(&mut bad, "subgaussian", i, r.formula_value, o::subgaussian(c("subgaussian.c_prime"), beta, eps, p));
        check(&mut bad, "subgaussian m_required", i, r.m_required, r.formula_value.max(1.0));

        let r = bounds::m_subgaussian_infinite(w, eps, p, &reg).unwrap();
        check(&mut bad, "subgaussian_infinite", i, r.formula_value, o::subgaussian_infinite(c("subgaussian.c_prime"), w, eps, p));

        let r = bounds::m_sors(beta, eps, p, n, k, &reg).unwrap();
        check(&mut bad, "sors", i, r.formula_value, o::sors(c("sors.c0"), c("sors.c1"), beta.ln(), eps, p, nf, k));

        let r = bounds::m_sors_infinite(w, eps, p, n, k, &reg).unwrap();
        check(&mut bad, "sors_infinite", i, r.formula_value, o::sors(c("sors.c0"), c("sors.c1"), w * w, eps, p, nf, k));

        if p > (-c("block.c1") * nf).exp() {
            let r = bounds::m_block(beta, eps, p, n, &reg).unwrap();
            let m2 = o::block(c("block.c4"), beta, eps, p, nf);
            check(&mut bad, "block", i, r.formula_value, m2);
            let t = o::block_threshold(c("block.c2"), c("block.c3"), eps, p, nf);
            check(&mut bad, "block threshold", i, r.details["ln_beta_threshold"], t);
            if r.feasible != (beta.ln() <= t) {
                bad.push(format!("block feasibility #{i}"));
            }
            let m1 = o::implied_m1(c("fast.m1"), beta.ln(), eps, p, nf, std::f64::consts::SQRT_2, m2);
            if r.m1 != Some(m1) {
                bad.push(format!("block m1 #{i}: {:?} vs {m1}", r.m1));
            }
        }

        let r = bounds::m_finite_subgaussian(card, eps, p, &reg).unwrap();
        check(&mut bad, "finite_subgaussian", i, r.formula_value, o::finite_subgaussian(c("finite_subgaussian.c"), card, eps, p));

        if c("finite_sors.c1") * card / p > 1.0 {
            let r = bounds::m_finite_sors(card, eps, p, n, k, &reg).unwrap();
            let want = o::finite_sors(
                c("finite_sors.c0"),
                c("finite_sors.c1"),
                c("finite_sors.c2"),
                card,
                eps,
                p,
                nf,
                k,
            );
            check(&mut bad, "finite_sors", i, r.formula_value, want);
        }

        let sf = s as f64;
        let r = bounds::m_sob_rip(s, eps, p, n, k, &reg).unwrap();
        check(&mut bad, "sob_rip", i, r.formula_value, o::sob_rip(c("sob_rip.a0"), c("sob_rip.a1"), sf, eps, p, nf, k));

        let r = bounds::m_sob_mrip(s, eps, p, n, k, &reg).unwrap();
        check(&mut bad, "sob_mrip", i, r.formula_value, o::sob_mrip(c("sob_mrip.c0"), c("sob_mrip.c1"), sf, eps, p, nf, k));

        let a = 0.5 + 0.5 * (i as f64 / LATTICE_POINTS as f64);
        let f_lib = |s2: u64, e2: f64, p2: f64| bounds::m_sob_rip(s2, e2, p2, n, k, &reg).map(|r| r.formula_value);
        let f_ref = |s2: u64, e2: f64, p2: f64| o::sob_rip(c("sob_rip.a0"), c("sob_rip.a1"), s2 as f64, e2, p2, nf, k);
        let r = bounds::m_mrip(&f_lib, s, eps, p, n, a).unwrap();
        check(&mut bad, "mrip", i, r.formula_value, o::mrip(&f_ref, s, eps, p, n as u64, a));

        let fam = |f| bounds::m_fast_family(f, eps, p, n, k, &reg);
        let r = fam(FastFamily::FiniteSets { cardinality: card }).unwrap();
        let m2 = o::fast_finite_m2(c("fast_finite.c3"), card, eps, p);
        check(&mut bad, "fast_finite m2", i, r.formula_value, m2);
        let cs = [c("fast_finite.c0"), c("fast_finite.c1"), c("fast_finite.c2")];
        let m1 = o::fast_finite_m1(cs, card, eps, p, nf, k, m2);
        if r.feasible != m1.is_some() || (m1.is_some() && r.m1 != m1) {
            bad.push(format!("fast_finite m1 #{i}: {:?} vs {m1:?}", r.m1));
        }

        let r = fam(FastFamily::Subspace { d }).unwrap();
        let m = o::fast_subspace(c("fast_subspace.c_prime"), d as f64, eps, p);
        check(&mut bad, "fast_subspace", i, r.formula_value, m);
        let ln_card = d as f64 * (48.0 / eps).ln();
        if r.m1 != Some(o::implied_m1(c("fast.m1"), ln_card, eps, p, nf, k, m)) {
            bad.push(format!("fast_subspace m1 #{i}"));
        }

        if p > (-nf).exp() {
            let r = fam(FastFamily::Rip { s }).unwrap();
            let m = o::fast_rip(c("fast_rip.c_dprime"), sf, eps, p, nf);
            check(&mut bad, "fast_rip", i, r.formula_value, m);
            let ln_card = sf * (48.0 * std::f64::consts::E * nf / (sf * eps)).ln();
            if r.m1 != Some(o::implied_m1(c("fast.m1"), ln_card, eps, p, nf, k, m)) {
                bad.push(format!("fast_rip m1 #{i}"));
            }
            let r = fam(FastFamily::Mrip { s }).unwrap();
            check(&mut bad, "fast_mrip", i, r.formula_value, o::fast_rip(c("fast_mrip.c3"), sf, eps, p, nf));
        }

        if p > (-c("fast_infinite.c1") * nf).exp() {
            let r = fam(FastFamily::Infinite { width: w }).unwrap();
            let m = o::fast_infinite(c("fast_infinite.c4"), w, eps, p, nf);
            check(&mut bad, "fast_infinite", i, r.formula_value, m);
            if r.m1 != Some(o::implied_m1(c("fast.m1"), w * w, eps, p, nf, k, m)) {
                bad.push(format!("fast_infinite m1 #{i}"));
            }
        }
    }
    bad
}

/// A bound evaluated with every parameter but one fixed.
type Sweep<'a> = (&'static str, Box<dyn Fn(f64) -> f64 + 'a>, Vec<f64>, Direction);

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Direction {
    NonIncreasing,
    NonDecreasing,
}

fn grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    (0..=steps).map(|i| lo + (hi - lo) * i as f64 / steps as f64).collect()
}

fn int_grid(lo: u64, hi: u64) -> Vec<f64> {
    (lo..=hi).map(|v| v as f64).collect()
}

/// Every monotonicity violation over the sweep suites, as text.
pub fn monotonicity_failures() -> Vec<String> {
    use Direction::*;
    let reg = ConstantsRegistry::unit();
    let reg = &reg;
    let (eps, p, beta, n, k, card, s, d, w) = (0.2, 0.05, 1e6, 1usize << 16, 1.5, 1e4, 4u64, 3u64, 5.0);
    let eps_grid = grid(0.01, 0.32, 40);
    let p_grid = grid(0.001, 0.32, 40);
    let v = |r: secant_sketch_core::Result<bounds::BoundReport>| r.map(|r| r.formula_value).unwrap_or(f64::NAN);
    let fam = move |f, e, q| v(bounds::m_fast_family(f, e, q, n, k, reg));
    let mrip = move |s2: u64, e: f64, q: f64| {
        let f = |s3: u64, e3: f64, p3: f64| bounds::m_sob_rip(s3, e3, p3, n, k, reg).map(|r| r.formula_value);
        v(bounds::m_mrip(&f, s2, e, q, n, 1.0))
    };
    let sweeps: Vec<Sweep<'_>> = vec![
        ("subgaussian/eps", Box::new(|x| v(bounds::m_subgaussian(beta, x, p, reg))), eps_grid.clone(), NonIncreasing),
        ("subgaussian/p", Box::new(|x| v(bounds::m_subgaussian(beta, eps, x, reg))), p_grid.clone(), NonIncreasing),
        ("subgaussian/beta", Box::new(|x| v(bounds::m_subgaussian(x.exp(), eps, p, reg))), grid(0.1, 50.0, 40), NonDecreasing),
        ("subgaussian_infinite/w", Box::new(|x| v(bounds::m_subgaussian_infinite(x, eps, p, reg))), grid(0.1, 50.0, 40), NonDecreasing),
        ("sors/eps", Box::new(|x| v(bounds::m_sors(beta, x, p, n, k, reg))), eps_grid.clone(), NonIncreasing),
        ("sors/p", Box::new(|x| v(bounds::m_sors(beta, eps, x, n, k, reg))), p_grid.clone(), NonIncreasing),
        ("sors/beta", Box::new(|x| v(bounds::m_sors(x.exp(), eps, p, n, k, reg))), grid(0.1, 50.0, 40), NonDecreasing),
        ("sors_infinite/w", Box::new(|x| v(bounds::m_sors_infinite(x, eps, p, n, k, reg))), grid(0.1, 50.0, 40), NonDecreasing),
        ("block/eps", Box::new(|x| v(bounds::m_block(beta, x, p, n, reg))), eps_grid.clone(), NonIncreasing),
        ("block/p", Box::new(|x| v(bounds::m_block(beta, eps, x, n, reg))), p_grid.clone(), NonIncreasing),
        ("block/beta", Box::new(|x| v(bounds::m_block(x.exp(), eps, p, n, reg))), grid(0.1, 50.0, 40), NonDecreasing),
        ("finite_subgaussian/eps", Box::new(|x| v(bounds::m_finite_subgaussian(card, x, p, reg))), eps_grid.clone(), NonIncreasing),
        ("finite_subgaussian/p", Box::new(|x| v(bounds::m_finite_subgaussian(card, eps, x, reg))), p_grid.clone(), NonIncreasing),
        ("finite_subgaussian/card", Box::new(|x| v(bounds::m_finite_subgaussian(x.exp(), eps, p, reg))), grid(0.0, 40.0, 40), NonDecreasing),
        ("finite_sors/eps", Box::new(|x| v(bounds::m_finite_sors(card, x, p, n, k, reg))), eps_grid.clone(), NonIncreasing),
        ("finite_sors/p", Box::new(|x| v(bounds::m_finite_sors(card, eps, x, n, k, reg))), p_grid.clone(), NonIncreasing),
        ("finite_sors/card", Box::new(|x| v(bounds::m_finite_sors(x.exp(), eps, p, n, k, reg))), grid(0.0, 40.0, 40), NonDecreasing),
        ("sob_rip/eps", Box::new(|x| v(bounds::m_sob_rip(s, x, p, n, k, reg))), eps_grid.clone(), NonIncreasing),
        ("sob_rip/p", Box::new(|x| v(bounds::m_sob_rip(s, eps, x, n, k, reg))), p_grid.clone(), NonIncreasing),
        ("sob_rip/s", Box::new(|x| v(bounds::m_sob_rip(x as u64, eps, p, n, k, reg))), int_grid(1, 64), NonDecreasing),
        ("sob_mrip/eps", Box::new(|x| v(bounds::m_sob_mrip(s, x, p, n, k, reg))), eps_grid.clone(), NonIncreasing),
        ("sob_mrip/p", Box::new(|x| v(bounds::m_sob_mrip(s, eps, x, n, k, reg))), p_grid.clone(), NonIncreasing),
        ("sob_mrip/s", Box::new(|x| v(bounds::m_sob_mrip(x as u64, eps, p, n, k, reg))), int_grid(1, 64), NonDecreasing),
        ("mrip/eps", Box::new(move |x| mrip(s, x, p)), eps_grid.clone(), NonIncreasing),
        ("mrip/p", Box::new(move |x| mrip(s, eps, x)), p_grid.clone(), NonIncreasing),
        ("mrip/s", Box::new(move |x| mrip(x as u64, eps, p)), int_grid(1, 64), NonDecreasing),
        ("fast_finite/eps", Box::new(move |x| fam(FastFamily::FiniteSets { cardinality: card }, x, p)), eps_grid.clone(), NonIncreasing),
        ("fast_finite/p", Box::new(move |x| fam(FastFamily::FiniteSets { cardinality: card }, eps, x)), p_grid.clone(), NonIncreasing),
        ("fast_finite/card", Box::new(move |x| fam(FastFamily::FiniteSets { cardinality: x.exp() }, eps, p)), grid(0.0, 40.0, 40), NonDecreasing),
        ("fast_subspace/eps", Box::new(move |x| fam(FastFamily::Subspace { d }, x, p)), eps_grid.clone(), NonIncreasing),
        ("fast_subspace/p", Box::new(move |x| fam(FastFamily::Subspace { d }, eps, x)), p_grid.clone(), NonIncreasing),
        ("fast_subspace/d", Box::new(move |x| fam(FastFamily::Subspace { d: x as u64 }, eps, p)), int_grid(1, 40), NonDecreasing),
        ("fast_rip/eps", Box::new(move |x| fam(FastFamily::Rip { s }, x, p)), eps_grid.clone(), NonIncreasing),
        ("fast_rip/p", Box::new(move |x| fam(FastFamily::Rip { s }, eps, x)), p_grid.clone(), NonIncreasing),
        ("fast_rip/s", Box::new(move |x| fam(FastFamily::Rip { s: x as u64 }, eps, p)), int_grid(1, 64), NonDecreasing),
        ("fast_mrip/eps", Box::new(move |x| fam(FastFamily::Mrip { s }, x, p)), eps_grid.clone(), NonIncreasing),
        ("fast_mrip/p", Box::new(move |x| fam(FastFamily::Mrip { s }, eps, x)), p_grid.clone(), NonIncreasing),
        ("fast_mrip/s", Box::new(move |x| fam(FastFamily::Mrip { s: x as u64 }, eps, p)), int_grid(1, 64), NonDecreasing),
        ("fast_infinite/eps", Box::new(move |x| fam(FastFamily::Infinite { width: w }, x, p)), eps_grid, NonIncreasing),
        ("fast_infinite/p", Box::new(move |x| fam(FastFamily::Infinite { width: w }, eps, x)), p_grid, NonIncreasing),
        ("fast_infinite/w", Box::new(move |x| fam(FastFamily::Infinite { width: x }, eps, p)), grid(0.1, 50.0, 40), NonDecreasing),
    ];
    let mut bad = Vec::new();
    for (name, f, xs, dir) in &sweeps {
        let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
        if let Some(j) = ys.iter().position(|y| !y.is_finite()) {
            bad.push(format!("{name}: no value at x = {}", xs[j]));
            continue;
        }
        for j in 1..ys.len() {
            let ok = match dir {
                NonIncreasing => ys[j] <= ys[j - 1] * (1.0 + 1e-14),
                NonDecreasing => ys[j] >= ys[j - 1] * (1.0 - 1e-14),
            };
            if !ok {
                bad.push(format!("{name}: {} -> {} at x = {} -> {}", ys[j - 1], ys[j], xs[j - 1], xs[j]));
            }
        }
    }
    bad
}
