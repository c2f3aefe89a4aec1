use proptest::prelude::*;
use secant_sketch_core::operators::{materialize, BlockParams, Distribution, OperatorSpec, SorsParams};
use secant_sketch_core::TransformKind;

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn recipe() -> impl Strategy<Value = OperatorSpec> {
    let kind = prop_oneof![Just(TransformKind::Hadamard), Just(TransformKind::Dct2), Just(TransformKind::Dft)];
    prop_oneof![
        (1usize..=40, 1usize..=64, any::<bool>(), any::<u64>()).prop_map(|(m, n, g, seed)| {
            let dist = if g { Distribution::Gaussian } else { Distribution::Rademacher };
            OperatorSpec::SubGaussian { n, m, dist, seed }
        }),
        (kind.clone(), 2u32..=7, 1usize..=40, any::<u64>()).prop_map(|(t, e, m, seed)| {
            let n = if t == TransformKind::Hadamard { 1 << e } else { (1 << e) + 3 };
            OperatorSpec::Sors(SorsParams::new(n, m, t, seed))
        }),
        (kind, 2usize..=8, 1usize..=200, any::<u64>(), any::<bool>()).prop_flat_map(|(t, m1, extra, seed, g)| {
            let t = if t == TransformKind::Hadamard && !m1.is_power_of_two() { TransformKind::Dct2 } else { t };
            (1..=m1).prop_map(move |m2| {
                let mut p = BlockParams::new(m1 * m1 + extra, m1, m2, t, seed);
                p.dist = if g { Distribution::Gaussian } else { Distribution::Rademacher };
                OperatorSpec::Block(p)
            })
        }),
    ]
}

fn with_input() -> impl Strategy<Value = (OperatorSpec, Vec<f64>, Vec<f64>)> {
    recipe().prop_flat_map(|r| {
        let n = r.cols();
        (Just(r), prop::collection::vec(-5.0f64..5.0, n), prop::collection::vec(-5.0f64..5.0, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn linearity((r, x, y) in with_input(), a in -4.0f64..4.0, b in -4.0f64..4.0) {
        let op = r.build().unwrap();
        let z: Vec<f64> = x.iter().zip(&y).map(|(u, v)| a * u + b * v).collect();
        let (ax, ay, az) = (op.apply(&x).unwrap(), op.apply(&y).unwrap(), op.apply(&z).unwrap());
        let err: Vec<f64> = az.iter().zip(ax.iter().zip(&ay)).map(|(w, (u, v))| w - a * u - b * v).collect();
        prop_assert!(norm(&err) <= 1e-9 * (norm(&az) + norm(&ax) + norm(&ay) + 1e-300));
    }

    #[test]
    fn deterministic((r, x, _y) in with_input()) {
        let first = r.build().unwrap().apply(&x).unwrap();
        let second = r.build().unwrap().apply(&x).unwrap();
        prop_assert_eq!(
            first.iter().map(|v| v.to_bits()).collect::<Vec<_>>(),
            second.iter().map(|v| v.to_bits()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn matches_materialized((r, x, _y) in with_input()) {
        let op = r.build().unwrap();
        let dense = materialize(&*op).unwrap();
        let want = dense.mul_vec(&x).unwrap();
        let got = op.apply(&x).unwrap();
        let err: Vec<f64> = got.iter().zip(&want).map(|(a, b)| a - b).collect();
        prop_assert!(norm(&err) <= 1e-10 * (norm(&want) + 1.0));
    }

    #[test]
    fn json_round_trip(r in recipe()) {
        let text = serde_json::to_string(&r).unwrap();
        let back: OperatorSpec = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, r);
    }
}

/// Mean of ‖A e_j‖² over seeds, for every column j.
fn column_energy(r: &OperatorSpec, seeds: u64) -> Vec<f64> {
    let n = r.cols();
    let mut acc = vec![0.0; n];
    for seed in 0..seeds {
        let a = materialize(&*r.with_seed(seed).build().unwrap()).unwrap();
        for (j, slot) in acc.iter_mut().enumerate() {
            *slot += a.column(j).iter().map(|v| v * v).sum::<f64>();
        }
    }
    acc.into_iter().map(|v| v / seeds as f64).collect()
}

#[test]
fn isotropic_in_expectation() {
    let recipes = [
        OperatorSpec::SubGaussian { n: 64, m: 8, dist: Distribution::Rademacher, seed: 0 },
        OperatorSpec::SubGaussian { n: 48, m: 8, dist: Distribution::Gaussian, seed: 0 },
        OperatorSpec::Sors(SorsParams::new(64, 8, TransformKind::Hadamard, 0)),
        OperatorSpec::Sors(SorsParams::new(60, 8, TransformKind::Dct2, 0)),
        OperatorSpec::Sors(SorsParams::new(40, 8, TransformKind::Dft, 0)),
        OperatorSpec::Block(BlockParams::new(64, 4, 4, TransformKind::Hadamard, 0)),
        OperatorSpec::Block(BlockParams::new(50, 4, 3, TransformKind::Dct2, 0)),
    ];
    for r in &recipes {
        for (j, e) in column_energy(r, 2000).into_iter().enumerate() {
            assert!((0.9..=1.1).contains(&e), "{r:?} column {j}: {e}");
        }
    }
}

/// Two-sample Kolmogorov–Smirnov statistic.
fn ks(mut a: Vec<f64>, mut b: Vec<f64>) -> f64 {
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (mut i, mut j, mut d) = (0, 0, 0.0f64);
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / a.len() as f64 - j as f64 / b.len() as f64).abs());
    }
    d
}

fn output_energy(p: BlockParams, x: &[f64], seeds: u64, offset: u64) -> Vec<f64> {
    (0..seeds)
        .map(|seed| {
            let op = OperatorSpec::Block(BlockParams { seed: seed + offset, ..p }).build().unwrap();
            norm(&op.apply(x).unwrap()).powi(2)
        })
        .collect()
}

#[test]
fn sign_placement_is_interchangeable() {
    let seeds = 5000;
    let critical = 1.628 * (2.0 / seeds as f64).sqrt();
    let x: Vec<f64> = (0..64).map(|i| ((i * 37 % 11) as f64 - 5.0) / 3.0 + if i == 5 { 4.0 } else { 0.0 }).collect();
    let base = BlockParams::new(64, 8, 4, TransformKind::Hadamard, 0);
    let outer_only = output_energy(base, &x, seeds, 0);
    let inner_only = output_energy(BlockParams { use_outer_sign: false, use_inner_sign: true, ..base }, &x, seeds, seeds);
    let d = ks(outer_only, inner_only);
    assert!(d < critical, "KS {d} vs {critical}");

    // several chunks: inner signs on top of the outer diagonal change nothing in law
    let x: Vec<f64> = (0..200).map(|i| ((i * 13 % 7) as f64 - 3.0) / 2.0).collect();
    let base = BlockParams::new(200, 8, 4, TransformKind::Dct2, 0);
    let both = output_energy(BlockParams { use_inner_sign: true, ..base }, &x, seeds, 0);
    let d = ks(output_energy(base, &x, seeds, seeds), both);
    assert!(d < critical, "KS {d} vs {critical}");
}
