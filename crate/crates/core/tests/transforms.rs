use proptest::prelude::*;
use secant_sketch_core::transforms::{apply_naive, TransformKind, TransformPlan};

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn kind_and_len() -> impl Strategy<Value = (TransformKind, usize)> {
    prop_oneof![
        (0u32..=10).prop_map(|e| (TransformKind::Hadamard, 1usize << e)),
        (1usize..=300).prop_map(|n| (TransformKind::Dct2, n)),
        (1usize..=300).prop_map(|n| (TransformKind::Dft, n)),
    ]
}

fn case() -> impl Strategy<Value = (TransformKind, Vec<f64>)> {
    kind_and_len().prop_flat_map(|(k, n)| (Just(k), prop::collection::vec(-10.0f64..10.0, n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parseval((kind, x) in case()) {
        let plan = TransformPlan::new(kind, x.len()).unwrap();
        let y = plan.apply(&x).unwrap();
        let (a, b) = (norm(&y).powi(2), norm(&x).powi(2));
        prop_assert!((a - b).abs() <= 1e-9 * b.max(1e-300));
    }

    #[test]
    fn round_trip((kind, x) in case()) {
        let plan = TransformPlan::new(kind, x.len()).unwrap();
        let back = plan.inverse(&plan.apply(&x).unwrap()).unwrap();
        let err: Vec<f64> = back.iter().zip(&x).map(|(a, b)| a - b).collect();
        prop_assert!(norm(&err) <= 1e-10 * norm(&x).max(1e-300));
    }

    #[test]
    fn fast_matches_naive((kind, x) in case()) {
        let plan = TransformPlan::new(kind, x.len()).unwrap();
        let fast = plan.apply(&x).unwrap();
        let slow = apply_naive(kind, &x).unwrap();
        let err: Vec<f64> = fast.iter().zip(&slow).map(|(a, b)| a - b).collect();
        prop_assert!(norm(&err) <= 1e-9 * norm(&x).max(1e-300));
    }

    #[test]
    fn linear((kind, x) in case(), a in -3.0f64..3.0, b in -3.0f64..3.0, shift in 0usize..7) {
        let plan = TransformPlan::new(kind, x.len()).unwrap();
        let mut y = x.clone();
        y.rotate_left(shift % x.len());
        let z: Vec<f64> = x.iter().zip(&y).map(|(u, v)| a * u + b * v).collect();
        let (tx, ty, tz) = (plan.apply(&x).unwrap(), plan.apply(&y).unwrap(), plan.apply(&z).unwrap());
        let err: Vec<f64> = tz.iter().zip(tx.iter().zip(&ty)).map(|(w, (u, v))| w - a * u - b * v).collect();
        prop_assert!(norm(&err) <= 1e-9 * (norm(&tz) + 1.0));
    }
}

#[test]
fn bos_constant_from_basis_columns() {
    for (kind, n) in [(TransformKind::Hadamard, 64), (TransformKind::Dct2, 50), (TransformKind::Dct2, 64)] {
        let plan = TransformPlan::new(kind, n).unwrap();
        let mut worst = 0.0f64;
        for j in 0..n {
            let mut e = vec![0.0; n];
            e[j] = 1.0;
            for v in plan.apply(&e).unwrap() {
                worst = worst.max(v.abs());
            }
        }
        assert!((n as f64).sqrt() * worst <= 2f64.sqrt() + 1e-12);
    }
}

#[test]
fn rejects_bad_lengths() {
    assert!(TransformPlan::new(TransformKind::Hadamard, 12).is_err());
    assert!(TransformPlan::new(TransformKind::Dct2, 0).is_err());
    let plan = TransformPlan::new(TransformKind::Dft, 8).unwrap();
    assert!(plan.apply(&[0.0; 7]).is_err());
    assert_eq!(plan.apply(&[0.0; 8]).unwrap().len(), 16);
}
