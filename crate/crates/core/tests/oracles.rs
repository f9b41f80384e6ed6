use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wsax_core::*;

fn random_series(rng: &mut ChaCha8Rng, n: usize) -> TimeSeries {
    let mut level = 0.0;
    let values = (0..n)
        .map(|_| {
            level += rng.random::<f64>() - 0.5;
            level + 0.3 * (rng.random::<f64>() - 0.5)
        })
        .collect();
    TimeSeries::new(values).unwrap()
}

/// Full distance matrix, then nearest neighbor by (distance, index).
fn brute_force_loo(sd: &SymbolicDataset, dist: &SymbolicDistance<'_>) -> f64 {
    let items = sd.items();
    let m = items.len();
    let mut matrix = vec![vec![0.0; m]; m];
    for i in 0..m {
        for j in 0..m {
            matrix[i][j] = dist.distance(&items[i].1, &items[j].1, sd.table()).unwrap();
        }
    }
    let mut wrong = 0;
    for i in 0..m {
        let min = (0..m)
            .filter(|&j| j != i)
            .map(|j| matrix[i][j])
            .fold(f64::INFINITY, f64::min);
        let j = (0..m).find(|&j| j != i && matrix[i][j] == min).unwrap();
        if items[j].0 != items[i].0 {
            wrong += 1;
        }
    }
    wrong as f64 / m as f64
}

fn brute_force_train_test(
    train: &SymbolicDataset,
    test: &SymbolicDataset,
    dist: &SymbolicDistance<'_>,
) -> f64 {
    let mut wrong = 0;
    for (label, word) in test.items() {
        let d: Vec<f64> = train
            .items()
            .iter()
            .map(|(_, w)| dist.distance(word, w, train.table()).unwrap())
            .collect();
        let min = d.iter().cloned().fold(f64::INFINITY, f64::min);
        let j = d.iter().position(|&x| x == min).unwrap();
        if train.items()[j].0 != *label {
            wrong += 1;
        }
    }
    wrong as f64 / test.len() as f64
}

fn random_symbolic(
    rng: &mut ChaCha8Rng,
    m: usize,
    a: usize,
    n: usize,
    segments: usize,
    classes: i64,
) -> SymbolicDataset {
    let items = (0..m)
        .map(|_| {
            let symbols = (0..segments)
                .map(|_| rng.random_range(0..a as u8))
                .collect();
            (
                rng.random_range(0..classes),
                SaxWord::new(symbols, a, n).unwrap(),
            )
        })
        .collect();
    SymbolicDataset::new(items, build_lookup_table(&compute_breakpoints(a).unwrap())).unwrap()
}

#[test]
fn loo_and_train_test_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let a = rng.random_range(3..8);
        let segments = rng.random_range(1..6);
        let n = segments * rng.random_range(1..4);
        let m = rng.random_range(2..13);
        let train = random_symbolic(&mut rng, m, a, n, segments, 3);
        let m_test = rng.random_range(1..13);
        let test = random_symbolic(&mut rng, m_test, a, n, segments, 3);
        let w = WeightVector::new((0..segments).map(|_| rng.random::<f64>()).collect()).unwrap();
        for dist in [SymbolicDistance::Mindist, SymbolicDistance::Wmd(&w)] {
            assert_eq!(
                loo_error(&train, &dist).unwrap(),
                brute_force_loo(&train, &dist)
            );
            assert_eq!(
                train_test_error(&train, &test, &dist).unwrap(),
                brute_force_train_test(&train, &test, &dist)
            );
        }
    }
}

#[test]
fn lower_bound_chain_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for &(n, segments, a) in &[(96, 8, 3), (128, 16, 10), (128, 32, 20), (96, 32, 10)] {
        let bp = compute_breakpoints(a).unwrap();
        let table = build_lookup_table(&bp);
        for _ in 0..300 {
            let x = znormalize(&random_series(&mut rng, n));
            let y = znormalize(&random_series(&mut rng, n));
            let (px, py) = (paa(&x, segments).unwrap(), paa(&y, segments).unwrap());
            let (wx, wy) = (discretize(&px, &bp), discretize(&py, &bp));
            let w =
                WeightVector::new((0..segments).map(|_| rng.random::<f64>()).collect()).unwrap();
            let d_wmd = wmd(&wx, &wy, &table, &w).unwrap();
            let d_min = mindist(&wx, &wy, &table).unwrap();
            let d_paa = paa_distance(&px, &py).unwrap();
            let d_euc = euclidean(x.as_series(), y.as_series()).unwrap();
            assert!(d_wmd <= d_min + 1e-9);
            assert!(d_min <= d_paa + 1e-9);
            assert!(d_paa <= d_euc + 1e-9);
        }
    }
}

#[test]
fn label_permutation_keeps_errors() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let sd = random_symbolic(&mut rng, 10, 5, 8, 4, 3);
        let relabeled = SymbolicDataset::new(
            sd.items()
                .iter()
                .map(|(l, w)| ([10, -4, 7][*l as usize], w.clone()))
                .collect(),
            sd.table().clone(),
        )
        .unwrap();
        let w = WeightVector::new(vec![0.3, 0.9, 0.1, 0.5]).unwrap();
        for dist in [SymbolicDistance::Mindist, SymbolicDistance::Wmd(&w)] {
            assert_eq!(
                loo_error(&sd, &dist).unwrap(),
                loo_error(&relabeled, &dist).unwrap()
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn trained_error_never_exceeds_mindist(seed in 0u64..1000, data_seed in 0u64..1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(data_seed);
        let sd = random_symbolic(&mut rng, 12, 4, 12, 6, 2);
        prop_assume!(sd.items().iter().any(|(l, _)| *l != sd.items()[0].0));
        let mut cfg = SwarmConfig::new(6);
        cfg.seed = seed;
        cfg.seed_corner = true;
        cfg.iterations = 5;
        let model = train_weights(&sd, &cfg).unwrap();
        let baseline = loo_error(&sd, &SymbolicDistance::Mindist).unwrap();
        prop_assert!(model.train_error <= baseline);
        let check = loo_error(&sd, &SymbolicDistance::Wmd(&model.weights)).unwrap();
        prop_assert_eq!(check, model.train_error);
        let e = evaluate(&model, &sd, Protocol::LeaveOneOut, None).unwrap();
        prop_assert_eq!(e.error_wmd, model.train_error);
        prop_assert_eq!(e.error_mindist, baseline);
    }

    #[test]
    fn errors_are_mismatch_fractions(data_seed in 0u64..10_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(data_seed);
        let m = rng.random_range(2..15);
        let sd = random_symbolic(&mut rng, m, 6, 10, 5, 4);
        let e = loo_error(&sd, &SymbolicDistance::Mindist).unwrap();
        prop_assert!((0.0..=1.0).contains(&e));
        let count = (e * m as f64).round();
        prop_assert_eq!(count / m as f64, e);
    }
}
