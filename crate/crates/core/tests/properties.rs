use brouwer_core::bounds::{
    g_function, theorem4_bound, theorem5_interval, theorem7_interval, theorem7_threshold_m,
    zhou_bound, SNAP_EPS,
};
use brouwer_core::graph::{pair_count, random_gnm, Graph};
use brouwer_core::graph6::{parse_graph6, to_graph6};
use brouwer_core::spectra::{eigenvalues_sym, laplacian, spectral_tolerance};
use brouwer_core::verify::{check_all_k, verify_identities, Status};
use proptest::prelude::*;

/// `(n, m, seed)` with `m` a valid edge count for `n`.
fn gnm_params(max_n: usize) -> impl Strategy<Value = (usize, usize, u64)> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), 0..=pair_count(n), any::<u64>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn handshake_and_zagreb_floor((n, m, seed) in gnm_params(40)) {
        let g = random_gnm(n, m, seed).unwrap();
        let degree_sum: u64 = g.degrees().iter().map(|&d| u64::from(d)).sum();
        prop_assert_eq!(degree_sum, 2 * g.m() as u64);
        prop_assert_eq!(g.m(), m);
        let floor = 4.0 * (m * m) as f64 / n as f64;
        prop_assert!(g.first_zagreb() as f64 >= floor - 1e-9);
    }

    #[test]
    fn graph6_round_trip((n, m, seed) in gnm_params(62)) {
        let g = random_gnm(n, m, seed).unwrap();
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn gnm_is_pure((n, m, seed) in gnm_params(30)) {
        prop_assert_eq!(random_gnm(n, m, seed).unwrap(), random_gnm(n, m, seed).unwrap());
    }

    #[test]
    fn spectral_invariants((n, m, seed) in gnm_params(30)) {
        let g = random_gnm(n, m, seed).unwrap();
        let spectrum = eigenvalues_sym(&laplacian(&g)).unwrap();
        let tol = spectral_tolerance(n);
        let v = spectrum.values();
        prop_assert!(v.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(spectrum.smallest().abs() <= tol);
        prop_assert!(spectrum.largest() <= n as f64 + tol);
        let sums = spectrum.partial_sums();
        prop_assert!((sums[n - 1] - 2.0 * m as f64).abs() <= tol);
        let report = verify_identities(&g).unwrap();
        prop_assert!(report.is_clean(), "{:?}", report);
    }

    #[test]
    fn partial_sums_nondecreasing_and_no_failures((n, m, seed) in gnm_params(20)) {
        let g = random_gnm(n, m, seed).unwrap();
        let records = check_all_k(&g).unwrap();
        prop_assert!(records.windows(2).all(|w| w[1].s_k >= w[0].s_k - spectral_tolerance(n)));
        prop_assert!(records.iter().all(|r| r.status != Status::Fail));
    }

    #[test]
    fn theorem4_dominates_g((n, m, _) in gnm_params(200).prop_filter("n >= 2", |p| p.0 >= 2), kf in 0.0..1.0f64) {
        let k = 1 + ((n - 1) as f64 * kf) as usize;
        let top = theorem4_bound(n, m, k).unwrap();
        for i in 0..=100 {
            let t = i as f64 / 100.0;
            prop_assert!(g_function(n, m, k, t).unwrap() <= top + 1e-9 * top);
        }
    }

    #[test]
    fn g_monotone_below_k_limit((n, m, _) in gnm_params(200).prop_filter("n >= 2", |p| p.0 >= 2), kf in 0.0..1.0f64) {
        let (nf, mf) = (n as f64, m as f64);
        let limit = 1.0 + 8.0 * mf * mf / (nf * nf * (nf - 1.0)) + 4.0 * mf / nf;
        let k_max = (limit.floor() as usize).min(n);
        let k = 1 + ((k_max - 1) as f64 * kf) as usize;
        let mut prev = f64::NEG_INFINITY;
        for i in 0..=100 {
            let g = g_function(n, m, k, i as f64 / 100.0).unwrap();
            prop_assert!(g >= prev - 1e-9 * g.abs().max(1.0), "n={} m={} k={} t={}", n, m, k, i);
            prev = g;
        }
    }

    #[test]
    fn theorem5_lower_endpoint_clears_cube((n, m, _) in gnm_params(300).prop_filter("n >= 2", |p| p.0 >= 2)) {
        let iv = theorem5_interval(n, m).unwrap();
        if iv.applicable {
            let (nf, mf) = (n as f64, m as f64);
            let cube = 8.0 * mf * mf / (nf - 1.0) + 4.0 * mf * nf + nf * nf;
            let lo = iv.lo as f64;
            prop_assert!(lo * lo * lo >= cube - SNAP_EPS * cube);
            prop_assert!(iv.lo <= n && iv.hi == n);
        }
    }

    #[test]
    fn theorem7_lower_endpoint_clears_square((n, m, _) in gnm_params(300).prop_filter("n >= 2", |p| p.0 >= 2)) {
        let iv = theorem7_interval(n, m).unwrap();
        if iv.applicable {
            let (nf, mf) = (n as f64, m as f64);
            let lo = iv.lo as f64;
            let rhs = 2.0 * nf + 2.0 * (2.0 * mf * mf + mf * nf * (nf - 1.0)).sqrt();
            prop_assert!(2.0 * mf + lo * lo >= rhs - 1e-9 * rhs);
            prop_assert!(1 <= iv.lo && iv.lo <= iv.hi && iv.hi <= n);
        }
    }
}

#[test]
fn zhou_complete_graph_is_exact() {
    for n in 3..=60 {
        for k in 1..=n - 2 {
            assert_eq!(zhou_bound(n, pair_count(n), k).unwrap(), (n * k) as f64);
        }
    }
}

/// Threshold by brute scan, comparing squared sides so no nested root is
/// taken on the upper side.
fn threshold_oracle(n: usize) -> Option<usize> {
    let nf = n as f64;
    (0..=pair_count(n)).find(|&m| {
        let mf = m as f64;
        let upper = 1.0 + 8.0 * mf * mf / (nf * nf * (nf - 1.0)) + 4.0 * mf / nf;
        let inner = 2.0 * nf - 2.0 * mf + 2.0 * (2.0 * mf * mf + mf * nf * (nf - 1.0)).sqrt();
        inner < upper * upper
    })
}

#[test]
fn threshold_matches_brute_scan() {
    for n in 2..=120 {
        assert_eq!(theorem7_threshold_m(n).unwrap(), threshold_oracle(n), "n = {n}");
    }
    // Frozen from the scan above.
    assert_eq!(theorem7_threshold_m(50).unwrap(), Some(367));
    assert_eq!(theorem7_threshold_m(100).unwrap(), Some(1468));
}

#[test]
fn empty_and_complete_edge_cases() {
    for n in 1..=8 {
        let e = Graph::empty(n).unwrap();
        assert!(check_all_k(&e).unwrap().iter().all(|r| r.status == Status::Pass));
    }
}
