use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qbch::channel_sim::{
    decode_error, estimate_logical_error_rate, exhaustive_erasure, exhaustive_pauli, is_logical_error,
    sample_depolarizing, sample_erasure, ChannelModel, Decoder, DecoderOptions, ErasurePattern, ExhaustiveCount,
    PauliError,
};
use qbch::cyclotomic::ZeroSet;
use qbch::quantum::{search_qbch, Budgets, Construction, QuantumCode};

fn code(n: usize, q: usize, c: Construction, k: usize) -> QuantumCode {
    let r = search_qbch(n, q, c, None, None, &Budgets::default())
        .unwrap()
        .into_iter()
        .find(|r| r.k == k)
        .unwrap();
    QuantumCode::from_record(&r).unwrap()
}

fn decoder(code: &QuantumCode) -> Decoder {
    Decoder::new(code, DecoderOptions::default()).unwrap()
}

fn steane() -> QuantumCode {
    QuantumCode::new(
        &ZeroSet::new(7, 2, [0, 3, 5, 6]).unwrap(),
        Construction::Binary,
        None,
        None,
    )
    .unwrap()
}

/// |x − np| ≤ 3·sqrt(np(1−p)).
fn within_three_sigma(count: usize, trials: usize, p: f64) -> bool {
    let mean = trials as f64 * p;
    (count as f64 - mean).abs() <= 3.0 * (mean * (1.0 - p)).sqrt()
}

#[test]
fn depolarizing_statistics() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    assert!(sample_depolarizing(50, 0.0, &mut rng).is_identity());
    let e = sample_depolarizing(100_000, 1.0, &mut rng);
    assert!(within_three_sigma(e.x_part.count_ones(), 100_000, 0.5));
    assert!(within_three_sigma(e.z_part.count_ones(), 100_000, 0.5));
    let e = sample_depolarizing(10_000, 0.1, &mut rng);
    assert!(within_three_sigma(e.weight(), 10_000, 0.075));
    assert_eq!(e.weight(), e.support().len());
}

#[test]
fn erasure_statistics() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let (p, e) = sample_erasure(40, 0.0, &mut rng);
    assert!(p.is_empty() && e.is_identity());
    let (p, _) = sample_erasure(40, 1.0, &mut rng);
    assert_eq!(p.len(), 40);
    for _ in 0..200 {
        let (p, e) = sample_erasure(40, 0.3, &mut rng);
        assert!(e.support().iter().all(|&i| p.contains(i)));
    }
    let (p, _) = sample_erasure(10_000, 0.2, &mut rng);
    assert!(within_three_sigma(p.len(), 10_000, 0.2));
}

#[test]
fn steane_exhaustive() {
    let c = steane();
    let d = decoder(&c);
    let mut syndromes: Vec<u128> = (0..7)
        .map(|i| {
            let mut e = PauliError::identity(7);
            e.set(i, 1);
            d.syndromes(&e)[0]
        })
        .collect();
    syndromes.sort_unstable();
    syndromes.dedup();
    assert_eq!(syndromes.len(), 7);
    assert!(!syndromes.contains(&0));
    assert_eq!(
        exhaustive_pauli(&d, 1).unwrap(),
        vec![ExhaustiveCount {
            size: 1,
            cases: 21,
            failures: 0
        }]
    );
    let er = exhaustive_erasure(&d, 2).unwrap();
    assert_eq!(
        er[1],
        ExhaustiveCount {
            size: 2,
            cases: 336,
            failures: 0
        }
    );
    // three erasures on a distance-3 code cannot all be corrected
    assert!(exhaustive_erasure(&d, 3).unwrap()[2].failures > 0);
}

#[test]
fn fifteen_qubit_exhaustive() {
    let d = decoder(&code(15, 2, Construction::Binary, 7));
    assert_eq!(exhaustive_pauli(&d, 1).unwrap()[0].failures, 0);
    assert!(exhaustive_erasure(&d, 2).unwrap().iter().all(|c| c.failures == 0));
}

#[test]
fn distance_five_codes_correct_two_errors() {
    for (n, q, c) in [(21, 2, Construction::Binary), (13, 4, Construction::Quaternary)] {
        let code = code(n, q, c, if q == 2 { 3 } else { 1 });
        let d = decoder(&code);
        let counts = exhaustive_pauli(&d, 2).unwrap();
        assert!(counts.iter().all(|c| c.failures == 0), "{counts:?}");
        let counts = exhaustive_erasure(&d, 4).unwrap();
        assert!(counts.iter().all(|c| c.failures == 0), "{counts:?}");
    }
}

#[test]
fn extension_decodes_blockwise() {
    // [[21,9,3|3]]: one corrupted block of three qubits is always corrected
    let code = code(7, 8, Construction::Extension, 9);
    let d = decoder(&code);
    assert_eq!(d.block(), 3);
    for block in 0..7 {
        for paulis in 1..64u32 {
            let mut e = PauliError::identity(21);
            for j in 0..3 {
                e.set(3 * block + j, (paulis >> (2 * j) & 3) as u8);
            }
            assert!(
                decode_error(&d, &e, None).unwrap().success,
                "block {block} pattern {paulis}"
            );
        }
    }
    let er = exhaustive_erasure(&d, 2).unwrap();
    assert!(er.iter().all(|c| c.failures == 0), "{er:?}");
}

#[test]
fn logical_error_membership() {
    let c = steane();
    let cl = c.code();
    assert!(!is_logical_error(&PauliError::identity(7), cl).unwrap());
    let mut e = PauliError::identity(7);
    for i in 0..7 {
        e.x_part.set(i, true);
    }
    // the all-ones word lies in the Hamming code but not in the simplex code
    assert!(is_logical_error(&e, cl).unwrap());
    let d = decoder(&c);
    assert!(d.is_logical(&e));
}

#[test]
fn rates_grow_with_noise() {
    let d = decoder(&steane());
    let zero = estimate_logical_error_rate(&d, ChannelModel::Depolarizing(0.0), 1000, 3).unwrap();
    assert_eq!(zero.rate, 0.0);
    let low = estimate_logical_error_rate(&d, ChannelModel::Depolarizing(0.01), 100_000, 3).unwrap();
    let high = estimate_logical_error_rate(&d, ChannelModel::Depolarizing(0.1), 100_000, 3).unwrap();
    assert!(low.ci95.1 < high.ci95.0, "{low:?} {high:?}");
    let e_low = estimate_logical_error_rate(&d, ChannelModel::Erasure(0.05), 20_000, 3).unwrap();
    let e_high = estimate_logical_error_rate(&d, ChannelModel::Erasure(0.4), 20_000, 3).unwrap();
    assert!(e_low.ci95.1 < e_high.ci95.0, "{e_low:?} {e_high:?}");
    assert!(estimate_logical_error_rate(&d, ChannelModel::Erasure(1.5), 10, 3).is_err());
}

#[test]
fn rates_do_not_depend_on_thread_count() {
    let d = decoder(&code(15, 4, Construction::Quaternary, 7));
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| estimate_logical_error_rate(&d, ChannelModel::Depolarizing(0.05), 20_000, 99).unwrap())
    };
    let a = run(1);
    assert_eq!(a, run(4));
    assert_eq!(a, run(3));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Every decoded correction reproduces the syndrome, and errors of weight
    /// at most one are always corrected, with or without erasure information.
    #[test]
    fn corrections_match_syndromes(seed in any::<u64>(), eps in 0.0f64..0.5, which in 0usize..3) {
        let c = match which {
            0 => steane(),
            1 => code(15, 2, Construction::Binary, 7),
            _ => code(5, 4, Construction::Quaternary, 1),
        };
        let d = decoder(&c);
        let n = c.n_qubits();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = sample_depolarizing(n, eps, &mut rng);
        let out = decode_error(&d, &e, None).unwrap();
        prop_assert!(d.syndromes(&out.residual).iter().all(|&s| s == 0) || out.decoder_used.is_none());
        if e.weight() <= 1 {
            prop_assert!(out.success);
        }
        let pattern = ErasurePattern::new(n, e.support()).unwrap();
        let out = decode_error(&d, &e, Some(&pattern)).unwrap();
        if pattern.len() <= 2 {
            prop_assert!(out.success);
        }
    }
}
