use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qbch::cyclic_code::{code_from_zero_set, field_for_q, symbol_weight, LinearCode};
use qbch::cyclotomic::{bch_bound, dual_zero_set, enumerate_self_dual_zero_sets, orthogonal_zero_set_gf4, ZeroSet};
use qbch::distance::{
    blockwise_min_weight, min_weight_by_support_enumeration, min_weight_exhaustive, min_weight_outside_subcode,
    min_weight_outside_subcode_by_support, random_word_upper_bound, SupportOutcome, DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_SUPPORT_BUDGET,
};
use qbch::finite_field::Elem;

const BUDGET: u128 = DEFAULT_ENUMERATION_BUDGET;

/// Every codeword, by encoding every message one at a time.
fn all_codewords(code: &LinearCode) -> Vec<Vec<Elem>> {
    let q = code.q() as u64;
    let k = code.k() as u32;
    (0..q.pow(k))
        .map(|mut m| {
            let msg: Vec<Elem> = (0..k)
                .map(|_| {
                    let d = m % q;
                    m /= q;
                    Elem(d as u32)
                })
                .collect();
            code.encode(&msg)
        })
        .collect()
}

fn naive_min(code: &LinearCode, sub: Option<&LinearCode>, weight: impl Fn(&[Elem]) -> usize) -> Option<usize> {
    all_codewords(code)
        .iter()
        .filter(|w| w.iter().any(|x| !x.is_zero()))
        .filter(|w| sub.is_none_or(|s| !s.is_codeword(w)))
        .map(|w| weight(w))
        .min()
}

fn random_code(rng: &mut ChaCha8Rng) -> LinearCode {
    let q = [2usize, 4, 8][rng.gen_range(0..3)];
    let f = field_for_q(q).unwrap();
    let n = rng.gen_range(1..=14);
    let max_k = match q {
        2 => 10,
        4 => 5,
        _ => 4,
    };
    let k = rng.gen_range(0..=n.min(max_k));
    let rows = (0..k)
        .map(|_| (0..n).map(|_| Elem(rng.gen_range(0..q as u32))).collect())
        .collect();
    LinearCode::from_rows(f, n, rows).unwrap()
}

#[test]
fn gray_enumeration_matches_reencoding() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..50 {
        let code = random_code(&mut rng);
        let expect = naive_min(&code, None, symbol_weight);
        assert_eq!(
            min_weight_exhaustive(&code, BUDGET).unwrap(),
            expect,
            "case {case}: {code:?}"
        );

        let sub = LinearCode::from_rows(*code.field(), code.n(), code.rows()[..code.k() / 2].to_vec()).unwrap();
        let expect = naive_min(&code, Some(&sub), symbol_weight);
        assert_eq!(
            min_weight_outside_subcode(&code, &sub, BUDGET).unwrap(),
            expect,
            "case {case}"
        );

        if let Some(d) = min_weight_exhaustive(&code, BUDGET).unwrap() {
            assert_eq!(
                min_weight_by_support_enumeration(&code, d, BUDGET).unwrap(),
                SupportOutcome::Found(d)
            );
            let sampled = random_word_upper_bound(&code, None, 4096, case).unwrap().unwrap();
            assert!(sampled >= d);
        }
    }
}

#[test]
fn blockwise_matches_reencoding() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = field_for_q(2).unwrap();
    for _ in 0..50 {
        let block = rng.gen_range(1..=4);
        let n = block * rng.gen_range(1..=6);
        let k = rng.gen_range(0..=n.min(10));
        let rows = (0..k)
            .map(|_| (0..n).map(|_| Elem(rng.gen_range(0..2))).collect())
            .collect();
        let code = LinearCode::from_rows(f, n, rows).unwrap();
        let blocks = |w: &[Elem]| w.chunks(block).filter(|c| c.iter().any(|x| !x.is_zero())).count();
        assert_eq!(
            blockwise_min_weight(&code, block, BUDGET).unwrap(),
            naive_min(&code, None, blocks)
        );
    }
    let one = LinearCode::from_rows(f, 9, vec![[1, 1, 0, 0, 0, 0, 0, 1, 1].map(Elem).to_vec()]).unwrap();
    assert_eq!(blockwise_min_weight(&one, 3, BUDGET).unwrap(), Some(2));
}

struct Sweep {
    checked: usize,
    parity_pairs: usize,
}

/// Over every self-orthogonal zero set for the given lengths: support search
/// agrees with exhaustive enumeration, the BCH bound holds, d' >= d_dual,
/// sampling never undercuts, and index-2 even-weight pairs have odd d'.
fn sweep(q: usize, lengths: &[usize], budget: u128) -> Sweep {
    let mut s = Sweep {
        checked: 0,
        parity_pairs: 0,
    };
    for &n in lengths {
        for z in enumerate_self_dual_zero_sets(n, q, q == 4, 1 << 20).unwrap() {
            let c = code_from_zero_set(&z).unwrap();
            let (big, big_z): (LinearCode, ZeroSet) = if q == 4 {
                (
                    c.hermitian_orthogonal_gf4().unwrap(),
                    orthogonal_zero_set_gf4(&z).unwrap(),
                )
            } else {
                (c.dual_code(), dual_zero_set(&z))
            };
            if big.k() == c.k() || (q as u128).pow(big.k() as u32) > budget {
                continue;
            }
            let d_dual = min_weight_exhaustive(&big, budget).unwrap().unwrap();
            assert!(bch_bound(&big_z) <= d_dual, "{z:?}");
            assert_eq!(
                min_weight_by_support_enumeration(&big, d_dual, DEFAULT_SUPPORT_BUDGET * 10).unwrap(),
                SupportOutcome::Found(d_dual),
                "{z:?}"
            );
            if d_dual > 1 {
                assert_eq!(
                    min_weight_by_support_enumeration(&big, d_dual - 1, DEFAULT_SUPPORT_BUDGET * 10).unwrap(),
                    SupportOutcome::Exceeds(d_dual - 1)
                );
            }
            let d_true = min_weight_outside_subcode(&big, &c, budget).unwrap().unwrap();
            assert!(d_true >= d_dual, "{z:?}");
            if d_true <= 5 {
                let w = min_weight_outside_subcode_by_support(&big, &c, d_true, DEFAULT_SUPPORT_BUDGET * 10).unwrap();
                assert_eq!(w, SupportOutcome::Found(d_true), "{z:?}");
            }
            let sampled = random_word_upper_bound(&big, Some(&c), 2000, 1).unwrap().unwrap();
            assert!(sampled >= d_true);
            if q == 2 && big.k() == c.k() + 1 && big.even_weight_subcode().unwrap() == c {
                assert_eq!(d_true % 2, 1, "{z:?}");
                s.parity_pairs += 1;
            }
            s.checked += 1;
        }
    }
    s
}

#[test]
fn binary_sweep_up_to_31() {
    let s = sweep(2, &[3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29, 31], 1 << 24);
    assert!(s.checked >= 40, "{}", s.checked);
    assert!(s.parity_pairs > 0);
}

#[test]
fn quaternary_sweep_up_to_21() {
    let s = sweep(4, &[3, 5, 7, 9, 11, 13, 15, 17, 19, 21], 1 << 20);
    assert!(s.checked > 20, "{}", s.checked);
}

#[test]
fn code_of_length_49() {
    let sets = enumerate_self_dual_zero_sets(49, 2, false, 1 << 20).unwrap();
    let mut found = 0;
    for z in sets.iter().filter(|z| z.len() == 25) {
        let c = code_from_zero_set(z).unwrap();
        let dual = c.dual_code();
        if dual.even_weight_subcode().unwrap() != c {
            continue;
        }
        assert_eq!(
            min_weight_by_support_enumeration(&dual, 5, DEFAULT_SUPPORT_BUDGET).unwrap(),
            SupportOutcome::Found(4)
        );
        assert_eq!(min_weight_outside_subcode(&dual, &c, BUDGET).unwrap(), Some(9));
        found += 1;
    }
    assert!(found > 0);
}

#[test]
fn budget_refusal_names_the_requirement() {
    let z = ZeroSet::new(89, 2, []).unwrap();
    let sets = enumerate_self_dual_zero_sets(89, 2, false, 1 << 20).unwrap();
    let c = code_from_zero_set(sets.iter().find(|s| s.len() == 45).unwrap()).unwrap();
    let err = min_weight_outside_subcode(&c.dual_code(), &c, BUDGET).unwrap_err();
    assert!(err.is_budget());
    assert!(err.to_string().contains("2^45"), "{err}");
    assert!(min_weight_exhaustive(&code_from_zero_set(&z).unwrap(), 1 << 10)
        .unwrap_err()
        .is_budget());
}
