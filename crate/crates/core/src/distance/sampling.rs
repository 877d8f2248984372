//! Randomised upper bounds on minimum distance.
//!
//! Uniformly random codewords almost never have low weight, so each sample
//! batch draws a random information set instead: positions are shuffled,
//! the generator matrix is brought to systematic form on the first
//! independent positions, and the batch consists of the systematic rows and
//! all sums of two of them. Low-weight codewords concentrated off the
//! information set show up this way with useful probability.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bits::BitRow;
use crate::error::{Error, Result};

use super::packed::{MinWeights, PackedCode};

/// Per-batch RNG: a fixed stream of the master seed, independent of scheduling.
pub(crate) fn batch_rng(seed: u64, batch: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(batch);
    rng
}

struct Prepared {
    compact_rows: Vec<BitRow>,
    /// Parity checks of `sub` in compact coordinates (empty: `sub` is the zero code).
    sub_checks: Vec<BitRow>,
}

fn systematic(rows: &[BitRow], order: &[usize]) -> Vec<BitRow> {
    let mut rows = rows.to_vec();
    let mut done = 0;
    for &pos in order {
        if done == rows.len() {
            break;
        }
        let Some(p) = (done..rows.len()).find(|&i| rows[i].get(pos)) else {
            continue;
        };
        rows.swap(done, p);
        let pivot = rows[done].clone();
        for (i, r) in rows.iter_mut().enumerate() {
            if i != done && r.get(pos) {
                r.xor_assign(&pivot);
            }
        }
        done += 1;
    }
    rows
}

fn run_batch(code: &PackedCode, prep: &Prepared, seed: u64, batch: u64, quota: u64) -> MinWeights {
    let mut rng = batch_rng(seed, batch);
    let mut order: Vec<usize> = (0..code.positions()).collect();
    order.shuffle(&mut rng);
    let rows = systematic(&prep.compact_rows, &order);

    let symbols = code.symbols();
    let planes: Vec<Vec<u128>> = rows
        .iter()
        .map(|r| {
            (0..code.planes())
                .map(|p| {
                    (0..symbols)
                        .filter(|&j| r.get(p * symbols + j))
                        .fold(0u128, |acc, j| acc | 1u128 << j)
                })
                .collect()
        })
        .collect();
    let syndromes: Vec<BitRow> = rows
        .iter()
        .map(|r| BitRow::from_bools(&prep.sub_checks.iter().map(|h| h.dot(r)).collect::<Vec<_>>()))
        .collect();
    let restricted = !prep.sub_checks.is_empty();

    let mut best = (u32::MAX, u32::MAX);
    let mut consider = |a: usize, b: Option<usize>| {
        if restricted {
            let outside = match b {
                None => !syndromes[a].is_zero(),
                Some(b) => syndromes[a] != syndromes[b],
            };
            if !outside {
                return;
            }
        }
        let mut bits = 0;
        let mut or = 0u128;
        for (p, &x) in planes[a].iter().enumerate() {
            let w = x ^ b.map_or(0, |b| planes[b][p]);
            bits += w.count_ones();
            or |= w;
        }
        best.0 = best.0.min(bits);
        best.1 = best.1.min(or.count_ones());
    };

    let mut used = 0u64;
    'outer: for a in 0..rows.len() {
        if used == quota {
            break;
        }
        consider(a, None);
        used += 1;
        for b in 0..a {
            if used == quota {
                break 'outer;
            }
            consider(a, Some(b));
            used += 1;
        }
    }
    MinWeights::from_raw(best.0, best.1)
}

/// Candidate codewords examined per information set.
pub fn batch_size(dim: usize) -> u64 {
    let k = dim as u64;
    k + k * k.saturating_sub(1) / 2
}

/// Upper bound on the minimum weight over `big ∖ sub` from `trials` sampled
/// codewords. Deterministic for a fixed seed.
pub fn sampled_min(big: &PackedCode, sub: Option<&PackedCode>, trials: u64, seed: u64) -> Result<MinWeights> {
    if trials == 0 {
        return Err(Error::InvalidInput("need at least one trial".into()));
    }
    if let Some(s) = sub {
        big.same_shape(s)?;
        if !big.contains(s)? {
            return Err(Error::InvalidInput("subcode is not contained in the code".into()));
        }
    }
    if big.dim() == 0 {
        return Ok(MinWeights::default());
    }
    let prep = Prepared {
        compact_rows: big.basis().iter().map(|r| big.compact(r)).collect(),
        sub_checks: sub
            .filter(|s| s.dim() > 0)
            .map_or_else(Vec::new, PackedCode::dual_rows_compact),
    };
    let per_batch = batch_size(big.dim());
    let batches = trials.div_ceil(per_batch);
    let result = (0..batches)
        .into_par_iter()
        .map(|b| {
            let quota = per_batch.min(trials - b * per_batch);
            run_batch(big, &prep, seed, b, quota)
        })
        .reduce(MinWeights::default, |x, y| {
            if x == MinWeights::default() {
                y
            } else if y == MinWeights::default() {
                x
            } else {
                x.merge(y)
            }
        });
    Ok(result)
}
