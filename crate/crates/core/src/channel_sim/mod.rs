//! Monte-Carlo and exhaustive decoding experiments over Pauli channels.

pub mod decoder;
pub mod noise;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclic_code::LinearCode;
use crate::distance::support::binomial;
use crate::error::{Error, Result};
use crate::finite_field::Elem;

pub use decoder::{css_decode, Decoder, DecoderOptions, DecoderUsed};
pub use noise::{sample_depolarizing, sample_erasure, ChannelModel, ErasurePattern, PauliError};

/// Two-sided 95% normal quantile.
pub const Z95: f64 = 1.959963984540054;
/// Largest number of cases an exhaustive sweep may enumerate.
pub const EXHAUSTIVE_CAP: u128 = 1 << 26;

/// Result of decoding one error. `decoder_used` is `None` on decoder failure,
/// in which case `residual` is the uncorrected error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialOutcome {
    pub success: bool,
    pub residual: PauliError,
    pub decoder_used: Option<DecoderUsed>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RateEstimate {
    pub trials: u64,
    pub failures: u64,
    pub rate: f64,
    pub ci95: (f64, f64),
}

impl RateEstimate {
    pub fn new(trials: u64, failures: u64) -> Self {
        let rate = if trials == 0 {
            0.0
        } else {
            failures as f64 / trials as f64
        };
        RateEstimate {
            trials,
            failures,
            rate,
            ci95: wilson_interval(failures, trials),
        }
    }
}

/// Wilson score interval at 95% confidence.
pub fn wilson_interval(failures: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = failures as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let centre = (p + z2 / (2.0 * n)) / denom;
    let half = Z95 * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    let lo = if failures == 0 { 0.0 } else { (centre - half).max(0.0) };
    let hi = if failures == trials {
        1.0
    } else {
        (centre + half).min(1.0)
    };
    (lo, hi)
}

/// True unless both parts of `residual` lie in the binary code `c`, i.e.
/// unless the residual acts trivially on the code states.
pub fn is_logical_error(residual: &PauliError, c: &LinearCode) -> Result<bool> {
    if c.q() != 2 || c.n() != residual.n() {
        return Err(Error::DimensionMismatch(format!(
            "residual on {} qubits against a length-{} code over GF({})",
            residual.n(),
            c.n(),
            c.q()
        )));
    }
    let word = |b: &crate::bits::BitRow| -> Vec<Elem> { (0..b.len()).map(|i| Elem(b.get(i) as u32)).collect() };
    Ok(!(c.is_codeword(&word(&residual.x_part)) && c.is_codeword(&word(&residual.z_part))))
}

/// Decodes one error and classifies the result.
pub fn decode_error(decoder: &Decoder, error: &PauliError, erasures: Option<&ErasurePattern>) -> Result<TrialOutcome> {
    let syndromes = decoder.syndromes(error);
    let Some((correction, used)) = decoder.decode(&syndromes, erasures)? else {
        return Ok(TrialOutcome {
            success: false,
            residual: error.clone(),
            decoder_used: None,
        });
    };
    let residual = error.xor(&correction);
    assert!(
        decoder.syndromes(&residual).iter().all(|&s| s == 0),
        "correction does not reproduce the syndrome"
    );
    Ok(TrialOutcome {
        success: !decoder.is_logical(&residual),
        residual,
        decoder_used: Some(used),
    })
}

/// Samples one channel use and decodes it.
pub fn run_trial<R: Rng + ?Sized>(decoder: &Decoder, model: ChannelModel, rng: &mut R) -> Result<TrialOutcome> {
    let n = decoder.n();
    match model {
        ChannelModel::Depolarizing(e) => decode_error(decoder, &sample_depolarizing(n, e, rng), None),
        ChannelModel::Erasure(e) => {
            let (pattern, error) = sample_erasure(n, e, rng);
            decode_error(decoder, &error, Some(&pattern))
        }
    }
}

/// Logical failure rate over `trials` independent channel uses. Trial `t`
/// draws from its own stream of the seeded generator, so the result does
/// not depend on the thread count.
pub fn estimate_logical_error_rate(
    decoder: &Decoder,
    model: ChannelModel,
    trials: u64,
    seed: u64,
) -> Result<RateEstimate> {
    model.validate()?;
    let failures = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t);
            run_trial(decoder, model, &mut rng).map(|o| !o.success as u64)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(RateEstimate::new(trials, failures))
}

/// Failure count over all errors of one size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustiveCount {
    pub size: usize,
    pub cases: u64,
    pub failures: u64,
}

fn for_each_subset(n: usize, size: usize, mut f: impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    let mut idx: Vec<usize> = (0..size).collect();
    if size > n {
        return Ok(());
    }
    loop {
        f(&idx)?;
        let Some(i) = (0..size).rev().find(|&i| idx[i] != i + n - size) else {
            return Ok(());
        };
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn check_cases(n: usize, max_size: usize, per_position: u128) -> Result<()> {
    let total = (0..=max_size)
        .map(|s| binomial(n, s).saturating_mul(per_position.saturating_pow(s as u32)))
        .fold(0u128, |a, b| a.saturating_add(b));
    if total > EXHAUSTIVE_CAP {
        return Err(Error::budget("exhaustive error sweep", total, EXHAUSTIVE_CAP));
    }
    Ok(())
}

/// Every Pauli error of weight 1..=`max_weight`, decoded without erasure information.
pub fn exhaustive_pauli(decoder: &Decoder, max_weight: usize) -> Result<Vec<ExhaustiveCount>> {
    let n = decoder.n();
    check_cases(n, max_weight, 3)?;
    (1..=max_weight.min(n))
        .map(|w| {
            let mut count = ExhaustiveCount {
                size: w,
                cases: 0,
                failures: 0,
            };
            for_each_subset(n, w, |support| {
                for paulis in 0..3u32.pow(w as u32) {
                    let mut e = PauliError::identity(n);
                    let mut p = paulis;
                    for &i in support {
                        e.set(i, (p % 3) as u8 + 1);
                        p /= 3;
                    }
                    count.cases += 1;
                    count.failures += decode_error(decoder, &e, None)?.success as u64 ^ 1;
                }
                Ok(())
            })?;
            Ok(count)
        })
        .collect()
}

/// Every erasure pattern of size 1..=`max_erasures` with every Pauli
/// (identity included) on the erased positions.
pub fn exhaustive_erasure(decoder: &Decoder, max_erasures: usize) -> Result<Vec<ExhaustiveCount>> {
    let n = decoder.n();
    check_cases(n, max_erasures, 4)?;
    (1..=max_erasures.min(n))
        .map(|s| {
            let mut count = ExhaustiveCount {
                size: s,
                cases: 0,
                failures: 0,
            };
            for_each_subset(n, s, |positions| {
                let pattern = ErasurePattern::new(n, positions.iter().copied())?;
                for paulis in 0..4u32.pow(s as u32) {
                    let mut e = PauliError::identity(n);
                    for (b, &i) in positions.iter().enumerate() {
                        e.set(i, (paulis >> (2 * b) & 3) as u8);
                    }
                    count.cases += 1;
                    count.failures += decode_error(decoder, &e, Some(&pattern))?.success as u64 ^ 1;
                }
                Ok(())
            })?;
            Ok(count)
        })
        .collect()
}
