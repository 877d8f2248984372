//! Minimum-distance machinery for linear codes over GF(2^ℓ).
//!
//! Weights are Hamming weights over the code's own alphabet unless stated
//! otherwise. Every routine works on the code's binary image
//! ([`packed::PackedCode`]) and accepts at most 128 symbols of at most 8 bits.

pub mod packed;
pub mod sampling;
pub mod support;

use serde::{Deserialize, Serialize};

use crate::cyclic_code::LinearCode;
use crate::error::{Error, Result};

pub use packed::{MinWeights, PackedCode};
pub use support::{SupportOutcome, Unit};

/// Default number of codewords an exhaustive enumeration may visit.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 1 << 26;
/// Enumerations beyond this size are refused whatever the configured budget.
pub const ENUMERATION_HARD_CAP: u128 = 1 << 28;
/// Default number of candidate supports a support search may visit.
pub const DEFAULT_SUPPORT_BUDGET: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exhaustive,
    Support,
    Sampled,
}

/// A distance figure together with how it was obtained.
///
/// `d` is `None` when no codeword qualified (for example the zero code).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceResult {
    pub d: Option<usize>,
    pub method: Method,
    pub exact: bool,
}

impl DistanceResult {
    pub fn exact(d: Option<usize>, method: Method) -> Self {
        DistanceResult { d, method, exact: true }
    }

    pub fn upper_bound(d: Option<usize>) -> Self {
        DistanceResult {
            d,
            method: Method::Sampled,
            exact: false,
        }
    }
}

fn check_alphabet_budget(code: &LinearCode, budget: u128) -> Result<()> {
    let kb = code.k() as u32 * code.field().ell();
    let required = 1u128.checked_shl(kb).unwrap_or(u128::MAX);
    let budget = budget.min(ENUMERATION_HARD_CAP);
    if required > budget {
        return Err(Error::budget("exhaustive enumeration", required, budget));
    }
    Ok(())
}

/// Exact minimum nonzero weight by visiting all `q^k` codewords.
pub fn min_weight_exhaustive(code: &LinearCode, budget: u128) -> Result<Option<usize>> {
    check_alphabet_budget(code, budget)?;
    let p = PackedCode::from_code(code)?;
    Ok(packed::exhaustive_min(&p, None, budget)?.symbols)
}

/// Exact minimum weight over codewords of `big` that do not lie in `sub`.
pub fn min_weight_outside_subcode(big: &LinearCode, sub: &LinearCode, budget: u128) -> Result<Option<usize>> {
    if !big.contains(sub)? {
        return Err(Error::InvalidInput("subcode is not contained in the code".into()));
    }
    check_alphabet_budget(big, budget)?;
    let pb = PackedCode::from_code(big)?;
    let ps = PackedCode::from_code(sub)?;
    Ok(packed::exhaustive_min(&pb, Some(&ps), budget)?.symbols)
}

/// Exact minimum weight if it is at most `w_max`, found by enumerating
/// candidate supports of the parity-check matrix.
pub fn min_weight_by_support_enumeration(code: &LinearCode, w_max: usize, budget: u128) -> Result<SupportOutcome> {
    let p = PackedCode::from_code(code)?;
    support::support_search(&p, None, Unit::Symbols, w_max, budget)
}

/// Support search restricted to codewords of `big` outside `sub`.
pub fn min_weight_outside_subcode_by_support(
    big: &LinearCode,
    sub: &LinearCode,
    w_max: usize,
    budget: u128,
) -> Result<SupportOutcome> {
    let pb = PackedCode::from_code(big)?;
    let ps = PackedCode::from_code(sub)?;
    support::support_search(&pb, Some(&ps), Unit::Symbols, w_max, budget)
}

/// Upper bound on the minimum weight (over `code ∖ sub` when `sub` is given)
/// from `trials` sampled codewords; deterministic for a fixed seed.
pub fn random_word_upper_bound(
    code: &LinearCode,
    sub: Option<&LinearCode>,
    trials: u64,
    seed: u64,
) -> Result<Option<usize>> {
    let p = PackedCode::from_code(code)?;
    let ps = sub.map(PackedCode::from_code).transpose()?;
    Ok(sampling::sampled_min(&p, ps.as_ref(), trials, seed)?.symbols)
}

/// Minimum number of nonzero `block`-bit blocks over nonzero codewords of a binary code.
pub fn blockwise_min_weight(code: &LinearCode, block: usize, budget: u128) -> Result<Option<usize>> {
    check_alphabet_budget(code, budget)?;
    let p = PackedCode::from_blocks(code, block)?;
    Ok(packed::exhaustive_min(&p, None, budget)?.symbols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic_code::code_from_zero_set;
    use crate::cyclotomic::ZeroSet;
    use crate::finite_field::{Elem, FieldCtx};

    fn hamming() -> LinearCode {
        code_from_zero_set(&ZeroSet::new(7, 2, [1, 2, 4]).unwrap()).unwrap()
    }

    #[test]
    fn hamming_and_simplex() {
        let h = hamming();
        assert_eq!(min_weight_exhaustive(&h, DEFAULT_ENUMERATION_BUDGET).unwrap(), Some(3));
        assert_eq!(
            min_weight_by_support_enumeration(&h, 3, DEFAULT_SUPPORT_BUDGET).unwrap(),
            SupportOutcome::Found(3)
        );
        let s = h.dual_code();
        assert_eq!(s.k(), 3);
        assert_eq!(
            min_weight_by_support_enumeration(&s, 3, DEFAULT_SUPPORT_BUDGET).unwrap(),
            SupportOutcome::Exceeds(3)
        );
    }

    #[test]
    fn zero_and_full_codes() {
        let f = FieldCtx::new(1).unwrap();
        let zero = LinearCode::zero(f, 9);
        assert_eq!(min_weight_exhaustive(&zero, 16).unwrap(), None);
        let full = LinearCode::full(f, 9);
        assert_eq!(min_weight_exhaustive(&full, 1 << 10).unwrap(), Some(1));
        assert_eq!(min_weight_outside_subcode(&full, &zero, 1 << 10).unwrap(), Some(1));
    }

    #[test]
    fn budget_refusal_names_requirement() {
        let h = hamming();
        let err = min_weight_exhaustive(&h, 8).unwrap_err();
        assert!(err.is_budget());
        assert!(err.to_string().contains("16"), "{err}");
    }

    #[test]
    fn sampling_hits_hamming_minimum() {
        let h = hamming();
        assert_eq!(random_word_upper_bound(&h, None, 200, 7).unwrap(), Some(3));
        let f = FieldCtx::new(1).unwrap();
        let full = LinearCode::full(f, 5);
        assert!(random_word_upper_bound(&full, None, 1, 1).unwrap().unwrap() >= 1);
    }

    #[test]
    fn blockwise_with_unit_block_is_hamming_weight() {
        let h = hamming();
        assert_eq!(blockwise_min_weight(&h, 1, 1 << 10).unwrap(), Some(3));
        let f = FieldCtx::new(1).unwrap();
        let row: Vec<Elem> = [1, 1, 0, 0, 0, 0, 0, 1, 1].iter().map(|&b| Elem(b)).collect();
        let c = LinearCode::from_rows(f, 9, vec![row]).unwrap();
        assert_eq!(blockwise_min_weight(&c, 3, 1 << 10).unwrap(), Some(2));
    }

    #[test]
    fn result_json_shape() {
        let r = DistanceResult::exact(Some(9), Method::Exhaustive);
        let v = serde_json::to_value(r).unwrap();
        assert_eq!(v, serde_json::json!({"d": 9, "method": "exhaustive", "exact": true}));
    }
}
