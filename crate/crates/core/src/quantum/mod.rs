//! Quantum codes from self-orthogonal cyclic codes.
//!
//! * Binary: a weakly self-dual binary code C gives `[[n, n−2k, d′]]` with
//!   `d′ = min wgt(C⊥ ∖ C)`.
//! * Quaternary: a Hermitian self-orthogonal code C over GF(4) gives
//!   `[[n, n−2k, d′]]` with `d′ = min wgt(C* ∖ C)`.
//! * Extension: a weakly self-dual code over GF(2^ℓ) expanded in a self-dual
//!   basis gives the binary code `[[ℓn, ℓ(n−2k), d₂|d_q]]`, where `d_q`
//!   counts nonzero ℓ-bit blocks.

pub mod states;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::basis_expand::expand_code;
use crate::bits::BitRow;
use crate::cyclic_code::{code_from_zero_set_in, field_for_q, LinearCode};
use crate::cyclotomic::{self, bch_bound, enumerate_self_dual_zero_sets, ZeroSet, DEFAULT_SUBSET_BUDGET};
use crate::distance::packed::{self, MinWeights, PackedCode};
use crate::distance::sampling::sampled_min;
use crate::distance::support::{feasible_depth, support_search, SupportOutcome, Unit};
use crate::distance::{DEFAULT_ENUMERATION_BUDGET, DEFAULT_SUPPORT_BUDGET, ENUMERATION_HARD_CAP};
use crate::error::{Error, Result};
use crate::finite_field::{default_self_dual_exponents, Basis, Elem, Extension, FieldCtx};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Binary,
    Quaternary,
    Extension,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::Binary => "binary",
            Construction::Quaternary => "quaternary",
            Construction::Extension => "extension",
        })
    }
}

/// How firmly a distance figure is established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verification {
    /// The value is the distance.
    Exact,
    /// The value is a proven lower bound.
    BoundOnly,
    /// The value is an upper bound from sampled codewords.
    Sampled,
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verification::Exact => "exact",
            Verification::BoundOnly => "bound-only",
            Verification::Sampled => "sampled",
        })
    }
}

/// How far distance verification should go.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyLevel {
    /// Designed distance only.
    Bound,
    /// Deepest level within budget; falls back to bounds and sampling.
    Best,
    /// Like `Best`, but an inexact true distance is a budget refusal.
    Exact,
}

/// Work limits for distance verification and search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Budgets {
    /// Codewords an exhaustive enumeration may visit.
    pub enumeration: u64,
    /// Candidate supports a support search may visit.
    pub support: u64,
    /// Largest support size tried.
    pub support_depth: usize,
    /// Sampled codewords when exact methods are out of budget (0 disables sampling).
    pub samples: u64,
    pub seed: u64,
    /// Coset subsets a zero-set search may visit.
    pub subsets: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            enumeration: DEFAULT_ENUMERATION_BUDGET as u64,
            support: DEFAULT_SUPPORT_BUDGET as u64,
            support_depth: 5,
            samples: 100_000,
            seed: 0,
            subsets: DEFAULT_SUBSET_BUDGET as u64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldInfo {
    pub q: usize,
    pub modulus: u64,
    /// Degree m of the splitting field GF(q^m) holding the n-th roots of unity.
    pub extension_degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub d_dual: Verification,
    pub d_true: Verification,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dq: Option<Verification>,
}

/// Parameters and provenance of one quantum code.
///
/// `n` and `k` count physical and logical qubits. `d_bch` is the designed
/// distance of the orthogonal code, `d_dual` its actual distance and
/// `d_true` the quantum distance; for the extension construction `d_dual`
/// and `d_true` are binary weights, `d2 = d_true` and `dq` counts blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumCodeRecord {
    pub n: usize,
    pub k: usize,
    pub d_bch: usize,
    pub d_dual: Option<usize>,
    pub d_true: Option<usize>,
    pub d2: Option<usize>,
    pub dq: Option<usize>,
    pub construction: Construction,
    pub field: FieldInfo,
    pub zero_set: ZeroSet,
    pub basis: Option<Vec<u32>>,
    pub flags: Flags,
}

fn show(d: Option<usize>) -> String {
    d.map_or_else(|| "-".to_string(), |d| d.to_string())
}

impl QuantumCodeRecord {
    /// `[[n,k,d]]`, or `[[n,k,d2|dq]]` for the extension construction.
    pub fn label(&self) -> String {
        match self.construction {
            Construction::Extension => {
                format!("[[{},{},{}|{}]]", self.n, self.k, show(self.d2), show(self.dq))
            }
            _ => format!("[[{},{},{}]]", self.n, self.k, show(self.d_true)),
        }
    }
}

impl fmt::Display for QuantumCodeRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A validated code pair for one of the three constructions.
#[derive(Clone, Debug)]
pub struct QuantumCode {
    construction: Construction,
    zero_set: ZeroSet,
    field: FieldCtx,
    basis: Option<Basis>,
    /// C, the self-orthogonal code.
    code: LinearCode,
    /// C⊥ (standard) or C* (Hermitian).
    orth: LinearCode,
    /// Binary images (C₂, C₂⊥) for the extension construction.
    binary: Option<(LinearCode, LinearCode)>,
}

impl QuantumCode {
    /// Builds the pair for zero set `z` of C. `field` overrides the default
    /// modulus; `basis` the default self-dual basis (extension only).
    pub fn new(z: &ZeroSet, construction: Construction, field: Option<FieldCtx>, basis: Option<Basis>) -> Result<Self> {
        let field = match (field, &basis) {
            (Some(f), _) => f,
            (None, Some(b)) => *b.ctx(),
            (None, None) => field_for_q(z.q)?,
        };
        if field.size() as usize != z.q {
            return Err(Error::DimensionMismatch(format!(
                "zero set over q = {} but field has {} elements",
                z.q,
                field.size()
            )));
        }
        match construction {
            Construction::Binary if z.q != 2 => {
                return Err(Error::InvalidInput(format!(
                    "binary construction needs q = 2, got {}",
                    z.q
                )))
            }
            Construction::Quaternary if z.q != 4 => {
                return Err(Error::InvalidInput(format!(
                    "quaternary construction needs q = 4, got {}",
                    z.q
                )))
            }
            _ => {}
        }
        match construction {
            Construction::Quaternary => {
                if !cyclotomic::is_self_orthogonal_gf4(z)? {
                    return Err(Error::NotSelfOrthogonal("Hermitian self-orthogonal"));
                }
            }
            _ => {
                if !cyclotomic::is_weakly_self_dual(z) {
                    return Err(Error::NotSelfOrthogonal("weakly self-dual"));
                }
            }
        }
        let basis = match construction {
            Construction::Extension => {
                let b = match basis {
                    Some(b) => b,
                    None => {
                        let exps = default_self_dual_exponents(field.ell()).ok_or_else(|| {
                            Error::Unsupported(format!("no default self-dual basis for GF({})", field.size()))
                        })?;
                        Basis::from_x_powers(field, exps)?
                    }
                };
                if b.ctx() != &field {
                    return Err(Error::DimensionMismatch("basis is over a different field".into()));
                }
                if !b.is_self_dual() {
                    return Err(Error::NotSelfDualBasis);
                }
                Some(b)
            }
            _ => None,
        };
        let code = code_from_zero_set_in(z, field)?;
        let orth = match construction {
            Construction::Quaternary => code.hermitian_orthogonal_gf4()?,
            _ => code.dual_code(),
        };
        let binary = match &basis {
            Some(b) => Some((expand_code(&code, b)?, expand_code(&orth, b)?)),
            None => None,
        };
        Ok(QuantumCode {
            construction,
            zero_set: z.clone(),
            field,
            basis,
            code,
            orth,
            binary,
        })
    }

    /// Rebuilds the pair recorded in `record`.
    pub fn from_record(record: &QuantumCodeRecord) -> Result<Self> {
        let z = ZeroSet::new(
            record.zero_set.n,
            record.zero_set.q,
            record.zero_set.residues.iter().copied(),
        )?;
        let ell = record.field.q.trailing_zeros();
        let field = FieldCtx::with_modulus(ell, record.field.modulus)?;
        let basis = match &record.basis {
            Some(v) => Some(Basis::new(field, v.iter().map(|&e| Elem(e)).collect())?),
            None => None,
        };
        Self::new(&z, record.construction, Some(field), basis)
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn zero_set(&self) -> &ZeroSet {
        &self.zero_set
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn basis(&self) -> Option<&Basis> {
        self.basis.as_ref()
    }

    /// The self-orthogonal code C.
    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    /// C⊥, or C* for the quaternary construction.
    pub fn orth(&self) -> &LinearCode {
        &self.orth
    }

    /// Expanded binary pair (C₂, C₂⊥), extension construction only.
    pub fn binary_pair(&self) -> Option<(&LinearCode, &LinearCode)> {
        self.binary.as_ref().map(|(a, b)| (a, b))
    }

    /// Qubits per decoding block.
    pub fn block(&self) -> usize {
        match self.construction {
            Construction::Extension => self.field.ell() as usize,
            _ => 1,
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.code.n() * self.block()
    }

    pub fn k_logical(&self) -> usize {
        (self.code.n() - 2 * self.code.k()) * self.block()
    }

    /// Designed distance of the orthogonal code.
    pub fn designed_distance(&self) -> usize {
        let z = match self.construction {
            Construction::Quaternary => {
                cyclotomic::orthogonal_zero_set_gf4(&self.zero_set).expect("q = 4 checked at construction")
            }
            _ => cyclotomic::dual_zero_set(&self.zero_set),
        };
        bch_bound(&z)
    }

    /// C is the even-weight subcode of C⊥ with index 2, so d′ is odd.
    pub fn parity_applies(&self) -> bool {
        self.construction == Construction::Binary
            && self.orth.k() == self.code.k() + 1
            && self.orth.even_weight_subcode().is_ok_and(|e| e == self.code)
    }

    /// Binary images of (C⊥ or C*, C) in the layout used for weights.
    pub fn packed(&self) -> Result<(PackedCode, PackedCode)> {
        match &self.binary {
            Some((c2, c2_dual)) => {
                let l = self.block();
                Ok((PackedCode::from_blocks(c2_dual, l)?, PackedCode::from_blocks(c2, l)?))
            }
            None => Ok((PackedCode::from_code(&self.orth)?, PackedCode::from_code(&self.code)?)),
        }
    }

    /// Stabilizer generators as (X part, Z part) over the physical qubits.
    pub fn stabilizer_generators(&self) -> Vec<(BitRow, BitRow)> {
        let n = self.n_qubits();
        let css = |c: &LinearCode| -> Vec<(BitRow, BitRow)> {
            let rows: Vec<BitRow> = c
                .rows()
                .iter()
                .map(|r| BitRow::from_ones(n, r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i)))
                .collect();
            let zero = BitRow::zeros(n);
            rows.iter()
                .map(|r| (r.clone(), zero.clone()))
                .chain(rows.iter().map(|r| (zero.clone(), r.clone())))
                .collect()
        };
        match (&self.binary, self.construction) {
            (Some((c2, _)), _) => css(c2),
            (None, Construction::Quaternary) => {
                let f = &self.field;
                let omega = f.x_pow(1);
                self.code
                    .rows()
                    .iter()
                    .flat_map(|r| [Elem::ONE, omega].map(|s| r.iter().map(|&x| f.mul(x, s)).collect::<Vec<_>>()))
                    .map(|w| gf4_to_pauli(&w))
                    .collect()
            }
            (None, _) => css(&self.code),
        }
    }

    /// Record with distances verified to `level`.
    pub fn verify(&self, budgets: &Budgets, level: VerifyLevel) -> Result<QuantumCodeRecord> {
        Ok(self.verify_ranked(budgets, level)?.0)
    }

    /// Record plus proven lower bounds on (d_true, dq), used to rank search results.
    fn verify_ranked(&self, budgets: &Budgets, level: VerifyLevel) -> Result<(QuantumCodeRecord, (usize, usize))> {
        let d_bch = self.designed_distance();
        let (big, sub) = self.packed()?;
        let extension = self.construction == Construction::Extension;
        let primary = if extension { Unit::Bits } else { Unit::Symbols };
        let mut ladder = Ladder {
            big: &big,
            sub: &sub,
            budgets,
            level,
            d_bch,
            parity: self.parity_applies(),
            split: None,
        };
        let (d_dual, d_true) = ladder.run(primary)?;
        let dq = if extension {
            Some(ladder.run(Unit::Symbols)?.1)
        } else {
            None
        };
        let ext = Extension::for_length(self.field, self.zero_set.n)?;
        let lower = (d_true.lower, dq.map_or(0, |d| d.lower));
        let record = QuantumCodeRecord {
            n: self.n_qubits(),
            k: self.k_logical(),
            d_bch,
            d_dual: d_dual.value,
            d_true: d_true.value,
            d2: extension.then_some(d_true.value).flatten(),
            dq: dq.and_then(|d| d.value),
            construction: self.construction,
            field: FieldInfo {
                q: self.zero_set.q,
                modulus: self.field.modulus(),
                extension_degree: ext.degree(),
            },
            zero_set: self.zero_set.clone(),
            basis: self.basis.as_ref().map(|b| b.elements().iter().map(|e| e.0).collect()),
            flags: Flags {
                d_dual: d_dual.flag,
                d_true: d_true.flag,
                dq: dq.map(|d| d.flag),
            },
        };
        Ok((record, lower))
    }
}

/// Pauli image of a GF(4) word: ω ↦ X, ω² ↦ Z, 1 ↦ Y, so that the trace of
/// the Hermitian product becomes the symplectic form.
pub fn gf4_to_pauli(word: &[Elem]) -> (BitRow, BitRow) {
    let n = word.len();
    let a0 = |i: usize| word[i].0 & 1 == 1;
    let a1 = |i: usize| word[i].0 >> 1 & 1 == 1;
    let x = BitRow::from_ones(n, (0..n).filter(|&i| a1(i)));
    let z = BitRow::from_ones(n, (0..n).filter(|&i| a0(i) ^ a1(i)));
    (x, z)
}

/// A distance value, how it was established, and a proven lower bound.
#[derive(Clone, Copy)]
struct Figure {
    value: Option<usize>,
    flag: Verification,
    lower: usize,
}

impl Figure {
    fn exact(value: Option<usize>) -> Self {
        Figure {
            value,
            flag: Verification::Exact,
            lower: value.unwrap_or(0),
        }
    }

    fn bound(lower: usize) -> Self {
        Figure {
            value: Some(lower),
            flag: Verification::BoundOnly,
            lower,
        }
    }
}

struct Ladder<'a> {
    big: &'a PackedCode,
    sub: &'a PackedCode,
    budgets: &'a Budgets,
    level: VerifyLevel,
    d_bch: usize,
    parity: bool,
    split: Option<(MinWeights, MinWeights)>,
}

fn pick(w: MinWeights, unit: Unit) -> Option<usize> {
    match unit {
        Unit::Bits => w.bits,
        Unit::Symbols => w.symbols,
    }
}

impl Ladder<'_> {
    fn enumeration_budget(&self) -> u128 {
        (self.budgets.enumeration as u128).min(ENUMERATION_HARD_CAP)
    }

    fn can_enumerate(&self) -> bool {
        self.big.dim() < 64 && packed::enumeration_work(self.big) <= self.enumeration_budget()
    }

    fn split(&mut self) -> Result<(MinWeights, MinWeights)> {
        if self.split.is_none() {
            self.split = Some(packed::exhaustive_split(
                self.big,
                Some(self.sub),
                self.enumeration_budget(),
            )?);
        }
        Ok(self.split.expect("just filled"))
    }

    fn support(&self, sub: Option<&PackedCode>, unit: Unit) -> Result<Option<SupportOutcome>> {
        let units = match unit {
            Unit::Bits => self.big.positions(),
            Unit::Symbols => self.big.symbols(),
        };
        let budget = self.budgets.support as u128;
        let depth = feasible_depth(units, self.budgets.support_depth, budget);
        if depth == 0 {
            return Ok(None);
        }
        match support_search(self.big, sub, unit, depth, budget) {
            Ok(o) => Ok(Some(o)),
            Err(Error::Unsupported(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// (d of the orthogonal code, quantum distance) in the given metric.
    fn run(&mut self, unit: Unit) -> Result<(Figure, Figure)> {
        if self.level == VerifyLevel::Bound {
            let b = Figure::bound(self.d_bch);
            return Ok((b, b));
        }
        let dual = if self.big.dim() == 0 {
            Figure::exact(None)
        } else {
            match self.support(None, unit)? {
                Some(SupportOutcome::Found(d)) => Figure::exact(Some(d)),
                outcome => {
                    if self.can_enumerate() {
                        let (i, o) = self.split()?;
                        Figure::exact(pick(i.merge(o), unit))
                    } else {
                        let searched = match outcome {
                            Some(SupportOutcome::Exceeds(w)) => w + 1,
                            _ => 0,
                        };
                        Figure::bound(self.d_bch.max(searched))
                    }
                }
            }
        };
        if self.big.dim() == self.sub.dim() {
            return Ok((dual, Figure::exact(None)));
        }
        let quantum = match self.support(Some(self.sub), unit)? {
            Some(SupportOutcome::Found(d)) => Figure::exact(Some(d)),
            outcome => {
                if self.can_enumerate() {
                    Figure::exact(pick(self.split()?.1, unit))
                } else if self.level == VerifyLevel::Exact {
                    return Err(Error::budget(
                        "exhaustive enumeration",
                        packed::enumeration_work(self.big),
                        self.enumeration_budget(),
                    ));
                } else {
                    let searched = match outcome {
                        Some(SupportOutcome::Exceeds(w)) => w + 1,
                        _ => 0,
                    };
                    let mut lower = dual.lower.max(self.d_bch).max(searched);
                    if self.parity && lower % 2 == 0 {
                        lower += 1;
                    }
                    self.sampled_or_bound(lower, unit)?
                }
            }
        };
        Ok((dual, quantum))
    }

    fn sampled_or_bound(&self, lower: usize, unit: Unit) -> Result<Figure> {
        if self.budgets.samples == 0 {
            return Ok(Figure::bound(lower));
        }
        let w = sampled_min(self.big, Some(self.sub), self.budgets.samples, self.budgets.seed)?;
        Ok(match pick(w, unit) {
            Some(u) if u <= lower => Figure::exact(Some(u)),
            Some(u) => Figure {
                value: Some(u),
                flag: Verification::Sampled,
                lower,
            },
            None => Figure::bound(lower),
        })
    }
}

/// Builds and verifies one record.
pub fn build_qbch(
    z: &ZeroSet,
    construction: Construction,
    basis: Option<Basis>,
    budgets: &Budgets,
    level: VerifyLevel,
) -> Result<QuantumCodeRecord> {
    QuantumCode::new(z, construction, None, basis)?.verify(budgets, level)
}

/// Proven lower bounds first, then the reported values, then exactness.
fn quality(r: &QuantumCodeRecord, lower: (usize, usize)) -> (usize, usize, usize, usize, bool, usize) {
    (
        lower.0,
        lower.1,
        r.d_true.unwrap_or(0),
        r.dq.unwrap_or(0),
        r.flags.d_true == Verification::Exact,
        r.d_dual.unwrap_or(0),
    )
}

/// All codes with `k > 0` from self-orthogonal zero sets of length `n`,
/// one per `(n, k)` keeping the best distance, sorted by `(n, k)`.
///
/// Records are ranked by their proven lower bound on the quantum distance,
/// then by the reported value (which may be a sampled upper bound), then by
/// exactness; the first of equal records wins.
///
/// For the extension construction `n` is the length over GF(q); records
/// report `ℓn` qubits.
pub fn search_qbch(
    n: usize,
    q: usize,
    construction: Construction,
    field: Option<FieldCtx>,
    basis: Option<Basis>,
    budgets: &Budgets,
) -> Result<Vec<QuantumCodeRecord>> {
    let hermitian = construction == Construction::Quaternary;
    if construction == Construction::Extension && q < 4 {
        return Err(Error::InvalidInput("extension construction needs q ≥ 4".into()));
    }
    let zero_sets = enumerate_self_dual_zero_sets(n, q, hermitian, budgets.subsets as u128)?;
    let records: Vec<Option<(QuantumCodeRecord, (usize, usize))>> = zero_sets
        .par_iter()
        .filter(|z| z.len() < n)
        .map(|z| {
            let code = QuantumCode::new(z, construction, field, basis.clone())?;
            if code.k_logical() == 0 {
                return Ok(None);
            }
            code.verify_ranked(budgets, VerifyLevel::Best).map(Some)
        })
        .collect::<Result<_>>()?;
    let mut best: BTreeMap<(usize, usize), (QuantumCodeRecord, (usize, usize))> = BTreeMap::new();
    for (r, lower) in records.into_iter().flatten() {
        match best.get(&(r.n, r.k)) {
            Some((old, old_lower)) if quality(old, *old_lower) >= quality(&r, lower) => {}
            _ => {
                best.insert((r.n, r.k), (r, lower));
            }
        }
    }
    Ok(best.into_values().map(|(r, _)| r).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(v: &[QuantumCodeRecord]) -> Vec<String> {
        v.iter().map(|r| r.label()).collect()
    }

    #[test]
    fn seven_qubit_code() {
        let z = ZeroSet::new(7, 2, [0, 3, 5, 6]).unwrap();
        let r = build_qbch(&z, Construction::Binary, None, &Budgets::default(), VerifyLevel::Best).unwrap();
        assert_eq!(r.label(), "[[7,1,3]]");
        assert_eq!(r.flags.d_true, Verification::Exact);
        assert_eq!(r.d_bch, 3);
    }

    #[test]
    fn five_qubit_code() {
        let z = ZeroSet::new(5, 4, [0, 1, 4]).unwrap();
        let r = build_qbch(
            &z,
            Construction::Quaternary,
            None,
            &Budgets::default(),
            VerifyLevel::Best,
        )
        .unwrap();
        assert_eq!(r.label(), "[[5,1,3]]");
    }

    #[test]
    fn rejects_non_self_dual() {
        let z = ZeroSet::new(7, 2, [1, 2, 4]).unwrap();
        let err = build_qbch(&z, Construction::Binary, None, &Budgets::default(), VerifyLevel::Best).unwrap_err();
        assert!(matches!(err, Error::NotSelfOrthogonal(_)), "{err}");
    }

    #[test]
    fn small_searches() {
        let b = Budgets::default();
        assert_eq!(
            labels(&search_qbch(7, 2, Construction::Binary, None, None, &b).unwrap()),
            ["[[7,1,3]]"]
        );
        assert_eq!(
            labels(&search_qbch(5, 4, Construction::Quaternary, None, None, &b).unwrap()),
            ["[[5,1,3]]"]
        );
        let r15 = labels(&search_qbch(15, 2, Construction::Binary, None, None, &b).unwrap());
        assert!(r15.contains(&"[[15,7,3]]".to_string()), "{r15:?}");
    }

    #[test]
    fn quaternary_stabilizers_commute() {
        let z = ZeroSet::new(5, 4, [0, 1, 4]).unwrap();
        let c = QuantumCode::new(&z, Construction::Quaternary, None, None).unwrap();
        let g = c.stabilizer_generators();
        assert_eq!(g.len(), 4);
        for (x1, z1) in &g {
            for (x2, z2) in &g {
                assert!(!(x1.dot(z2) ^ z1.dot(x2)));
            }
        }
    }

    #[test]
    fn record_json_round_trip() {
        let z = ZeroSet::new(7, 2, [0, 3, 5, 6]).unwrap();
        let r = build_qbch(&z, Construction::Binary, None, &Budgets::default(), VerifyLevel::Best).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        let back: QuantumCodeRecord = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        for key in [
            "n",
            "k",
            "d_bch",
            "d_dual",
            "d_true",
            "d2",
            "dq",
            "construction",
            "field",
            "zero_set",
            "basis",
            "flags",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        let rebuilt = QuantumCode::from_record(&r).unwrap();
        assert_eq!(rebuilt.k_logical(), 1);
    }
}
