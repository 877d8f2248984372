//! GF(2)-linear images of codes in a bit-plane layout, and the Gray-code
//! codeword enumerator that drives exact minimum-distance computation.
//!
//! A word over GF(2^ℓ) of length n is stored as ℓ planes of n bits: plane
//! `p` holds coordinate `p` of every symbol. Hamming weight of the binary
//! image is the sum of plane popcounts; symbol (block) weight is the
//! popcount of the OR of all planes.

use rayon::prelude::*;

use crate::bits::{self, BitRow, F2Basis};
use crate::cyclic_code::LinearCode;
use crate::error::{Error, Result};
use crate::finite_field::Elem;

pub const MAX_SYMBOLS: usize = 128;
pub const MAX_PLANES: usize = 8;
const PLANE_STRIDE: usize = 128;

/// Minimum weights in both metrics; `None` when no codeword qualified.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MinWeights {
    pub bits: Option<usize>,
    pub symbols: Option<usize>,
}

impl MinWeights {
    pub(crate) fn from_raw(bits: u32, symbols: u32) -> Self {
        let f = |x: u32| (x != u32::MAX).then_some(x as usize);
        MinWeights {
            bits: f(bits),
            symbols: f(symbols),
        }
    }

    pub(crate) fn raw(&self) -> (u32, u32) {
        let f = |x: Option<usize>| x.map_or(u32::MAX, |v| v as u32);
        (f(self.bits), f(self.symbols))
    }

    pub(crate) fn merge(self, other: MinWeights) -> MinWeights {
        let (a, b) = self.raw();
        let (c, d) = other.raw();
        MinWeights::from_raw(a.min(c), b.min(d))
    }
}

/// GF(2) basis of a code's binary image in bit-plane layout.
#[derive(Clone, Debug)]
pub struct PackedCode {
    symbols: usize,
    planes: usize,
    basis: Vec<BitRow>,
}

impl PackedCode {
    fn check_shape(symbols: usize, planes: usize) -> Result<()> {
        if symbols > MAX_SYMBOLS || planes == 0 || planes > MAX_PLANES {
            return Err(Error::Unsupported(format!(
                "packed layout supports ≤ {MAX_SYMBOLS} symbols of ≤ {MAX_PLANES} bits, got {symbols} × {planes}"
            )));
        }
        Ok(())
    }

    fn empty_word(planes: usize) -> BitRow {
        BitRow::zeros(planes * PLANE_STRIDE)
    }

    /// Binary image of a code over GF(2^ℓ) using polynomial-basis coordinates;
    /// symbol weight equals Hamming weight over GF(2^ℓ).
    pub fn from_code(code: &LinearCode) -> Result<Self> {
        let planes = code.field().ell() as usize;
        Self::check_shape(code.n(), planes)?;
        let f = code.field();
        let mut basis = Vec::with_capacity(code.k() * planes);
        for row in code.rows() {
            for i in 0..planes {
                let scaled: Vec<Elem> = row.iter().map(|&x| f.mul(x, f.x_pow(i as u64))).collect();
                basis.push(Self::pack_symbols(&scaled, planes));
            }
        }
        Ok(PackedCode {
            symbols: code.n(),
            planes,
            basis,
        })
    }

    /// Binary code whose bits `j·b … j·b + b − 1` form block `j`.
    pub fn from_blocks(code: &LinearCode, block: usize) -> Result<Self> {
        if code.q() != 2 {
            return Err(Error::InvalidInput("blockwise packing needs a binary code".into()));
        }
        if block == 0 || !code.n().is_multiple_of(block) {
            return Err(Error::InvalidInput(format!(
                "length {} is not divisible by block size {block}",
                code.n()
            )));
        }
        let symbols = code.n() / block;
        Self::check_shape(symbols, block)?;
        let basis = code
            .rows()
            .iter()
            .map(|row| {
                let mut w = Self::empty_word(block);
                for (i, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        w.set((i % block) * PLANE_STRIDE + i / block, true);
                    }
                }
                w
            })
            .collect();
        Ok(PackedCode {
            symbols,
            planes: block,
            basis,
        })
    }

    fn pack_symbols(word: &[Elem], planes: usize) -> BitRow {
        let mut w = Self::empty_word(planes);
        for (j, x) in word.iter().enumerate() {
            for p in 0..planes {
                if x.0 >> p & 1 == 1 {
                    w.set(p * PLANE_STRIDE + j, true);
                }
            }
        }
        w
    }

    pub fn symbols(&self) -> usize {
        self.symbols
    }

    pub fn planes(&self) -> usize {
        self.planes
    }

    /// Dimension over GF(2).
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitRow] {
        &self.basis
    }

    /// Number of meaningful bit positions.
    pub fn positions(&self) -> usize {
        self.symbols * self.planes
    }

    /// Padded index of compact position `i = p·symbols + j`.
    pub(crate) fn padded_index(&self, i: usize) -> usize {
        (i / self.symbols) * PLANE_STRIDE + i % self.symbols
    }

    pub(crate) fn compact(&self, w: &BitRow) -> BitRow {
        BitRow::from_ones(
            self.positions(),
            (0..self.positions()).filter(|&i| w.get(self.padded_index(i))),
        )
    }

    pub(crate) fn same_shape(&self, other: &PackedCode) -> Result<()> {
        if self.symbols != other.symbols || self.planes != other.planes {
            return Err(Error::DimensionMismatch(format!(
                "packed codes {}×{} and {}×{}",
                self.symbols, self.planes, other.symbols, other.planes
            )));
        }
        Ok(())
    }

    pub fn contains(&self, other: &PackedCode) -> Result<bool> {
        self.same_shape(other)?;
        let b = F2Basis::from_rows(self.planes * PLANE_STRIDE, &self.basis);
        Ok(other.basis.iter().all(|r| b.contains(r)))
    }

    /// Rows of the GF(2) dual in compact coordinates.
    pub(crate) fn dual_rows_compact(&self) -> Vec<BitRow> {
        let rows: Vec<BitRow> = self.basis.iter().map(|r| self.compact(r)).collect();
        bits::kernel(&rows, self.positions())
    }

    /// Basis of `self` listing a basis of `sub` first; returns it with `dim(sub)`.
    pub(crate) fn basis_extending(&self, sub: Option<&PackedCode>) -> Result<(Vec<BitRow>, usize)> {
        let len = self.planes * PLANE_STRIDE;
        let mut echelon = F2Basis::new(len);
        let mut ordered = Vec::new();
        if let Some(sub) = sub {
            self.same_shape(sub)?;
            for r in &sub.basis {
                if echelon.insert(r.clone()) {
                    ordered.push(r.clone());
                }
            }
            let big = F2Basis::from_rows(len, &self.basis);
            if !ordered.iter().all(|r| big.contains(r)) {
                return Err(Error::InvalidInput("subcode is not contained in the code".into()));
            }
        }
        let ks = ordered.len();
        for r in &self.basis {
            if echelon.insert(r.clone()) {
                ordered.push(r.clone());
            }
        }
        Ok((ordered, ks))
    }
}

#[inline]
fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

const CHUNK: u64 = 1 << 16;

fn scan_chunk<const P: usize>(rows: &[[u128; P]], lo: u64, hi: u64) -> (u32, u32) {
    let mut word = [0u128; P];
    let g = gray(lo);
    for (j, row) in rows.iter().enumerate() {
        if g >> j & 1 == 1 {
            for p in 0..P {
                word[p] ^= row[p];
            }
        }
    }
    let mut best_bits = u32::MAX;
    let mut best_sym = u32::MAX;
    let mut i = lo;
    loop {
        let mut bits = 0;
        let mut or = 0u128;
        for w in &word {
            bits += w.count_ones();
            or |= w;
        }
        best_bits = best_bits.min(bits);
        best_sym = best_sym.min(or.count_ones());
        i += 1;
        if i >= hi {
            break;
        }
        let row = &rows[i.trailing_zeros() as usize];
        for p in 0..P {
            word[p] ^= row[p];
        }
    }
    (best_bits, best_sym)
}

fn scan_range<const P: usize>(rows: &[BitRow], lo: u64, hi: u64) -> MinWeights {
    let packed: Vec<[u128; P]> = rows
        .iter()
        .map(|r| std::array::from_fn(|p| r.chunk128(p * PLANE_STRIDE)))
        .collect();
    let chunks: Vec<(u64, u64)> = (lo..hi)
        .step_by(CHUNK as usize)
        .map(|a| (a, (a + CHUNK).min(hi)))
        .collect();
    let (b, s) = chunks
        .par_iter()
        .map(|&(a, b)| scan_chunk::<P>(&packed, a, b))
        .reduce(|| (u32::MAX, u32::MAX), |x, y| (x.0.min(y.0), x.1.min(y.1)));
    MinWeights::from_raw(b, s)
}

/// Minimum weights over codewords whose Gray index lies in `lo..hi`.
///
/// With a basis that lists `sub` first, indices `≥ 2^dim(sub)` are exactly
/// the codewords outside `sub`.
pub(crate) fn enumerate_range(planes: usize, rows: &[BitRow], lo: u64, hi: u64) -> MinWeights {
    if lo >= hi {
        return MinWeights::default();
    }
    match planes {
        1 => scan_range::<1>(rows, lo, hi),
        2 => scan_range::<2>(rows, lo, hi),
        3 => scan_range::<3>(rows, lo, hi),
        4 => scan_range::<4>(rows, lo, hi),
        5 => scan_range::<5>(rows, lo, hi),
        6 => scan_range::<6>(rows, lo, hi),
        7 => scan_range::<7>(rows, lo, hi),
        8 => scan_range::<8>(rows, lo, hi),
        _ => unreachable!("plane count checked at construction"),
    }
}

/// Work needed to enumerate every codeword of `code`.
pub fn enumeration_work(code: &PackedCode) -> u128 {
    1u128.checked_shl(code.dim() as u32).unwrap_or(u128::MAX)
}

fn check_enumeration(big: &PackedCode, budget: u128) -> Result<()> {
    let budget = budget.min(super::ENUMERATION_HARD_CAP);
    let required = enumeration_work(big);
    if big.dim() >= 64 || required > budget {
        return Err(Error::budget("exhaustive enumeration", required, budget));
    }
    Ok(())
}

/// Exact minimum weights over `big ∖ sub` (over all nonzero words when `sub` is `None`).
pub fn exhaustive_min(big: &PackedCode, sub: Option<&PackedCode>, budget: u128) -> Result<MinWeights> {
    Ok(exhaustive_split(big, sub, budget)?.1)
}

/// One enumeration of `big` giving minimum weights over `sub ∖ {0}` and over `big ∖ sub`.
pub fn exhaustive_split(big: &PackedCode, sub: Option<&PackedCode>, budget: u128) -> Result<(MinWeights, MinWeights)> {
    check_enumeration(big, budget)?;
    let (rows, ks) = big.basis_extending(sub)?;
    let kb = rows.len();
    let inside = enumerate_range(big.planes, &rows, 1, 1u64 << ks);
    let outside = enumerate_range(big.planes, &rows, 1u64 << ks, 1u64 << kb);
    Ok((inside, outside))
}
