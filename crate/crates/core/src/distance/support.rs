//! Low-weight search by enumerating supports.
//!
//! A codeword of `big` supported inside a set S of positions is a kernel
//! vector of the parity-check columns indexed by S. Supports are visited
//! depth-first in lexicographic order while an echelon basis of the chosen
//! columns is maintained incrementally; each column that reduces to zero
//! yields one new kernel vector. The first size w at which some kernel
//! vector falls outside `sub` is the minimum weight over `big ∖ sub`.

use crate::error::{Error, Result};

use super::packed::PackedCode;

/// Which positions count as one unit of weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Unit {
    /// Every bit of the binary image.
    Bits,
    /// Every symbol (all planes at one index).
    Symbols,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupportOutcome {
    Found(usize),
    /// No qualifying codeword of weight ≤ the bound.
    Exceeds(usize),
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// Number of supports of size 1..=w_max over `units` units.
pub fn support_count(units: usize, w_max: usize) -> u128 {
    (1..=w_max)
        .map(|w| binomial(units, w))
        .fold(0u128, |a, b| a.saturating_add(b))
}

/// Largest `w ≤ w_max` whose support count fits the budget.
pub fn feasible_depth(units: usize, w_max: usize, budget: u128) -> usize {
    (0..=w_max)
        .rev()
        .find(|&w| support_count(units, w) <= budget)
        .unwrap_or(0)
}

struct Columns {
    /// Parity-check syndrome of each compact position under `big`.
    check: Vec<u128>,
    /// Syndrome under `sub`'s parity checks; `None` when `sub` is the zero code.
    sub: Option<Vec<u128>>,
    /// Compact positions per unit.
    units: Vec<Vec<usize>>,
}

fn syndrome_columns(dual_rows: &[crate::bits::BitRow], positions: usize) -> Vec<u128> {
    (0..positions)
        .map(|i| {
            dual_rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r.get(i))
                .fold(0u128, |acc, (k, _)| acc | 1u128 << k)
        })
        .collect()
}

fn prepare(big: &PackedCode, sub: Option<&PackedCode>, unit: Unit) -> Result<Columns> {
    let positions = big.positions();
    let h = big.dual_rows_compact();
    if h.len() > 128 {
        return Err(Error::Unsupported(format!(
            "support search needs ≤ 128 parity checks, code has {}",
            h.len()
        )));
    }
    let sub_cols = match sub {
        Some(s) if s.dim() > 0 => {
            big.same_shape(s)?;
            if !big.contains(s)? {
                return Err(Error::InvalidInput("subcode is not contained in the code".into()));
            }
            let hs = s.dual_rows_compact();
            if hs.len() > 128 {
                return Err(Error::Unsupported(format!(
                    "support search needs ≤ 128 subcode checks, subcode has {}",
                    hs.len()
                )));
            }
            Some(syndrome_columns(&hs, positions))
        }
        _ => None,
    };
    let symbols = big.symbols();
    let units = match unit {
        Unit::Bits => (0..positions).map(|i| vec![i]).collect(),
        Unit::Symbols => (0..symbols)
            .map(|j| (0..big.planes()).map(|p| p * symbols + j).collect())
            .collect(),
    };
    Ok(Columns {
        check: syndrome_columns(&h, positions),
        sub: sub_cols,
        units,
    })
}

struct Search<'a> {
    cols: &'a Columns,
    target: usize,
    /// (reduced check syndrome, accumulated sub syndrome, pivot bit)
    stack: Vec<(u128, u128, u32)>,
}

impl Search<'_> {
    /// Pushes the columns of one unit; true if a qualifying kernel vector appears.
    fn push_unit(&mut self, u: usize) -> bool {
        let mut hit = false;
        for &pos in &self.cols.units[u] {
            let mut v = self.cols.check[pos];
            let mut t = self.cols.sub.as_ref().map_or(0, |s| s[pos]);
            for &(ev, et, piv) in &self.stack {
                if v >> piv & 1 == 1 {
                    v ^= ev;
                    t ^= et;
                }
            }
            if v == 0 {
                // kernel vector: nonzero word of `big`; outside `sub` iff t ≠ 0
                if self.cols.sub.is_none() || t != 0 {
                    hit = true;
                }
            } else {
                self.stack.push((v, t, v.trailing_zeros()));
            }
        }
        hit
    }

    fn dfs(&mut self, start: usize, depth: usize) -> bool {
        for u in start..self.cols.units.len() {
            if self.cols.units.len() - u < self.target - depth {
                break;
            }
            let mark = self.stack.len();
            let hit = self.push_unit(u);
            let found = if depth + 1 == self.target {
                hit
            } else {
                hit || self.dfs(u + 1, depth + 1)
            };
            self.stack.truncate(mark);
            if found {
                return true;
            }
        }
        false
    }
}

/// Exact minimum weight over `big ∖ sub` if it is at most `w_max`.
pub fn support_search(
    big: &PackedCode,
    sub: Option<&PackedCode>,
    unit: Unit,
    w_max: usize,
    budget: u128,
) -> Result<SupportOutcome> {
    let cols = prepare(big, sub, unit)?;
    let required = support_count(cols.units.len(), w_max);
    if required > budget {
        return Err(Error::budget("support enumeration", required, budget));
    }
    if big.dim() == 0 {
        return Ok(SupportOutcome::Exceeds(w_max));
    }
    for w in 1..=w_max.min(cols.units.len()) {
        let mut s = Search {
            cols: &cols,
            target: w,
            stack: Vec::with_capacity(w * big.planes()),
        };
        if s.dfs(0, 0) {
            return Ok(SupportOutcome::Found(w));
        }
    }
    Ok(SupportOutcome::Exceeds(w_max))
}
