//! Syndrome decoding of stabilizer codes at the binary-symplectic level.
//!
//! A decoding problem ("part") is a set of binary variables, the syndrome
//! column of each variable, and a grouping of variables into weight units.
//! CSS codes give two independent parts (X bits and Z bits, both checked by
//! the rows of C); other stabilizer codes give one joint part over
//! `(x | z)` with qubits as units. Units are widened to blocks of qubits for
//! blockwise decoding.

use std::sync::OnceLock;

use crate::bits::{BitRow, F2Basis};
use crate::error::{Error, Result};
use crate::quantum::QuantumCode;

use super::noise::{ErasurePattern, PauliError};

/// Default largest syndrome length (in bits) for which a full table is built.
pub const DEFAULT_TABLE_BITS: u32 = 24;
/// Default number of candidate patterns the table-free matcher may try.
pub const DEFAULT_MATCH_BUDGET: u64 = 1_000_000;

const UNVISITED: u32 = u32::MAX;

/// Which method produced a correction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecoderUsed {
    Trivial,
    Erasure,
    Table,
    Search,
}

#[derive(Clone, Copy, Debug)]
pub struct DecoderOptions {
    pub table_bits: u32,
    pub match_budget: u64,
}

impl Default for DecoderOptions {
    fn default() -> Self {
        DecoderOptions {
            table_bits: DEFAULT_TABLE_BITS,
            match_budget: DEFAULT_MATCH_BUDGET,
        }
    }
}

#[derive(Debug)]
struct Part {
    /// Syndrome column of each variable.
    cols: Vec<u128>,
    /// Variables grouped into weight units.
    units: Vec<Vec<usize>>,
    /// Nonzero patterns of each unit: (syndrome, variable mask within the unit).
    patterns: Vec<Vec<(u128, u16)>>,
    syndrome_bits: usize,
    /// Stabilizer part restricted to these variables; kernel vectors inside it are harmless.
    harmless: F2Basis,
    table: OnceLock<Option<Vec<u32>>>,
}

impl Part {
    fn new(cols: Vec<u128>, units: Vec<Vec<usize>>, syndrome_bits: usize, harmless: F2Basis) -> Self {
        let patterns = units
            .iter()
            .map(|vars| {
                (1u16..1 << vars.len())
                    .map(|mask| {
                        let s = vars
                            .iter()
                            .enumerate()
                            .filter(|(b, _)| mask >> b & 1 == 1)
                            .fold(0u128, |acc, (_, &v)| acc ^ cols[v]);
                        (s, mask)
                    })
                    .collect()
            })
            .collect();
        Part {
            cols,
            units,
            patterns,
            syndrome_bits,
            harmless,
            table: OnceLock::new(),
        }
    }

    fn nvars(&self) -> usize {
        self.cols.len()
    }

    fn syndrome(&self, vars: &BitRow) -> u128 {
        vars.ones().fold(0u128, |acc, v| acc ^ self.cols[v])
    }

    fn apply(&self, out: &mut BitRow, unit: usize, mask: u16) {
        for (b, &v) in self.units[unit].iter().enumerate() {
            if mask >> b & 1 == 1 {
                out.flip(v);
            }
        }
    }

    /// Breadth-first table of minimum-unit-weight corrections, indexed by syndrome.
    fn table(&self, opts: &DecoderOptions) -> Option<&Vec<u32>> {
        self.table
            .get_or_init(|| {
                if self.syndrome_bits > opts.table_bits as usize {
                    return None;
                }
                let size = 1usize << self.syndrome_bits;
                let mut table = vec![UNVISITED; size];
                table[0] = 0;
                let mut frontier = vec![0u32];
                while !frontier.is_empty() {
                    let mut next = Vec::new();
                    for &s in &frontier {
                        for (u, pats) in self.patterns.iter().enumerate() {
                            for &(syn, mask) in pats {
                                let t = (s as u128 ^ syn) as usize;
                                if table[t] == UNVISITED {
                                    table[t] = (u as u32) << 16 | mask as u32;
                                    next.push(t as u32);
                                }
                            }
                        }
                    }
                    frontier = next;
                }
                Some(table)
            })
            .as_ref()
    }

    fn decode_table(&self, table: &[u32], syndrome: u128) -> Option<BitRow> {
        let mut out = BitRow::zeros(self.nvars());
        let mut s = syndrome as usize;
        while s != 0 {
            let entry = table[s];
            if entry == UNVISITED {
                return None;
            }
            let (u, mask) = ((entry >> 16) as usize, (entry & 0xffff) as u16);
            self.apply(&mut out, u, mask);
            let syn = self.patterns[u]
                .iter()
                .find(|p| p.1 == mask)
                .expect("pattern of unit")
                .0;
            s ^= syn as usize;
        }
        Some(out)
    }

    /// Lowest-weight match by iterative deepening within a pattern budget.
    fn decode_search(&self, syndrome: u128, budget: u64) -> Option<BitRow> {
        struct Dfs<'a> {
            part: &'a Part,
            target: u128,
            chosen: Vec<(usize, u16)>,
            left: u64,
        }
        impl Dfs<'_> {
            fn go(&mut self, start: usize, depth: usize, acc: u128) -> bool {
                if depth == 0 {
                    return acc == self.target;
                }
                for u in start..self.part.units.len() {
                    for &(syn, mask) in &self.part.patterns[u] {
                        if self.left == 0 {
                            return false;
                        }
                        self.left -= 1;
                        self.chosen.push((u, mask));
                        if self.go(u + 1, depth - 1, acc ^ syn) {
                            return true;
                        }
                        self.chosen.pop();
                    }
                }
                false
            }
        }
        if syndrome == 0 {
            return Some(BitRow::zeros(self.nvars()));
        }
        let mut dfs = Dfs {
            part: self,
            target: syndrome,
            chosen: Vec::new(),
            left: budget,
        };
        for depth in 1..=self.units.len() {
            if dfs.go(0, depth, 0) {
                let mut out = BitRow::zeros(self.nvars());
                for &(u, mask) in &dfs.chosen {
                    self.apply(&mut out, u, mask);
                }
                return Some(out);
            }
            if dfs.left == 0 {
                break;
            }
        }
        None
    }

    /// Solves the syndrome equations on the erased variables. `None` if there
    /// is no solution or if it is ambiguous up to a non-stabilizer pattern.
    fn decode_erasure(&self, erased: &[usize], syndrome: u128) -> Option<BitRow> {
        let m = erased.len();
        // echelon of (column, combination of erased variables, pivot bit)
        let mut echelon: Vec<(u128, BitRow, u32)> = Vec::new();
        for (j, &v) in erased.iter().enumerate() {
            let mut col = self.cols[v];
            let mut combo = BitRow::from_ones(m, [j]);
            for (c, k, piv) in &echelon {
                if col >> piv & 1 == 1 {
                    col ^= c;
                    combo.xor_assign(k);
                }
            }
            if col == 0 {
                let kernel = BitRow::from_ones(self.nvars(), combo.ones().map(|i| erased[i]));
                if !self.harmless.contains(&kernel) {
                    return None;
                }
            } else {
                let piv = col.trailing_zeros();
                echelon.push((col, combo, piv));
            }
        }
        let mut s = syndrome;
        let mut combo = BitRow::zeros(m);
        for (c, k, piv) in &echelon {
            if s >> piv & 1 == 1 {
                s ^= c;
                combo.xor_assign(k);
            }
        }
        if s != 0 {
            return None;
        }
        Some(BitRow::from_ones(self.nvars(), combo.ones().map(|i| erased[i])))
    }
}

/// Decoding context for one quantum code.
#[derive(Debug)]
pub struct Decoder {
    n: usize,
    block: usize,
    css: bool,
    parts: Vec<Part>,
    stabilizer: F2Basis,
    opts: DecoderOptions,
}

fn columns(checks: &[BitRow], nvars: usize) -> Vec<u128> {
    (0..nvars)
        .map(|v| {
            checks
                .iter()
                .enumerate()
                .filter(|(_, r)| r.get(v))
                .fold(0u128, |acc, (j, _)| acc | 1u128 << j)
        })
        .collect()
}

impl Decoder {
    pub fn new(code: &QuantumCode, opts: DecoderOptions) -> Result<Self> {
        let gens = code.stabilizer_generators();
        let n = code.n_qubits();
        let block = code.block();
        let css = code.construction() != crate::quantum::Construction::Quaternary;
        Self::from_generators(n, block, css, &gens, opts)
    }

    /// `gens` are independent stabilizer generators `(x, z)`; for `css` they
    /// must be the X-type rows followed by the same rows as Z-type.
    pub fn from_generators(
        n: usize,
        block: usize,
        css: bool,
        gens: &[(BitRow, BitRow)],
        opts: DecoderOptions,
    ) -> Result<Self> {
        if block == 0 || !n.is_multiple_of(block) || block > 8 {
            return Err(Error::InvalidInput(format!(
                "block size {block} does not fit {n} qubits"
            )));
        }
        let mut stabilizer = F2Basis::new(2 * n);
        for (x, z) in gens {
            stabilizer.insert(Self::joint(x, z));
        }
        let blocks = n / block;
        let parts = if css {
            let rows: Vec<BitRow> = gens.iter().take(gens.len() / 2).map(|(x, _)| x.clone()).collect();
            if rows.len() > 128 {
                return Err(Error::Unsupported(format!("{} checks exceed 128", rows.len())));
            }
            let cols = columns(&rows, n);
            let units: Vec<Vec<usize>> = (0..blocks).map(|b| (b * block..(b + 1) * block).collect()).collect();
            let harmless = F2Basis::from_rows(n, &rows);
            (0..2)
                .map(|_| Part::new(cols.clone(), units.clone(), rows.len(), harmless.clone()))
                .collect()
        } else {
            if gens.len() > 128 {
                return Err(Error::Unsupported(format!("{} checks exceed 128", gens.len())));
            }
            // a generator (gx, gz) anticommutes with (ex, ez) iff gx·ez + gz·ex = 1
            let swapped: Vec<BitRow> = gens.iter().map(|(x, z)| Self::joint(z, x)).collect();
            let cols = columns(&swapped, 2 * n);
            let units = (0..blocks)
                .map(|b| (b * block..(b + 1) * block).flat_map(|i| [i, n + i]).collect())
                .collect();
            vec![Part::new(cols, units, gens.len(), stabilizer.clone())]
        };
        Ok(Decoder {
            n,
            block,
            css,
            parts,
            stabilizer,
            opts,
        })
    }

    fn joint(x: &BitRow, z: &BitRow) -> BitRow {
        let n = x.len();
        BitRow::from_ones(2 * n, x.ones().chain(z.ones().map(|i| n + i)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block(&self) -> usize {
        self.block
    }

    fn part_vars(&self, e: &PauliError) -> Vec<BitRow> {
        if self.css {
            vec![e.x_part.clone(), e.z_part.clone()]
        } else {
            vec![Self::joint(&e.x_part, &e.z_part)]
        }
    }

    fn error_from_parts(&self, vars: &[BitRow]) -> PauliError {
        if self.css {
            PauliError {
                x_part: vars[0].clone(),
                z_part: vars[1].clone(),
            }
        } else {
            let n = self.n;
            PauliError {
                x_part: BitRow::from_ones(n, vars[0].ones().filter(|&v| v < n)),
                z_part: BitRow::from_ones(n, vars[0].ones().filter(|&v| v >= n).map(|v| v - n)),
            }
        }
    }

    /// Observed syndromes, one per part.
    pub fn syndromes(&self, e: &PauliError) -> Vec<u128> {
        self.part_vars(e)
            .iter()
            .zip(&self.parts)
            .map(|(v, p)| p.syndrome(v))
            .collect()
    }

    /// True iff the residual acts non-trivially on the code space
    /// (it lies outside the stabilizer group).
    pub fn is_logical(&self, residual: &PauliError) -> bool {
        !self
            .stabilizer
            .contains(&Self::joint(&residual.x_part, &residual.z_part))
    }

    /// Variables of the erased positions, widened to whole blocks.
    fn erased_vars(&self, erasures: &ErasurePattern) -> Vec<usize> {
        let mut blocks: Vec<usize> = erasures.positions().iter().map(|&p| p / self.block).collect();
        blocks.dedup();
        let qubits = blocks.iter().flat_map(|&b| b * self.block..(b + 1) * self.block);
        if self.css {
            qubits.collect()
        } else {
            let n = self.n;
            qubits.flat_map(|i| [i, n + i]).collect()
        }
    }

    /// A correction reproducing `syndromes`, or `None` on decoder failure.
    pub fn decode(
        &self,
        syndromes: &[u128],
        erasures: Option<&ErasurePattern>,
    ) -> Result<Option<(PauliError, DecoderUsed)>> {
        if syndromes.len() != self.parts.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} syndromes for {} parts",
                syndromes.len(),
                self.parts.len()
            )));
        }
        if syndromes.iter().all(|&s| s == 0) && erasures.is_none_or(|e| e.is_empty()) {
            return Ok(Some((PauliError::identity(self.n), DecoderUsed::Trivial)));
        }
        let mut used = DecoderUsed::Trivial;
        let mut vars = Vec::with_capacity(self.parts.len());
        for (part, &s) in self.parts.iter().zip(syndromes) {
            let v = match erasures {
                Some(e) => {
                    used = DecoderUsed::Erasure;
                    part.decode_erasure(&self.erased_vars(e), s)
                }
                None => match part.table(&self.opts) {
                    Some(t) => {
                        used = DecoderUsed::Table;
                        part.decode_table(t, s)
                    }
                    None => {
                        used = DecoderUsed::Search;
                        part.decode_search(s, self.opts.match_budget)
                    }
                },
            };
            match v {
                Some(v) => vars.push(v),
                None => return Ok(None),
            }
        }
        Ok(Some((self.error_from_parts(&vars), used)))
    }
}

/// Decodes observed syndromes into a correction (`None` on decoder failure).
pub fn css_decode(
    decoder: &Decoder,
    syndromes: &[u128],
    erasures: Option<&ErasurePattern>,
) -> Result<Option<PauliError>> {
    Ok(decoder.decode(syndromes, erasures)?.map(|(c, _)| c))
}
