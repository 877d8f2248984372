//! State vectors of binary CSS code states and the Hadamard-transform identity.
//!
//! For a weakly self-dual binary code C the code states are
//! `|ψ_j⟩ = |C|^{−1/2} Σ_{c∈C} |c + w_j⟩` over coset representatives `w_j`
//! of C⊥/C, and `H^{⊗n}|ψ_j⟩ = |C⊥|^{−1/2} Σ_{c∈C⊥} (−1)^{c·w_j} |c⟩`.
//! Qubit `i` is bit `i` of a basis-state index.

use num_complex::Complex64;

use crate::bits::BitRow;
use crate::bits::F2Basis;
use crate::cyclic_code::LinearCode;
use crate::error::{Error, Result};

pub const MAX_STATE_QUBITS: usize = 20;

/// Code states with their nonzero positions.
#[derive(Clone, Debug)]
pub struct CodeStates {
    pub n: usize,
    /// Coset representatives `w_j` as basis-state indices.
    pub representatives: Vec<u32>,
    pub states: Vec<Vec<Complex64>>,
    supports: Vec<Vec<u32>>,
}

fn row_index(row: &[crate::finite_field::Elem]) -> u32 {
    row.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

/// All codewords of a binary code as basis-state indices.
fn codeword_indices(code: &LinearCode) -> Vec<u32> {
    let rows: Vec<u32> = code.rows().iter().map(|r| row_index(r)).collect();
    let mut out = Vec::with_capacity(1 << rows.len());
    let mut w = 0u32;
    out.push(0);
    for i in 1u64..1 << rows.len() {
        w ^= rows[i.trailing_zeros() as usize];
        out.push(w);
    }
    out
}

fn check(code: &LinearCode) -> Result<LinearCode> {
    if code.q() != 2 {
        return Err(Error::InvalidInput("code states need a binary code".into()));
    }
    if code.n() > MAX_STATE_QUBITS {
        return Err(Error::Unsupported(format!(
            "state vectors are limited to {MAX_STATE_QUBITS} qubits, code has {}",
            code.n()
        )));
    }
    let dual = code.dual_code();
    if !dual.contains(code)? {
        return Err(Error::NotSelfOrthogonal("weakly self-dual"));
    }
    Ok(dual)
}

/// Canonical coset representatives of C⊥/C: rows of the reduced basis of C⊥
/// that extend a basis of C, combined in lexicographic message order (the
/// first extending row is the most significant message bit).
fn transversal(code: &LinearCode, dual: &LinearCode) -> Vec<u32> {
    let n = code.n();
    let to_bits = |r: &[crate::finite_field::Elem]| {
        BitRow::from_ones(n, r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i))
    };
    let mut span = F2Basis::new(n);
    for r in code.rows() {
        span.insert(to_bits(r));
    }
    let extra: Vec<u32> = dual
        .rows()
        .iter()
        .filter(|r| span.insert(to_bits(r)))
        .map(|r| row_index(r))
        .collect();
    let t = extra.len();
    (0u64..1 << t)
        .map(|j| {
            (0..t)
                .filter(|&i| j >> (t - 1 - i) & 1 == 1)
                .fold(0u32, |acc, i| acc ^ extra[i])
        })
        .collect()
}

/// The `2^{n−2k}` code states of the quantum code built from C.
pub fn code_states(code: &LinearCode) -> Result<CodeStates> {
    let dual = check(code)?;
    let n = code.n();
    let words = codeword_indices(code);
    let amp = Complex64::new((words.len() as f64).powf(-0.5), 0.0);
    let representatives = transversal(code, &dual);
    let mut states = Vec::with_capacity(representatives.len());
    let mut supports = Vec::with_capacity(representatives.len());
    for &w in &representatives {
        let mut v = vec![Complex64::new(0.0, 0.0); 1 << n];
        let support: Vec<u32> = words.iter().map(|&c| c ^ w).collect();
        for &i in &support {
            v[i as usize] = amp;
        }
        states.push(v);
        supports.push(support);
    }
    Ok(CodeStates {
        n,
        representatives,
        states,
        supports,
    })
}

impl CodeStates {
    /// Largest entry of `|G − I|` for the Gram matrix of the states.
    pub fn orthonormality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, si) in self.supports.iter().enumerate() {
            for (j, sj) in self.states.iter().enumerate() {
                let g: Complex64 = si
                    .iter()
                    .map(|&p| self.states[i][p as usize].conj() * sj[p as usize])
                    .sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((g - target).norm());
            }
        }
        worst
    }
}

/// In-place normalised Walsh–Hadamard transform `H^{⊗n}`.
pub fn hadamard_transform(v: &mut [Complex64]) {
    let len = v.len();
    assert!(len.is_power_of_two(), "vector length must be a power of two");
    let mut h = 1;
    while h < len {
        for block in (0..len).step_by(2 * h) {
            for i in block..block + h {
                let (a, b) = (v[i], v[i + h]);
                v[i] = a + b;
                v[i + h] = a - b;
            }
        }
        h *= 2;
    }
    let scale = (len as f64).powf(-0.5);
    for x in v.iter_mut() {
        *x *= scale;
    }
}

/// Checks `H^{⊗n}|ψ_j⟩ = |C⊥|^{−1/2} Σ_{c∈C⊥} (−1)^{c·w_j}|c⟩` for every state.
pub fn hadamard_identity_check(code: &LinearCode, tolerance: f64) -> Result<bool> {
    let dual = check(code)?;
    let states = code_states(code)?;
    let dual_words = codeword_indices(&dual);
    let amp = (dual_words.len() as f64).powf(-0.5);
    for (state, &w) in states.states.iter().zip(&states.representatives) {
        let mut v = state.clone();
        hadamard_transform(&mut v);
        let mut expected = vec![Complex64::new(0.0, 0.0); v.len()];
        for &c in &dual_words {
            let sign = if (c & w).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
            expected[c as usize] = Complex64::new(sign * amp, 0.0);
        }
        if v.iter().zip(&expected).any(|(a, b)| (a - b).norm() > tolerance) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic_code::code_from_zero_set;
    use crate::cyclotomic::ZeroSet;

    fn simplex() -> LinearCode {
        code_from_zero_set(&ZeroSet::new(7, 2, [0, 3, 5, 6]).unwrap()).unwrap()
    }

    #[test]
    fn simplex_states() {
        let c = simplex();
        assert_eq!(c.k(), 3);
        let s = code_states(&c).unwrap();
        assert_eq!(s.states.len(), 2);
        for v in &s.states {
            let nonzero: Vec<_> = v.iter().filter(|a| a.norm() > 0.0).collect();
            assert_eq!(nonzero.len(), 8);
            assert!(nonzero.iter().all(|a| (a.re - 8f64.powf(-0.5)).abs() < 1e-15));
        }
        assert!(s.orthonormality_error() < 1e-10);
        assert!(hadamard_identity_check(&c, 1e-10).unwrap());
    }

    #[test]
    fn transform_is_an_involution() {
        let s = code_states(&simplex()).unwrap();
        let mut v = s.states[1].clone();
        hadamard_transform(&mut v);
        hadamard_transform(&mut v);
        assert!(v.iter().zip(&s.states[1]).all(|(a, b)| (a - b).norm() < 1e-12));
    }
}
