//! Pauli errors, erasure patterns and the channel samplers.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bits::BitRow;
use crate::error::{Error, Result};

/// A Pauli operator up to phase: `X^x Z^z` on each qubit, so Y sets both bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliError {
    pub x_part: BitRow,
    pub z_part: BitRow,
}

impl PauliError {
    pub fn identity(n: usize) -> Self {
        PauliError {
            x_part: BitRow::zeros(n),
            z_part: BitRow::zeros(n),
        }
    }

    pub fn n(&self) -> usize {
        self.x_part.len()
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        self.x_part
            .words()
            .iter()
            .zip(self.z_part.words())
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.x_part.is_zero() && self.z_part.is_zero()
    }

    /// Sets qubit `i` to the Pauli encoded as `x + 2z` (0 = I, 1 = X, 2 = Z, 3 = Y).
    pub fn set(&mut self, i: usize, pauli: u8) {
        self.x_part.set(i, pauli & 1 == 1);
        self.z_part.set(i, pauli & 2 == 2);
    }

    pub fn xor(&self, other: &PauliError) -> PauliError {
        PauliError {
            x_part: self.x_part.xor(&other.x_part),
            z_part: self.z_part.xor(&other.z_part),
        }
    }

    /// Qubits acted on non-trivially.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| self.x_part.get(i) || self.z_part.get(i))
            .collect()
    }
}

/// Positions whose corruption the channel announces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ErasurePattern {
    positions: Vec<usize>,
}

impl ErasurePattern {
    pub fn new(n: usize, positions: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut positions: Vec<usize> = positions.into_iter().collect();
        positions.sort_unstable();
        positions.dedup();
        if let Some(&p) = positions.iter().find(|&&p| p >= n) {
            return Err(Error::InvalidInput(format!("erased position {p} not below n = {n}")));
        }
        Ok(ErasurePattern { positions })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.positions.binary_search(&i).is_ok()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "epsilon")]
pub enum ChannelModel {
    Depolarizing(f64),
    Erasure(f64),
}

impl ChannelModel {
    pub fn epsilon(&self) -> f64 {
        match *self {
            ChannelModel::Depolarizing(e) | ChannelModel::Erasure(e) => e,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ChannelModel::Depolarizing(_) => "depolarizing",
            ChannelModel::Erasure(_) => "erasure",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let e = self.epsilon();
        if !(0.0..=1.0).contains(&e) {
            return Err(Error::InvalidInput(format!("channel parameter {e} outside [0, 1]")));
        }
        Ok(())
    }
}

/// Independent per-qubit noise: identity with probability 1 − 3ε/4, each of
/// X, Y, Z with probability ε/4.
pub fn sample_depolarizing<R: Rng + ?Sized>(n: usize, epsilon: f64, rng: &mut R) -> PauliError {
    let mut e = PauliError::identity(n);
    let q = epsilon / 4.0;
    for i in 0..n {
        let r: f64 = rng.gen();
        let pauli = if r < q {
            1
        } else if r < 2.0 * q {
            3
        } else if r < 3.0 * q {
            2
        } else {
            0
        };
        if pauli != 0 {
            e.set(i, pauli);
        }
    }
    e
}

/// Each position erased with probability ε and replaced by a uniform Pauli.
pub fn sample_erasure<R: Rng + ?Sized>(n: usize, epsilon: f64, rng: &mut R) -> (ErasurePattern, PauliError) {
    let mut e = PauliError::identity(n);
    let mut positions = Vec::new();
    for i in 0..n {
        let r: f64 = rng.gen();
        if r < epsilon {
            positions.push(i);
            e.set(i, rng.gen_range(0..4u8));
        }
    }
    (ErasurePattern { positions }, e)
}
