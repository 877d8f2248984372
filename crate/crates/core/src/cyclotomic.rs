//! Cyclotomic cosets and zero-set algebra for cyclic codes of length n over F_q.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn check_coprime(n: usize, q: usize) -> Result<()> {
    if n == 0 || q < 2 || gcd(n, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    Ok(())
}

/// A q-closed set of residues mod n. The residue list is kept sorted, so
/// derived equality and ordering are canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZeroSet {
    pub n: usize,
    pub q: usize,
    pub residues: Vec<usize>,
}

impl ZeroSet {
    /// Validates range and closure under multiplication by q.
    pub fn new(n: usize, q: usize, residues: impl IntoIterator<Item = usize>) -> Result<Self> {
        check_coprime(n, q)?;
        let set: BTreeSet<usize> = residues.into_iter().collect();
        if let Some(&z) = set.iter().find(|&&z| z >= n) {
            return Err(Error::InvalidInput(format!("residue {z} not below n = {n}")));
        }
        if let Some(&z) = set.iter().find(|&&z| !set.contains(&(z * q % n))) {
            return Err(Error::InvalidInput(format!(
                "residue set not closed under multiplication by {q}: {z} ↦ {}",
                z * q % n
            )));
        }
        Ok(ZeroSet {
            n,
            q,
            residues: set.into_iter().collect(),
        })
    }

    pub fn empty(n: usize, q: usize) -> Result<Self> {
        Self::new(n, q, [])
    }

    pub fn full(n: usize, q: usize) -> Result<Self> {
        Self::new(n, q, 0..n)
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn contains(&self, z: usize) -> bool {
        self.residues.binary_search(&z).is_ok()
    }

    pub fn is_subset(&self, other: &ZeroSet) -> bool {
        self.residues.iter().all(|&z| other.contains(z))
    }

    fn membership(&self) -> Vec<bool> {
        let mut member = vec![false; self.n];
        for &z in &self.residues {
            member[z] = true;
        }
        member
    }

    fn complement_mapped(&self, factor: usize) -> ZeroSet {
        let n = self.n;
        let member = self.membership();
        let mut residues: Vec<usize> = (0..n)
            .filter(|&z| !member[z])
            .map(|z| (n - (factor * z) % n) % n)
            .collect();
        residues.sort_unstable();
        ZeroSet { n, q: self.q, residues }
    }

    /// True iff {−factor·z : z ∉ Z} ⊆ Z.
    fn contains_complement_mapped(&self, factor: usize) -> bool {
        let n = self.n;
        let member = self.membership();
        (0..n).all(|z| member[z] || member[(n - (factor * z) % n) % n])
    }
}

/// C_z = {q^i z mod n}, listed in orbit order starting at z.
pub fn coset(n: usize, q: usize, z: usize) -> Result<Vec<usize>> {
    check_coprime(n, q)?;
    if z >= n {
        return Err(Error::InvalidInput(format!("residue {z} not below n = {n}")));
    }
    let mut out = vec![z];
    let mut x = z * q % n;
    while x != z {
        out.push(x);
        x = x * q % n;
    }
    Ok(out)
}

/// Partition of {0, …, n−1} into cosets, ordered by minimal representative.
pub fn all_cosets(n: usize, q: usize) -> Result<Vec<Vec<usize>>> {
    check_coprime(n, q)?;
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for z in 0..n {
        if seen[z] {
            continue;
        }
        let c = coset(n, q, z)?;
        for &x in &c {
            seen[x] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// 𝒵_{C⊥} = {−z mod n : z ∉ 𝒵_C}.
pub fn dual_zero_set(z: &ZeroSet) -> ZeroSet {
    z.complement_mapped(1)
}

/// 𝒵_{C*} = {−2z mod n : z ∉ 𝒵_C} for Hermitian duality over GF(4).
pub fn orthogonal_zero_set_gf4(z: &ZeroSet) -> Result<ZeroSet> {
    if z.q != 4 {
        return Err(Error::InvalidInput(format!(
            "Hermitian orthogonal zero set needs q = 4, got {}",
            z.q
        )));
    }
    Ok(z.complement_mapped(2))
}

pub fn is_weakly_self_dual(z: &ZeroSet) -> bool {
    z.contains_complement_mapped(1)
}

pub fn is_self_orthogonal_gf4(z: &ZeroSet) -> Result<bool> {
    if z.q != 4 {
        return Err(Error::InvalidInput(format!(
            "Hermitian self-orthogonality needs q = 4, got {}",
            z.q
        )));
    }
    Ok(z.contains_complement_mapped(2))
}

/// 1 + the longest run of cyclically consecutive residues.
pub fn bch_bound(z: &ZeroSet) -> usize {
    let n = z.n;
    if z.residues.len() == n {
        return n + 1;
    }
    let mut best = 0;
    // start each run right after a gap so wrap-around runs are counted once
    let start = (0..n).find(|&s| !z.contains(s)).expect("set is not full");
    let mut run = 0;
    for i in 1..=n {
        let r = (start + i) % n;
        if z.contains(r) {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    best + 1
}

/// Default cap on the number of coset subsets a self-duality search visits.
pub const DEFAULT_SUBSET_BUDGET: u128 = 14_348_907; // 3^15

/// Every union of cosets passing the applicable self-duality predicate,
/// sorted by residue list.
///
/// The predicate pairs each coset c with σ(c) = −c (or −2c in the Hermitian
/// case); a passing set contains every σ-fixed coset and at least one member
/// of each pair, which is what gets enumerated.
pub fn enumerate_self_dual_zero_sets(n: usize, q: usize, hermitian: bool, budget: u128) -> Result<Vec<ZeroSet>> {
    check_coprime(n, q)?;
    if hermitian && q != 4 {
        return Err(Error::InvalidInput(format!(
            "Hermitian self-orthogonality needs q = 4, got {q}"
        )));
    }
    let factor = if hermitian { 2 } else { 1 };
    let cosets = all_cosets(n, q)?;
    let mut index_of = vec![0; n];
    for (i, c) in cosets.iter().enumerate() {
        for &z in c {
            index_of[z] = i;
        }
    }
    let sigma = |i: usize| index_of[(n - factor * cosets[i][0] % n) % n];
    let mut fixed = Vec::new();
    let mut pairs = Vec::new();
    for i in 0..cosets.len() {
        let j = sigma(i);
        if j == i {
            fixed.push(i);
        } else if i < j {
            pairs.push((i, j));
        }
    }
    let required = 3u128.checked_pow(pairs.len() as u32).unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::budget("self-dual zero-set enumeration", required, budget));
    }
    let mut out = Vec::with_capacity(required as usize);
    let mut choice = vec![0u8; pairs.len()];
    loop {
        let mut residues: Vec<usize> = fixed.iter().flat_map(|&i| cosets[i].iter().copied()).collect();
        for (&(a, b), &c) in pairs.iter().zip(&choice) {
            if c != 1 {
                residues.extend(&cosets[a]);
            }
            if c != 0 {
                residues.extend(&cosets[b]);
            }
        }
        residues.sort_unstable();
        out.push(ZeroSet { n, q, residues });
        // odometer in base 3
        let mut k = 0;
        while k < choice.len() && choice[k] == 2 {
            choice[k] = 0;
            k += 1;
        }
        if k == choice.len() {
            break;
        }
        choice[k] += 1;
    }
    out.sort();
    Ok(out)
}
