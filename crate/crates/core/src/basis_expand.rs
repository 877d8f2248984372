//! Binary expansion of codes over GF(2^ℓ) with respect to a basis.
//!
//! Symbol `j` of a word occupies bits `jℓ … jℓ + ℓ − 1`. With a self-dual
//! basis the coordinates of `x` are `tr(x·b_i)`, and expansion commutes with
//! taking duals; this is what turns a weakly self-dual code over GF(2^ℓ)
//! into a weakly self-dual binary code.

use crate::cyclic_code::LinearCode;
use crate::error::{Error, Result};
use crate::finite_field::{Basis, Elem, FieldCtx};
use crate::linalg::Row;

fn check_field(code: &LinearCode, basis: &Basis) -> Result<()> {
    if code.field() != basis.ctx() {
        return Err(Error::DimensionMismatch(format!(
            "code over GF({}) with modulus {:#b}, basis over GF({}) with modulus {:#b}",
            code.q(),
            code.field().modulus(),
            basis.ctx().size(),
            basis.ctx().modulus()
        )));
    }
    Ok(())
}

/// Coordinates of `x` in the basis, for any basis (dual-basis coordinates
/// coincide with `tr(x·b_i)` only for self-dual bases).
fn basis_coordinates(basis: &Basis, x: Elem) -> Vec<bool> {
    if basis.is_self_dual() {
        return basis.coordinates(x);
    }
    let ell = basis.ell();
    (0u32..1 << ell)
        .map(|m| (0..ell).map(|i| m >> i & 1 == 1).collect::<Vec<_>>())
        .find(|c| basis.reconstruct(c) == x)
        .expect("a basis spans the field")
}

fn expand_word_unchecked(word: &[Elem], basis: &Basis) -> Row {
    word.iter()
        .flat_map(|&x| basis_coordinates(basis, x))
        .map(|b| if b { Elem::ONE } else { Elem::ZERO })
        .collect()
}

fn expand_unchecked(code: &LinearCode, basis: &Basis) -> Result<LinearCode> {
    check_field(code, basis)?;
    let f = code.field();
    let ell = f.ell() as usize;
    let rows = code
        .rows()
        .iter()
        .flat_map(|row| {
            (0..ell).map(move |i| {
                let scaled: Row = row.iter().map(|&x| f.mul(x, f.x_pow(i as u64))).collect();
                expand_word_unchecked(&scaled, basis)
            })
        })
        .collect();
    let binary = LinearCode::from_rows(FieldCtx::new(1)?, code.n() * ell, rows)?;
    debug_assert_eq!(binary.k(), code.k() * ell);
    Ok(binary)
}

/// Binary image of one word under a self-dual basis.
pub fn expand_word(word: &[Elem], basis: &Basis) -> Result<Row> {
    if !basis.is_self_dual() {
        return Err(Error::NotSelfDualBasis);
    }
    Ok(expand_word_unchecked(word, basis))
}

/// Inverse of [`expand_word`]: regroups bits into symbols.
pub fn collapse_word(bits: &[Elem], basis: &Basis) -> Result<Row> {
    let ell = basis.ell();
    if !bits.len().is_multiple_of(ell) {
        return Err(Error::DimensionMismatch(format!(
            "{} bits do not split into blocks of {ell}",
            bits.len()
        )));
    }
    Ok(bits
        .chunks(ell)
        .map(|block| basis.reconstruct(&block.iter().map(|b| !b.is_zero()).collect::<Vec<_>>()))
        .collect())
}

/// Binary code `[ℓn, ℓk]` obtained by expanding every codeword of `code`.
pub fn expand_code(code: &LinearCode, basis: &Basis) -> Result<LinearCode> {
    if !basis.is_self_dual() {
        return Err(Error::NotSelfDualBasis);
    }
    let binary = expand_unchecked(code, basis)?;
    if binary.k() != code.k() * basis.ell() {
        return Err(Error::DimensionMismatch(format!(
            "expansion has dimension {}, expected {}",
            binary.k(),
            code.k() * basis.ell()
        )));
    }
    Ok(binary)
}

/// True iff expanding the dual gives the binary dual of the expansion.
///
/// Accepts any basis so that failures for non-self-dual bases can be exhibited.
pub fn expanded_dual_consistency(code: &LinearCode, basis: &Basis) -> Result<bool> {
    let expanded = expand_unchecked(code, basis)?;
    let expanded_dual = expand_unchecked(&code.dual_code(), basis)?;
    Ok(expanded.dual_code() == expanded_dual)
}
