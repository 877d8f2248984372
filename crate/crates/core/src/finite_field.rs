//! Arithmetic in GF(2^ℓ) with elements stored as coefficient bit-vectors,
//! plus the extension tower GF(2^ℓ) ⊂ GF(2^{ℓm}) used to build cyclic codes.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Largest supported extension degree over GF(2).
pub const MAX_DEGREE: u32 = 32;

/// Field element: bit `i` is the coefficient of `X^i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl std::ops::Add for Elem {
    type Output = Elem;
    fn add(self, rhs: Elem) -> Elem {
        Elem(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl std::ops::AddAssign for Elem {
    fn add_assign(&mut self, rhs: Elem) {
        self.0 ^= rhs.0;
    }
}

/// Carry-less product of two polynomials of degree < 32.
#[inline]
fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0u64;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    acc
}

fn degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

fn poly_rem(mut a: u64, m: u64) -> u64 {
    let dm = degree(m);
    while a != 0 && degree(a) >= dm {
        a ^= m << (degree(a) - dm);
    }
    a
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// Ben-Or irreducibility test over GF(2); `f` includes its leading bit.
pub fn is_irreducible(f: u64) -> bool {
    let d = degree(f);
    if d < 1 {
        return false;
    }
    if d == 1 {
        return true;
    }
    if f & 1 == 0 {
        return false;
    }
    let x = 2u64;
    let mut xp = x;
    for _ in 0..d / 2 {
        xp = poly_rem(clmul(xp, xp), f);
        if poly_gcd(f, xp ^ x) != 1 {
            return false;
        }
    }
    true
}

/// Lexicographically smallest irreducible polynomial of the given degree.
pub fn smallest_irreducible(deg: u32) -> u64 {
    let lo = 1u64 << deg;
    (lo..lo << 1)
        .find(|&f| is_irreducible(f))
        .expect("irreducible polynomials exist in every degree")
}

/// Moduli hard-coded so that the self-dual bases B_8, B_16, B_32, B_64
/// quoted as powers of the class of X come out bit-exact.
pub fn default_modulus(ell: u32) -> u64 {
    match ell {
        1 => 0b11,
        2 => 0b111,
        3 => 0b1011,     // u^3 = u + 1
        4 => 0b1_0011,   // v^4 = v + 1
        5 => 0b10_0101,  // w^5 = w^2 + 1
        6 => 0b101_1011, // z^6 = z^4 + z^3 + z + 1
        _ => smallest_irreducible(ell),
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// GF(2^ℓ) as GF(2)[X]/(modulus).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    ell: u32,
    modulus: u64,
    generator: Elem,
}

impl FieldCtx {
    /// Field with the default modulus for this degree.
    pub fn new(ell: u32) -> Result<Self> {
        if ell == 0 || ell > MAX_DEGREE {
            return Err(Error::Unsupported(format!(
                "field degree {ell} outside 1..={MAX_DEGREE}"
            )));
        }
        Self::with_modulus(ell, default_modulus(ell))
    }

    pub fn with_modulus(ell: u32, modulus: u64) -> Result<Self> {
        if ell == 0 || ell > MAX_DEGREE {
            return Err(Error::Unsupported(format!(
                "field degree {ell} outside 1..={MAX_DEGREE}"
            )));
        }
        if degree(modulus) != ell as i32 || !is_irreducible(modulus) {
            return Err(Error::InvalidInput(format!(
                "modulus {modulus:#b} is not an irreducible polynomial of degree {ell}"
            )));
        }
        let mut ctx = FieldCtx {
            ell,
            modulus,
            generator: Elem::ONE,
        };
        ctx.generator = ctx.find_primitive();
        Ok(ctx)
    }

    /// GF(4) with ω² = ω + 1; ω is `Elem(2)`.
    pub fn gf4() -> Self {
        Self::new(2).expect("GF(4)")
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn size(&self) -> u64 {
        1u64 << self.ell
    }

    /// Order of the multiplicative group.
    pub fn group_order(&self) -> u64 {
        self.size() - 1
    }

    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.size()).map(|v| Elem(v as u32))
    }

    pub fn contains(&self, x: Elem) -> bool {
        (x.0 as u64) < self.size()
    }

    fn find_primitive(&self) -> Elem {
        let order = self.group_order();
        if order == 1 {
            return Elem::ONE;
        }
        let factors = prime_factors(order);
        (2..self.size())
            .map(|v| Elem(v as u32))
            .find(|&g| factors.iter().all(|&p| self.pow(g, order / p) != Elem::ONE))
            .expect("multiplicative group is cyclic")
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let mut p = clmul(a.0 as u64, b.0 as u64);
        let ell = self.ell as i32;
        let mut d = degree(p);
        while d >= ell {
            p ^= self.modulus << (d - ell);
            d = degree(p);
        }
        Elem(p as u32)
    }

    pub fn square(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    pub fn pow(&self, mut base: Elem, mut e: u64) -> Elem {
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a.is_zero() {
            None
        } else {
            Some(self.pow(a, self.group_order() - 1))
        }
    }

    /// `X^e` reduced modulo the field polynomial (the class of X need not be primitive).
    pub fn x_pow(&self, e: u64) -> Elem {
        if self.ell == 1 {
            return Elem::ONE;
        }
        self.pow(Elem(2), e)
    }

    pub fn gen_pow(&self, e: u64) -> Elem {
        self.pow(self.generator, e % self.group_order())
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> u64 {
        assert!(!a.is_zero(), "zero has no multiplicative order");
        let mut order = self.group_order();
        for p in prime_factors(order) {
            while order.is_multiple_of(p) && self.pow(a, order / p) == Elem::ONE {
                order /= p;
            }
        }
        order
    }

    /// Absolute trace Σ x^{2^i}, i < ℓ, as an element of GF(2).
    pub fn trace(&self, x: Elem) -> bool {
        let mut acc = Elem::ZERO;
        let mut y = x;
        for _ in 0..self.ell {
            acc += y;
            y = self.square(y);
        }
        debug_assert!(acc.0 <= 1);
        acc == Elem::ONE
    }

    /// Conjugation x ↦ x^{2^{ℓ/2}} (for GF(4), x̄ = x²).
    pub fn conjugate(&self, x: Elem) -> Elem {
        let mut y = x;
        for _ in 0..self.ell / 2 {
            y = self.square(y);
        }
        y
    }
}

/// An ordered basis of GF(2^ℓ) over GF(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    ctx: FieldCtx,
    elements: Vec<Elem>,
}

impl Basis {
    pub fn new(ctx: FieldCtx, elements: Vec<Elem>) -> Result<Self> {
        if elements.len() != ctx.ell() as usize {
            return Err(Error::DimensionMismatch(format!(
                "basis has {} elements, field degree is {}",
                elements.len(),
                ctx.ell()
            )));
        }
        if elements.iter().any(|&e| !ctx.contains(e)) {
            return Err(Error::InvalidInput("basis element outside the field".into()));
        }
        let rows: Vec<_> = elements
            .iter()
            .map(|e| {
                crate::bits::BitRow::from_ones(
                    ctx.ell() as usize,
                    (0..ctx.ell() as usize).filter(|i| e.0 >> i & 1 == 1),
                )
            })
            .collect();
        if crate::bits::rank(&rows, ctx.ell() as usize) != elements.len() {
            return Err(Error::InvalidInput("basis elements are linearly dependent".into()));
        }
        Ok(Basis { ctx, elements })
    }

    /// Basis given by exponents of the class of X, e.g. `(u^3, u^6, u^5)`.
    pub fn from_x_powers(ctx: FieldCtx, exponents: &[u64]) -> Result<Self> {
        Self::new(ctx, exponents.iter().map(|&e| ctx.x_pow(e)).collect())
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn ell(&self) -> usize {
        self.elements.len()
    }

    /// Trace Gram matrix `tr(b_i b_j)`.
    pub fn trace_gram(&self) -> Vec<Vec<bool>> {
        self.elements
            .iter()
            .map(|&a| {
                self.elements
                    .iter()
                    .map(|&b| self.ctx.trace(self.ctx.mul(a, b)))
                    .collect()
            })
            .collect()
    }

    pub fn is_self_dual(&self) -> bool {
        self.trace_gram()
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &t)| t == (i == j)))
    }

    /// Coordinates `tr(x·b_i)`; only meaningful for a self-dual basis.
    pub fn expand_element(&self, x: Elem) -> Result<Vec<bool>> {
        if !self.is_self_dual() {
            return Err(Error::NotSelfDualBasis);
        }
        Ok(self.coordinates(x))
    }

    pub(crate) fn coordinates(&self, x: Elem) -> Vec<bool> {
        self.elements
            .iter()
            .map(|&b| self.ctx.trace(self.ctx.mul(x, b)))
            .collect()
    }

    pub fn reconstruct(&self, coords: &[bool]) -> Elem {
        coords
            .iter()
            .zip(&self.elements)
            .filter(|(&c, _)| c)
            .fold(Elem::ZERO, |acc, (_, &b)| acc + b)
    }
}

pub fn is_self_dual_basis(basis: &[Elem], ctx: &FieldCtx) -> Result<bool> {
    Ok(Basis::new(*ctx, basis.to_vec())?.is_self_dual())
}

/// Exponents (of the class of X) of the self-dual bases used for binary expansion.
pub fn default_self_dual_exponents(ell: u32) -> Option<&'static [u64]> {
    match ell {
        1 => Some(&[0]),
        2 => Some(&[1, 2]),
        3 => Some(&[3, 6, 5]),
        4 => Some(&[3, 7, 13, 12]),
        5 => Some(&[9, 18, 5, 10, 20]),
        6 => Some(&[12, 24, 48, 33, 3, 6]),
        _ => None,
    }
}

pub fn default_self_dual_basis(ell: u32) -> Result<Basis> {
    let exps = default_self_dual_exponents(ell)
        .ok_or_else(|| Error::Unsupported(format!("no default self-dual basis for GF(2^{ell})")))?;
    Basis::from_x_powers(FieldCtx::new(ell)?, exps)
}

/// Multiplicative order of `q` modulo `n` (requires gcd(n, q) = 1).
pub fn multiplicative_order(q: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let mut x = q % n;
    let mut k = 1;
    while x != 1 {
        x = x * q % n;
        k += 1;
    }
    k
}

/// The tower F_q = GF(2^ℓ) ⊂ GF(q^m) = GF(2^{ℓm}).
///
/// The small field keeps its own modulus; it is located inside the big field
/// by a fixed root of that modulus in the subgroup of order 2^ℓ − 1.
#[derive(Clone, Debug)]
pub struct Extension {
    base: FieldCtx,
    big: FieldCtx,
    m: u32,
    embed: Vec<Elem>,
    restrict: HashMap<Elem, Elem>,
}

impl Extension {
    pub fn new(base: FieldCtx, m: u32) -> Result<Self> {
        let total = base.ell() * m;
        if total > MAX_DEGREE {
            return Err(Error::Unsupported(format!(
                "extension GF(2^{total}) exceeds GF(2^{MAX_DEGREE})"
            )));
        }
        let big = FieldCtx::new(total)?;
        let step = big.group_order() / base.group_order();
        let sub_gen = big.gen_pow(step);
        // the root with the smallest exponent of sub_gen
        let root = (0..base.group_order())
            .map(|e| big.pow(sub_gen, e))
            .find(|&r| eval_gf2_poly(&big, base.modulus(), r).is_zero())
            .expect("subfield contains the roots of its own modulus");
        let powers: Vec<Elem> = (0..base.ell()).map(|i| big.pow(root, i as u64)).collect();
        let embed: Vec<Elem> = base
            .elements()
            .map(|a| {
                (0..base.ell() as usize)
                    .filter(|i| a.0 >> i & 1 == 1)
                    .fold(Elem::ZERO, |acc, i| acc + powers[i])
            })
            .collect();
        let restrict = embed.iter().enumerate().map(|(a, &b)| (b, Elem(a as u32))).collect();
        Ok(Extension {
            base,
            big,
            m,
            embed,
            restrict,
        })
    }

    /// Smallest extension of F_q containing the n-th roots of unity.
    pub fn for_length(base: FieldCtx, n: usize) -> Result<Self> {
        let m = multiplicative_order(base.size(), n as u64);
        if m > MAX_DEGREE as u64 {
            return Err(Error::Unsupported(format!(
                "n = {n} needs GF(2^{}) which exceeds GF(2^{MAX_DEGREE})",
                m * base.ell() as u64
            )));
        }
        Self::new(base, m as u32)
    }

    pub fn base(&self) -> &FieldCtx {
        &self.base
    }

    pub fn big(&self) -> &FieldCtx {
        &self.big
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn to_big(&self, a: Elem) -> Elem {
        self.embed[a.0 as usize]
    }

    pub fn to_base(&self, b: Elem) -> Option<Elem> {
        self.restrict.get(&b).copied()
    }

    /// α = γ^{(q^m − 1)/n} for the fixed primitive element γ.
    pub fn root_of_unity(&self, n: usize) -> Result<Elem> {
        let order = self.big.group_order();
        if n == 0 || !order.is_multiple_of(n as u64) {
            return Err(Error::InvalidInput(format!(
                "{n} does not divide |GF(2^{})^*|",
                self.big.ell()
            )));
        }
        Ok(self.big.gen_pow(order / n as u64))
    }
}

fn eval_gf2_poly(ctx: &FieldCtx, poly: u64, x: Elem) -> Elem {
    let mut acc = Elem::ZERO;
    for i in (0..=degree(poly)).rev() {
        acc = ctx.mul(acc, x);
        if poly >> i & 1 == 1 {
            acc += Elem::ONE;
        }
    }
    acc
}

/// Minimal polynomial over the base field of `beta ∈ GF(q^m)`.
pub fn minimal_polynomial(beta: Elem, ext: &Extension) -> Result<Polynomial> {
    let big = ext.big();
    let q_power = ext.base().ell();
    let mut conjugates = vec![beta];
    let mut c = beta;
    loop {
        for _ in 0..q_power {
            c = big.square(c);
        }
        if c == beta {
            break;
        }
        conjugates.push(c);
    }
    let product = Polynomial::from_roots(&conjugates, big);
    product.map_coefficients(|b| ext.to_base(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli_are_irreducible() {
        for ell in 1..=12 {
            assert!(is_irreducible(default_modulus(ell)), "ell = {ell}");
        }
        assert_eq!(smallest_irreducible(2), 0b111);
        assert_eq!(smallest_irreducible(3), 0b1011);
        assert_eq!(smallest_irreducible(4), 0b10011);
    }

    #[test]
    fn irreducibility_rejects_products() {
        // (X^2+X+1)^2 = X^4+X^2+1
        assert!(!is_irreducible(0b10101));
        // (X+1)(X^3+X+1)
        assert!(!is_irreducible(clmul(0b11, 0b1011)));
    }

    #[test]
    fn generator_has_full_order() {
        for ell in [1, 2, 3, 4, 5, 6, 8, 11, 12] {
            let f = FieldCtx::new(ell).unwrap();
            assert_eq!(f.order(f.generator()), f.group_order(), "ell = {ell}");
        }
    }

    #[test]
    fn trace_examples() {
        let gf2 = FieldCtx::new(1).unwrap();
        assert!(gf2.trace(Elem::ONE));
        let gf4 = FieldCtx::gf4();
        let omega = Elem(2);
        // ω² = ω + 1
        assert_eq!(gf4.square(omega), Elem(3));
        assert!(gf4.trace(omega));
        for ell in 1..=8 {
            let f = FieldCtx::new(ell).unwrap();
            assert!(!f.trace(Elem::ZERO));
        }
    }

    #[test]
    fn table_bases_are_self_dual() {
        for ell in 1..=6 {
            let b = default_self_dual_basis(ell).unwrap();
            assert!(b.is_self_dual(), "ell = {ell}");
        }
    }

    #[test]
    fn polynomial_basis_of_gf8_is_not_self_dual() {
        let f = FieldCtx::new(3).unwrap();
        let b = Basis::new(f, vec![Elem(1), Elem(2), Elem(4)]).unwrap();
        // Gram matrix computed by hand: tr(1)=1, tr(u)=0, tr(u^2)=0, tr(u^3)=tr(u+1)=1, tr(u^4)=tr(u^2+u)=0
        assert_eq!(
            b.trace_gram(),
            vec![
                vec![true, false, false],
                vec![false, false, true],
                vec![false, true, false]
            ]
        );
        assert!(!b.is_self_dual());
        assert_eq!(b.expand_element(Elem(1)), Err(Error::NotSelfDualBasis));
    }

    #[test]
    fn basis_length_mismatch() {
        let f = FieldCtx::new(3).unwrap();
        assert!(matches!(
            is_self_dual_basis(&[Elem(1), Elem(2)], &f),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn expand_examples() {
        let gf4 = FieldCtx::gf4();
        let b = Basis::new(gf4, vec![Elem(2), Elem(3)]).unwrap();
        assert!(b.is_self_dual());
        assert_eq!(b.expand_element(Elem::ONE).unwrap(), vec![true, true]);
        assert_eq!(b.reconstruct(&[true, true]), Elem::ONE);
        assert_eq!(b.expand_element(Elem::ZERO).unwrap(), vec![false, false]);
        let b8 = default_self_dual_basis(3).unwrap();
        assert_eq!(b8.expand_element(b8.elements()[0]).unwrap(), vec![true, false, false]);
    }

    #[test]
    fn minimal_polynomial_examples() {
        let gf2 = FieldCtx::new(1).unwrap();
        let ext = Extension::new(gf2, 3).unwrap();
        let zero = minimal_polynomial(Elem::ZERO, &ext).unwrap();
        assert_eq!(zero.coeffs(), &[Elem(0), Elem(1)]);
        let one = minimal_polynomial(Elem::ONE, &ext).unwrap();
        assert_eq!(one.coeffs(), &[Elem(1), Elem(1)]);
        // α = class of X in GF(8) with X^3 + X + 1
        let alpha = Elem(2);
        let mp = minimal_polynomial(alpha, &ext).unwrap();
        assert_eq!(mp.coeffs(), &[Elem(1), Elem(1), Elem(0), Elem(1)]);
        assert!(mp.eval_in(alpha, &ext).is_zero());
    }

    #[test]
    fn subfield_embedding_is_a_homomorphism() {
        let gf8 = FieldCtx::new(3).unwrap();
        let ext = Extension::new(gf8, 2).unwrap();
        for a in gf8.elements() {
            for b in gf8.elements() {
                assert_eq!(ext.to_big(gf8.mul(a, b)), ext.big().mul(ext.to_big(a), ext.to_big(b)));
                assert_eq!(ext.to_big(a + b), ext.to_big(a) + ext.to_big(b));
            }
            assert_eq!(ext.to_base(ext.to_big(a)), Some(a));
        }
    }
}
