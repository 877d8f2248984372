use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_field::{Elem, Extension, FieldCtx};

/// Polynomial over a binary field, coefficients low-degree first.
///
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading term.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polynomial {
    coeffs: Vec<Elem>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![Elem::ONE],
        }
    }

    /// X^n − 1 (= X^n + 1 in characteristic 2).
    pub fn x_n_minus_one(n: usize) -> Self {
        let mut coeffs = vec![Elem::ZERO; n + 1];
        coeffs[0] = Elem::ONE;
        coeffs[n] = Elem::ONE;
        Polynomial::new(coeffs)
    }

    /// ∏ (X − r).
    pub fn from_roots(roots: &[Elem], ctx: &FieldCtx) -> Self {
        let mut coeffs = vec![Elem::ONE];
        for &r in roots {
            // multiply by (X + r)
            coeffs.push(Elem::ZERO);
            for i in (0..coeffs.len()).rev() {
                let lower = if i > 0 { coeffs[i - 1] } else { Elem::ZERO };
                coeffs[i] = lower + ctx.mul(coeffs[i], r);
            }
        }
        Polynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&Elem::ONE)
    }

    pub fn mul(&self, other: &Polynomial, ctx: &FieldCtx) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += ctx.mul(a, b);
            }
        }
        Polynomial::new(out)
    }

    pub fn rem(&self, divisor: &Polynomial, ctx: &FieldCtx) -> Polynomial {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = ctx.inv(divisor.coeffs[d]).expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        while r.len() > d {
            let top = *r.last().expect("nonempty");
            if !top.is_zero() {
                let factor = ctx.mul(top, lead_inv);
                let shift = r.len() - 1 - d;
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    r[shift + i] += ctx.mul(factor, c);
                }
            }
            r.pop();
        }
        Polynomial::new(r)
    }

    pub fn divides(&self, other: &Polynomial, ctx: &FieldCtx) -> bool {
        other.rem(self, ctx).is_zero()
    }

    pub fn eval(&self, x: Elem, ctx: &FieldCtx) -> Elem {
        self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| ctx.mul(acc, x) + c)
    }

    /// Evaluates a polynomial over the base field at a point of the extension.
    pub fn eval_in(&self, x: Elem, ext: &Extension) -> Elem {
        let big = ext.big();
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| big.mul(acc, x) + ext.to_big(c))
    }

    /// Maps every coefficient; fails if any coefficient maps to `None`.
    pub fn map_coefficients(&self, f: impl Fn(Elem) -> Option<Elem>) -> Result<Polynomial> {
        self.coeffs
            .iter()
            .map(|&c| f(c).ok_or(Error::CoefficientOutsideBaseField))
            .collect::<Result<Vec<_>>>()
            .map(Polynomial::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_degree() {
        let p = Polynomial::new(vec![Elem(1), Elem(0), Elem(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(Polynomial::new(vec![Elem(0)]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn hamming_generator_divides_x7_minus_1() {
        let gf2 = FieldCtx::new(1).unwrap();
        let g = Polynomial::new(vec![Elem(1), Elem(1), Elem(0), Elem(1)]);
        assert!(g.divides(&Polynomial::x_n_minus_one(7), &gf2));
        assert!(!g.divides(&Polynomial::x_n_minus_one(5), &gf2));
    }

    #[test]
    fn from_roots_matches_product() {
        let f = FieldCtx::new(4).unwrap();
        let roots = [Elem(3), Elem(7), Elem(9)];
        let p = Polynomial::from_roots(&roots, &f);
        for &r in &roots {
            assert!(p.eval(r, &f).is_zero());
        }
        assert_eq!(p.degree(), Some(3));
        assert!(p.is_monic());
    }
}
