//! Linear and cyclic codes over GF(2^ℓ): generator polynomials from zero
//! sets, canonical generator matrices, duals, containment and subcodes.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{self, ZeroSet};
use crate::error::{Error, Result};
use crate::finite_field::{Elem, Extension, FieldCtx};
use crate::linalg::{self, Row};
use crate::poly::Polynomial;

/// Default field for an alphabet of size q = 2^ℓ.
pub fn field_for_q(q: usize) -> Result<FieldCtx> {
    if !q.is_power_of_two() || q < 2 {
        return Err(Error::InvalidInput(format!("q = {q} is not a power of two ≥ 2")));
    }
    FieldCtx::new(q.trailing_zeros())
}

/// g(X) = ∏_{z∈Z} (X − α^z) with α = γ^{(q^m−1)/n}.
pub fn generator_polynomial(z: &ZeroSet) -> Result<Polynomial> {
    generator_polynomial_in(z, field_for_q(z.q)?)
}

pub fn generator_polynomial_in(z: &ZeroSet, base: FieldCtx) -> Result<Polynomial> {
    if base.size() as usize != z.q {
        return Err(Error::DimensionMismatch(format!(
            "zero set over q = {} but field has {} elements",
            z.q,
            base.size()
        )));
    }
    if z.is_empty() {
        return Ok(Polynomial::one());
    }
    let ext = Extension::for_length(base, z.n)?;
    let alpha = ext.root_of_unity(z.n)?;
    let big = ext.big();
    let roots: Vec<Elem> = z.residues.iter().map(|&e| big.pow(alpha, e as u64)).collect();
    Polynomial::from_roots(&roots, big).map_coefficients(|c| ext.to_base(c))
}

/// A linear code stored by its generator matrix in reduced row echelon form,
/// so equal codes have identical matrices.
#[derive(Clone, Debug)]
pub struct LinearCode {
    n: usize,
    field: FieldCtx,
    gen: Vec<Row>,
    zero_set: Option<ZeroSet>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.field == other.field && self.gen == other.gen
    }
}

impl Eq for LinearCode {}

/// JSON shape of a code: `{"n","q","k","generator_rows"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRepr {
    pub n: usize,
    pub q: usize,
    pub k: usize,
    pub generator_rows: Vec<Vec<u32>>,
}

impl LinearCode {
    pub fn from_rows(field: FieldCtx, n: usize, rows: Vec<Row>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a code of length {n}",
                r.len()
            )));
        }
        if rows.iter().flatten().any(|&x| !field.contains(x)) {
            return Err(Error::InvalidInput("entry outside the field".into()));
        }
        let mut gen = rows;
        linalg::rref(&field, &mut gen, n);
        Ok(LinearCode {
            n,
            field,
            gen,
            zero_set: None,
        })
    }

    pub fn zero(field: FieldCtx, n: usize) -> Self {
        LinearCode {
            n,
            field,
            gen: Vec::new(),
            zero_set: None,
        }
    }

    pub fn full(field: FieldCtx, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![Elem::ZERO; n];
                r[i] = Elem::ONE;
                r
            })
            .collect();
        LinearCode {
            n,
            field,
            gen: rows,
            zero_set: None,
        }
    }

    pub fn with_zero_set(mut self, z: Option<ZeroSet>) -> Self {
        self.zero_set = z;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.gen.len()
    }

    pub fn q(&self) -> usize {
        self.field.size() as usize
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn rows(&self) -> &[Row] {
        &self.gen
    }

    pub fn zero_set(&self) -> Option<&ZeroSet> {
        self.zero_set.as_ref()
    }

    pub fn repr(&self) -> CodeRepr {
        CodeRepr {
            n: self.n,
            q: self.q(),
            k: self.k(),
            generator_rows: self.gen.iter().map(|r| r.iter().map(|e| e.0).collect()).collect(),
        }
    }

    pub fn from_repr(repr: &CodeRepr) -> Result<Self> {
        let field = field_for_q(repr.q)?;
        let rows = repr
            .generator_rows
            .iter()
            .map(|r| r.iter().map(|&v| Elem(v)).collect())
            .collect();
        let code = Self::from_rows(field, repr.n, rows)?;
        if code.k() != repr.k {
            return Err(Error::DimensionMismatch(format!(
                "declared k = {} but rows have rank {}",
                repr.k,
                code.k()
            )));
        }
        Ok(code)
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        if self.n != other.n || self.field != other.field {
            return Err(Error::DimensionMismatch(format!(
                "codes of length {} over GF({}) and length {} over GF({})",
                self.n,
                self.q(),
                other.n,
                other.q()
            )));
        }
        Ok(())
    }

    /// Encodes a message of length k.
    pub fn encode(&self, msg: &[Elem]) -> Row {
        let mut out = vec![Elem::ZERO; self.n];
        for (row, &m) in self.gen.iter().zip(msg) {
            if m.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(row) {
                *o += self.field.mul(m, g);
            }
        }
        out
    }

    pub fn is_codeword(&self, v: &[Elem]) -> bool {
        let mut rows = self.gen.clone();
        rows.push(v.to_vec());
        linalg::rank(&self.field, &rows, self.n) == self.k()
    }

    /// True iff `other ⊆ self` as row spaces.
    pub fn contains(&self, other: &LinearCode) -> Result<bool> {
        self.check_compatible(other)?;
        let mut rows = self.gen.clone();
        rows.extend(other.gen.iter().cloned());
        Ok(linalg::rank(&self.field, &rows, self.n) == self.k())
    }

    /// Dual under the standard inner product Σ x_j y_j.
    pub fn dual_code(&self) -> LinearCode {
        let rows = linalg::kernel(&self.field, &self.gen, self.n);
        let mut dual = LinearCode::from_rows(self.field, self.n, rows).expect("kernel rows fit");
        dual.zero_set = self.zero_set.as_ref().map(cyclotomic::dual_zero_set);
        dual
    }

    /// Orthogonal code under the Hermitian form Σ x̄_j y_j over GF(4).
    pub fn hermitian_orthogonal_gf4(&self) -> Result<LinearCode> {
        if self.q() != 4 {
            return Err(Error::InvalidInput(format!(
                "Hermitian orthogonal code needs q = 4, got {}",
                self.q()
            )));
        }
        let conj: Vec<Row> = self
            .gen
            .iter()
            .map(|r| r.iter().map(|&x| self.field.conjugate(x)).collect())
            .collect();
        let rows = linalg::kernel(&self.field, &conj, self.n);
        let mut orth = LinearCode::from_rows(self.field, self.n, rows)?;
        orth.zero_set = match &self.zero_set {
            Some(z) => Some(cyclotomic::orthogonal_zero_set_gf4(z)?),
            None => None,
        };
        Ok(orth)
    }

    /// Subcode of even-weight words of a binary code.
    pub fn even_weight_subcode(&self) -> Result<LinearCode> {
        if self.q() != 2 {
            return Err(Error::InvalidInput(format!(
                "even-weight subcode needs q = 2, got {}",
                self.q()
            )));
        }
        let odd = |r: &Row| r.iter().filter(|x| !x.is_zero()).count() % 2 == 1;
        let mut rows = self.gen.clone();
        let mut sub = match rows.iter().position(odd) {
            None => self.clone(),
            Some(p) => {
                let pivot = rows.remove(p);
                for r in rows.iter_mut() {
                    if odd(r) {
                        for (a, &b) in r.iter_mut().zip(&pivot) {
                            *a += b;
                        }
                    }
                }
                LinearCode::from_rows(self.field, self.n, rows)?
            }
        };
        sub.zero_set = match &self.zero_set {
            Some(z) if !z.contains(0) => Some(ZeroSet::new(z.n, z.q, z.residues.iter().copied().chain([0]))?),
            other => other.clone(),
        };
        Ok(sub)
    }

    /// Every cyclic shift of every generator row stays in the code.
    pub fn is_cyclic(&self) -> bool {
        self.gen.iter().all(|r| {
            let mut shifted = r.clone();
            shifted.rotate_right(1);
            self.is_codeword(&shifted)
        })
    }

    /// Pairwise Gram matrix of two generator matrices under the standard form.
    pub fn gram_is_zero(&self, other: &LinearCode) -> bool {
        self.gen
            .iter()
            .all(|a| other.gen.iter().all(|b| linalg::dot(&self.field, a, b).is_zero()))
    }
}

pub fn symbol_weight(v: &[Elem]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Cyclic code with the given zero set; rows are the shifts X^i g(X), i < k.
pub fn code_from_zero_set(z: &ZeroSet) -> Result<LinearCode> {
    code_from_zero_set_in(z, field_for_q(z.q)?)
}

pub fn code_from_zero_set_in(z: &ZeroSet, base: FieldCtx) -> Result<LinearCode> {
    let g = generator_polynomial_in(z, base)?;
    let n = z.n;
    let deg = g.degree().expect("generator polynomial is nonzero");
    debug_assert_eq!(deg, z.len());
    let k = n - deg;
    let rows = (0..k)
        .map(|shift| {
            let mut r = vec![Elem::ZERO; n];
            for (i, &c) in g.coeffs().iter().enumerate() {
                r[shift + i] = c;
            }
            r
        })
        .collect();
    Ok(LinearCode::from_rows(base, n, rows)?.with_zero_set(Some(z.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{dual_zero_set, orthogonal_zero_set_gf4};

    fn zs(n: usize, q: usize, r: &[usize]) -> ZeroSet {
        ZeroSet::new(n, q, r.iter().copied()).unwrap()
    }

    fn brute_min_weight(c: &LinearCode) -> usize {
        // q = 2 only
        (1u64..1 << c.k())
            .map(|m| {
                let msg: Vec<Elem> = (0..c.k()).map(|i| Elem((m >> i & 1) as u32)).collect();
                symbol_weight(&c.encode(&msg))
            })
            .min()
            .unwrap()
    }

    #[test]
    fn hamming_generator_polynomial() {
        let g = generator_polynomial(&zs(7, 2, &[1, 2, 4])).unwrap();
        assert_eq!(g.degree(), Some(3));
        assert!(g.divides(&Polynomial::x_n_minus_one(7), &FieldCtx::new(1).unwrap()));
        // α is a root of X^3 + X + 1 and so are α^2, α^4
        assert_eq!(g.coeffs(), &[Elem(1), Elem(1), Elem(0), Elem(1)]);
    }

    #[test]
    fn trivial_generator_polynomials() {
        assert_eq!(
            generator_polynomial(&zs(7, 2, &[0])).unwrap().coeffs(),
            &[Elem(1), Elem(1)]
        );
        assert_eq!(
            generator_polynomial(&ZeroSet::empty(7, 2).unwrap()).unwrap(),
            Polynomial::one()
        );
    }

    #[test]
    fn generator_divides_x_n_minus_one_over_gf4_and_gf8() {
        for (n, q, r) in [(5, 4, vec![0, 1, 4]), (21, 4, vec![1, 4, 16]), (7, 8, vec![0, 1, 3])] {
            let z = zs(n, q, &r);
            let g = generator_polynomial(&z).unwrap();
            assert_eq!(g.degree(), Some(z.len()));
            assert!(g.is_monic());
            assert!(g.divides(&Polynomial::x_n_minus_one(n), &field_for_q(q).unwrap()));
        }
    }

    #[test]
    fn code_from_zero_set_examples() {
        let ham = code_from_zero_set(&zs(7, 2, &[1, 2, 4])).unwrap();
        assert_eq!((ham.n(), ham.k()), (7, 4));
        assert_eq!(brute_min_weight(&ham), 3);
        let simplex = code_from_zero_set(&zs(7, 2, &[0, 1, 2, 4])).unwrap();
        assert_eq!(simplex.k(), 3);
        assert_eq!(brute_min_weight(&simplex), 4);
        let full = code_from_zero_set(&ZeroSet::empty(7, 2).unwrap()).unwrap();
        assert_eq!(full, LinearCode::full(FieldCtx::new(1).unwrap(), 7));
        assert!(ham.is_cyclic() && simplex.is_cyclic());
    }

    #[test]
    fn dual_examples() {
        let ham = code_from_zero_set(&zs(7, 2, &[1, 2, 4])).unwrap();
        let dual = ham.dual_code();
        assert_eq!(dual.k(), 3);
        assert!(ham.gram_is_zero(&dual));
        assert_eq!(dual, code_from_zero_set(&zs(7, 2, &[0, 1, 2, 4])).unwrap());
        let f = FieldCtx::new(1).unwrap();
        assert_eq!(LinearCode::full(f, 7).dual_code(), LinearCode::zero(f, 7));

        // the h(X) route (zero set of the dual) against the matrix kernel
        let z = zs(15, 2, &[1, 2, 4, 8]);
        let c = code_from_zero_set(&z).unwrap();
        assert_eq!(c.dual_code(), code_from_zero_set(&dual_zero_set(&z)).unwrap());
    }

    #[test]
    fn hermitian_examples() {
        let z = zs(5, 4, &[0, 1, 4]);
        let c = code_from_zero_set(&z).unwrap();
        let orth = c.hermitian_orthogonal_gf4().unwrap();
        assert_eq!((orth.n(), orth.k()), (5, 3));
        assert_eq!(orth, code_from_zero_set(&orthogonal_zero_set_gf4(&z).unwrap()).unwrap());
        assert_eq!(orth.zero_set(), Some(&zs(5, 4, &[1, 4])));
        assert_eq!(orth.hermitian_orthogonal_gf4().unwrap(), c);
        let f = FieldCtx::gf4();
        assert_eq!(
            LinearCode::zero(f, 5).hermitian_orthogonal_gf4().unwrap(),
            LinearCode::full(f, 5)
        );
        assert!(ham_code().hermitian_orthogonal_gf4().is_err());
    }

    fn ham_code() -> LinearCode {
        code_from_zero_set(&zs(7, 2, &[1, 2, 4])).unwrap()
    }

    #[test]
    fn containment_examples() {
        let ham = ham_code();
        let simplex = code_from_zero_set(&zs(7, 2, &[0, 1, 2, 4])).unwrap();
        assert!(ham.contains(&simplex).unwrap());
        assert!(!simplex.contains(&ham).unwrap());
        assert!(ham.contains(&ham).unwrap());
        let other = code_from_zero_set(&zs(5, 4, &[0])).unwrap();
        assert!(matches!(ham.contains(&other), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn even_weight_subcode_examples() {
        let ham = ham_code();
        let even = ham.even_weight_subcode().unwrap();
        assert_eq!(even.k(), 3);
        assert!(ham.contains(&even).unwrap());
        assert_eq!(even.even_weight_subcode().unwrap(), even);
        assert_eq!(even, code_from_zero_set(&zs(7, 2, &[0, 1, 2, 4])).unwrap());
    }

    #[test]
    fn repr_round_trip() {
        let c = code_from_zero_set(&zs(5, 4, &[0, 1, 4])).unwrap();
        let back = LinearCode::from_repr(&c.repr()).unwrap();
        assert_eq!(back, c);
    }
}
