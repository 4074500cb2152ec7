//! Sparse multivariate polynomials over an exact scalar field.
//!
//! A polynomial owns its variable count and a scalar kind; zero coefficients
//! are never stored and terms sit in a B-tree keyed by the global graded-lex
//! order, so equal polynomials have identical representations.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Error;
use crate::matrix::ScalarMatrix;
use crate::monomial::Monomial;
use crate::rational::Rational;
use crate::scalar::{Scalar, ScalarKind};

/// A sparse multivariate polynomial with exact coefficients of one kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    kind: ScalarKind,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    /// The zero polynomial over Q. Zero still carries its variable count so
    /// arity checks stay total.
    pub fn zero(nvars: usize) -> Self {
        Self::zero_with(nvars, ScalarKind::Rational)
    }

    pub fn zero_with(nvars: usize, kind: ScalarKind) -> Self {
        MultiPoly {
            nvars,
            kind,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero_with(nvars, c.kind());
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::from_int(1))
    }

    pub fn variable(nvars: usize, i: usize) -> Result<Self, Error> {
        if i >= nvars {
            return Err(Error::IndexError { index: i, nvars });
        }
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial::var(nvars, i), Scalar::from_int(1));
        Ok(p)
    }

    /// A single term c * x^exps.
    pub fn monomial(nvars: usize, exps: &[u32], c: Scalar) -> Result<Self, Error> {
        if exps.len() != nvars {
            return Err(Error::ArityMismatch {
                expected: nvars,
                found: exps.len(),
            });
        }
        let mut p = Self::zero_with(nvars, c.kind());
        if !c.is_zero() {
            p.terms.insert(Monomial(exps.to_vec()), c);
        }
        Ok(p)
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, collecting
    /// duplicates and dropping zeros. All scalars must unify to one kind.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut kind = ScalarKind::Rational;
        let mut collected: Vec<(Monomial, Scalar)> = Vec::new();
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    found: m.nvars(),
                });
            }
            kind = kind.unify(c.kind())?;
            collected.push((m, c));
        }
        let mut p = Self::zero_with(nvars, kind);
        for (m, c) in collected {
            p.add_term(m, c.promote(kind)?);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(c.kind(), self.kind);
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c).expect("uniform kind");
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order (the canonical display order).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|m| m.total_degree());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// `(coefficient, exponents)` when the polynomial has exactly one term.
    pub fn monomial_form(&self) -> Option<(Scalar, Monomial)> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().expect("one term");
            Some((c.clone(), m.clone()))
        } else {
            None
        }
    }

    pub fn coefficient_of(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.kind))
    }

    fn check_arity(&self, other: &Self) -> Result<(), Error> {
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_arity(other)?;
        let kind = self.kind.unify(other.kind)?;
        let mut out = self.promote(kind)?;
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.promote(kind)?);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            kind: self.kind,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_arity(other)?;
        let kind = self.kind.unify(other.kind)?;
        let mut out = Self::zero_with(self.nvars, kind);
        for (m1, c1) in &self.terms {
            let c1 = c1.promote(kind)?;
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2).expect("uniform kind"));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Result<Self, Error> {
        let kind = self.kind.unify(c.kind())?;
        if c.is_zero() {
            return Ok(Self::zero_with(self.nvars, kind));
        }
        let c = c.promote(kind)?;
        let mut out = Self::zero_with(self.nvars, kind);
        for (m, v) in &self.terms {
            out.terms
                .insert(m.clone(), v.promote(kind)?.mul(&c).expect("uniform kind"));
        }
        Ok(out)
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        self.scale(&Scalar::Rat(r.clone())).expect("rational scales any kind")
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars)
            .promote(self.kind)
            .expect("constant promotes");
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same arity");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same arity");
            }
        }
        acc
    }

    /// Formal partial derivative with respect to x_{i+1} (0-based index).
    pub fn partial_derivative(&self, i: usize) -> Result<Self, Error> {
        if i >= self.nvars {
            return Err(Error::IndexError {
                index: i,
                nvars: self.nvars,
            });
        }
        let mut out = Self::zero_with(self.nvars, self.kind);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] = e - 1;
            let factor = Scalar::from_int(e as i64)
                .promote(self.kind)
                .expect("int promotes");
            out.add_term(Monomial(exps), c.mul(&factor).expect("uniform kind"));
        }
        Ok(out)
    }

    /// Substitutes x_i -> sum_j A[i][j] x_j, i.e. returns p(A x). Degrees are
    /// preserved for homogeneous inputs.
    pub fn substitute_linear(&self, a: &ScalarMatrix) -> Result<Self, Error> {
        if a.size() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: a.size(),
            });
        }
        let kind = self.kind.unify(a.kind())?;
        let n = self.nvars;
        // the image of each variable as a linear polynomial
        let mut images: Vec<MultiPoly> = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Self::zero_with(n, kind);
            for j in 0..n {
                let c = a.get(i, j).promote(kind)?;
                if !c.is_zero() {
                    row.add_term(Monomial::var(n, j), c);
                }
            }
            images.push(row);
        }
        // powers of each image, computed once up to the needed exponent
        let mut max_exp = alloc::vec![0u32; n];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        let mut powers: Vec<Vec<MultiPoly>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut tower = Vec::with_capacity(max_exp[i] as usize + 1);
            tower.push(Self::one(n).promote(kind)?);
            for e in 1..=max_exp[i] {
                let next = tower[(e - 1) as usize].mul(&images[i])?;
                tower.push(next);
            }
            powers.push(tower);
        }
        let mut out = Self::zero_with(n, kind);
        for (m, c) in &self.terms {
            let mut term = Self::constant(n, c.promote(kind)?);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&powers[i][e as usize])?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Exact evaluation at a point.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar, Error> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let mut kind = self.kind;
        for v in point {
            kind = kind.unify(v.kind())?;
        }
        let mut acc = Scalar::zero(kind);
        for (m, c) in &self.terms {
            let mut term = c.promote(kind)?;
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&point[i].promote(kind)?.pow(e)?)?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Promotes all coefficients into `kind`.
    pub fn promote(&self, kind: ScalarKind) -> Result<Self, Error> {
        if kind == self.kind {
            return Ok(self.clone());
        }
        self.kind.unify(kind)?;
        let mut out = Self::zero_with(self.nvars, kind);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.promote(kind)?);
        }
        Ok(out)
    }

    /// Exact equality after promoting both sides to a common scalar kind.
    pub fn eq_promoted(&self, other: &Self) -> bool {
        match self.kind.unify(other.kind) {
            Ok(kind) => {
                self.promote(kind).expect("unified") == other.promote(kind).expect("unified")
            }
            Err(_) => false,
        }
    }

    /// The coefficient vector over an explicit monomial basis; coefficients
    /// must be rational. Monomials outside the basis are an error.
    pub fn rational_coeff_vector(&self, basis: &[Monomial]) -> Result<Vec<Rational>, Error> {
        use num_traits::Zero;
        let mut out = alloc::vec![Rational::zero(); basis.len()];
        let index: BTreeMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        for (m, c) in &self.terms {
            let r = c.as_rational().ok_or(Error::ScalarMismatch)?;
            let i = index.get(m).ok_or_else(|| {
                Error::DomainError(alloc::format!(
                    "monomial of degree {} outside the basis",
                    m.total_degree()
                ))
            })?;
            out[*i] = r;
        }
        Ok(out)
    }

    /// Reads a polynomial off a rational coefficient vector over a basis.
    pub fn from_rational_coeff_vector(
        nvars: usize,
        basis: &[Monomial],
        coeffs: &[Rational],
    ) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in basis.iter().zip(coeffs) {
            use num_traits::Zero;
            if !c.is_zero() {
                p.terms.insert(m.clone(), Scalar::Rat(c.clone()));
            }
        }
        p
    }
}

impl core::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&crate::text::format_poly(self))
    }
}

impl core::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::add(self, rhs).expect("compatible operands")
    }
}

impl core::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::sub(self, rhs).expect("compatible operands")
    }
}

impl core::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::mul(self, rhs).expect("compatible operands")
    }
}

impl core::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

/// Convenience constructor used throughout tests and the named families:
/// builds sum_i c_i * x^exps_i over Q.
pub fn poly_from_int_terms(nvars: usize, terms: &[(i64, &[u32])]) -> MultiPoly {
    MultiPoly::from_terms(
        nvars,
        terms
            .iter()
            .map(|(c, e)| (Monomial(e.to_vec()), Scalar::from_int(*c))),
    )
    .expect("well-formed term list")
}
