//! Generalized permutation groups G(d,e,n) acting on polynomials through
//! roots of unity, stabilizer tests for the central monomial, Reynolds
//! averaging onto invariant subspaces, and the symbolic obstruction that
//! rules out mixing the power sum with the product power inside one
//! invariant with a central-monomial Hessian.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;

use crate::cyclotomic::CycNumber;
use crate::error::Error;
use crate::hessian::hessian_det_wrt;
use crate::linalg::scalar_rref;
use crate::matrix::ScalarMatrix;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::scalar::{Scalar, ScalarKind};

/// A generalized permutation matrix: x_i maps to theta^(a_i) x_(sigma(i))
/// with theta a primitive d-th root of unity. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GenPermElement {
    n: usize,
    d: u32,
    sigma: Vec<usize>,
    a: Vec<u32>,
}

impl GenPermElement {
    pub fn new(n: usize, d: u32, sigma: Vec<usize>, a: Vec<u32>) -> Result<Self, Error> {
        if sigma.len() != n || a.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: sigma.len().max(a.len()),
            });
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || seen[s] {
                return Err(Error::DomainError("sigma is not a permutation".into()));
            }
            seen[s] = true;
        }
        if d == 0 || a.iter().any(|&ai| ai >= d) {
            return Err(Error::DomainError("scalar exponents must lie in 0..d".into()));
        }
        Ok(GenPermElement { n, d, sigma, a })
    }

    pub fn identity(n: usize, d: u32) -> Self {
        GenPermElement {
            n,
            d,
            sigma: (0..n).collect(),
            a: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn scalar_exponents(&self) -> &[u32] {
        &self.a
    }

    /// The element whose action equals "apply `earlier`, then `self`".
    pub fn compose(&self, earlier: &Self) -> Self {
        debug_assert!(self.n == earlier.n && self.d == earlier.d);
        let sigma = (0..self.n).map(|i| self.sigma[earlier.sigma[i]]).collect();
        let a = (0..self.n)
            .map(|i| (earlier.a[i] + self.a[earlier.sigma[i]]) % self.d)
            .collect();
        GenPermElement {
            n: self.n,
            d: self.d,
            sigma,
            a,
        }
    }

    /// Substitutes x_i -> theta^(a_i) x_(sigma(i)). The result lives over
    /// Q(zeta_d) regardless of the input kind.
    pub fn apply(&self, f: &MultiPoly) -> Result<MultiPoly, Error> {
        if f.nvars() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: f.nvars(),
            });
        }
        let kind = ScalarKind::Cyclotomic(self.d);
        MultiPoly::from_terms(
            self.n,
            f.terms_desc()
                .map(|(m, c)| {
                    let mut exps = vec![0u32; self.n];
                    let mut theta_exp: u64 = 0;
                    for (i, &e) in m.0.iter().enumerate() {
                        exps[self.sigma[i]] = e;
                        theta_exp += self.a[i] as u64 * e as u64;
                    }
                    let root = CycNumber::zeta_pow(self.d, (theta_exp % self.d as u64) as u32);
                    let coeff = c.promote(kind)?.mul(&Scalar::Cyc(root))?;
                    Ok((Monomial(exps), coeff))
                })
                .collect::<Result<Vec<_>, Error>>()?,
        )
    }
}

/// Parameters of G(d, e, n) with e restricted to 1 (the full monomial group)
/// or n (scalar exponents summing to 0 mod n, which needs n | d).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupSpec {
    pub d: u32,
    pub e: u32,
    pub n: usize,
}

impl GroupSpec {
    pub fn new(d: u32, e: u32, n: usize) -> Result<Self, Error> {
        if d == 0 || n == 0 {
            return Err(Error::SpecError("d and n must be positive".into()));
        }
        if e != 1 && e as usize != n {
            return Err(Error::SpecError("only e = 1 and e = n are supported".into()));
        }
        if e as usize == n && e != 1 && d % n as u32 != 0 {
            return Err(Error::SpecError("G(d,n,n) needs n | d".into()));
        }
        Ok(GroupSpec { d, e, n })
    }

    /// Order of the full group: d^n n! for e = 1, d^n n!/n for e = n.
    pub fn order(&self) -> u64 {
        let mut v = 1u64;
        for _ in 0..self.n {
            v *= self.d as u64;
        }
        for i in 2..=self.n as u64 {
            v *= i;
        }
        if self.e as usize == self.n {
            v /= self.n as u64;
        }
        v
    }
}

/// A standard generating set: adjacent transpositions plus diagonal
/// elements. For e = 1 a single theta in slot 0 suffices. For e = n the
/// diagonal subgroup is everything with exponent sum 0 mod n, which needs
/// both the difference element diag(theta, theta^(d-1), 1, ...) and, when
/// n < d, the element diag(theta^n, 1, ..., 1) (exponent sum n = 0 mod n):
/// the difference elements alone only reach sums divisible by d.
pub fn group_generators(spec: &GroupSpec) -> Result<Vec<GenPermElement>, Error> {
    let GroupSpec { d, e, n } = *spec;
    let mut gens = Vec::new();
    if e == 1 || n == 1 {
        let mut a = vec![0u32; n];
        a[0] = 1 % d;
        gens.push(GenPermElement::new(n, d, (0..n).collect(), a)?);
    } else {
        if d > 1 {
            let mut a = vec![0u32; n];
            a[0] = 1;
            a[1] = d - 1;
            gens.push(GenPermElement::new(n, d, (0..n).collect(), a)?);
        }
        if (n as u32) < d {
            let mut a = vec![0u32; n];
            a[0] = n as u32 % d;
            gens.push(GenPermElement::new(n, d, (0..n).collect(), a)?);
        }
    }
    for i in 0..n.saturating_sub(1) {
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.swap(i, i + 1);
        gens.push(GenPermElement::new(n, d, sigma, vec![0; n])?);
    }
    Ok(gens)
}

/// BFS closure of the generators. Deterministic: the result is sorted by the
/// canonical (sigma, a) key.
pub fn enumerate_group(
    generators: &[GenPermElement],
    budget: usize,
) -> Result<Vec<GenPermElement>, Error> {
    let Some(first) = generators.first() else {
        return Err(Error::DomainError("no generators supplied".into()));
    };
    let (n, d) = (first.n, first.d);
    if generators.iter().any(|g| g.n != n || g.d != d) {
        return Err(Error::ScalarMismatch);
    }
    let mut seen: BTreeSet<GenPermElement> = BTreeSet::new();
    let mut frontier = vec![GenPermElement::identity(n, d)];
    seen.insert(frontier[0].clone());
    while let Some(el) = frontier.pop() {
        for g in generators {
            let next = g.compose(&el);
            if seen.insert(next.clone()) {
                if seen.len() > budget {
                    return Err(Error::BudgetExceeded {
                        limit: budget as u64,
                        requested: seen.len() as u64,
                    });
                }
                frontier.push(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Whether every generator fixes f exactly.
pub fn is_invariant(f: &MultiPoly, generators: &[GenPermElement]) -> Result<bool, Error> {
    for g in generators {
        if !g.apply(f)?.eq_promoted(f) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership of an invertible matrix in the stabilizer of the central
/// monomial (x1...xn)^(d-2), for d >= 3. Two routes are computed and must
/// agree: direct substitution, and the structural criterion that A is a
/// generalized permutation matrix whose nonzero entries gamma_i satisfy
/// prod gamma_i^(d-2) = 1.
pub fn stabilizer_membership_monomial(a: &ScalarMatrix, d: u32) -> Result<bool, Error> {
    if d < 3 {
        return Err(Error::DomainError("the monomial needs d >= 3".into()));
    }
    if a.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let n = a.size();
    let kind = a.kind();
    let h = MultiPoly::monomial(n, &vec![d - 2; n], Scalar::one(kind))?;
    let direct = h.substitute_linear(a)?.eq_promoted(&h);

    // structural route
    let mut structural = true;
    let mut col_used = vec![false; n];
    let mut product = Scalar::one(kind);
    'rows: for i in 0..n {
        let mut nonzero = None;
        for j in 0..n {
            if !a.get(i, j).is_zero() {
                if nonzero.is_some() || col_used[j] {
                    structural = false;
                    break 'rows;
                }
                nonzero = Some(j);
                col_used[j] = true;
                product = product.mul(&a.get(i, j).pow(d - 2)?)?;
            }
        }
        if nonzero.is_none() {
            structural = false;
            break;
        }
    }
    let structural = structural && product.is_one();
    assert_eq!(direct, structural, "stabilizer routes diverged");
    Ok(direct)
}

/// Reynolds average of f over an enumerated group.
pub fn reynolds(f: &MultiPoly, group: &[GenPermElement]) -> Result<MultiPoly, Error> {
    let Some(first) = group.first() else {
        return Err(Error::DomainError("empty group".into()));
    };
    let kind = ScalarKind::Cyclotomic(first.d);
    let mut acc = MultiPoly::zero_with(f.nvars(), kind);
    for g in group {
        acc = acc.add(&g.apply(f)?)?;
    }
    let inv_order = Rational::new(BigInt::from(1), BigInt::from(group.len() as u64));
    acc.scale(&Scalar::Rat(inv_order))
}

/// Basis of the degree-d invariant subspace, by exact Reynolds averaging of
/// every degree-`deg` monomial and row reduction over Q(zeta). Basis vectors
/// whose coefficients all lie in Q are returned as rational polynomials.
pub fn invariant_space_degree_d(spec: &GroupSpec, deg: u32) -> Result<Vec<MultiPoly>, Error> {
    const ORDER_BUDGET: usize = 10_000;
    let gens = group_generators(spec)?;
    let group = enumerate_group(&gens, ORDER_BUDGET)?;
    let basis = monomials_of_degree(spec.n, deg);
    let kind = ScalarKind::Cyclotomic(spec.d);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for m in &basis {
        let mono = MultiPoly::monomial(spec.n, &m.0, Scalar::one(ScalarKind::Rational))?;
        let avg = reynolds(&mono, &group)?;
        if avg.is_zero() {
            continue;
        }
        rows.push(basis.iter().map(|b| avg.coefficient_of(b)).collect());
    }
    let rref = scalar_rref(rows, kind)?;
    let mut out = Vec::new();
    for row in rref {
        let rational: Option<Vec<Rational>> = row.iter().map(|c| c.as_rational()).collect();
        let poly = match rational {
            Some(coeffs) => MultiPoly::from_rational_coeff_vector(spec.n, &basis, &coeffs),
            None => MultiPoly::from_terms(
                spec.n,
                basis.iter().cloned().zip(row.into_iter()),
            )?,
        };
        out.push(poly);
    }
    Ok(out)
}

/// The symbolic obstruction for mixing invariants: builds
/// f = a1 (x1^d + ... + xn^d) + a2 (x1...xn)^(d/n) with a1, a2 as auxiliary
/// variables, computes det(Hess_x(f)) exactly, and returns the coefficient
/// of the off-central monomial
/// (x1...x_(n-2))^(d-2+2d/n) x_(n-1)^(2d/n-2) x_n^(2d/n-2)
/// as a polynomial in (a1, a2). A nonzero value rules out simultaneous
/// nonzero a1, a2 for forms whose Hessian is a central monomial.
pub fn gdnn_obstruction(n: usize, d: u32) -> Result<MultiPoly, Error> {
    if n < 2 || d < 3 {
        return Err(Error::SpecError("need n >= 2 and d >= 3".into()));
    }
    if d % n as u32 != 0 {
        return Err(Error::SpecError("n must divide d".into()));
    }
    let dn = d / n as u32;
    let nv = n + 2; // x1..xn, then a1, a2
    let mut terms: Vec<(i64, Vec<u32>)> = Vec::new();
    for i in 0..n {
        let mut e = vec![0u32; nv];
        e[i] = d;
        e[n] = 1;
        terms.push((1, e));
    }
    let mut e = vec![dn; nv];
    e[n] = 0;
    e[n + 1] = 1;
    terms.push((1, e));
    let refs: Vec<(i64, &[u32])> = terms.iter().map(|(c, e)| (*c, e.as_slice())).collect();
    let f = crate::poly::poly_from_int_terms(nv, &refs);
    let h = hessian_det_wrt(&f, n);

    let mut target = vec![d - 2 + 2 * dn; n];
    target[n - 1] = 2 * dn - 2;
    if n >= 2 {
        target[n - 2] = 2 * dn - 2;
    }
    // for n = 2 the "prefix" block is empty and both entries are 2d/n - 2
    let mut out = MultiPoly::zero(2);
    for (m, c) in h.terms_desc() {
        if m.0[..n] == target[..] {
            let alpha_part = Monomial(vec![m.0[n], m.0[n + 1]]);
            out = out.add(&MultiPoly::from_terms(
                2,
                core::iter::once((alpha_part, c.clone())),
            )?)?;
        }
    }
    Ok(out)
}
