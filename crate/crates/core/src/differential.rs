//! The differential of the Hessian map at a form, as an exact linear map
//! between graded coefficient spaces.
//!
//! For f, g of equal degree, the image of g under the differential at f is
//! the sum over i of determinants of the matrices obtained from Hess(f) by
//! replacing the i-th row with the i-th row of Hess(g). An independent route
//! computes the same value as the coefficient of t in det(Hess(f + t g)):
//! the two must agree everywhere, and the second one serves as the oracle
//! for the first.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::hessian::hessian_matrix;
use crate::linalg::RatMatrix;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::scalar::Scalar;

fn check_pair(f: &MultiPoly, g: &MultiPoly) -> Result<(), Error> {
    if f.nvars() != g.nvars() {
        return Err(Error::ArityMismatch {
            expected: f.nvars(),
            found: g.nvars(),
        });
    }
    if !f.is_homogeneous() || !g.is_homogeneous() {
        return Err(Error::DomainError("inputs must be homogeneous".into()));
    }
    if let (Some(df), Some(dg)) = (f.degree(), g.degree()) {
        if df != dg {
            return Err(Error::ArityMismatch {
                expected: df as usize,
                found: dg as usize,
            });
        }
    }
    Ok(())
}

/// The differential of the Hessian map at f, applied to g: the sum of the n
/// row-replacement determinants. Linear in g.
pub fn dhessian(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly, Error> {
    check_pair(f, g)?;
    let n = f.nvars();
    let hf = hessian_matrix(f);
    let hg = hessian_matrix(g);
    let mut acc = MultiPoly::zero_with(n, f.kind().unify(g.kind())?);
    for i in 0..n {
        let row: Vec<MultiPoly> = (0..n).map(|j| hg.get(i, j).clone()).collect();
        let mixed = hf.with_row(i, row)?;
        acc = acc.add(&mixed.det())?;
    }
    Ok(acc)
}

/// Independent oracle: adjoins an auxiliary variable t, computes
/// det(Hess_x(f + t g)) exactly and returns the coefficient of t.
pub fn dhessian_oracle(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly, Error> {
    check_pair(f, g)?;
    let n = f.nvars();
    let fe = append_variable(f);
    let ge = append_variable(g);
    let t = MultiPoly::variable(n + 1, n).expect("fresh variable");
    let sum = fe.add(&ge.mul(&t)?)?;
    let h = crate::hessian::hessian_det_wrt(&sum, n);
    // coefficient of t^1, as a polynomial in the original variables
    let mut out = MultiPoly::zero_with(n, h.kind());
    let mut linear_terms: Vec<(Monomial, Scalar)> = Vec::new();
    for (m, c) in h.terms_desc() {
        if m.0[n] == 1 {
            linear_terms.push((Monomial(m.0[..n].to_vec()), c.clone()));
        }
    }
    for (m, c) in linear_terms {
        out = out.add(&MultiPoly::monomial(n, &m.0, c)?)?;
    }
    Ok(out)
}

fn append_variable(p: &MultiPoly) -> MultiPoly {
    MultiPoly::from_terms(
        p.nvars() + 1,
        p.terms_desc().map(|(m, c)| {
            let mut exps = m.0.clone();
            exps.push(0);
            (Monomial(exps), c.clone())
        }),
    )
    .expect("arity consistent")
}

/// The matrix of the differential at f over the graded monomial bases:
/// column j holds the coefficients of the image of the j-th degree-d
/// monomial, expressed in the degree-n(d-2) basis. Both bases are in
/// descending graded-lex order.
#[derive(Debug, Clone)]
pub struct LinearMapMatrix {
    pub matrix: RatMatrix,
    pub row_basis: Vec<Monomial>,
    pub col_basis: Vec<Monomial>,
}

/// Kernel of the differential at f: exact dimension and basis. Basis
/// elements are normalized so the first nonzero coordinate (in descending
/// graded-lex order) is 1.
#[derive(Debug, Clone)]
pub struct KernelReport {
    pub dim: usize,
    pub basis: Vec<MultiPoly>,
}

/// Matrix of the differential at a nonzero homogeneous f.
pub fn dhessian_matrix(f: &MultiPoly) -> Result<LinearMapMatrix, Error> {
    let d = f
        .degree()
        .ok_or_else(|| Error::DomainError("zero polynomial has no degree".into()))?;
    dhessian_matrix_deg(f, d)
}

/// Matrix of the differential with the source degree given explicitly
/// (required for f = 0, where the map is identically zero).
pub fn dhessian_matrix_deg(f: &MultiPoly, d: u32) -> Result<LinearMapMatrix, Error> {
    if d < 2 {
        return Err(Error::DomainError("degree must be at least 2".into()));
    }
    if !f.is_homogeneous() || f.degree().map(|df| df != d).unwrap_or(false) {
        return Err(Error::DomainError(
            "f must be homogeneous of the stated degree".into(),
        ));
    }
    let n = f.nvars();
    let target = (n as u32) * (d - 2);
    let col_basis = monomials_of_degree(n, d);
    let row_basis = monomials_of_degree(n, target);
    let mut matrix = RatMatrix::zero(row_basis.len(), col_basis.len());
    for (j, m) in col_basis.iter().enumerate() {
        let g = MultiPoly::monomial(n, &m.0, Scalar::from_int(1))?;
        let image = dhessian(f, &g)?;
        let coeffs = image.rational_coeff_vector(&row_basis)?;
        for (i, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                matrix.set(i, j, c);
            }
        }
    }
    Ok(LinearMapMatrix {
        matrix,
        row_basis,
        col_basis,
    })
}

/// Exact kernel of the differential at f (nonzero homogeneous, degree >= 2).
pub fn kernel(f: &MultiPoly) -> Result<KernelReport, Error> {
    let map = dhessian_matrix(f)?;
    Ok(kernel_of_map(f.nvars(), &map))
}

pub fn kernel_of_map(nvars: usize, map: &LinearMapMatrix) -> KernelReport {
    let vectors = map.matrix.kernel_basis();
    let basis = vectors
        .iter()
        .map(|v| MultiPoly::from_rational_coeff_vector(nvars, &map.col_basis, v))
        .collect::<Vec<_>>();
    KernelReport {
        dim: basis.len(),
        basis,
    }
}

/// The closed-form coefficient of a_j x1^(k+j-2) x2^(2d-k-j-2) in the image
/// of sum_j a_j x1^j x2^(d-j) under the differential at x1^k x2^(d-k):
/// (d-1) * (d(k-j)^2 - d(k+j) + 2kj). Total on its integer domain; the case
/// split between k = d and k <= d-2 belongs to the caller.
pub fn binary_monomial_coefficient(d: i64, k: i64, j: i64) -> Rational {
    let d_ = BigInt::from(d);
    let k_ = BigInt::from(k);
    let j_ = BigInt::from(j);
    let quad = &d_ * (&k_ - &j_) * (&k_ - &j_) - &d_ * (&k_ + &j_)
        + BigInt::from(2) * &k_ * &j_;
    Rational::from_integer((d_ - BigInt::from(1)) * quad)
}

/// Expected kernel dimension of the differential at x1^k x2^(d-k), by the
/// closed-form case analysis. Serves as the independent cross-check for the
/// linear-algebra kernel.
pub fn binary_monomial_expected_dim(d: i64, k: i64) -> usize {
    assert!(d >= 2 && k >= 1 && k <= d);
    if k == d {
        2
    } else if k == d - 1 {
        if d == 2 {
            2
        } else {
            1
        }
    } else {
        (0..=d)
            .filter(|&j| binary_monomial_coefficient(d, k, j).is_zero())
            .count()
    }
}
