//! Hessian matrices of forms and their exact determinants.
//!
//! For a homogeneous f of degree d in n variables, the determinant of the
//! matrix of second partials is either zero or homogeneous of degree n(d-2).
//! The analysis report answers the structural question driving much of the
//! crate: is that determinant a single monomial, and if so, is it a nonzero
//! multiple of (x1...xn)^(d-2)?

use alloc::vec::Vec;

use crate::error::Error;
use crate::matrix::PolyMatrix;
use crate::monomial::Monomial;
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

/// The matrix of second partial derivatives, over all variables.
pub fn hessian_matrix(f: &MultiPoly) -> PolyMatrix {
    hessian_matrix_wrt(f, f.nvars())
}

/// The matrix of second partials with respect to the first `nx` variables
/// only. Remaining variables ride along as coefficients; this is how the
/// symbolic computations treat auxiliary unknowns.
pub fn hessian_matrix_wrt(f: &MultiPoly, nx: usize) -> PolyMatrix {
    assert!(nx <= f.nvars());
    let firsts: Vec<MultiPoly> = (0..nx)
        .map(|i| f.partial_derivative(i).expect("index in range"))
        .collect();
    let mut rows: Vec<Vec<MultiPoly>> = Vec::with_capacity(nx);
    for i in 0..nx {
        let mut row = Vec::with_capacity(nx);
        for j in 0..nx {
            if j < i {
                // symmetric: reuse the transposed entry
                row.push(rows[j][i].clone());
            } else {
                row.push(firsts[i].partial_derivative(j).expect("index in range"));
            }
        }
        rows.push(row);
    }
    PolyMatrix::from_rows(rows).expect("square by construction")
}

/// The Hessian determinant det(Hess(f)).
pub fn hessian_det(f: &MultiPoly) -> MultiPoly {
    hessian_matrix(f).det()
}

/// det of the Hessian with respect to the first `nx` variables.
pub fn hessian_det_wrt(f: &MultiPoly, nx: usize) -> MultiPoly {
    hessian_matrix_wrt(f, nx).det()
}

/// Structural analysis of a Hessian determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialHessianReport {
    /// Whether det(Hess(f)) is a single nonzero term.
    pub is_monomial: bool,
    /// Its coefficient, when `is_monomial`.
    pub alpha: Option<Scalar>,
    /// Its exponent vector, when `is_monomial`.
    pub exponents: Option<Monomial>,
    /// Whether the exponents equal (d-2, ..., d-2) for the input degree d.
    pub is_question1_shape: bool,
    /// Whether det(Hess(f)) vanished identically.
    pub zero_hessian: bool,
}

/// Computes det(Hess(f)) for a homogeneous f of degree >= 3 and reports its
/// shape. A zero Hessian is a reportable outcome, not an error.
pub fn monomial_hessian_analyze(f: &MultiPoly) -> Result<MonomialHessianReport, Error> {
    let Some(d) = f.degree() else {
        return Err(Error::DomainError("zero polynomial has no degree".into()));
    };
    if !f.is_homogeneous() || d < 3 {
        return Err(Error::DomainError(
            "expected a homogeneous form of degree >= 3".into(),
        ));
    }
    let h = hessian_det(f);
    Ok(analyze_hessian_poly(&h, f.nvars(), d))
}

/// Shape analysis of an already-computed Hessian determinant.
pub fn analyze_hessian_poly(h: &MultiPoly, nvars: usize, d: u32) -> MonomialHessianReport {
    if h.is_zero() {
        return MonomialHessianReport {
            is_monomial: false,
            alpha: None,
            exponents: None,
            is_question1_shape: false,
            zero_hessian: true,
        };
    }
    match h.monomial_form() {
        Some((alpha, exps)) => {
            let central = exps.0.iter().all(|&e| e == d - 2) && exps.nvars() == nvars;
            MonomialHessianReport {
                is_monomial: true,
                alpha: Some(alpha),
                exponents: Some(exps),
                is_question1_shape: central,
                zero_hessian: false,
            }
        }
        None => MonomialHessianReport {
            is_monomial: false,
            alpha: None,
            exponents: None,
            is_question1_shape: false,
            zero_hessian: false,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_from_int_terms;

    #[test]
    fn decoupled_cubic_has_diagonal_hessian() {
        // f = x1^3 + x2^3 -> Hess = diag(6x1, 6x2), det = 36 x1 x2
        let f = poly_from_int_terms(2, &[(1, &[3, 0]), (1, &[0, 3])]);
        let m = hessian_matrix(&f);
        assert_eq!(m.get(0, 0), &poly_from_int_terms(2, &[(6, &[1, 0])]));
        assert_eq!(m.get(1, 1), &poly_from_int_terms(2, &[(6, &[0, 1])]));
        assert!(m.get(0, 1).is_zero());
        assert!(m.is_symmetric());
        assert_eq!(hessian_det(&f), poly_from_int_terms(2, &[(36, &[1, 1])]));
    }

    #[test]
    fn product_quadratic() {
        // f = x1 x2 -> [[0,1],[1,0]], det = -1
        let f = poly_from_int_terms(2, &[(1, &[1, 1])]);
        let m = hessian_matrix(&f);
        assert!(m.get(0, 0).is_zero());
        assert_eq!(m.get(0, 1), &MultiPoly::one(2));
        assert_eq!(hessian_det(&f), poly_from_int_terms(2, &[(-1, &[0, 0])]));
    }

    #[test]
    fn squared_product() {
        // f = (x1 x2)^2 -> [[2x2^2, 4x1x2], [4x1x2, 2x1^2]]
        let f = poly_from_int_terms(2, &[(1, &[2, 2])]);
        let m = hessian_matrix(&f);
        assert_eq!(m.get(0, 0), &poly_from_int_terms(2, &[(2, &[0, 2])]));
        assert_eq!(m.get(0, 1), &poly_from_int_terms(2, &[(4, &[1, 1])]));
        assert_eq!(m.get(1, 1), &poly_from_int_terms(2, &[(2, &[2, 0])]));
    }

    #[test]
    fn degenerate_binary_cubic() {
        // x1^3 viewed in two variables has vanishing Hessian
        let f = poly_from_int_terms(2, &[(1, &[3, 0])]);
        assert!(hessian_det(&f).is_zero());
        let report = monomial_hessian_analyze(&f).unwrap();
        assert!(report.zero_hessian);
        assert!(!report.is_monomial);
        assert!(!report.is_question1_shape);
    }

    #[test]
    fn mixed_cubic() {
        // f = 2x1^3 + 6x1x2^2 -> Hess [[12x1, 12x2], [12x2, 12x1]],
        // det = 144x1^2 - 144x2^2
        let f = poly_from_int_terms(2, &[(2, &[3, 0]), (6, &[1, 2])]);
        let expect = poly_from_int_terms(2, &[(144, &[2, 0]), (-144, &[0, 2])]);
        assert_eq!(hessian_det(&f), expect);
    }

    #[test]
    fn analyze_fermat_quartic() {
        let f = poly_from_int_terms(2, &[(1, &[4, 0]), (1, &[0, 4])]);
        let report = monomial_hessian_analyze(&f).unwrap();
        assert!(report.is_monomial);
        assert!(report.is_question1_shape);
        assert_eq!(report.exponents.unwrap().0, alloc::vec![2, 2]);
        assert_eq!(report.alpha.unwrap(), Scalar::from_int(144));
    }

    #[test]
    fn analyze_non_monomial() {
        let f = poly_from_int_terms(2, &[(1, &[4, 0]), (1, &[1, 3])]);
        let report = monomial_hessian_analyze(&f).unwrap();
        assert!(!report.is_monomial);
        assert!(!report.zero_hessian);
    }

    #[test]
    fn rejects_inhomogeneous_and_low_degree() {
        let f = poly_from_int_terms(2, &[(1, &[2, 0]), (1, &[0, 1])]);
        assert!(monomial_hessian_analyze(&f).is_err());
        let q = poly_from_int_terms(2, &[(1, &[1, 1])]);
        assert!(monomial_hessian_analyze(&q).is_err());
    }
}
