//! Constructors and verifiers for the explicit families with monomial
//! Hessians: block power-products completed by pure powers, the two named
//! singular examples with non-central monomial Hessians, and the Waring rank
//! of the block family.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::hessian::monomial_hessian_analyze;
use crate::jacobian::is_smooth;
use crate::matrix::PolyMatrix;
use crate::poly::{poly_from_int_terms, MultiPoly};
use crate::rational::Rational;

/// Parameters (n, d, q) of the family g = (x1...xq)^k + x_{q+1}^d + ... + x_n^d
/// with k = d/q. Requires 2 <= q <= n, q | d, and k >= 2 when q = 2 (the
/// excluded (q, k) = (2, 1) case would have degree 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CounterexampleSpec {
    pub n: usize,
    pub d: u32,
    pub q: usize,
}

impl CounterexampleSpec {
    pub fn new(n: usize, d: u32, q: usize) -> Result<Self, Error> {
        if q < 2 || q > n {
            return Err(Error::SpecError(alloc::format!(
                "need 2 <= q <= n, got q = {q}, n = {n}"
            )));
        }
        if d == 0 || d % (q as u32) != 0 {
            return Err(Error::SpecError(alloc::format!("{q} must divide d = {d}")));
        }
        let k = d / q as u32;
        if q == 2 && k < 2 {
            return Err(Error::SpecError(
                "q = 2 requires k >= 2 (degree-2 blocks are excluded)".into(),
            ));
        }
        if d < 3 {
            return Err(Error::SpecError("degree must be at least 3".into()));
        }
        Ok(CounterexampleSpec { n, d, q })
    }

    pub fn k(&self) -> u32 {
        self.d / self.q as u32
    }

    /// All valid specs with n <= max_n and d <= max_d, in lexicographic
    /// (n, d, q) order.
    pub fn grid(max_n: usize, max_d: u32) -> Vec<CounterexampleSpec> {
        let mut out = Vec::new();
        for n in 2..=max_n {
            for d in 3..=max_d {
                for q in 2..=n {
                    if let Ok(spec) = CounterexampleSpec::new(n, d, q) {
                        out.push(spec);
                    }
                }
            }
        }
        out
    }
}

/// g = (x1...xq)^k + x_{q+1}^d + ... + x_n^d, all coefficients 1.
pub fn counterexample_poly(spec: &CounterexampleSpec) -> MultiPoly {
    let n = spec.n;
    let k = spec.k();
    let mut terms: Vec<(i64, Vec<u32>)> = Vec::new();
    let mut block = vec![0u32; n];
    for e in block.iter_mut().take(spec.q) {
        *e = k;
    }
    terms.push((1, block));
    for i in spec.q..n {
        let mut e = vec![0u32; n];
        e[i] = spec.d;
        terms.push((1, e));
    }
    let refs: Vec<(i64, &[u32])> = terms.iter().map(|(c, e)| (*c, e.as_slice())).collect();
    poly_from_int_terms(n, &refs)
}

/// The Hessian constant of the pure block (x1...xq)^k: (1 - qk)(-k)^q.
pub fn block_hessian_constant(q: u32, k: u32) -> Rational {
    assert!(q >= 2 && k >= 1);
    let d = BigInt::from(q) * BigInt::from(k);
    let mut v = BigInt::one() - d;
    let neg_k = -BigInt::from(k);
    for _ in 0..q {
        v *= &neg_k;
    }
    Rational::from_integer(v)
}

/// The q x q coefficient matrix of the block Hessian: -k I + k^2 J (diagonal
/// k(k-1), off-diagonal k^2), as a constant polynomial matrix. Its
/// determinant must reproduce `block_hessian_constant`.
pub fn block_coefficient_matrix(q: u32, k: u32) -> PolyMatrix {
    let ki = k as i64;
    let rows: Vec<Vec<MultiPoly>> = (0..q)
        .map(|i| {
            (0..q)
                .map(|j| {
                    let v = if i == j { ki * (ki - 1) } else { ki * ki };
                    poly_from_int_terms(0, &[(v, &[])])
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(rows).expect("square")
}

/// Result of checking one family member end to end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleRecord {
    pub spec: CounterexampleSpec,
    /// Coefficient of the computed Hessian monomial.
    pub alpha: Rational,
    /// Whether H(g) is a nonzero multiple of (x1...xn)^(d-2) and alpha
    /// matches the block-diagonal closed form (1-d)(-k)^q (d(d-1))^(n-q).
    pub hessian_shape_ok: bool,
    pub singular: bool,
    pub pass: bool,
}

/// Computes H(g) for the family member, checks its shape and coefficient
/// against the block-diagonal closed form, and checks that g is not smooth
/// (hence not equivalent to a sum of n independent d-th powers).
pub fn verify_counterexample(spec: &CounterexampleSpec) -> Result<CounterexampleRecord, Error> {
    let g = counterexample_poly(spec);
    let report = monomial_hessian_analyze(&g)?;
    let computed_alpha = report
        .alpha
        .as_ref()
        .and_then(|a| a.as_rational())
        .unwrap_or_else(|| Rational::from_integer(BigInt::from(0)));
    let expected_alpha = {
        let d = spec.d as i64;
        let mut fermat_block = BigInt::one();
        for _ in spec.q..spec.n {
            fermat_block *= BigInt::from(d * (d - 1));
        }
        block_hessian_constant(spec.q as u32, spec.k()) * Rational::from_integer(fermat_block)
    };
    let hessian_shape_ok = report.is_question1_shape && computed_alpha == expected_alpha;
    let singular = !is_smooth(&g)?.is_smooth;
    Ok(CounterexampleRecord {
        spec: *spec,
        alpha: computed_alpha,
        hessian_shape_ok,
        singular,
        pass: hessian_shape_ok && singular,
    })
}

/// The two named singular examples whose Hessians are monomials away from
/// the central one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RemarkExampleKind {
    /// x1^2 x2^(k-1) - x3^(k+1): a double line against a cuspidal direction.
    TangentCone,
    /// x1(x2^2 + x1 x3 + x4^2 + ... + xn^2): a smooth quadric times a
    /// tangent hyperplane.
    QuadricTangent,
}

/// Returns the example polynomial and its asserted Hessian determinant, for
/// comparison against `hessian_det`.
pub fn remark_example(
    kind: RemarkExampleKind,
    param: u32,
) -> Result<(MultiPoly, MultiPoly), Error> {
    match kind {
        RemarkExampleKind::TangentCone => {
            let k = param;
            if k < 2 {
                return Err(Error::DomainError("tangent-cone example needs k >= 2".into()));
            }
            let f = poly_from_int_terms(
                3,
                &[(1, &[2, k - 1, 0]), (-1, &[0, 0, k + 1])],
            );
            let ki = k as i64;
            let coeff = 2 * ki * ki * (ki + 1) * (ki - 1);
            let expected =
                poly_from_int_terms(3, &[(coeff, &[2, 2 * (k - 2), k - 1])]);
            Ok((f, expected))
        }
        RemarkExampleKind::QuadricTangent => {
            let n = param as usize;
            if n < 3 {
                return Err(Error::DomainError(
                    "quadric-tangent example needs n >= 3".into(),
                ));
            }
            let mut terms: Vec<(i64, Vec<u32>)> = Vec::new();
            let mut e = vec![0u32; n];
            e[0] = 1;
            e[1] = 2;
            terms.push((1, e)); // x1 x2^2
            let mut e = vec![0u32; n];
            e[0] = 2;
            e[2] = 1;
            terms.push((1, e)); // x1^2 x3
            for i in 3..n {
                let mut e = vec![0u32; n];
                e[0] = 1;
                e[i] = 2;
                terms.push((1, e)); // x1 xi^2
            }
            let refs: Vec<(i64, &[u32])> =
                terms.iter().map(|(c, e)| (*c, e.as_slice())).collect();
            let g = poly_from_int_terms(n, &refs);
            let mut he = vec![0u32; n];
            he[0] = n as u32;
            let expected = poly_from_int_terms(n, &[(-(1i64 << n), &he)]);
            Ok((g, expected))
        }
    }
}

/// Complex Waring rank of the block family member: (k+1)^(q-1) + (n-q).
pub fn waring_rank_family(n: usize, q: usize, k: u32) -> u64 {
    assert!(q >= 2 && q <= n && k >= 1);
    (k as u64 + 1).pow(q as u32 - 1) + (n - q) as u64
}
