//! The desk-scale equivalence pipeline for the sum-of-powers normal form,
//! and a bounded explorer for forms with monomial Hessians.
//!
//! The pipeline follows the three classical steps: factor the Hessian
//! determinant as alpha * prod h_i^(d-2) over linear forms, solve the exact
//! linear system g = sum alpha_i h_i^d, and emit the certificate pairs
//! (alpha_i, h_i). Factorization over the complex numbers is implemented
//! only as far as desk inputs need: monomial Hessians, binary forms with
//! rational roots, and caller-supplied candidate forms. Anything beyond that
//! is answered with an honest Inconclusive rather than a guess.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{Signed, Zero};

use crate::binary::BinaryForm;
use crate::error::Error;
use crate::hessian::{hessian_det, MonomialHessianReport};
use crate::jacobian::is_smooth;
use crate::linalg::RatMatrix;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::upoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KayalStatus {
    Equivalent,
    Rejected,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KayalStage {
    /// det(Hess(g)) vanished identically.
    HessianZero,
    /// The Hessian provably does not factor as alpha * prod h_i^(d-2) with
    /// independent linear forms.
    FactorizationFailed,
    /// The factorization could not be completed over Q (irrational roots or
    /// no applicable strategy).
    FactorizationIncomplete,
    /// The forms were found but g is not a combination of their d-th powers.
    LinearSolveFailed,
    Success,
}

/// Outcome of the equivalence check. On `Success`, the certificate satisfies
/// g = sum alpha_i h_i^d exactly with linearly independent h_i; d-th roots
/// of the alpha_i are deliberately not extracted, so the pair list is the
/// exact rational certificate.
#[derive(Debug, Clone)]
pub struct KayalResult {
    pub status: KayalStatus,
    pub stage: KayalStage,
    pub forms: Vec<(Rational, MultiPoly)>,
    pub note: String,
}

impl KayalResult {
    fn rejected(stage: KayalStage, note: &str) -> Self {
        KayalResult {
            status: KayalStatus::Rejected,
            stage,
            forms: Vec::new(),
            note: note.to_string(),
        }
    }

    fn inconclusive(note: &str) -> Self {
        KayalResult {
            status: KayalStatus::Inconclusive,
            stage: KayalStage::FactorizationIncomplete,
            forms: Vec::new(),
            note: note.to_string(),
        }
    }
}

/// Checks whether g is a linear change of variables away from a sum of n
/// independent d-th powers, producing an exact certificate when it is.
pub fn kayal_check(
    g: &MultiPoly,
    candidates: Option<&[MultiPoly]>,
) -> Result<KayalResult, Error> {
    let d = g
        .degree()
        .ok_or_else(|| Error::DomainError("zero polynomial has no degree".into()))?;
    if !g.is_homogeneous() || d < 3 {
        return Err(Error::DomainError(
            "expected a homogeneous form of degree >= 3".into(),
        ));
    }
    let n = g.nvars();
    let h = hessian_det(g);
    if h.is_zero() {
        return Ok(KayalResult::rejected(
            KayalStage::HessianZero,
            "Hessian determinant vanishes identically",
        ));
    }

    // factorization stage
    let forms = if let Some((alpha, exps)) = h.monomial_form() {
        let _ = alpha;
        if exps.0.iter().all(|&e| e == d - 2) {
            (0..n)
                .map(|i| MultiPoly::variable(n, i).expect("index in range"))
                .collect::<Vec<_>>()
        } else {
            return Ok(KayalResult::rejected(
                KayalStage::FactorizationFailed,
                "monomial Hessian exponents are not uniformly d-2",
            ));
        }
    } else if n == 2 {
        match factor_binary_hessian(&h, d)? {
            BinaryFactorization::Forms(fs) => fs,
            BinaryFactorization::Impossible(note) => {
                return Ok(KayalResult::rejected(KayalStage::FactorizationFailed, &note))
            }
            BinaryFactorization::Irrational(note) => {
                return Ok(KayalResult::inconclusive(&note))
            }
        }
    } else if let Some(cands) = candidates {
        match verify_candidate_forms(&h, d, n, cands)? {
            Some(fs) => fs,
            None => {
                return Ok(KayalResult::inconclusive(
                    "supplied candidate forms do not reproduce the Hessian",
                ))
            }
        }
    } else {
        return Ok(KayalResult::inconclusive(
            "no factorization strategy applies (supply candidate forms)",
        ));
    };

    // reconstruction stage: solve g = sum alpha_i h_i^d
    let coeff_rows: Vec<Vec<Rational>> = forms
        .iter()
        .map(|f| {
            (0..n)
                .map(|j| {
                    f.coefficient_of(&Monomial::var(n, j))
                        .as_rational()
                        .expect("rational forms")
                })
                .collect()
        })
        .collect();
    if RatMatrix::from_rows(coeff_rows).rank() < n {
        return Ok(KayalResult::rejected(
            KayalStage::LinearSolveFailed,
            "factor forms are linearly dependent",
        ));
    }
    let basis = monomials_of_degree(n, d);
    let mut system = RatMatrix::zero(basis.len(), n);
    for (j, f) in forms.iter().enumerate() {
        let powered = f.pow(d);
        for (i, c) in powered.rational_coeff_vector(&basis)?.into_iter().enumerate() {
            system.set(i, j, c);
        }
    }
    let rhs = g.rational_coeff_vector(&basis)?;
    let Some(alphas) = system.solve(&rhs) else {
        return Ok(KayalResult::rejected(
            KayalStage::LinearSolveFailed,
            "no exact combination of d-th powers reproduces g",
        ));
    };
    if alphas.iter().any(|a| a.is_zero()) {
        return Ok(KayalResult::rejected(
            KayalStage::LinearSolveFailed,
            "a power receives coefficient zero",
        ));
    }
    // the certificate must reproduce g exactly
    let mut recon = MultiPoly::zero(n);
    for (a, f) in alphas.iter().zip(&forms) {
        recon = recon.add(&f.pow(d).scale_rat(a))?;
    }
    debug_assert_eq!(&recon, g, "solver returned a non-solution");
    Ok(KayalResult {
        status: KayalStatus::Equivalent,
        stage: KayalStage::Success,
        forms: alphas.into_iter().zip(forms).collect(),
        note: String::new(),
    })
}

enum BinaryFactorization {
    Forms(Vec<MultiPoly>),
    Impossible(String),
    Irrational(String),
}

/// Decides whether a binary Hessian h of degree 2(d-2) factors as
/// alpha * l1^(d-2) l2^(d-2) with independent linear forms, structurally:
/// coordinate multiplicities must be 0 or d-2, and the remaining part must
/// be a perfect (d-2)-th power of its squarefree part. Rational roots give
/// forms; an irreducible quadratic squarefree part leaves the answer over Q
/// undecided.
fn factor_binary_hessian(h: &MultiPoly, d: u32) -> Result<BinaryFactorization, Error> {
    let full = 2 * (d - 2) as usize;
    let hb = BinaryForm::from_poly(h)?;
    debug_assert_eq!(hb.degree() as usize, full);
    let want = (d - 2) as usize;
    let coeffs = hb.coeffs();
    let min_idx = coeffs.iter().position(|c| !c.is_zero()).expect("nonzero");
    let max_idx = coeffs.iter().rposition(|c| !c.is_zero()).expect("nonzero");
    let mult_x1 = min_idx;
    let mult_x2 = full - max_idx;
    for (mult, name) in [(mult_x1, "x1"), (mult_x2, "x2")] {
        if mult != 0 && mult != want {
            return Ok(BinaryFactorization::Impossible(alloc::format!(
                "root multiplicity {mult} at {name} is neither 0 nor d-2"
            )));
        }
    }
    let mut forms: Vec<MultiPoly> = Vec::new();
    if mult_x1 == want {
        forms.push(MultiPoly::variable(2, 0)?);
    }
    if mult_x2 == want {
        forms.push(MultiPoly::variable(2, 1)?);
    }
    // dehomogenized middle part in u = x1/x2, nonzero ends
    let middle: Vec<Rational> = coeffs[min_idx..=max_idx].to_vec();
    let deg_middle = max_idx - min_idx;
    if forms.len() == 2 {
        debug_assert_eq!(deg_middle, 0);
        return Ok(BinaryFactorization::Forms(forms));
    }
    debug_assert_eq!(deg_middle, (2 - forms.len()) * want);
    // the remaining factor must be sf^(d-2) for its squarefree part sf
    let sf = {
        let der = upoly::derivative(&middle);
        let g = upoly::gcd(&middle, &der);
        let (q, r) = upoly::divmod(&middle, &g);
        debug_assert!(r.is_empty());
        q
    };
    let expected_sf_deg = 2 - forms.len();
    if sf.len() != expected_sf_deg + 1 {
        return Ok(BinaryFactorization::Impossible(
            "distinct-root pattern cannot give two forms of equal multiplicity".into(),
        ));
    }
    // proportionality: middle == lead * sf^(d-2) up to the leading scalar
    let sf_pow = upoly::pow(&sf, (d - 2) as u32);
    let scale = middle.last().expect("nonzero") / sf_pow.last().expect("nonzero");
    let scaled: Vec<Rational> = sf_pow.iter().map(|c| c * &scale).collect();
    if scaled != middle {
        return Ok(BinaryFactorization::Impossible(
            "remaining factor is not a perfect (d-2)-th power".into(),
        ));
    }
    match expected_sf_deg {
        1 => {
            // single rational root r = -sf[0]/sf[1]; form x1 - r x2
            let r = -(sf[0].clone() / sf[1].clone());
            forms.push(linear_form_from_root(&r));
        }
        2 => {
            // two roots of a rational quadratic: rational iff the
            // discriminant is a perfect square in Q
            let (c, b, a) = (sf[0].clone(), sf[1].clone(), sf[2].clone());
            let disc = &b * &b - Rational::from_integer(4.into()) * &a * &c;
            match exact_sqrt(&disc) {
                Some(root) => {
                    let two_a = Rational::from_integer(2.into()) * &a;
                    let r1 = (-&b + &root) / &two_a;
                    let r2 = (-&b - &root) / &two_a;
                    debug_assert_ne!(r1, r2, "squarefree part has distinct roots");
                    forms.push(linear_form_from_root(&r1));
                    forms.push(linear_form_from_root(&r2));
                }
                None => {
                    return Ok(BinaryFactorization::Irrational(
                        "the two remaining roots are conjugate irrationals".into(),
                    ))
                }
            }
        }
        _ => unreachable!("forms.len() < 2 here"),
    }
    Ok(BinaryFactorization::Forms(forms))
}

/// x1 - r x2, the linear form vanishing at the projective root (r : 1).
fn linear_form_from_root(r: &Rational) -> MultiPoly {
    MultiPoly::from_terms(
        2,
        [
            (Monomial(vec![1, 0]), Scalar::from_int(1)),
            (Monomial(vec![0, 1]), Scalar::Rat(-r.clone())),
        ],
    )
    .expect("well-formed")
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().sqrt();
    let den = r.denom().sqrt();
    if &(&num * &num) == r.numer() && &(&den * &den) == r.denom() {
        Some(Rational::new(num, den))
    } else {
        None
    }
}

/// Checks h == alpha * prod cand_i^(d-2) for supplied linear candidates.
fn verify_candidate_forms(
    h: &MultiPoly,
    d: u32,
    n: usize,
    cands: &[MultiPoly],
) -> Result<Option<Vec<MultiPoly>>, Error> {
    if cands.len() != n {
        return Err(Error::DomainError(alloc::format!(
            "expected {n} candidate forms, got {}",
            cands.len()
        )));
    }
    let mut product = MultiPoly::one(n);
    for c in cands {
        if c.nvars() != n || c.degree() != Some(1) || !c.is_homogeneous() {
            return Err(Error::DomainError(
                "candidates must be nonzero linear forms in the same variables".into(),
            ));
        }
        product = product.mul(&c.pow(d - 2))?;
    }
    // alpha from the leading terms, then exact equality
    let (hm, hc) = {
        let (m, c) = h.terms_desc().next().expect("nonzero");
        (m.clone(), c.as_rational().ok_or(Error::ScalarMismatch)?)
    };
    let pc = product.coefficient_of(&hm).as_rational().ok_or(Error::ScalarMismatch)?;
    if pc.is_zero() {
        return Ok(None);
    }
    let alpha = hc / pc;
    if product.scale_rat(&alpha) == *h {
        Ok(Some(cands.to_vec()))
    } else {
        Ok(None)
    }
}

/// One explorer find: a polynomial whose Hessian determinant is a nonzero
/// monomial, annotated with its smoothness.
#[derive(Debug, Clone)]
pub struct ExplorationHit {
    pub poly: MultiPoly,
    pub hessian_report: MonomialHessianReport,
    pub smooth: bool,
}

/// Enumerates forms of degree d in n variables with coefficients from
/// `coeff_set` over all monomial supports of size up to `support_budget`,
/// returning those with monomial nonzero Hessian, in deterministic order.
pub fn explore_monomial_hessian(
    n: usize,
    d: u32,
    coeff_set: &[Rational],
    support_budget: usize,
) -> Result<Vec<ExplorationHit>, Error> {
    const BUDGET: u128 = 10_000_000;
    if d < 3 {
        return Err(Error::DomainError("exploration needs degree >= 3".into()));
    }
    let basis = monomials_of_degree(n, d);
    let m = basis.len();
    let values: Vec<Rational> = coeff_set.iter().filter(|c| !c.is_zero()).cloned().collect();
    if values.is_empty() {
        return Ok(Vec::new());
    }
    let max_support = support_budget.min(m);
    // candidate count: sum_s C(m, s) |values|^s, abandoned early once it
    // can no longer fit the budget
    let mut total: u128 = 0;
    let mut choose: u128 = 1;
    for s in 1..=max_support {
        choose = match choose
            .checked_mul((m - s + 1) as u128)
            .map(|c| c / s as u128)
        {
            Some(c) => c,
            None => {
                total = u128::MAX;
                break;
            }
        };
        let assignments = (values.len() as u128).saturating_pow(s as u32);
        total = total.saturating_add(choose.saturating_mul(assignments));
        if total > BUDGET {
            break;
        }
    }
    if total > BUDGET {
        return Err(Error::BudgetExceeded {
            limit: BUDGET as u64,
            requested: u64::try_from(total).unwrap_or(u64::MAX),
        });
    }
    let mut hits = Vec::new();
    let mut support: Vec<usize> = Vec::new();
    explore_supports(
        n,
        d,
        &basis,
        &values,
        max_support,
        0,
        &mut support,
        &mut hits,
    )?;
    Ok(hits)
}

#[allow(clippy::too_many_arguments)]
fn explore_supports(
    n: usize,
    d: u32,
    basis: &[Monomial],
    values: &[Rational],
    max_support: usize,
    start: usize,
    support: &mut Vec<usize>,
    hits: &mut Vec<ExplorationHit>,
) -> Result<(), Error> {
    if !support.is_empty() {
        // iterate all coefficient assignments for this support
        let mut idx = vec![0usize; support.len()];
        loop {
            let g = MultiPoly::from_terms(
                n,
                support
                    .iter()
                    .zip(&idx)
                    .map(|(&s, &i)| (basis[s].clone(), Scalar::Rat(values[i].clone()))),
            )?;
            let report = crate::hessian::monomial_hessian_analyze(&g)?;
            if report.is_monomial {
                let smooth = is_smooth(&g)?.is_smooth;
                hits.push(ExplorationHit {
                    poly: g,
                    hessian_report: report,
                    smooth,
                });
            }
            let mut pos = idx.len();
            loop {
                if pos == 0 {
                    // odometer done
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < values.len() {
                    break;
                }
                idx[pos] = 0;
            }
            if idx.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    if support.len() == max_support {
        return Ok(());
    }
    for next in start..basis.len() {
        support.push(next);
        explore_supports(n, d, basis, values, max_support, next + 1, support, hits)?;
        support.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_from_int_terms;
    use crate::rational::rat_int;

    #[test]
    fn equivalent_binary_cubic() {
        // 2x1^3 + 6x1x2^2 = (x1+x2)^3 + (x1-x2)^3
        let g = poly_from_int_terms(2, &[(2, &[3, 0]), (6, &[1, 2])]);
        let r = kayal_check(&g, None).unwrap();
        assert_eq!(r.status, KayalStatus::Equivalent);
        assert_eq!(r.stage, KayalStage::Success);
        assert_eq!(r.forms.len(), 2);
        let mut recon = MultiPoly::zero(2);
        for (a, f) in &r.forms {
            recon = recon.add(&f.pow(3).scale_rat(a)).unwrap();
        }
        assert_eq!(recon, g);
        assert!(r.forms.iter().all(|(a, _)| *a == rat_int(1)));
    }

    #[test]
    fn degenerate_cubic_rejected_at_hessian() {
        let g = poly_from_int_terms(2, &[(1, &[3, 0])]);
        let r = kayal_check(&g, None).unwrap();
        assert_eq!(r.status, KayalStatus::Rejected);
        assert_eq!(r.stage, KayalStage::HessianZero);
    }

    #[test]
    fn block_family_member_fails_the_linear_solve() {
        // (x1x2)^2 + x3^4 passes the Hessian shape stage but is not a
        // combination of three coordinate fourth powers
        let g = poly_from_int_terms(3, &[(1, &[2, 2, 0]), (1, &[0, 0, 4])]);
        let r = kayal_check(&g, None).unwrap();
        assert_eq!(r.status, KayalStatus::Rejected);
        assert_eq!(r.stage, KayalStage::LinearSolveFailed);
    }

    #[test]
    fn fermat_passes_directly() {
        let g = poly_from_int_terms(3, &[(1, &[3, 0, 0]), (1, &[0, 3, 0]), (2, &[0, 0, 3])]);
        let r = kayal_check(&g, None).unwrap();
        assert_eq!(r.status, KayalStatus::Equivalent);
        assert_eq!(r.forms[2].0, rat_int(2));
    }

    #[test]
    fn irrational_split_is_inconclusive() {
        // (x1 + s x2)^3 + (x1 - s x2)^3 with s = sqrt(2): 2x1^3 + 12x1x2^2
        let g = poly_from_int_terms(2, &[(2, &[3, 0]), (12, &[1, 2])]);
        let r = kayal_check(&g, None).unwrap();
        assert_eq!(r.status, KayalStatus::Inconclusive);
        assert_eq!(r.stage, KayalStage::FactorizationIncomplete);
    }

    #[test]
    fn candidates_route() {
        // g = (x1+x2)^3 + (x2+x3)^3 + (x1+x3)^3
        let a = poly_from_int_terms(3, &[(1, &[1, 0, 0]), (1, &[0, 1, 0])]);
        let b = poly_from_int_terms(3, &[(1, &[0, 1, 0]), (1, &[0, 0, 1])]);
        let c = poly_from_int_terms(3, &[(1, &[1, 0, 0]), (1, &[0, 0, 1])]);
        let g = a
            .pow(3)
            .add(&b.pow(3))
            .unwrap()
            .add(&c.pow(3))
            .unwrap();
        let cands = vec![a, b, c];
        let r = kayal_check(&g, Some(&cands)).unwrap();
        assert_eq!(r.status, KayalStatus::Equivalent);
        // without candidates the 3-variable non-monomial case is inconclusive
        let r2 = kayal_check(&g, None).unwrap();
        assert_eq!(r2.status, KayalStatus::Inconclusive);
    }

    #[test]
    fn explorer_small_binary_quartics() {
        let set = [rat_int(-1), rat_int(0), rat_int(1)];
        let hits = explore_monomial_hessian(2, 4, &set, 5).unwrap();
        assert!(!hits.is_empty());
        // every hit has a monomial Hessian by construction
        assert!(hits.iter().all(|h| h.hessian_report.is_monomial));
        // the Fermat-type hits are smooth with central shape
        let fermat = poly_from_int_terms(2, &[(1, &[4, 0]), (1, &[0, 4])]);
        let hit = hits.iter().find(|h| h.poly == fermat).unwrap();
        assert!(hit.smooth && hit.hessian_report.is_question1_shape);
        // the balanced monomial is a singular hit
        let square = poly_from_int_terms(2, &[(1, &[2, 2])]);
        let hit2 = hits.iter().find(|h| h.poly == square).unwrap();
        assert!(!hit2.smooth && hit2.hessian_report.is_question1_shape);
        // no smooth non-power-sum hit
        for h in &hits {
            if h.smooth {
                assert!(h.poly.num_terms() <= 2, "unexpected smooth hit: {}", h.poly);
            }
        }
    }

    #[test]
    fn explorer_budget_and_empty_set() {
        assert!(explore_monomial_hessian(2, 4, &[], 3).unwrap().is_empty());
        assert!(matches!(
            explore_monomial_hessian(4, 8, &[rat_int(1), rat_int(2)], 40),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
