//! Jacobian ideals, exact smoothness via a graded rank test, and
//! standard-monomial counts for monomial ideals.
//!
//! Smoothness is decided in one degree: for homogeneous g of degree d in n
//! variables, the quotient by the partials of a smooth g is artinian
//! Gorenstein with top degree n(d-2), so its degree D = n(d-2)+1 piece
//! vanishes; a non-smooth g keeps a positive-dimensional quotient, which is
//! nonzero in every degree. So g is smooth exactly when the multiples of the
//! partials span the full degree-D coefficient space.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

use crate::error::Error;
use crate::linalg::RatMatrix;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::MultiPoly;
use crate::rational::Rational;

/// A monomial ideal held by its minimal generators (mutually non-dividing),
/// sorted in the global monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal, minimalizing the generating set.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        let mut minimal: Vec<Monomial> = Vec::new();
        let mut sorted = gens;
        sorted.sort(); // ascending degree helps: divisors come first
        for g in sorted {
            debug_assert_eq!(g.nvars(), nvars);
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        minimal.dedup();
        MonomialIdeal {
            nvars,
            gens: minimal,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Whether the monomial lies in the ideal.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// For each variable, the least pure-power exponent among the
    /// generators; `None` if some variable has no pure power (then the
    /// quotient is infinite-dimensional).
    fn pure_power_caps(&self) -> Option<Vec<u32>> {
        let mut caps = vec![None; self.nvars];
        for g in &self.gens {
            let support: Vec<usize> = (0..self.nvars).filter(|&i| g.0[i] > 0).collect();
            if let [i] = support[..] {
                let e = g.0[i];
                caps[i] = Some(caps[i].map_or(e, |c: u32| c.min(e)));
            }
        }
        caps.into_iter().collect()
    }

    pub fn is_artinian(&self) -> bool {
        self.pure_power_caps().is_some()
    }
}

/// The partial derivatives of g (the generators of its Jacobian ideal).
pub fn jacobian_ideal(g: &MultiPoly) -> Result<Vec<MultiPoly>, Error> {
    if !g.is_homogeneous() {
        return Err(Error::DomainError("expected a homogeneous form".into()));
    }
    (0..g.nvars()).map(|i| g.partial_derivative(i)).collect()
}

/// Number of monomials outside the ideal; `None` when infinite. Computed by
/// enumeration inside the bounding box of minimal pure powers, which covers
/// every artinian case at this crate's scale.
pub fn standard_monomial_count(ideal: &MonomialIdeal) -> Option<u64> {
    let caps = ideal.pure_power_caps()?;
    let mut count = 0u64;
    let mut exps = vec![0u32; ideal.nvars()];
    loop {
        if !ideal.contains(&Monomial(exps.clone())) {
            count += 1;
        }
        // odometer over the box [0, cap_i)
        let mut pos = ideal.nvars();
        loop {
            if pos == 0 {
                return Some(count);
            }
            pos -= 1;
            exps[pos] += 1;
            if exps[pos] < caps[pos] {
                break;
            }
            exps[pos] = 0;
        }
    }
}

/// True iff some generator divides the monomial.
pub fn membership_monomial(ideal: &MonomialIdeal, m: &Monomial) -> bool {
    ideal.contains(m)
}

/// The apolarity annihilator of the monomial y^b: (x_1^(b_1+1), ..., x_n^(b_n+1)).
pub fn macaulay_annihilator_of_monomial(b: &Monomial) -> MonomialIdeal {
    let n = b.nvars();
    let gens = (0..n)
        .map(|i| {
            let mut e = vec![0u32; n];
            e[i] = b.0[i] + 1;
            Monomial(e)
        })
        .collect();
    MonomialIdeal::new(n, gens)
}

/// Outcome of the graded smoothness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothnessReport {
    pub is_smooth: bool,
    /// The tested degree D = n(d-2)+1.
    pub witness_degree: u32,
    /// Attained rank of the multiplication matrix into degree D.
    pub rank: usize,
    /// Dimension of the full degree-D coefficient space.
    pub full_rank_needed: usize,
}

/// Exact smoothness test for homogeneous g of degree d >= 2.
pub fn is_smooth(g: &MultiPoly) -> Result<SmoothnessReport, Error> {
    let d = g
        .degree()
        .ok_or_else(|| Error::DomainError("zero polynomial has no degree".into()))?;
    if !g.is_homogeneous() || d < 2 {
        return Err(Error::DomainError(
            "expected a homogeneous form of degree >= 2".into(),
        ));
    }
    let n = g.nvars();
    let witness_degree = (n as u32) * (d - 2) + 1;
    let target = monomials_of_degree(n, witness_degree);
    let full = target.len();
    let partials = jacobian_ideal(g)?;

    // When every partial is a monomial the columns below have a single
    // nonzero entry each, so the rank is just the number of degree-D
    // monomials divisible by some generator.
    let monomial_gens: Option<Vec<Monomial>> = partials
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.monomial_form().map(|(_, m)| m))
        .collect();
    let rank = match monomial_gens {
        Some(gens) => {
            let ideal = MonomialIdeal::new(n, gens);
            target.iter().filter(|m| ideal.contains(m)).count()
        }
        None => {
            let shift = monomials_of_degree(n, witness_degree - (d - 1));
            let index: alloc::collections::BTreeMap<&Monomial, usize> =
                target.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut cols: Vec<Vec<Rational>> = Vec::new();
            for p in &partials {
                if p.is_zero() {
                    continue;
                }
                for m in &shift {
                    let mut col = vec![Rational::zero(); full];
                    for (mono, c) in p.terms_desc() {
                        let r = c.as_rational().ok_or(Error::ScalarMismatch)?;
                        col[index[&mono.mul(m)]] = r;
                    }
                    cols.push(col);
                }
            }
            // transpose into a rows x cols matrix
            let mut mat = RatMatrix::zero(full, cols.len());
            for (j, col) in cols.iter().enumerate() {
                for (i, v) in col.iter().enumerate() {
                    if !v.is_zero() {
                        mat.set(i, j, v.clone());
                    }
                }
            }
            mat.rank()
        }
    };
    Ok(SmoothnessReport {
        is_smooth: rank == full,
        witness_degree,
        rank,
        full_rank_needed: full,
    })
}

/// The arithmetic-geometric balance check: if sum(b_i + 1) = n(d-1) and
/// prod(b_i + 1) = (d-1)^n both hold, then every b_i must equal d-2.
/// Returns whether this implication instance holds for the given b.
pub fn verify_propmons_balance(n: usize, d: u32, b: &[u32]) -> bool {
    assert_eq!(b.len(), n);
    let sum: u64 = b.iter().map(|&x| x as u64 + 1).sum();
    let prod: u128 = b.iter().map(|&x| x as u128 + 1).product();
    let sum_target = (n as u64) * (d as u64 - 1);
    let prod_target = ((d - 1) as u128).pow(n as u32);
    if sum == sum_target && prod == prod_target {
        b.iter().all(|&x| x == d - 2)
    } else {
        true // constraint set unsatisfied; the implication holds vacuously
    }
}

/// All exponent vectors b >= 0 with sum(b_i + 1) = n(d-1) and
/// prod(b_i + 1) = (d-1)^n, by exhaustive enumeration. Equality in the
/// arithmetic-geometric mean inequality makes (d-2, ..., d-2) the only one.
pub fn amgm_equality_scan(n: usize, d: u32) -> Vec<Vec<u32>> {
    assert!(d >= 2);
    let total = (n as u32) * (d - 2);
    let prod_target = ((d - 1) as u128).pow(n as u32);
    monomials_of_degree(n, total)
        .into_iter()
        .filter(|m| m.0.iter().map(|&x| x as u128 + 1).product::<u128>() == prod_target)
        .map(|m| m.0)
        .collect()
}
