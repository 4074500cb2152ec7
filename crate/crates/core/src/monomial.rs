//! Exponent vectors and the global monomial order.
//!
//! The whole crate uses one fixed total order on monomials: graded
//! lexicographic with x1 > x2 > ... Every canonical form (display, JSON,
//! matrix bases, golden files) iterates monomials in descending graded-lex
//! order, so structurally equal polynomials serialize identically.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// An exponent vector; entry i is the power of x_{i+1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        debug_assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product of monomials: exponentwise sum.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Whether `self` divides `other` exponentwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// The quotient `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(
                other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
            ))
        } else {
            None
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded lex: compare total degree first, then exponent vectors
    /// lexicographically (so among equal degrees, a higher power of an
    /// earlier variable is greater).
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// All monomials of total degree `d` in `nvars` variables, in descending
/// graded-lex order (x1^d first). This is the canonical basis enumeration
/// for every coefficient-space matrix in the crate.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(Monomial(current.clone()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let m = |v: &[u32]| Monomial(v.to_vec());
        // degree dominates
        assert!(m(&[3, 0]) > m(&[1, 1]));
        // same degree: earlier variable wins
        assert!(m(&[2, 1]) > m(&[1, 2]));
        assert!(m(&[1, 0, 2]) < m(&[1, 1, 1]));
    }

    #[test]
    fn basis_enumeration() {
        let basis = monomials_of_degree(2, 3);
        let exps: Vec<Vec<u32>> = basis.into_iter().map(|m| m.0).collect();
        assert_eq!(
            exps,
            alloc::vec![
                alloc::vec![3, 0],
                alloc::vec![2, 1],
                alloc::vec![1, 2],
                alloc::vec![0, 3]
            ]
        );
        assert_eq!(monomials_of_degree(3, 4).len(), 15); // C(6, 2)
        assert_eq!(monomials_of_degree(4, 6).len(), 84); // C(9, 3)
    }

    #[test]
    fn enumeration_is_sorted_descending() {
        let basis = monomials_of_degree(3, 5);
        for w in basis.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn divisibility() {
        let m = |v: &[u32]| Monomial(v.to_vec());
        assert!(m(&[1, 2]).divides(&m(&[2, 2])));
        assert!(!m(&[3, 0]).divides(&m(&[2, 2])));
        assert_eq!(m(&[1, 1]).quotient_of(&m(&[2, 3])), Some(m(&[1, 2])));
    }
}
