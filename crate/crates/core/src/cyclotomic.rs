//! Exact arithmetic in the cyclotomic fields Q(zeta_d).
//!
//! An element is a residue in Q[t]/(Phi_d(t)) stored as a dense coefficient
//! vector of length phi(d). The representation of a value is unique, so
//! equality is coefficient-wise. phi(d) is tiny at the scales this crate
//! targets, which keeps the dense representation both simple and fast.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::Rational;

/// Euler's totient, by trial-division factorization.
pub fn euler_phi(d: u32) -> u32 {
    assert!(d >= 1, "phi undefined for 0");
    let mut n = d;
    let mut result = d;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        result = result / n * (n - 1);
    }
    result
}

fn divisors(d: u32) -> Vec<u32> {
    let mut divs: Vec<u32> = (1..=d).filter(|e| d % e == 0).collect();
    divs.sort_unstable();
    divs
}

/// The d-th cyclotomic polynomial Phi_d(t), monic with integer coefficients,
/// as a dense coefficient vector (index = power of t).
///
/// Computed by exact division: Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e.
pub fn cyclotomic_polynomial(d: u32) -> Vec<BigInt> {
    assert!(d >= 1);
    if d == 1 {
        return vec![BigInt::from(-1), BigInt::one()];
    }
    // t^d - 1
    let mut num = vec![BigInt::zero(); d as usize + 1];
    num[0] = BigInt::from(-1);
    num[d as usize] = BigInt::one();
    for e in divisors(d) {
        if e < d {
            num = int_poly_div_exact(&num, &cyclotomic_polynomial(e));
        }
    }
    num
}

/// Exact division of integer polynomials with monic divisor.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k].clone();
        if !c.is_zero() {
            quot[k - dd] = c.clone();
            for (i, dc) in den.iter().enumerate() {
                let v = rem[k - dd + i].clone() - &c * dc;
                rem[k - dd + i] = v;
            }
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
    quot
}

/// An element of Q(zeta_d), the unique reduced residue modulo Phi_d(t).
///
/// `coeffs` always has length phi(d); index i holds the coefficient of
/// zeta^i in the power basis 1, zeta, ..., zeta^(phi(d)-1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycNumber {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CycNumber {
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1);
        CycNumber {
            order,
            coeffs: vec![Rational::zero(); euler_phi(order) as usize],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, r: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = r;
        z
    }

    /// Builds an element from coefficients in the power basis; the vector is
    /// padded or must not exceed phi(order).
    pub fn from_coeffs(order: u32, mut coeffs: Vec<Rational>) -> Result<Self, Error> {
        let phi = euler_phi(order) as usize;
        if coeffs.len() > phi {
            return Err(Error::DomainError(alloc::format!(
                "{} coefficients exceed phi({}) = {}",
                coeffs.len(),
                order,
                phi
            )));
        }
        coeffs.resize(phi, Rational::zero());
        Ok(CycNumber { order, coeffs })
    }

    /// The primitive root zeta_d (the residue class of t).
    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    /// zeta_d^k, reduced.
    pub fn zeta_pow(order: u32, k: u32) -> Self {
        assert!(order >= 1);
        let k = k % order;
        let modulus: Vec<Rational> = cyclotomic_polynomial(order)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let mut tk = vec![Rational::zero(); k as usize + 1];
        tk[k as usize] = Rational::one();
        let rem = crate::upoly::rem(&tk, &modulus);
        let mut z = Self::zero(order);
        for (i, c) in rem.into_iter().enumerate() {
            z.coeffs[i] = c;
        }
        z
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_order(&self, other: &Self) -> Result<(), Error> {
        if self.order != other.order {
            Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycNumber {
            order: self.order,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CycNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_order(other)?;
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.order)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let prod = crate::upoly::mul(&self.coeffs, &other.coeffs);
        let rem = crate::upoly::rem(&prod, &modulus);
        let mut z = Self::zero(self.order);
        for (i, c) in rem.into_iter().enumerate() {
            z.coeffs[i] = c;
        }
        Ok(z)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[t].
    /// Phi_d is irreducible over Q, so every nonzero residue is a unit.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.order)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let (g, u, _) = crate::upoly::xgcd(&self.coeffs, &modulus);
        debug_assert_eq!(g.len(), 1, "gcd with irreducible modulus must be a unit");
        let ginv = Rational::one() / &g[0];
        let scaled: Vec<Rational> = u.iter().map(|c| c * &ginv).collect();
        let rem = crate::upoly::rem(&scaled, &modulus);
        let mut z = Self::zero(self.order);
        for (i, c) in rem.into_iter().enumerate() {
            z.coeffs[i] = c;
        }
        Ok(z)
    }

    pub fn pow(&self, mut e: u32) -> Result<Self, Error> {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }
}
