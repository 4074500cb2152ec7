//! The coefficient scalar: a rational or a cyclotomic number.
//!
//! A polynomial carries scalars of a single kind. Rationals promote silently
//! into any cyclotomic order; two distinct cyclotomic orders never mix.

use num_traits::{One, Zero};

use crate::cyclotomic::CycNumber;
use crate::error::Error;
use crate::rational::Rational;

/// Scalar kind tag, uniform across one polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarKind {
    Rational,
    Cyclotomic(u32),
}

impl ScalarKind {
    /// The common kind of two operands, promoting rationals.
    pub fn unify(self, other: ScalarKind) -> Result<ScalarKind, Error> {
        match (self, other) {
            (ScalarKind::Rational, k) | (k, ScalarKind::Rational) => Ok(k),
            (ScalarKind::Cyclotomic(a), ScalarKind::Cyclotomic(b)) if a == b => {
                Ok(ScalarKind::Cyclotomic(a))
            }
            _ => Err(Error::ScalarMismatch),
        }
    }
}

/// An exact scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rat(Rational),
    Cyc(CycNumber),
}

impl Scalar {
    pub fn zero(kind: ScalarKind) -> Self {
        match kind {
            ScalarKind::Rational => Scalar::Rat(Rational::zero()),
            ScalarKind::Cyclotomic(d) => Scalar::Cyc(CycNumber::zero(d)),
        }
    }

    pub fn one(kind: ScalarKind) -> Self {
        match kind {
            ScalarKind::Rational => Scalar::Rat(Rational::one()),
            ScalarKind::Cyclotomic(d) => Scalar::Cyc(CycNumber::one(d)),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(crate::rational::rat_int(n))
    }

    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Rat(_) => ScalarKind::Rational,
            Scalar::Cyc(c) => ScalarKind::Cyclotomic(c.order()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Cyc(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Cyc(c) => c.as_rational().map(|r| r.is_one()).unwrap_or(false),
        }
    }

    /// The rational value, if the scalar lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rat(r) => Some(r.clone()),
            Scalar::Cyc(c) => c.as_rational(),
        }
    }

    /// Promotes into `kind`. Only Rational -> Cyclotomic(d) and identity
    /// promotions exist.
    pub fn promote(&self, kind: ScalarKind) -> Result<Scalar, Error> {
        match (self, kind) {
            (Scalar::Rat(r), ScalarKind::Cyclotomic(d)) => {
                Ok(Scalar::Cyc(CycNumber::from_rational(d, r.clone())))
            }
            (s, k) if s.kind() == k => Ok(s.clone()),
            _ => Err(Error::ScalarMismatch),
        }
    }

    fn binop(
        &self,
        other: &Scalar,
        rat_op: impl Fn(&Rational, &Rational) -> Rational,
        cyc_op: impl Fn(&CycNumber, &CycNumber) -> Result<CycNumber, Error>,
    ) -> Result<Scalar, Error> {
        let kind = self.kind().unify(other.kind())?;
        match kind {
            ScalarKind::Rational => {
                let (Scalar::Rat(a), Scalar::Rat(b)) = (self, other) else {
                    unreachable!()
                };
                Ok(Scalar::Rat(rat_op(a, b)))
            }
            ScalarKind::Cyclotomic(_) => {
                let (Scalar::Cyc(a), Scalar::Cyc(b)) =
                    (self.promote(kind)?, other.promote(kind)?)
                else {
                    unreachable!()
                };
                Ok(Scalar::Cyc(cyc_op(&a, &b)?))
            }
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar, Error> {
        self.binop(other, |a, b| a + b, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar, Error> {
        self.binop(other, |a, b| a - b, |a, b| a.sub(b))
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar, Error> {
        self.binop(other, |a, b| a * b, |a, b| a.mul(b))
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Cyc(c) => Scalar::Cyc(c.neg()),
        }
    }

    pub fn inv(&self) -> Result<Scalar, Error> {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rat(Rational::one() / r))
                }
            }
            Scalar::Cyc(c) => Ok(Scalar::Cyc(c.inv()?)),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, Error> {
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Result<Scalar, Error> {
        match self {
            Scalar::Rat(r) => Ok(Scalar::Rat(num_traits::pow::pow(r.clone(), e as usize))),
            Scalar::Cyc(c) => Ok(Scalar::Cyc(c.pow(e)?)),
        }
    }

    /// Exact equality across kinds, promoting rationals as needed.
    pub fn eq_promoted(&self, other: &Scalar) -> bool {
        match self.kind().unify(other.kind()) {
            Ok(kind) => {
                self.promote(kind).expect("unified") == other.promote(kind).expect("unified")
            }
            Err(_) => false,
        }
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl From<CycNumber> for Scalar {
    fn from(c: CycNumber) -> Self {
        Scalar::Cyc(c)
    }
}
