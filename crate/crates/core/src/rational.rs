//! Arbitrary-precision rational scalars.
//!
//! `Rational` is `num_rational::BigRational`: always reduced to lowest terms
//! with positive denominator, so equality is structural and display is
//! canonical (`p/q`, or `p` when the denominator is one). All scalar
//! constants of the crate are carried by this type unless a root of unity is
//! required.

use alloc::string::ToString;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational p/q. Panics if q = 0.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses the canonical serialization `p/q` or `p` (denominator omitted when
/// it is one). Signs are accepted on the numerator only.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = |msg: &str| Error::ParseError {
        position: 0,
        message: msg.to_string(),
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let num: BigInt = p.trim().parse().map_err(|_| bad("invalid numerator"))?;
            let den: BigInt = q.trim().parse().map_err(|_| bad("invalid denominator"))?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().map_err(|_| bad("invalid integer"))?;
            Ok(Rational::from_integer(num))
        }
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Sign as -1, 0 or 1.
pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn display_matches_wire_format() {
        assert_eq!(rat(3, 2).to_string(), "3/2");
        assert_eq!(rat(-4, 2).to_string(), "-2");
        assert_eq!(rat_int(0).to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["3/2", "-7", "0", "10/3", "-5/9"] {
            assert_eq!(parse_rational(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(9, 6), BigInt::from(84));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }
}
