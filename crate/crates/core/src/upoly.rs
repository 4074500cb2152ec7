//! Dense univariate polynomials over Q, shared internal helpers.
//!
//! Coefficient vectors are indexed by power and kept trimmed (no zero
//! leading coefficient). The zero polynomial is the empty vector.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::rational::Rational;

pub(crate) fn trim(p: &mut Vec<Rational>) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

/// Quotient and remainder by a nonzero divisor.
pub(crate) fn divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem: Vec<Rational> = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b.last().expect("nonzero divisor");
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() > db {
        let k = rem.len() - 1;
        let factor = rem[k].clone() / lead;
        quot[k - db] = factor.clone();
        for (i, bc) in b.iter().enumerate() {
            let v = rem[k - db + i].clone() - &factor * bc;
            rem[k - db + i] = v;
        }
        trim(&mut rem);
        debug_assert!(rem.len() <= k);
    }
    (quot, rem)
}

pub(crate) fn rem(a: &[Rational], m: &[Rational]) -> Vec<Rational> {
    divmod(a, m).1
}

/// Monic gcd.
pub(crate) fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r0: Vec<Rational> = a.to_vec();
    let mut r1: Vec<Rational> = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        let r2 = rem(&r0, &r1);
        r0 = core::mem::replace(&mut r1, r2);
    }
    if let Some(lead) = r0.last().cloned() {
        let inv = Rational::one() / lead;
        for c in r0.iter_mut() {
            *c = &*c * &inv;
        }
    }
    r0
}

/// Extended Euclid: (g, u, v) with u*a + v*b = g (g not normalized).
pub(crate) fn xgcd(
    a: &[Rational],
    b: &[Rational],
) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    let mut r0: Vec<Rational> = a.to_vec();
    let mut r1: Vec<Rational> = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0 = vec![Rational::one()];
    let mut s1: Vec<Rational> = Vec::new();
    let mut t0: Vec<Rational> = Vec::new();
    let mut t1 = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r2) = divmod(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = core::mem::replace(&mut r1, r2);
        s0 = core::mem::replace(&mut s1, s2);
        t0 = core::mem::replace(&mut t1, t2);
    }
    (r0, s0, t0)
}

pub(crate) fn derivative(p: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rational::from_integer(i.into()))
        .collect();
    trim(&mut out);
    out
}

/// Exact power.
pub(crate) fn pow(p: &[Rational], e: u32) -> Vec<Rational> {
    let mut acc = vec![Rational::one()];
    for _ in 0..e {
        acc = mul(&acc, p);
    }
    acc
}
