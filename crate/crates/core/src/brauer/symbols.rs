//! Hilbert symbols over Q and the quaternion classes they cut out.
//!
//! At an odd prime p with a = p^α·u, b = p^β·v (u, v units),
//!   (a, b)_p = (−1)^{αβ·ε(p)} · (u|p)^β · (v|p)^α,
//! at p = 2 the exponent is ε(u)ε(v) + α·ω(v) + β·ω(u) with
//! ε(x) = (x−1)/2 and ω(x) = (x²−1)/8 mod 2, and at the real place the
//! symbol is −1 iff both arguments are negative. The p = 2 formula is
//! cross-checked against a brute-force solvability oracle in the test
//! suite rather than trusted on faith.

use super::primes::{legendre, odd_prime_divisors, odd_unit_mod8, valuation};
use super::{BrauerClassQ, Place};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Poly, Ring};
use crate::rational::{ratio, Rational};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

/// A quaternion algebra (a, b) with a, b nonzero rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionPair {
    a: Rational,
    b: Rational,
}

impl QuaternionPair {
    pub fn new(a: Rational, b: Rational) -> Result<QuaternionPair> {
        if a.is_zero() {
            return Err(Error::ZeroArgument("quaternion a"));
        }
        if b.is_zero() {
            return Err(Error::ZeroArgument("quaternion b"));
        }
        Ok(QuaternionPair { a, b })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }
}

/// (p-adic valuation, unit part as (numer', denom')) of a nonzero
/// rational.
fn split_at(x: &Rational, p: &BigUint) -> (i64, BigInt, BigInt) {
    let vn = valuation(x.numer(), p) as i64;
    let vd = valuation(x.denom(), p) as i64;
    let pb = BigInt::from(p.clone());
    let mut num = x.numer().clone();
    for _ in 0..vn {
        num /= &pb;
    }
    let mut den = x.denom().clone();
    for _ in 0..vd {
        den /= &pb;
    }
    (vn - vd, num, den)
}

/// Legendre symbol of the p-adic unit r/s as (r·s | p).
fn legendre_of_unit(num: &BigInt, den: &BigInt, p: &BigUint) -> i32 {
    legendre(&(num * den), p)
}

fn eps_mod2(res8: u8) -> u32 {
    // (x − 1)/2 mod 2 for odd x, read off x mod 8
    match res8 % 4 {
        1 => 0,
        3 => 1,
        _ => unreachable!("even residue for a 2-adic unit"),
    }
}

fn omega_mod2(res8: u8) -> u32 {
    // (x² − 1)/8 mod 2 for odd x
    match res8 {
        1 | 7 => 0,
        3 | 5 => 1,
        _ => unreachable!("even residue for a 2-adic unit"),
    }
}

/// The local Hilbert symbol (a, b)_v ∈ {+1, −1}.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: &Place) -> Result<i32> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument("hilbert_symbol"));
    }
    match v {
        Place::Infinity => Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 }),
        Place::Finite(p) if *p == BigUint::from(2u32) => {
            let (alpha, un, ud) = split_at(a, p);
            let (beta, vn, vd) = split_at(b, p);
            let u8r = odd_unit_mod8(&un, &ud);
            let v8r = odd_unit_mod8(&vn, &vd);
            let exponent = eps_mod2(u8r) * eps_mod2(v8r)
                + (alpha.rem_euclid(2) as u32) * omega_mod2(v8r)
                + (beta.rem_euclid(2) as u32) * omega_mod2(u8r);
            Ok(if exponent.is_multiple_of(2) { 1 } else { -1 })
        }
        Place::Finite(p) => {
            let (alpha, un, ud) = split_at(a, p);
            let (beta, vn, vd) = split_at(b, p);
            let eps_p = ((p - BigUint::from(1u32)) / BigUint::from(2u32)).bit(0) as u32; // (p−1)/2 mod 2
            let mut sign = 1i32;
            if (alpha * beta).rem_euclid(2) == 1 && eps_p == 1 {
                sign = -sign;
            }
            if beta.rem_euclid(2) == 1 && legendre_of_unit(&un, &ud, p) == -1 {
                sign = -sign;
            }
            if alpha.rem_euclid(2) == 1 && legendre_of_unit(&vn, &vd, p) == -1 {
                sign = -sign;
            }
            Ok(sign)
        }
    }
}

/// Places where (a, b) can ramify: ∞, 2, and the odd primes dividing
/// either numerator or denominator.
pub fn relevant_places(a: &Rational, b: &Rational) -> Result<Vec<Place>> {
    let mut odd: BTreeSet<BigUint> = BTreeSet::new();
    for x in [a, b] {
        for part in [x.numer(), x.denom()] {
            for p in odd_prime_divisors(part)? {
                odd.insert(p);
            }
        }
    }
    let mut places = vec![Place::Finite(BigUint::from(2u32))];
    places.extend(odd.into_iter().map(Place::Finite));
    places.push(Place::Infinity);
    Ok(places)
}

/// The Brauer class of the quaternion algebra (a, b): invariant 1/2 at
/// each place with symbol −1. A reciprocity failure here would mean the
/// symbol itself is wrong, and is surfaced as an error.
pub fn quaternion_class(q: &QuaternionPair) -> Result<BrauerClassQ> {
    let mut pairs = Vec::new();
    for v in relevant_places(&q.a, &q.b)? {
        if hilbert_symbol(&q.a, &q.b, &v)? == -1 {
            pairs.push((v, ratio(1, 2)));
        }
    }
    BrauerClassQ::from_invariants(pairs)
}

/// The conic a·x² + b·y² − z² in P², coefficients cleared to primitive
/// integers with positive leading coefficient.
pub fn conic_polynomial(q: &QuaternionPair, ring: &Ring) -> Poly {
    assert_eq!(ring.num_vars(), 3);
    let x = Poly::var(ring, 0);
    let y = Poly::var(ring, 1);
    let z = Poly::var(ring, 2);
    let conic = &(&(&x * &x).scale(&q.a) + &(&y * &y).scale(&q.b)) - &(&z * &z);
    conic.normalized()
}

/// The conic as an ideal in P² with coordinates (x, y, z).
pub fn conic_model(q: &QuaternionPair) -> Result<Ideal> {
    let ring = Ring::new(["x", "y", "z"]);
    let conic = conic_polynomial(q, &ring);
    Ideal::new(&ring, vec![conic])
}
