//! Brauer classes over Q as finite vectors of local invariants.
//!
//! A class is the map v ↦ inv_v ∈ Q/Z, nonzero at finitely many places,
//! with inv_∞ ∈ {0, 1/2} and Σ inv_v ≡ 0 (mod 1). Period = lcm of the
//! invariant denominators, and over Q index = period, so Severi-Brauer
//! dimensions read off directly.

mod json;
mod primes;
mod symbols;

pub use primes::is_prime;
pub use symbols::{
    conic_model, conic_polynomial, hilbert_symbol, quaternion_class, QuaternionPair,
};

use crate::error::{Error, Result};
use crate::rational::{fract_mod_one, Rational};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::fmt;

/// A place of Q: a finite prime or the real place.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Finite(BigUint),
    Infinity,
}

impl Place {
    /// Finite place; errors unless p is prime.
    pub fn finite(p: BigUint) -> Result<Place> {
        if primes::is_prime(&p) {
            Ok(Place::Finite(p))
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }

    pub fn finite_u64(p: u64) -> Result<Place> {
        Place::finite(BigUint::from(p))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    /// Parse "inf" or a prime written in decimal.
    pub fn parse(s: &str) -> Result<Place> {
        let s = s.trim();
        if s == "inf" || s == "oo" || s == "infinity" {
            return Ok(Place::Infinity);
        }
        let p: BigUint = s.parse().map_err(|_| Error::Parse(format!("bad place '{s}'")))?;
        Place::finite(p)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

/// Element of Br(Q) given by its nonzero local invariants.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BrauerClassQ {
    invariants: BTreeMap<Place, Rational>,
}

impl BrauerClassQ {
    pub fn zero() -> BrauerClassQ {
        BrauerClassQ::default()
    }

    /// Build from (place, invariant) pairs. Invariants are reduced mod 1
    /// and zeros dropped; the result must satisfy inv_∞ ∈ {0, 1/2} and
    /// the reciprocity constraint Σ inv_v ≡ 0 (mod 1).
    pub fn from_invariants(
        pairs: impl IntoIterator<Item = (Place, Rational)>,
    ) -> Result<BrauerClassQ> {
        let mut invariants: BTreeMap<Place, Rational> = BTreeMap::new();
        for (place, inv) in pairs {
            let inv = fract_mod_one(&inv);
            if inv.is_zero() {
                continue;
            }
            let prev = invariants.insert(place.clone(), inv);
            if prev.is_some() {
                return Err(Error::BadInput(format!("duplicate place {place}")));
            }
        }
        if let Some(inf) = invariants.get(&Place::Infinity) {
            if *inf != crate::rational::ratio(1, 2) {
                return Err(Error::BadInput(format!(
                    "invariant at the real place must be 0 or 1/2, got {inf}"
                )));
            }
        }
        let total: Rational = invariants.values().sum();
        if !fract_mod_one(&total).is_zero() {
            return Err(Error::ReciprocityViolation(format!(
                "local invariants sum to {total}, not an integer"
            )));
        }
        Ok(BrauerClassQ { invariants })
    }

    pub fn is_zero(&self) -> bool {
        self.invariants.is_empty()
    }

    /// Places with nonzero invariant, finite primes ascending, ∞ last.
    pub fn support(&self) -> impl Iterator<Item = &Place> {
        self.invariants.keys()
    }

    pub fn invariants(&self) -> impl Iterator<Item = (&Place, &Rational)> {
        self.invariants.iter()
    }

    pub fn invariant_at(&self, place: &Place) -> Rational {
        self.invariants.get(place).cloned().unwrap_or_else(Rational::zero)
    }

    /// Least n ≥ 1 with n·c = 0: the lcm of the invariant denominators.
    pub fn period(&self) -> BigUint {
        let mut lcm = BigUint::one();
        for inv in self.invariants.values() {
            lcm = lcm.lcm(&inv.denom().to_biguint().expect("positive denominator"));
        }
        lcm
    }

    /// Over Q, index = period (Albert-Brauer-Hasse-Noether).
    pub fn index(&self) -> BigUint {
        self.period()
    }

    /// Dimension of the Severi-Brauer variety: index − 1.
    pub fn sb_dimension(&self) -> BigUint {
        self.index() - BigUint::one()
    }

    pub fn scale(&self, k: i64) -> BrauerClassQ {
        class_combine(self, &BrauerClassQ::zero(), k, 0)
    }

    pub fn add(&self, other: &BrauerClassQ) -> BrauerClassQ {
        class_combine(self, other, 1, 1)
    }
}

impl fmt::Display for BrauerClassQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .invariants
            .iter()
            .map(|(p, inv)| format!("{p}: {}", crate::rational::rational_to_string(inv)))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// k1·c1 + k2·c2, place-wise mod 1. Reciprocity is preserved by
/// linearity, so no error path exists.
pub fn class_combine(c1: &BrauerClassQ, c2: &BrauerClassQ, k1: i64, k2: i64) -> BrauerClassQ {
    let mut invariants: BTreeMap<Place, Rational> = BTreeMap::new();
    let k1 = Rational::from_integer(k1.into());
    let k2 = Rational::from_integer(k2.into());
    for (place, inv) in &c1.invariants {
        let entry = invariants.entry(place.clone()).or_insert_with(Rational::zero);
        *entry += inv * &k1;
    }
    for (place, inv) in &c2.invariants {
        let entry = invariants.entry(place.clone()).or_insert_with(Rational::zero);
        *entry += inv * &k2;
    }
    let invariants: BTreeMap<Place, Rational> = invariants
        .into_iter()
        .map(|(p, v)| (p, fract_mod_one(&v)))
        .filter(|(_, v)| !v.is_zero())
        .collect();
    BrauerClassQ { invariants }
}

const RANDOM_CLASS_ATTEMPTS: u32 = 2000;

/// Deterministically sample a class of exactly the requested period,
/// nonzero at every listed place. Errors when no such class exists
/// (detected by exhausting a bounded retry budget) or on bad arguments.
pub fn random_class(period: u64, support: &[Place], seed: u64) -> Result<BrauerClassQ> {
    if period < 2 {
        return Err(Error::BadInput(format!("period must be ≥ 2, got {period}")));
    }
    let mut places: Vec<Place> = support.to_vec();
    places.sort();
    places.dedup();
    if places.len() < 2 {
        return Err(Error::BadInput(format!(
            "support needs at least 2 distinct places, got {}",
            places.len()
        )));
    }
    let has_inf = places.last().is_some_and(Place::is_infinite);
    if has_inf && !period.is_multiple_of(2) {
        return Err(Error::InfeasibleClass(format!(
            "period {period} is odd but the support includes the real place"
        )));
    }
    // balance reciprocity at the last finite place; sample the rest
    let balance_idx = if has_inf { places.len() - 2 } else { places.len() - 1 };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = BigInt::from(period);
    for _ in 0..RANDOM_CLASS_ATTEMPTS {
        let mut pairs: Vec<(Place, Rational)> = Vec::with_capacity(places.len());
        let mut total = Rational::zero();
        for (i, place) in places.iter().enumerate() {
            if i == balance_idx {
                continue;
            }
            let inv = if place.is_infinite() {
                crate::rational::ratio(1, 2)
            } else {
                let k = rng.gen_range(1..period);
                Rational::new(BigInt::from(k), n.clone())
            };
            total += &inv;
            pairs.push((place.clone(), inv));
        }
        let balance = fract_mod_one(&-total);
        if balance.is_zero() {
            continue;
        }
        pairs.push((places[balance_idx].clone(), balance));
        let class = BrauerClassQ::from_invariants(pairs)?;
        if class.period() == BigUint::from(period)
            && places.iter().all(|p| !class.invariant_at(p).is_zero())
        {
            return Ok(class);
        }
    }
    Err(Error::InfeasibleClass(format!(
        "no class of period {period} on the requested support after {RANDOM_CLASS_ATTEMPTS} draws"
    )))
}
