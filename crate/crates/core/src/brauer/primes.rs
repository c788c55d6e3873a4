//! Primality testing and small-support factorization for place handling.
//!
//! Strong pseudoprime (Miller-Rabin) testing with the fixed base set
//! {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is deterministic below
//! 3.3 · 10²⁴, far beyond anything a Brauer class in scope carries.
//! Factorization is trial division up to 2²⁰ with a primality check on
//! the cofactor; a composite cofactor is reported as an error rather
//! than silently mis-factored.

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const MR_BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const TRIAL_LIMIT: u64 = 1 << 20;

/// Deterministic for n < 3.3e24; the sizes in scope are far smaller.
pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    if n.is_even() {
        return *n == two;
    }
    // n − 1 = 2^s · d with d odd
    let n_minus_1 = n - BigUint::one();
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for &b in &MR_BASES {
        let b = BigUint::from(b);
        if &b >= n {
            continue;
        }
        let mut x = b.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Odd primes dividing |n|, via trial division then a primality check on
/// what remains. Errors if the cofactor is composite and too large to
/// split.
pub fn odd_prime_divisors(n: &BigInt) -> Result<Vec<BigUint>> {
    let mut m = n.abs().to_biguint().expect("nonnegative");
    if m.is_zero() {
        return Err(Error::ZeroArgument("odd_prime_divisors"));
    }
    let mut primes = Vec::new();
    while m.is_even() {
        m >>= 1;
    }
    let mut d = 3u64;
    while d <= TRIAL_LIMIT {
        let db = BigUint::from(d);
        if &db * &db > m {
            break;
        }
        if (&m % &db).is_zero() {
            primes.push(db.clone());
            while (&m % &db).is_zero() {
                m /= &db;
            }
        }
        d += 2;
    }
    if !m.is_one() {
        if is_prime(&m) {
            primes.push(m);
        } else {
            return Err(Error::FactorizationLimit(format!(
                "composite cofactor {m} exceeds the trial-division range"
            )));
        }
    }
    Ok(primes)
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, p: &BigUint) -> u64 {
    let p = BigInt::from(p.clone());
    let mut m = n.abs();
    let mut v = 0;
    while (&m % &p).is_zero() {
        m /= &p;
        v += 1;
    }
    v
}

/// Legendre symbol (a|p) ∈ {+1, −1} for odd prime p and a prime to p.
pub fn legendre(a: &BigInt, p: &BigUint) -> i32 {
    let pb = BigInt::from(p.clone());
    let mut r = a % &pb;
    if r.is_negative() {
        r += &pb;
    }
    let r = r.to_biguint().expect("nonnegative");
    assert!(!r.is_zero(), "argument not prime to p");
    let exp = (p - BigUint::one()) >> 1;
    let power = r.modpow(&exp, p);
    if power.is_one() {
        1
    } else {
        -1
    }
}

/// Residue of the odd rational r/s modulo 8 (both r, s odd), using
/// s⁻¹ ≡ s (mod 8).
pub fn odd_unit_mod8(numer: &BigInt, denom: &BigInt) -> u8 {
    let eight = BigInt::from(8);
    let mut r = (numer * denom) % &eight;
    if r.is_negative() {
        r += &eight;
    }
    r.to_u8().expect("residue below 8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let primes = [2u64, 3, 5, 7, 11, 13, 97, 101, 65537];
        for p in primes {
            assert!(is_prime(&BigUint::from(p)), "{p} should be prime");
        }
        let composites = [0u64, 1, 4, 9, 15, 91, 561, 1105, 65539 * 3];
        for c in composites {
            assert!(!is_prime(&BigUint::from(c)), "{c} should be composite");
        }
    }

    #[test]
    fn carmichael_numbers_rejected() {
        for c in [561u64, 41041, 825265] {
            assert!(!is_prime(&BigUint::from(c)));
        }
    }

    #[test]
    fn factor_support() {
        let n = BigInt::from(-360); // 2^3 · 3^2 · 5
        let ps = odd_prime_divisors(&n).unwrap();
        assert_eq!(ps, vec![BigUint::from(3u32), BigUint::from(5u32)]);
        let one = odd_prime_divisors(&BigInt::one()).unwrap();
        assert!(one.is_empty());
        assert!(odd_prime_divisors(&BigInt::zero()).is_err());
    }

    #[test]
    fn valuations() {
        let p3 = BigUint::from(3u32);
        assert_eq!(valuation(&BigInt::from(18), &p3), 2);
        assert_eq!(valuation(&BigInt::from(-5), &p3), 0);
    }

    #[test]
    fn legendre_mod_5() {
        let p = BigUint::from(5u32);
        // squares mod 5 are {1, 4}
        assert_eq!(legendre(&BigInt::from(1), &p), 1);
        assert_eq!(legendre(&BigInt::from(4), &p), 1);
        assert_eq!(legendre(&BigInt::from(2), &p), -1);
        assert_eq!(legendre(&BigInt::from(3), &p), -1);
        assert_eq!(legendre(&BigInt::from(-1), &p), 1);
    }

    #[test]
    fn mod8_residues() {
        assert_eq!(odd_unit_mod8(&BigInt::from(3), &BigInt::from(1)), 3);
        assert_eq!(odd_unit_mod8(&BigInt::from(-1), &BigInt::from(1)), 7);
        assert_eq!(odd_unit_mod8(&BigInt::from(1), &BigInt::from(3)), 3);
        assert_eq!(odd_unit_mod8(&BigInt::from(5), &BigInt::from(7)), 3);
    }
}
