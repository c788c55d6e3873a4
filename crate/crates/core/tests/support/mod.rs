//! Independent oracles for the integration suite.
//!
//! Nothing here calls into the Gröbner machinery under test: the
//! Hilbert-function oracle is straight linear algebra over two fixed
//! word-sized primes, and the conic oracle is an exhaustive search for
//! primitive solutions modulo prime powers.

use g1split_core::groebner::Ideal;
use g1split_core::poly::{monomials_of_degree, Monomial};
use g1split_core::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use std::collections::BTreeMap;

/// 2^64 − 59, the largest prime below 2^64.
const P1: u64 = 18_446_744_073_709_551_557;
/// 2^61 − 1, Mersenne prime.
const P2: u64 = 2_305_843_009_213_693_951;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn residue(r: &Rational, p: u64) -> u64 {
    let p_big = BigInt::from(p);
    let num = r.numer().mod_floor(&p_big).to_u64().expect("residue fits");
    let den = r.denom().mod_floor(&p_big).to_u64().expect("residue fits");
    assert_ne!(den, 0, "denominator divisible by the working prime");
    mul_mod(num, inv_mod(den, p), p)
}

/// Row-echelon rank over F_p.
fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][c], p);
        for x in &mut rows[rank][c..] {
            *x = mul_mod(*x, inv, p);
        }
        let (upper, lower) = rows.split_at_mut(rank + 1);
        let lead = &upper[rank][c..];
        for row in lower {
            let factor = row[c];
            if factor == 0 {
                continue;
            }
            for (x, &l) in row[c..].iter_mut().zip(lead) {
                *x = sub_mod(*x, mul_mod(factor, l, p), p);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// dim_Q (R/I)_t by brute force: count degree-t monomials, subtract the
/// rank of the multiplication matrix {m·g : g generator, deg(m·g) = t}.
/// The rank is taken modulo two independent large primes which must
/// agree; coefficients in the corpus are tiny, so a modular rank drop
/// would be caught by the cross-check.
pub fn hilbert_function_oracle(ideal: &Ideal, t: u32) -> u64 {
    let n = ideal.ring().num_vars();
    let columns = monomials_of_degree(n, t);
    let col_index: BTreeMap<&Monomial, usize> =
        columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let one = Rational::one();

    let mut rows_p1: Vec<Vec<u64>> = Vec::new();
    let mut rows_p2: Vec<Vec<u64>> = Vec::new();
    for g in ideal.generators() {
        let d = g.homogeneous_degree().expect("corpus ideals are homogeneous");
        if d > t {
            continue;
        }
        for m in monomials_of_degree(n, t - d) {
            let product = g.mul_monomial(&m, &one);
            let mut row1 = vec![0u64; columns.len()];
            let mut row2 = vec![0u64; columns.len()];
            for (mono, coeff) in product.terms() {
                let idx = col_index[mono];
                row1[idx] = residue(coeff, P1);
                row2[idx] = residue(coeff, P2);
            }
            rows_p1.push(row1);
            rows_p2.push(row2);
        }
    }
    let r1 = rank_mod(rows_p1, P1);
    let r2 = rank_mod(rows_p2, P2);
    assert_eq!(r1, r2, "modular ranks disagree — unlucky prime");
    (columns.len() - r1) as u64
}

fn strip_square(mut a: i64, p: i64) -> i64 {
    while a % (p * p) == 0 {
        a /= p * p;
    }
    a
}

/// Exhaustive search for a primitive solution of a·x² + b·y² ≡ z²
/// (mod p^k). A primitive triple must have x or y a unit (otherwise z
/// is divisible too), and scaling by a unit lets us pin that
/// coordinate to 1, so two one-dimensional sweeps suffice.
fn solvable_mod_pk(a: i64, b: i64, p: i64, k: u32) -> bool {
    let m = p.pow(k);
    let mut is_square = vec![false; m as usize];
    for z in 0..m {
        is_square[((z * z) % m) as usize] = true;
    }
    let am = a.rem_euclid(m);
    let bm = b.rem_euclid(m);
    // x = 1: a + b·y² must be a square residue.
    for y in 0..m {
        let s = (am + bm * ((y * y) % m)).rem_euclid(m);
        if is_square[s as usize] {
            return true;
        }
    }
    // y = 1, x = p·x₁: a·p²·x₁² + b must be a square residue.
    let ap2 = (am * ((p * p) % m)).rem_euclid(m);
    for x1 in 0..m / p {
        let s = (ap2 * ((x1 * x1) % m) + bm).rem_euclid(m);
        if is_square[s as usize] {
            return true;
        }
    }
    false
}

/// Brute-force local solvability of a·x² + b·y² = z² over Q_p.
///
/// For odd p we first divide out factors of p² (the substitution
/// x ↦ p·x shows this preserves solvability); with both valuations ≤ 1
/// an anisotropic form has no primitive zero mod p³ — if p divides
/// neither coefficient the reduction mod p is nondegenerate, and in the
/// divisible cases the valuation bookkeeping forces every coordinate to
/// be divisible — so k = 4 decides with margin. For p = 2 the
/// valuations in our range are at most 3 and k = 13 is far past the
/// 2-adic lifting threshold 2·v + 3.
pub fn conic_locally_solvable(a: i64, b: i64, p: u64) -> bool {
    assert!(a != 0 && b != 0, "degenerate conic");
    if p == 2 {
        solvable_mod_pk(a, b, 2, 13)
    } else {
        let q = p as i64;
        solvable_mod_pk(strip_square(a, q), strip_square(b, q), q, 4)
    }
}

/// Real-place solvability: a·x² + b·y² = z² has a nontrivial real
/// solution unless both coefficients are negative.
pub fn conic_really_solvable(a: i64, b: i64) -> bool {
    a > 0 || b > 0
}
