//! Hilbert series and Hilbert polynomial of a homogeneous quotient.
//!
//! The Hilbert function of R/I equals that of R modulo the leading-term
//! ideal of any Gröbner basis of I, so everything reduces to combinatorics
//! on monomial ideals: the series numerator N(t) with
//! HS(t) = N(t)/(1−t)^n is computed by pivot-variable splitting
//! N(I) = N(I + (x_j)) + t·N(I : x_j). Cancelling all factors of (1−t)
//! from the numerator yields dimension, degree, and the Hilbert
//! polynomial in closed form.

use super::{buchberger_with_budget, Ideal, DEFAULT_PAIR_BUDGET};
use crate::error::Result;
use crate::poly::{Monomial, MonomialOrder};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dimension, degree, genus, and Hilbert polynomial/series data of a
/// projective scheme.
#[derive(Clone, Debug, PartialEq)]
pub struct HilbertData {
    num_vars: usize,
    series_numerator: Vec<BigInt>,
    hilbert_polynomial: Vec<Rational>,
    scheme_dimension: i64,
    degree: Option<u64>,
    arithmetic_genus: Option<i64>,
}

impl HilbertData {
    /// Projective dimension: −1 for the empty scheme.
    pub fn scheme_dimension(&self) -> i64 {
        self.scheme_dimension
    }

    /// Degree of the scheme; absent when empty.
    pub fn degree(&self) -> Option<u64> {
        self.degree
    }

    /// Arithmetic genus 1 − P(0); present only for curves.
    pub fn arithmetic_genus(&self) -> Option<i64> {
        self.arithmetic_genus
    }

    /// Coefficients of the Hilbert polynomial, constant term first; empty
    /// list for the zero polynomial.
    pub fn hilbert_polynomial(&self) -> &[Rational] {
        &self.hilbert_polynomial
    }

    /// Numerator N(t) of the Hilbert series N(t)/(1−t)^num_vars.
    pub fn series_numerator(&self) -> &[BigInt] {
        &self.series_numerator
    }

    pub fn is_empty_scheme(&self) -> bool {
        self.scheme_dimension < 0
    }

    /// Exact Hilbert function value dim (R/I)_t, valid for every t ≥ 0
    /// (unlike the polynomial, which only agrees eventually).
    pub fn hilbert_function(&self, t: u32) -> BigInt {
        let n = self.num_vars as u64;
        let mut total = BigInt::zero();
        for (i, c) in self.series_numerator.iter().enumerate() {
            let i = i as u64;
            if i > t as u64 {
                break;
            }
            total += c * binomial(t as u64 - i + n - 1, n - 1);
        }
        total
    }

    pub fn hilbert_polynomial_at(&self, t: i64) -> Rational {
        let t = Rational::from_integer(t.into());
        let mut acc = Rational::zero();
        for c in self.hilbert_polynomial.iter().rev() {
            acc = acc * &t + c;
        }
        acc
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

fn poly_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_shift(a: &[BigInt], k: usize) -> Vec<BigInt> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend(a.iter().cloned());
    out
}

/// Drop generators divisible by another generator.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut keep = vec![true; gens.len()];
    for i in 0..gens.len() {
        for j in 0..gens.len() {
            if i != j && keep[j] && gens[j].divides(&gens[i]) && gens[j] != gens[i] {
                keep[i] = false;
                break;
            }
        }
    }
    gens.into_iter().zip(keep).filter_map(|(g, k)| k.then_some(g)).collect()
}

/// Series numerator of a minimal monomial ideal by pivot splitting.
fn numerator(gens: &[Monomial], num_vars: usize) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    // a degree-0 generator means the whole ring: numerator 0
    if gens.iter().any(|g| g.degree() == 0) {
        return Vec::new();
    }
    let pairwise_coprime =
        gens.iter().enumerate().all(|(i, g)| gens[i + 1..].iter().all(|h| g.coprime(h)));
    if pairwise_coprime {
        let mut acc = vec![BigInt::one()];
        for g in gens {
            let mut factor = vec![BigInt::zero(); g.degree() as usize + 1];
            factor[0] = BigInt::one();
            factor[g.degree() as usize] = -BigInt::one();
            acc = poly_mul(&acc, &factor);
        }
        return acc;
    }
    // pivot = variable hitting the most generators (≥ 2 here)
    let mut best = (0usize, 0usize);
    for v in 0..num_vars {
        let count = gens.iter().filter(|g| g.exponents()[v] > 0).count();
        if count > best.1 {
            best = (v, count);
        }
    }
    let v = best.0;
    let mut with_var = vec![Monomial::var(num_vars, v)];
    with_var.extend(gens.iter().filter(|g| g.exponents()[v] == 0).cloned());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut e = g.exponents().to_vec();
            if e[v] > 0 {
                e[v] -= 1;
            }
            Monomial::new(e)
        })
        .collect();
    let left = numerator(&with_var, num_vars);
    let right = numerator(&minimalize(colon), num_vars);
    poly_add(&left, &poly_shift(&right, 1))
}

/// Exact division of p by (1 − t); p(1) must be 0.
fn divide_by_one_minus_t(p: &[BigInt]) -> Vec<BigInt> {
    // p = (1 − t)·q ⇒ q_i = p_i + q_{i−1}
    let mut q = vec![BigInt::zero(); p.len().saturating_sub(1)];
    let mut carry = BigInt::zero();
    for i in 0..q.len() {
        carry += &p[i];
        q[i] = carry.clone();
    }
    assert!((p.last().unwrap() + &carry).is_zero(), "not divisible by 1 - t");
    while q.last().is_some_and(Zero::is_zero) {
        q.pop();
    }
    q
}

/// Expand Σ_i q_i · C(t − i + d, d) into coefficients of a degree-d
/// polynomial in t.
fn polynomial_from_quotient(q: &[BigInt], d: usize) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); d + 1];
    for (i, c) in q.iter().enumerate() {
        // C(t − i + d, d) = Π_{j=1..d} (t − i + j) / d!
        let mut term = vec![Rational::from_integer(c.clone())];
        for j in 1..=d {
            let shift = Rational::from_integer(BigInt::from(j as i64 - i as i64));
            let mut next = vec![Rational::zero(); term.len() + 1];
            for (k, a) in term.iter().enumerate() {
                next[k] += a * &shift;
                next[k + 1] += a;
            }
            term = next;
        }
        let mut dfact = Rational::one();
        for j in 1..=d {
            dfact *= Rational::from_integer(j.into());
        }
        for (k, a) in term.iter().enumerate() {
            acc[k] += a / &dfact;
        }
    }
    while acc.last().is_some_and(|c| c.is_zero()) {
        acc.pop();
    }
    acc
}

/// Hilbert data with the default Buchberger budget.
pub fn hilbert_data(ideal: &Ideal) -> Result<HilbertData> {
    hilbert_data_with_budget(ideal, DEFAULT_PAIR_BUDGET)
}

pub fn hilbert_data_with_budget(ideal: &Ideal, pair_budget: usize) -> Result<HilbertData> {
    let gb = buchberger_with_budget(ideal, MonomialOrder::Grevlex, pair_budget)?;
    let n = ideal.ring().num_vars();
    let lt = minimalize(gb.leading_monomials());
    let num = numerator(&lt, n);

    if num.is_empty() {
        // quotient is the zero ring
        return Ok(HilbertData {
            num_vars: n,
            series_numerator: num,
            hilbert_polynomial: Vec::new(),
            scheme_dimension: -1,
            degree: None,
            arithmetic_genus: None,
        });
    }

    let mut q = num.clone();
    let mut cancelled = 0usize;
    while q.iter().sum::<BigInt>().is_zero() {
        q = divide_by_one_minus_t(&q);
        cancelled += 1;
    }
    let affine_dim = n as i64 - cancelled as i64;
    if affine_dim <= 0 {
        return Ok(HilbertData {
            num_vars: n,
            series_numerator: num,
            hilbert_polynomial: Vec::new(),
            scheme_dimension: -1,
            degree: None,
            arithmetic_genus: None,
        });
    }

    let dim = affine_dim - 1;
    let q_at_one: BigInt = q.iter().sum();
    assert!(q_at_one.is_positive(), "degree must be positive");
    let degree = q_at_one.to_u64();
    let hp = polynomial_from_quotient(&q, (affine_dim - 1) as usize);
    let genus = (dim == 1).then(|| {
        let p0 = if hp.is_empty() { Rational::zero() } else { hp[0].clone() };
        let one_minus = Rational::one() - p0;
        assert!(one_minus.is_integer(), "P(0) must be an integer");
        one_minus.to_integer().to_i64().expect("small genus")
    });

    Ok(HilbertData {
        num_vars: n,
        series_numerator: num,
        hilbert_polynomial: hp,
        scheme_dimension: dim,
        degree,
        arithmetic_genus: genus,
    })
}

/// True iff the projective scheme is empty (Hilbert polynomial ≡ 0).
pub fn is_empty(ideal: &Ideal) -> Result<bool> {
    is_empty_with_budget(ideal, DEFAULT_PAIR_BUDGET)
}

pub fn is_empty_with_budget(ideal: &Ideal, pair_budget: usize) -> Result<bool> {
    Ok(hilbert_data_with_budget(ideal, pair_budget)?.is_empty_scheme())
}
