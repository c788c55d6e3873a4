//! Multivariate homogeneous polynomials over Q with monomial orders.
//!
//! Rings are lists of named variables; monomials are dense exponent vectors
//! (all ambients in scope have at most ten variables). `Monomial`'s `Ord`
//! impl is graded reverse lexicographic, so a `BTreeMap` keyed by monomials
//! iterates in grevlex order and the leading term is the last entry.

mod text;

use crate::error::{Error, Result};
use crate::rational::Rational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

/// A polynomial ring over Q, identified by its ordered variable names.
#[derive(Clone, Debug, Eq)]
pub struct Ring {
    vars: Arc<Vec<String>>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl Ring {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Self {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        assert!(!vars.is_empty(), "a ring needs at least one variable");
        Ring { vars: Arc::new(vars) }
    }

    /// Coordinate ring of P^n with variables x0..xn.
    pub fn projective(n: usize) -> Self {
        Ring::new((0..=n).map(|i| format!("x{i}")))
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    /// Dimension of the ambient projective space.
    pub fn ambient_dim(&self) -> usize {
        self.vars.len() - 1
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// Monomial as a dense exponent vector; one slot per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// True when the supports are disjoint (lcm = product).
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Grevlex: higher total degree wins; on ties the *last* differing exponent
/// decides, with the smaller exponent ranked higher.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            match a.cmp(b) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Monomial orders available to callers. Grevlex is the working order
/// everywhere; lex exists for debugging only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
}

fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()) {
        match x.cmp(y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// Total order on same-length monomials; errors on a length mismatch.
pub fn mono_compare(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(match order {
        MonomialOrder::Grevlex => a.cmp(b),
        MonomialOrder::Lex => lex_cmp(a, b),
    })
}

/// Exact multivariate polynomial: nonzero rational coefficients keyed by
/// monomial in grevlex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(ring: &Ring) -> Self {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        let mut p = Poly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.num_vars()), c);
        }
        p
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        assert!(i < ring.num_vars());
        let mut p = Poly::zero(ring);
        p.terms.insert(Monomial::var(ring.num_vars(), i), Rational::one());
        p
    }

    pub fn monomial(ring: &Ring, mono: Monomial, coeff: Rational) -> Self {
        assert_eq!(mono.len(), ring.num_vars());
        let mut p = Poly::zero(ring);
        if !coeff.is_zero() {
            p.terms.insert(mono, coeff);
        }
        p
    }

    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    /// Maximum total degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Some(d) when every term has total degree d. The zero polynomial is
    /// homogeneous of every degree and reports None.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|m| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Leading term under the given order.
    pub fn leading(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        match order {
            MonomialOrder::Grevlex => self.terms.iter().next_back(),
            MonomialOrder::Lex => self.terms.iter().max_by(|(a, _), (b, _)| lex_cmp(a, b)),
        }
    }

    fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.var_names().join(","),
                other.ring.var_names().join(","),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let mut out = Poly::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, coeff: &Rational) -> Poly {
        if coeff.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c * coeff)).collect(),
        }
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Poly {
        assert!(i < self.ring.num_vars());
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e > 0 {
                let mut exps = m.exponents().to_vec();
                exps[i] = e - 1;
                out.add_term(Monomial::new(exps), c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Evaluate at a rational point (one value per variable).
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.num_vars());
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        total
    }

    /// Reinterpret in a larger ring whose leading variables match this ring.
    pub fn embed(&self, bigger: &Ring) -> Result<Poly> {
        let n = self.ring.num_vars();
        if bigger.num_vars() < n || bigger.var_names()[..n] != *self.ring.var_names() {
            return Err(Error::RingMismatch(
                self.ring.var_names().join(","),
                bigger.var_names().join(","),
            ));
        }
        let pad = bigger.num_vars() - n;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exponents().to_vec();
                exps.resize(exps.len() + pad, 0);
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Ok(Poly { ring: bigger.clone(), terms })
    }

    /// Positive rational s such that s * self has coprime integer
    /// coefficients. Returns 1 for the zero polynomial.
    fn integer_clearing_factor(&self) -> Rational {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return Rational::one();
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&(c.numer() * &den_lcm / c.denom()));
        }
        Rational::new(den_lcm, num_gcd)
    }

    /// Scale by a positive rational so coefficients are coprime integers;
    /// the sign of every coefficient is preserved.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.integer_clearing_factor())
    }

    /// Primitive integer form with positive grevlex-leading coefficient.
    pub fn normalized(&self) -> Poly {
        let p = self.primitive();
        match p.leading(MonomialOrder::Grevlex) {
            Some((_, c)) if c.is_negative() => p.neg(),
            _ => p,
        }
    }

    /// Divide by the leading coefficient under `order`.
    pub fn monic(&self, order: MonomialOrder) -> Poly {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("ring mismatch")
            }
        }
    };
}
poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

/// All monomials of the given total degree, descending in grevlex.
pub fn monomials_of_degree(num_vars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; num_vars];
    fn rec(slot: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if slot + 1 == current.len() {
            current[slot] = remaining;
            out.push(Monomial::new(current.clone()));
            return;
        }
        for e in (0..=remaining).rev() {
            current[slot] = e;
            rec(slot + 1, remaining - e, current, out);
        }
        current[slot] = 0;
    }
    rec(0, degree, &mut current, &mut out);
    out.sort();
    out.reverse();
    out
}

/// Deterministic "general form": homogeneous of the given degree with
/// integer coefficients uniform in [-height, height], never identically
/// zero. Same (degree, ring, height, seed) always yields the same form.
pub fn random_form(degree: u32, ring: &Ring, height: u32, seed: u64) -> Poly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_form_with(&mut rng, degree, ring, height)
}

/// Same sampler, drawing from a caller-owned stream.
pub fn random_form_with(rng: &mut ChaCha8Rng, degree: u32, ring: &Ring, height: u32) -> Poly {
    assert!(height >= 1);
    let monos = monomials_of_degree(ring.num_vars(), degree);
    let h = height as i64;
    loop {
        let mut p = Poly::zero(ring);
        for m in &monos {
            let c = rng.gen_range(-h..=h);
            if c != 0 {
                p.add_term(m.clone(), Rational::from_integer(c.into()));
            }
        }
        if !p.is_zero() {
            return p;
        }
    }
}
