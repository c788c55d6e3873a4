//! Gröbner bases over Q by Buchberger's algorithm with exact arithmetic.
//!
//! The engine is deliberately plain: normal-strategy pair selection, the
//! product (coprime leading term) criterion, and full interreduction. Every
//! ideal in scope has a handful of generators in at most ten variables, so
//! a careful Buchberger run beats cleverness. The returned basis is the
//! reduced monic one, which is unique for (ideal, order) and therefore
//! deterministic.

mod hilbert;
mod smooth;

pub use hilbert::{
    hilbert_data, hilbert_data_with_budget, is_empty, is_empty_with_budget, HilbertData,
};
pub use smooth::{
    is_smooth_curve, is_smooth_curve_with_budget, singular_locus, singular_locus_with_budget,
    CurveReport,
};

use crate::error::{Error, Result};
use crate::poly::{mono_compare, Monomial, MonomialOrder, Poly, Ring};
use crate::rational::Rational;
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// Pairs dequeued before Buchberger gives up with a resource error.
pub const DEFAULT_PAIR_BUDGET: usize = 20_000;

/// Homogeneous ideal in a fixed ring. An empty generator list is the zero
/// ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Poly>,
}

impl Ideal {
    /// Zero generators are dropped; all generators must be homogeneous and
    /// live in `ring`.
    pub fn new(ring: &Ring, gens: Vec<Poly>) -> Result<Ideal> {
        let mut kept = Vec::new();
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch(
                    ring.var_names().join(","),
                    g.ring().var_names().join(","),
                ));
            }
            if !g.is_homogeneous() {
                return Err(Error::BadInput(format!("inhomogeneous generator: {g}")));
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        Ok(Ideal { ring: ring.clone(), gens: kept })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), gens: Vec::new() }
    }

    /// The irrelevant ideal (all variables).
    pub fn irrelevant(ring: &Ring) -> Ideal {
        let gens = (0..ring.num_vars()).map(|i| Poly::var(ring, i)).collect();
        Ideal { ring: ring.clone(), gens }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }
}

/// A basis together with the order it was computed under. Buchberger
/// always returns the reduced monic basis; `reduced` is false only for
/// bases assembled by hand via `from_polys`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    polys: Vec<Poly>,
    reduced: bool,
}

impl GroebnerBasis {
    /// Wrap polynomials the caller asserts already form a Gröbner basis.
    pub fn from_polys(ring: &Ring, order: MonomialOrder, polys: Vec<Poly>) -> GroebnerBasis {
        GroebnerBasis { ring: ring.clone(), order, polys, reduced: false }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().filter_map(|p| p.leading(self.order).map(|(m, _)| m.clone())).collect()
    }

    /// Every S-polynomial of every pair reduces to 0 modulo the basis.
    pub fn verify_s_pairs(&self) -> Result<bool> {
        for i in 0..self.polys.len() {
            for j in (i + 1)..self.polys.len() {
                let s = s_polynomial(&self.polys[i], &self.polys[j], self.order)?;
                if !normal_form(&s, self)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn contains(&self, p: &Poly) -> Result<bool> {
        Ok(normal_form(p, self)?.is_zero())
    }
}

fn leading_parts(p: &Poly, order: MonomialOrder) -> (Monomial, Rational) {
    let (m, c) = p.leading(order).expect("nonzero polynomial");
    (m.clone(), c.clone())
}

/// S(f, g) = lcm/lt(f)·f − lcm/lt(g)·g; both arguments must be nonzero.
pub fn s_polynomial(f: &Poly, g: &Poly, order: MonomialOrder) -> Result<Poly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroArgument("s_polynomial"));
    }
    let (mf, cf) = leading_parts(f, order);
    let (mg, cg) = leading_parts(g, order);
    let lcm = mf.lcm(&mg);
    let left = f.mul_monomial(&mf.div(&lcm), &cf.recip());
    let right = g.mul_monomial(&mg.div(&lcm), &cg.recip());
    left.checked_sub(&right)
}

/// Full division remainder of `p` by `basis`: no term of the result is
/// divisible by any basis leading monomial.
fn reduce_full(p: &Poly, basis: &[Poly], order: MonomialOrder) -> Poly {
    let lts: Vec<(Monomial, Rational)> = basis.iter().map(|g| leading_parts(g, order)).collect();
    let mut work = p.clone();
    let mut remainder = Poly::zero(p.ring());
    'outer: while !work.is_zero() {
        let (lm, lc) = leading_parts(&work, order);
        for (g, (gm, gc)) in basis.iter().zip(&lts) {
            if gm.divides(&lm) {
                let quot_c = &lc / gc;
                work = work.checked_sub(&g.mul_monomial(&gm.div(&lm), &quot_c)).expect("same ring");
                continue 'outer;
            }
        }
        let term = Poly::monomial(p.ring(), lm.clone(), lc);
        remainder = remainder.checked_add(&term).expect("same ring");
        work = work.checked_sub(&term).expect("same ring");
    }
    remainder
}

/// Remainder of `p` modulo `gb`; errors on a ring mismatch.
pub fn normal_form(p: &Poly, gb: &GroebnerBasis) -> Result<Poly> {
    if p.ring() != gb.ring() {
        return Err(Error::RingMismatch(
            p.ring().var_names().join(","),
            gb.ring().var_names().join(","),
        ));
    }
    Ok(reduce_full(p, &gb.polys, gb.order))
}

/// Repeatedly reduce each element modulo the others until stable; keeps
/// intermediate coefficients integral via `normalized`.
fn interreduce(mut basis: Vec<Poly>, order: MonomialOrder) -> Vec<Poly> {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < basis.len() {
            let g = basis.remove(i);
            let h = reduce_full(&g, &basis, order);
            if h.is_zero() {
                changed = true;
                continue;
            }
            let h = h.normalized();
            if h != g {
                changed = true;
            }
            basis.insert(i, h);
            i += 1;
        }
        if !changed {
            return basis;
        }
    }
}

fn pair_key(f: &Poly, g: &Poly, order: MonomialOrder, i: usize, j: usize) -> (u32, usize, usize) {
    let (mf, _) = leading_parts(f, order);
    let (mg, _) = leading_parts(g, order);
    (mf.lcm(&mg).degree(), i, j)
}

/// Reduced Gröbner basis with the default work budget.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with_budget(ideal, order, DEFAULT_PAIR_BUDGET)
}

/// Reduced Gröbner basis; aborts with a resource error once more than
/// `pair_budget` S-pairs have been dequeued.
pub fn buchberger_with_budget(
    ideal: &Ideal,
    order: MonomialOrder,
    pair_budget: usize,
) -> Result<GroebnerBasis> {
    let ring = ideal.ring().clone();
    let mut basis = interreduce(ideal.generators().to_vec(), order);

    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.insert(pair_key(&basis[i], &basis[j], order, i, j));
        }
    }

    let mut dequeued = 0usize;
    while let Some(&key) = pairs.iter().next() {
        pairs.remove(&key);
        dequeued += 1;
        if dequeued > pair_budget {
            return Err(Error::PairBudgetExceeded(pair_budget));
        }
        let (_, i, j) = key;
        let (mi, _) = leading_parts(&basis[i], order);
        let (mj, _) = leading_parts(&basis[j], order);
        if mi.coprime(&mj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order)?;
        let h = reduce_full(&s, &basis, order);
        if h.is_zero() {
            continue;
        }
        let h = h.normalized();
        let k = basis.len();
        for (idx, g) in basis.iter().enumerate() {
            pairs.insert(pair_key(g, &h, order, idx, k));
        }
        basis.push(h);
    }

    Ok(GroebnerBasis { ring, order, polys: reduce_basis(basis, order), reduced: true })
}

/// Minimalize, fully reduce, make monic, and sort by leading monomial.
fn reduce_basis(basis: Vec<Poly>, order: MonomialOrder) -> Vec<Poly> {
    let lms: Vec<Monomial> = basis.iter().map(|g| leading_parts(g, order).0).collect();
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            if lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Poly> =
        basis.into_iter().zip(keep).filter_map(|(g, k)| k.then_some(g)).collect();

    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> =
            minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        let h = reduce_full(&minimal[i], &others, order);
        debug_assert!(!h.is_zero(), "minimal basis element reduced to zero");
        reduced.push(h.monic(order));
    }
    reduced.sort_by(|a, b| {
        let (ma, _) = leading_parts(a, order);
        let (mb, _) = leading_parts(b, order);
        mono_compare(&ma, &mb, order).unwrap_or(Ordering::Equal)
    });
    reduced
}
