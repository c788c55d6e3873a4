//! The four curve builders. Each samples candidate equations from a
//! seeded stream, certifies the candidate with the Gröbner engine, and
//! retries with fresh randomness until a certificate passes or the retry
//! budget runs out. Identical (inputs, seed) replay the identical stream,
//! so emitted certificates are deterministic.

use super::certificate::{CurveCertificate, InputsEcho};
use super::{kunneth_h0, pushforward_rank, riemann_hurwitz_check, BundleTwist, ConstructionPlan};
use crate::brauer::{conic_polynomial, BrauerClassQ, QuaternionPair};
use crate::error::{Error, Result};
use crate::groebner::{
    hilbert_data_with_budget, is_smooth_curve_with_budget, CurveReport, Ideal, DEFAULT_PAIR_BUDGET,
};
use crate::poly::{random_form_with, Monomial, Poly, Ring};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Knobs shared by every builder; the seed is the only required choice.
#[derive(Clone, Copy, Debug)]
pub struct BuildConfig {
    pub height: u32,
    pub seed: u64,
    pub max_retries: u32,
    pub pair_budget: usize,
}

impl BuildConfig {
    pub fn new(seed: u64) -> BuildConfig {
        BuildConfig { height: 3, seed, max_retries: 20, pair_budget: DEFAULT_PAIR_BUDGET }
    }

    pub fn with_height(mut self, height: u32) -> BuildConfig {
        self.height = height;
        self
    }
}

pub(crate) fn p2_ring() -> Ring {
    Ring::new(["x", "y", "z"])
}

pub(crate) fn p3_ring() -> Ring {
    Ring::new(["x", "y", "z", "w"])
}

pub(crate) fn p4_ring() -> Ring {
    Ring::projective(4)
}

/// Run numbered attempts until one produces a value; the second return
/// slot counts the failed attempts before success.
fn run_attempts<T>(
    max_retries: u32,
    mut attempt: impl FnMut(u32) -> Result<Option<T>>,
) -> Result<(T, u32)> {
    for r in 0..max_retries.max(1) {
        if let Some(value) = attempt(r)? {
            return Ok((value, r));
        }
    }
    Err(Error::RetriesExhausted(max_retries))
}

fn curve_passes(report: &CurveReport, degree: u64) -> bool {
    report.dimension_ok
        && report.degree == Some(degree)
        && report.genus == Some(1)
        && report.smooth == Some(true)
}

/// Certify one index-2 candidate: branch divisor (conic, q) of dimension
/// 0 degree 4 in P², then the double-cover curve in P³ smooth of degree
/// 4 genus 1. `None` means "resample q".
pub(crate) fn index2_attempt(
    conic: &Poly,
    q: &Poly,
    budget: usize,
) -> Result<Option<(Vec<Poly>, CurveReport)>> {
    let p2 = conic.ring();
    let branch = Ideal::new(p2, vec![conic.clone(), q.clone()])?;
    let hd = hilbert_data_with_budget(&branch, budget)?;
    if hd.scheme_dimension() != 0 || hd.degree() != Some(4) {
        return Ok(None);
    }
    let p3 = p3_ring();
    let conic3 = conic.embed(&p3)?;
    let q3 = q.embed(&p3)?;
    let w = Poly::var(&p3, 3);
    let cover = (&w * &w).checked_sub(&q3)?;
    let gens = vec![conic3, cover];
    let ideal = Ideal::new(&p3, gens.clone())?;
    let report = is_smooth_curve_with_budget(&ideal, budget)?;
    Ok(curve_passes(&report, 4).then_some((gens, report)))
}

/// Double cover of the conic (a, b) branched over a random degree-4
/// divisor: {a·x² + b·y² − z², w² − q(x,y,z)} in P³.
pub fn build_index2(
    a: &Rational,
    b: &Rational,
    height: u32,
    seed: u64,
    max_retries: u32,
) -> Result<CurveCertificate> {
    let mut cfg = BuildConfig::new(seed).with_height(height);
    cfg.max_retries = max_retries;
    build_index2_cfg(a, b, &cfg)
}

pub fn build_index2_cfg(a: &Rational, b: &Rational, cfg: &BuildConfig) -> Result<CurveCertificate> {
    let quat = QuaternionPair::new(a.clone(), b.clone())?;
    let p2 = p2_ring();
    let conic = conic_polynomial(&quat, &p2);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let ((gens, report), retries) = run_attempts(cfg.max_retries, |_| {
        let q = random_form_with(&mut rng, 2, &p2, cfg.height);
        index2_attempt(&conic, &q, cfg.pair_budget)
    })?;
    let cover_genus = riemann_hurwitz_check(0, 2, 4)?;
    let mut inputs = InputsEcho::from_config(cfg);
    inputs.a = Some(crate::rational::rational_to_string(a));
    inputs.b = Some(crate::rational::rational_to_string(b));
    inputs.branch_degree = Some(4);
    inputs.branch_dimension = Some(0);
    inputs.cover_genus = Some(cover_genus);
    Ok(CurveCertificate::assemble(
        "index2",
        &p3_ring(),
        gens,
        &report,
        cfg.seed,
        retries,
        inputs,
        None,
    ))
}

/// Which anticanonical model to build on the index-3 side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Index3Mode {
    Split,
    Cyclic { a: BigInt, b: BigInt },
}

/// Plane cubic: a random one in split mode, the diagonal cubic
/// a·x³ + b·y³ + z³ in cyclic mode.
pub fn build_index3(
    mode: &Index3Mode,
    height: u32,
    seed: u64,
    max_retries: u32,
) -> Result<CurveCertificate> {
    let mut cfg = BuildConfig::new(seed).with_height(height);
    cfg.max_retries = max_retries;
    build_index3_cfg(mode, &cfg)
}

pub fn build_index3_cfg(mode: &Index3Mode, cfg: &BuildConfig) -> Result<CurveCertificate> {
    let p2 = p2_ring();
    match mode {
        Index3Mode::Split => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let ((gens, report), retries) = run_attempts(cfg.max_retries, |_| {
                let cubic = random_form_with(&mut rng, 3, &p2, cfg.height);
                let ideal = Ideal::new(&p2, vec![cubic.clone()])?;
                let report = is_smooth_curve_with_budget(&ideal, cfg.pair_budget)?;
                Ok(curve_passes(&report, 3).then_some((vec![cubic], report)))
            })?;
            let mut inputs = InputsEcho::from_config(cfg);
            inputs.mode = Some("split".into());
            Ok(CurveCertificate::assemble(
                "index3_split",
                &p2,
                gens,
                &report,
                cfg.seed,
                retries,
                inputs,
                None,
            ))
        }
        Index3Mode::Cyclic { a, b } => {
            if a.is_zero() || b.is_zero() {
                return Err(Error::BadInput("cyclic coefficients must be nonzero".into()));
            }
            if (a * b).abs().is_one() {
                return Err(Error::BadInput(format!(
                    "cyclic mode needs a·b ≠ ±1, got a = {a}, b = {b}"
                )));
            }
            let cubic = diagonal_cubic(&p2, a, b);
            let ideal = Ideal::new(&p2, vec![cubic.clone()])?;
            let report = is_smooth_curve_with_budget(&ideal, cfg.pair_budget)?;
            if !curve_passes(&report, 3) {
                return Err(Error::BadInput(format!(
                    "diagonal cubic {cubic} failed smoothness certification"
                )));
            }
            let mut inputs = InputsEcho::from_config(cfg);
            inputs.mode = Some("cyclic".into());
            inputs.a = Some(a.to_string());
            inputs.b = Some(b.to_string());
            Ok(CurveCertificate::assemble(
                "index3_cyclic",
                &p2,
                vec![cubic],
                &report,
                cfg.seed,
                0,
                inputs,
                None,
            ))
        }
    }
}

fn diagonal_cubic(ring: &Ring, a: &BigInt, b: &BigInt) -> Poly {
    Poly::from_terms(
        ring,
        [
            (Monomial::new(vec![3, 0, 0]), Rational::from_integer(a.clone())),
            (Monomial::new(vec![0, 3, 0]), Rational::from_integer(b.clone())),
            (Monomial::new(vec![0, 0, 3]), Rational::one()),
        ],
    )
}

/// Certify one (2,2) candidate in P³; `None` on any degeneracy.
pub(crate) fn index4_attempt(
    q1: &Poly,
    q2: &Poly,
    budget: usize,
) -> Result<Option<(Vec<Poly>, CurveReport)>> {
    let ring = q1.ring();
    let gens = vec![q1.clone(), q2.clone()];
    let ideal = Ideal::new(ring, gens.clone())?;
    let report = is_smooth_curve_with_budget(&ideal, budget)?;
    Ok(curve_passes(&report, 4).then_some((gens, report)))
}

/// Split-model bookkeeping for the index-4 case: both factors split, so
/// every class in the plan is zero, but the bundle data is unchanged.
pub(crate) fn split_plan_index4() -> ConstructionPlan {
    ConstructionPlan {
        alpha: BrauerClassQ::zero(),
        index_case: 4,
        y_class: Some(BrauerClassQ::zero()),
        x_dim: 3,
        y_dim: Some(1),
        bundle: Some(BundleTwist::plain(2, 1)),
        obstruction: BrauerClassQ::zero(),
        obstruction_vanishes: true,
        bundle_rank: Some(pushforward_rank(1, 1)),
        expected_sections: Some(kunneth_h0(2, 1, 3, 1)),
    }
}

pub(crate) fn split_plan_index5() -> ConstructionPlan {
    ConstructionPlan {
        alpha: BrauerClassQ::zero(),
        index_case: 5,
        y_class: Some(BrauerClassQ::zero()),
        x_dim: 4,
        y_dim: Some(4),
        bundle: Some(BundleTwist::with_omega(1, 2)),
        obstruction: BrauerClassQ::zero(),
        obstruction_vanishes: true,
        bundle_rank: Some(4),
        expected_sections: None,
    }
}

/// Intersection of two random quadrics in P³.
pub fn build_index4_split(height: u32, seed: u64, max_retries: u32) -> Result<CurveCertificate> {
    let mut cfg = BuildConfig::new(seed).with_height(height);
    cfg.max_retries = max_retries;
    build_index4_split_cfg(&cfg)
}

pub fn build_index4_split_cfg(cfg: &BuildConfig) -> Result<CurveCertificate> {
    let p3 = p3_ring();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let ((gens, report), retries) = run_attempts(cfg.max_retries, |_| {
        let q1 = random_form_with(&mut rng, 2, &p3, cfg.height);
        let q2 = random_form_with(&mut rng, 2, &p3, cfg.height);
        index4_attempt(&q1, &q2, cfg.pair_budget)
    })?;
    let mut inputs = InputsEcho::from_config(cfg);
    inputs.mode = Some("split".into());
    Ok(CurveCertificate::assemble(
        "index4_split",
        &p3,
        gens,
        &report,
        cfg.seed,
        retries,
        inputs,
        Some(split_plan_index4()),
    ))
}

/// 5 × 5 skew-symmetric matrix of linear forms on P⁴, stored as the
/// upper triangle row by row.
#[derive(Clone, Debug)]
pub struct SkewMatrix {
    ring: Ring,
    upper: Vec<Poly>,
}

const UPPER_OFFSET: [usize; 4] = [0, 4, 7, 9];

fn upper_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < 5);
    UPPER_OFFSET[i] + (j - i - 1)
}

impl SkewMatrix {
    /// Ten upper-triangle entries in row order (0,1), (0,2), …, (3,4);
    /// each must be zero or a linear form.
    pub fn from_upper(ring: &Ring, upper: Vec<Poly>) -> Result<SkewMatrix> {
        if upper.len() != 10 {
            return Err(Error::BadInput(format!(
                "a 5×5 skew matrix needs 10 upper entries, got {}",
                upper.len()
            )));
        }
        for p in &upper {
            if p.ring() != ring {
                return Err(Error::RingMismatch(
                    ring.var_names().join(","),
                    p.ring().var_names().join(","),
                ));
            }
            if !p.is_zero() && p.homogeneous_degree() != Some(1) {
                return Err(Error::BadInput(format!("entry {p} is not a linear form")));
            }
        }
        Ok(SkewMatrix { ring: ring.clone(), upper })
    }

    pub fn random(rng: &mut ChaCha8Rng, ring: &Ring, height: u32) -> SkewMatrix {
        let upper = (0..10).map(|_| random_form_with(rng, 1, ring, height)).collect();
        SkewMatrix { ring: ring.clone(), upper }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Signed entry m(i, j); the diagonal is zero.
    pub fn entry(&self, i: usize, j: usize) -> Poly {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => Poly::zero(&self.ring),
            Ordering::Less => self.upper[upper_index(i, j)].clone(),
            Ordering::Greater => self.upper[upper_index(j, i)].neg(),
        }
    }
}

/// Pfaffian of the 4×4 skew submatrix omitting row/column `omit`:
/// m12·m34 − m13·m24 + m14·m23 on the remaining indices.
pub fn pfaffian4(m: &SkewMatrix, omit: usize) -> Poly {
    assert!(omit < 5);
    let idx: Vec<usize> = (0..5).filter(|&r| r != omit).collect();
    let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
    let t1 = &m.entry(i, j) * &m.entry(k, l);
    let t2 = &m.entry(i, k) * &m.entry(j, l);
    let t3 = &m.entry(i, l) * &m.entry(j, k);
    &(&t1 - &t2) + &t3
}

/// Certify one Pfaffian candidate; `None` on rank collapse or any
/// failed verdict.
pub(crate) fn index5_attempt(
    m: &SkewMatrix,
    budget: usize,
) -> Result<Option<(Vec<Poly>, CurveReport)>> {
    let gens: Vec<Poly> = (0..5).map(|omit| pfaffian4(m, omit)).collect();
    if gens.iter().any(Poly::is_zero) {
        return Ok(None);
    }
    let ideal = Ideal::new(m.ring(), gens.clone())?;
    let report = is_smooth_curve_with_budget(&ideal, budget)?;
    Ok(curve_passes(&report, 5).then_some((gens, report)))
}

/// Elliptic normal quintic in P⁴ cut out by the 4×4 Pfaffians of a
/// random skew matrix of linear forms.
pub fn build_index5_pfaffian(height: u32, seed: u64, max_retries: u32) -> Result<CurveCertificate> {
    let mut cfg = BuildConfig::new(seed).with_height(height);
    cfg.max_retries = max_retries;
    build_index5_pfaffian_cfg(&cfg)
}

pub fn build_index5_pfaffian_cfg(cfg: &BuildConfig) -> Result<CurveCertificate> {
    let p4 = p4_ring();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let ((gens, report), retries) = run_attempts(cfg.max_retries, |_| {
        let m = SkewMatrix::random(&mut rng, &p4, cfg.height);
        index5_attempt(&m, cfg.pair_budget)
    })?;
    let inputs = InputsEcho::from_config(cfg);
    Ok(CurveCertificate::assemble(
        "index5_pfaffian",
        &p4,
        gens,
        &report,
        cfg.seed,
        retries,
        inputs,
        Some(split_plan_index5()),
    ))
}
