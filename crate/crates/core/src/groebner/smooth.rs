//! Jacobian-criterion smoothness for projective schemes.
//!
//! The singular locus is cut out by the scheme's equations together with
//! the c × c minors of the Jacobian matrix, where c is the codimension.
//! Validity requires the scheme to be of pure codimension c; the caller's
//! claimed codimension is checked against `hilbert_data` before any minor
//! is formed. Emptiness of the locus (hence smoothness) is then decided by
//! the Hilbert polynomial.

use super::hilbert::{hilbert_data_with_budget, is_empty_with_budget};
use super::{Ideal, DEFAULT_PAIR_BUDGET};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Verdict bundle for the curve pipeline. `degree`, `genus`, and `smooth`
/// stay unset when the dimension check already failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveReport {
    pub dimension_ok: bool,
    pub dimension: i64,
    pub degree: Option<u64>,
    pub genus: Option<i64>,
    pub smooth: Option<bool>,
}

/// Determinant by Laplace expansion along the first row; the matrices in
/// scope are at most 4 × 4.
fn determinant(m: &[Vec<Poly>], ring: &crate::poly::Ring) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::constant(ring, crate::rational::rat(1));
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = Poly::zero(ring);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, p)| p.clone()).collect()
            })
            .collect();
        let cofactor = entry.checked_mul(&determinant(&minor, ring)).expect("same ring");
        det = if j % 2 == 0 {
            det.checked_add(&cofactor).expect("same ring")
        } else {
            det.checked_sub(&cofactor).expect("same ring")
        };
    }
    det
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Generators plus all `expected_codim` × `expected_codim` Jacobian
/// minors. Errors when `hilbert_data` disagrees with the claimed
/// codimension.
pub fn singular_locus(ideal: &Ideal, expected_codim: u32) -> Result<Ideal> {
    singular_locus_with_budget(ideal, expected_codim, DEFAULT_PAIR_BUDGET)
}

pub fn singular_locus_with_budget(
    ideal: &Ideal,
    expected_codim: u32,
    pair_budget: usize,
) -> Result<Ideal> {
    let ring = ideal.ring();
    let hd = hilbert_data_with_budget(ideal, pair_budget)?;
    let actual_codim = ring.ambient_dim() as i64 - hd.scheme_dimension();
    if actual_codim != expected_codim as i64 {
        return Err(Error::CodimensionMismatch { expected: expected_codim, actual: actual_codim });
    }

    let gens = ideal.generators();
    let nv = ring.num_vars();
    let jacobian: Vec<Vec<Poly>> =
        gens.iter().map(|g| (0..nv).map(|v| g.derivative(v)).collect()).collect();

    let c = expected_codim as usize;
    let mut locus = gens.to_vec();
    let mut seen: Vec<Poly> = Vec::new();
    for rows in combinations(gens.len(), c) {
        for cols in combinations(nv, c) {
            let sub: Vec<Vec<Poly>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&cl| jacobian[r][cl].clone()).collect())
                .collect();
            let minor = determinant(&sub, ring);
            if minor.is_zero() {
                continue;
            }
            let canon = minor.normalized();
            if seen.contains(&canon) {
                continue;
            }
            seen.push(canon.clone());
            locus.push(canon);
        }
    }
    Ideal::new(ring, locus)
}

/// Full curve certification: dimension 1 via `hilbert_data`, then the
/// Jacobian criterion with codimension = ambient dimension − 1.
pub fn is_smooth_curve(ideal: &Ideal) -> Result<CurveReport> {
    is_smooth_curve_with_budget(ideal, DEFAULT_PAIR_BUDGET)
}

pub fn is_smooth_curve_with_budget(ideal: &Ideal, pair_budget: usize) -> Result<CurveReport> {
    let hd = hilbert_data_with_budget(ideal, pair_budget)?;
    if hd.scheme_dimension() != 1 {
        return Ok(CurveReport {
            dimension_ok: false,
            dimension: hd.scheme_dimension(),
            degree: hd.degree(),
            genus: None,
            smooth: None,
        });
    }
    let codim = ideal.ring().ambient_dim() as u32 - 1;
    let locus = singular_locus_with_budget(ideal, codim, pair_budget)?;
    let smooth = is_empty_with_budget(&locus, pair_budget)?;
    Ok(CurveReport {
        dimension_ok: true,
        dimension: 1,
        degree: hd.degree(),
        genus: hd.arithmetic_genus(),
        smooth: Some(smooth),
    })
}
