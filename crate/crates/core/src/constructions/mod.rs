//! Construction planning: descent obstructions, Künneth bookkeeping,
//! section counts, and the Riemann-Hurwitz genus check.
//!
//! A plan records, for a Brauer class of index 4 or 5, the auxiliary
//! class, the product ambient, the bundle twist whose section cuts the
//! curve, and the descent obstruction — which the torsion arithmetic
//! forces to vanish. Builders for the explicit models live in a
//! submodule; certificates and their verification in another.

mod builders;
mod certificate;

pub use builders::{
    build_index2, build_index2_cfg, build_index3, build_index3_cfg, build_index4_split,
    build_index4_split_cfg, build_index5_pfaffian, build_index5_pfaffian_cfg, pfaffian4,
    BuildConfig, Index3Mode, SkewMatrix,
};
pub use certificate::{
    verify_certificate, verify_certificate_with_budget, CurveCertificate, InputsEcho,
    InvariantsReport, VerifyReport,
};

use crate::brauer::{class_combine, BrauerClassQ};
use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// Twist (m, n) of O(m) ⊠ O(n) on a product; `omega_twist` marks the
/// cotangent variant O(m) ⊠ Ω¹(n), only meaningful when the second
/// factor is positive-dimensional.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BundleTwist {
    pub m: i64,
    pub n: i64,
    pub omega_twist: bool,
}

impl BundleTwist {
    pub fn plain(m: i64, n: i64) -> BundleTwist {
        BundleTwist { m, n, omega_twist: false }
    }

    pub fn with_omega(m: i64, n: i64) -> BundleTwist {
        BundleTwist { m, n, omega_twist: true }
    }
}

/// Bookkeeping for one construction case: which classes, which product,
/// which bundle, and the (vanishing) obstruction to descending it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionPlan {
    pub alpha: BrauerClassQ,
    pub index_case: u8,
    pub y_class: Option<BrauerClassQ>,
    pub x_dim: i64,
    pub y_dim: Option<i64>,
    pub bundle: Option<BundleTwist>,
    pub obstruction: BrauerClassQ,
    pub obstruction_vanishes: bool,
    pub bundle_rank: Option<u64>,
    pub expected_sections: Option<u64>,
}

/// Obstruction of O(m) on the Severi-Brauer variety of alpha: m·alpha.
pub fn descent_obstruction(m: i64, alpha: &BrauerClassQ) -> BrauerClassQ {
    alpha.scale(m)
}

/// Obstruction of the twist on X × Y: t.m·alpha + t.n·beta. The Ω¹
/// variant contributes the same way — the cotangent sheaf itself
/// descends, only the O(n) twist obstructs.
pub fn kunneth_obstruction(
    t: &BundleTwist,
    alpha: &BrauerClassQ,
    beta: &BrauerClassQ,
) -> BrauerClassQ {
    class_combine(alpha, beta, t.m, t.n)
}

/// dim H⁰ of O(m, n) on P^a × P^b: C(m+a, a) · C(n+b, b).
pub fn kunneth_h0(m: u64, n: u64, a: u64, b: u64) -> u64 {
    num_integer::binomial(m + a, a) * num_integer::binomial(n + b, b)
}

/// Rank of the first-projection pushforward of O(m, n) from P^a × P^b:
/// h⁰(O(n) on P^b) = C(n+b, b).
pub fn pushforward_rank(n: u64, b: u64) -> u64 {
    num_integer::binomial(n + b, b)
}

/// Genus of a double cover of a genus-`g_base` curve with the given
/// branch degree: 2g − 2 = 2(2·g_base − 2) + branch_degree.
pub fn riemann_hurwitz_check(g_base: i64, cover_degree: i64, branch_degree: i64) -> Result<i64> {
    if cover_degree != 2 {
        return Err(Error::BadInput(format!(
            "only double covers are supported, got degree {cover_degree}"
        )));
    }
    if branch_degree < 0 {
        return Err(Error::BadInput(format!("negative branch degree {branch_degree}")));
    }
    if branch_degree % 2 != 0 {
        return Err(Error::OddBranchDegree(branch_degree));
    }
    let g = 2 * g_base - 1 + branch_degree / 2;
    if g < 0 {
        return Err(Error::DegenerateCover(g));
    }
    Ok(g)
}

fn expect_index(alpha: &BrauerClassQ, expected: u64) -> Result<()> {
    let idx = alpha.index();
    if idx != BigUint::from(expected) {
        return Err(Error::WrongIndex { expected, actual: idx.to_string() });
    }
    Ok(())
}

/// Plan for an index-4 class: X × Y with Y the Severi-Brauer curve (or
/// point) of 2α, bundle O(2) ⊠ O(1), rank-2 pushforward.
pub fn plan_index4(alpha: &BrauerClassQ) -> Result<ConstructionPlan> {
    expect_index(alpha, 4)?;
    let y_class = alpha.scale(2);
    let y_dim = y_class.sb_dimension().to_i64().expect("index of 2α is 1 or 2");
    assert!(
        y_dim == 0 || y_dim == 1,
        "2α must have index 2 or 1, got Severi-Brauer dimension {y_dim}"
    );
    let bundle = BundleTwist::plain(2, 1);
    let obstruction = kunneth_obstruction(&bundle, alpha, &y_class);
    let obstruction_vanishes = obstruction.is_zero();
    let expected_sections = kunneth_h0(2, 1, 3, y_dim as u64);
    Ok(ConstructionPlan {
        alpha: alpha.clone(),
        index_case: 4,
        y_class: Some(y_class),
        x_dim: 3,
        y_dim: Some(y_dim),
        bundle: Some(bundle),
        obstruction,
        obstruction_vanishes,
        bundle_rank: Some(2),
        expected_sections: Some(expected_sections),
    })
}

/// Plan for an index-5 class: Y is the Severi-Brauer 4-fold of 2α,
/// bundle O(1) ⊠ Ω¹(2) of rank 4.
pub fn plan_index5(alpha: &BrauerClassQ) -> Result<ConstructionPlan> {
    expect_index(alpha, 5)?;
    let y_class = alpha.scale(2);
    let y_dim = y_class.sb_dimension().to_i64().expect("small dimension");
    assert_eq!(y_dim, 4, "2α of a period-5 class has period 5 again");
    let bundle = BundleTwist::with_omega(1, 2);
    let obstruction = kunneth_obstruction(&bundle, alpha, &y_class);
    let obstruction_vanishes = obstruction.is_zero();
    Ok(ConstructionPlan {
        alpha: alpha.clone(),
        index_case: 5,
        y_class: Some(y_class),
        x_dim: 4,
        y_dim: Some(y_dim),
        bundle: Some(bundle),
        obstruction,
        obstruction_vanishes,
        bundle_rank: Some(4),
        expected_sections: None,
    })
}
