//! Exact-arithmetic toolkit for building and certifying genus-one
//! curves that split low-index division algebras over the rationals.
//!
//! The crate is organised in four layers:
//!
//! * [`poly`] — multivariate polynomials over arbitrary-precision
//!   rationals with graded reverse-lexicographic ordering, parsing, and
//!   canonical printing.
//! * [`groebner`] — Buchberger's algorithm with reduced bases, normal
//!   forms, Hilbert series, scheme dimension/degree/genus extraction,
//!   and a Jacobian smoothness test.
//! * [`brauer`] — Brauer classes of the rationals as finite lists of
//!   local invariants, Hilbert symbols, quaternion classes, period and
//!   index bookkeeping, and conic models.
//! * [`constructions`] — the four curve builders (double covers of
//!   conics, plane cubics, (2,2) intersections in P³, Pfaffian quintics
//!   in P⁴), descent-obstruction planning, and self-contained JSON
//!   certificates with independent re-verification.
//!
//! Every emitted curve carries a [`constructions::CurveCertificate`]
//! whose invariants were recomputed from the generator strings alone;
//! [`constructions::verify_certificate`] repeats that computation from
//! scratch and diffs the outcome.
//!
//! ```
//! use g1split_core::constructions::build_index2;
//! use g1split_core::rational::rat;
//! use g1split_core::verify_certificate;
//!
//! // (a, b) = (3, -7); height 3, seed 11, up to 20 retries.
//! let cert = build_index2(&rat(3), &rat(-7), 3, 11, 20)?;
//! assert!(cert.report.smooth && cert.report.genus == 1);
//! assert!(verify_certificate(&cert)?.matches);
//! # Ok::<(), g1split_core::Error>(())
//! ```

pub mod brauer;
pub mod constructions;
pub mod error;
pub mod groebner;
pub mod poly;
pub mod rational;

pub use brauer::{hilbert_symbol, quaternion_class, BrauerClassQ, Place, QuaternionPair};
pub use constructions::{verify_certificate, CurveCertificate};
pub use error::{Error, Result};
pub use groebner::{hilbert_data, is_smooth_curve, Ideal};
pub use poly::{Poly, Ring};
pub use rational::Rational;
