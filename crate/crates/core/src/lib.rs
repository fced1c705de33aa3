//! Exact arithmetic in the ring of ratios of monic polynomials.
//!
//! Elements are reduced fractions `[f/g]` of monic polynomials. Addition
//! multiplies the rational functions; multiplication sends
//! `[prod (x - a_i)] * [prod (x - b_j)]` to `[prod (x - a_i b_j)]`.
//!
//! The algebra is generic over a [`Scalar`] field. The aliases at the crate
//! root ([`MonicPoly`], [`MElem`], [`GhostVector`]) fix the exact rational
//! instantiation that the integrality, cyclotomic and endomorphism layers
//! are written for.

pub mod analysis;
pub mod arith;
pub mod cyclo;
pub mod endo;
pub mod error;
pub mod ghost;
pub mod json;
pub mod poly;
pub mod ring;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Rational, Scalar};

/// Monic polynomial with exact rational coefficients.
pub type MonicPoly = poly::Monic<Rational>;
/// Canonical element of the ring over the rationals.
pub type MElem = ring::MonicRatio<Rational>;
/// Exact truncated ghost vector.
pub type GhostVector = ghost::Ghost<Rational>;

pub use cyclo::{CompletionElem, NecklaceVector};
pub use endo::{EndoSpec, StarTable};

/// Exponential sum evaluated in double precision.
pub type UnitSum = analysis::UnitSumOf<f64>;
