//! Coefficient fields.
//!
//! Everything in the polynomial, ring and ghost layers is written against
//! [`Scalar`], a characteristic-zero field with exact zero tests. The exact
//! instantiation is [`Rational`]; `f64`/`f32` are provided for quick numeric
//! experiments where rounding is acceptable.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational number, always in lowest terms.
pub type Rational = BigRational;

/// A field of characteristic zero.
///
/// The `*_ref` methods exist so big-number instantiations can avoid cloning
/// operands on every step of the inner loops.
pub trait Scalar: Num + Clone + Debug + PartialEq + Send + Sync + 'static {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn div_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_bigint(n: &BigInt) -> Self;

    fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

impl Scalar for BigRational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn add_ref(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn sub_ref(&self, rhs: &Self) -> Self {
                self - rhs
            }
            fn mul_ref(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn div_ref(&self, rhs: &Self) -> Self {
                self / rhs
            }
            fn neg_ref(&self) -> Self {
                -self
            }
            fn from_i64(n: i64) -> Self {
                n as $t
            }
            fn from_bigint(n: &BigInt) -> Self {
                n.to_f64().map(|v| v as $t).unwrap_or(<$t>::NAN)
            }
        }
    };
}

float_scalar!(f64);
float_scalar!(f32);

pub fn rat(n: i64) -> Rational {
    Rational::from_i64(n)
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Formats as `"p"` for integers and `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Natural log of `|r|`, robust to values far outside the `f64` range.
pub fn ln_abs(r: &Rational) -> f64 {
    fn ln_big(n: &BigInt) -> f64 {
        let n = n.abs();
        let bits = n.bits();
        if bits <= 1000 {
            return n.to_f64().unwrap_or(f64::INFINITY).ln();
        }
        let shift = bits - 64;
        let top: BigInt = &n >> shift;
        top.to_f64().unwrap_or(f64::INFINITY).ln() + shift as f64 * std::f64::consts::LN_2
    }
    if r.is_zero() {
        return f64::NEG_INFINITY;
    }
    ln_big(r.numer()) - ln_big(r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6").unwrap(), rat(6));
        assert_eq!(parse_rational("-4/6").unwrap(), rat_frac(-2, 3));
        assert_eq!(format_rational(&rat_frac(-2, 3)), "-2/3");
        assert_eq!(format_rational(&rat(-5)), "-5");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn ln_abs_large() {
        let big = Rational::from_integer(BigInt::from(2).pow(4000u32));
        assert!((ln_abs(&big) - 4000.0 * std::f64::consts::LN_2).abs() < 1e-9);
        assert!((ln_abs(&rat_frac(-1, 8)) + 8f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn pow_u_matches_repeated_product() {
        assert_eq!(rat_frac(2, 3).pow_u(5), rat_frac(32, 243));
        assert_eq!(rat(7).pow_u(0), rat(1));
        assert_eq!(3.0f64.pow_u(4), 81.0);
    }
}
