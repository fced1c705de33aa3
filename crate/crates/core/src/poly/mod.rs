//! Monic polynomials over a [`Scalar`] field.
//!
//! [`Monic`] is the atom of the whole crate: an element of the ring is a
//! reduced ratio of two of them. Besides the usual product, division and gcd
//! this module provides the two root-level operations the ring needs,
//! [`root_product`] and [`power_roots`], both computed through exact
//! resultants, and the cyclotomic polynomials.

mod cyclotomic;
pub(crate) mod dense;
mod resultant;

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

pub use cyclotomic::{cyclotomic, cyclotomic_integer_coeffs};
pub use resultant::{
    power_roots, resultant, root_product, root_product_power_sums, root_product_resultant,
    RESULTANT_ROUTE_MAX_DEGREE,
};

/// A monic polynomial, stored as ascending coefficients ending in `1`.
///
/// The degree-zero polynomial `1` is the empty product; the zero polynomial
/// is not representable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monic<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Monic<T> {
    /// Divides `raw` through by its leading coefficient.
    ///
    /// Trailing zeros are ignored, so `[2, 2, 0]` normalizes to `x + 1`.
    pub fn normalize(raw: Vec<T>) -> Result<Self> {
        let mut raw = raw;
        dense::trim(&mut raw);
        if raw.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::from_trimmed(dense::make_monic(&raw)))
    }

    /// Accepts `coeffs` only if it is already monic.
    pub fn from_coeffs(coeffs: Vec<T>) -> Result<Self> {
        match coeffs.last() {
            None => Err(Error::ZeroPolynomial),
            Some(c) if c.is_one() => Ok(Self { coeffs }),
            Some(c) => Err(Error::NotMonic(format!("{c:?}"))),
        }
    }

    pub(crate) fn from_trimmed(coeffs: Vec<T>) -> Self {
        debug_assert!(coeffs.last().is_some_and(|c| c.is_one()));
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![T::one()],
        }
    }

    pub fn x() -> Self {
        Self::x_pow(1)
    }

    pub fn x_pow(n: usize) -> Self {
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        Self { coeffs }
    }

    /// `x^n - 1` for `n >= 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        assert!(n >= 1, "x^0 - 1 is the zero polynomial");
        let mut p = Self::x_pow(n);
        p.coeffs[0] = T::one().neg_ref();
        p
    }

    /// `x - root`.
    pub fn linear(root: T) -> Self {
        Self {
            coeffs: vec![root.neg_ref(), T::one()],
        }
    }

    /// Product of `x - r` over the given roots.
    pub fn from_roots<I: IntoIterator<Item = T>>(roots: I) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| acc.mul(&Self::linear(r)))
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn constant_term(&self) -> &T {
        &self.coeffs[0]
    }

    pub fn eval(&self, x: &T) -> T {
        dense::eval(&self.coeffs, x)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_trimmed(dense::mul(&self.coeffs, &other.coeffs))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Quotient and remainder; the quotient of two monics is monic or zero.
    pub fn divrem(&self, divisor: &Self) -> (Vec<T>, Vec<T>) {
        dense::divrem(&self.coeffs, &divisor.coeffs)
    }

    /// `self / divisor` if the division is exact.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.divrem(divisor);
        (r.is_empty() && !q.is_empty()).then(|| Self::from_trimmed(q))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self::from_trimmed(dense::gcd(&self.coeffs, &other.coeffs))
    }

    /// Multiplicity of `0` as a root.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Splits `self = x^a * rest` with `rest(0) != 0`.
    pub fn strip_x(&self) -> (usize, Self) {
        let a = self.zero_root_multiplicity();
        (a, Self::from_trimmed(self.coeffs[a..].to_vec()))
    }

    pub fn shift_x(&self, a: usize) -> Self {
        let mut coeffs = vec![T::zero(); a];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Lift to another scalar type via a coefficient map.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Monic<U> {
        Monic::from_trimmed(self.coeffs.iter().map(f).collect())
    }
}

impl Monic<Rational> {
    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_i64(c)).collect())
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl<T: fmt::Debug> fmt::Debug for Monic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Monic").field(&self.coeffs).finish()
    }
}

/// Human-readable form, highest power first: `x^2 - 5x + 6`.
impl fmt::Display for Monic<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag_s = crate::scalar::format_rational(&mag);
            let needs_coeff = k == 0 || !mag.is_one();
            if needs_coeff {
                if mag.is_integer() || k == 0 {
                    f.write_str(&mag_s)?;
                } else {
                    write!(f, "({mag_s})")?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}
