//! Elements of the ring of ratios of monic polynomials.
//!
//! Addition multiplies the rational functions, negation inverts them, and
//! multiplication is the bilinear extension of [`root_product`]. Every value
//! is kept as a reduced fraction, so ring equality is structural equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::{power_roots, root_product, Monic};
use crate::scalar::{Rational, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonicRatio<T> {
    num: Monic<T>,
    den: Monic<T>,
}

impl<T: Scalar> MonicRatio<T> {
    /// Reduces `num / den` to lowest terms.
    pub fn new(num: Monic<T>, den: Monic<T>) -> Self {
        if num.is_one() || den.is_one() {
            return Self { num, den };
        }
        // powers of x cancel directly; the gcd then runs on the small cofactors
        let (a, f) = num.strip_x();
        let (b, g) = den.strip_x();
        let common = a.min(b);
        let (f, g) = if f.is_one() || g.is_one() {
            (f, g)
        } else {
            let h = f.gcd(&g);
            if h.is_one() {
                (f, g)
            } else {
                (
                    f.div_exact(&h).expect("gcd divides numerator"),
                    g.div_exact(&h).expect("gcd divides denominator"),
                )
            }
        };
        Self {
            num: f.shift_x(a - common),
            den: g.shift_x(b - common),
        }
    }

    /// Caller guarantees `gcd(num, den) = 1`.
    pub(crate) fn from_coprime(num: Monic<T>, den: Monic<T>) -> Self {
        Self { num, den }
    }

    /// The additive identity `[1]`.
    pub fn zero() -> Self {
        Self {
            num: Monic::one(),
            den: Monic::one(),
        }
    }

    /// The multiplicative identity `[x - 1]`.
    pub fn one() -> Self {
        Self::from_poly(Monic::linear(T::one()))
    }

    /// `[x]`, the element every zero root contributes.
    pub fn x() -> Self {
        Self::from_poly(Monic::x())
    }

    pub fn from_poly(f: Monic<T>) -> Self {
        Self {
            num: f,
            den: Monic::one(),
        }
    }

    /// `[x - root]`.
    pub fn root(root: T) -> Self {
        Self::from_poly(Monic::linear(root))
    }

    /// `[x^n - 1]`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        Self::from_poly(Monic::x_pow_minus_one(n))
    }

    /// `[1 - x^{-n}] = [(x^n - 1) / x^n]`.
    pub fn basis(n: usize) -> Self {
        Self {
            num: Monic::x_pow_minus_one(n),
            den: Monic::x_pow(n),
        }
    }

    pub fn num(&self) -> &Monic<T> {
        &self.num
    }

    pub fn den(&self) -> &Monic<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The degree homomorphism `t_0`.
    pub fn t0(&self) -> i64 {
        self.num.degree() as i64 - self.den.degree() as i64
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let pos = root_product(&self.num, &other.num).mul(&root_product(&self.den, &other.den));
        let neg = root_product(&self.num, &other.den).mul(&root_product(&self.den, &other.num));
        Self::new(pos, neg)
    }

    /// `n * self`, the rational function raised to the `n`-th power.
    pub fn scalar(&self, n: i64) -> Self {
        let e = n.unsigned_abs();
        // reduced fractions stay reduced under powers
        let r = Self {
            num: self.num.pow(e),
            den: self.den.pow(e),
        };
        if n < 0 {
            r.neg()
        } else {
            r
        }
    }

    /// The Adams operation: every root raised to the `n`-th power.
    pub fn adams(&self, n: u64) -> Self {
        Self::new(power_roots(&self.num, n), power_roots(&self.den, n))
    }

    /// `Some(c)` when `self = c * [x]`.
    pub fn as_x_multiple(&self) -> Option<i64> {
        let pure = |p: &Monic<T>| p.zero_root_multiplicity() == p.degree();
        (pure(&self.num) && pure(&self.den)).then(|| self.t0())
    }

    /// Membership in the ideal `I_N` of elements with `t_k = 0` for all
    /// `k >= N`.
    ///
    /// For `N >= 1` this is exactly the integer multiples of `[x]`: any
    /// nonzero root makes infinitely many ghost coordinates nonzero.
    pub fn in_ideal(&self, n: u64) -> bool {
        if n == 0 {
            self.is_zero()
        } else {
            self.as_x_multiple().is_some()
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> MonicRatio<U> {
        MonicRatio {
            num: self.num.map(&f),
            den: self.den.map(&f),
        }
    }
}

impl MonicRatio<Rational> {
    pub fn has_integer_coefficients(&self) -> bool {
        self.num.has_integer_coefficients() && self.den.has_integer_coefficients()
    }
}

impl<T: Scalar> Default for MonicRatio<T> {
    fn default() -> Self {
        Self::zero()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr<&MonicRatio<T>> for &MonicRatio<T> {
            type Output = MonicRatio<T>;
            fn $method(self, rhs: &MonicRatio<T>) -> MonicRatio<T> {
                MonicRatio::$method(self, rhs)
            }
        }
        impl<T: Scalar> $tr for MonicRatio<T> {
            type Output = MonicRatio<T>;
            fn $method(self, rhs: MonicRatio<T>) -> MonicRatio<T> {
                MonicRatio::$method(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<T: Scalar> Neg for &MonicRatio<T> {
    type Output = MonicRatio<T>;
    fn neg(self) -> MonicRatio<T> {
        MonicRatio::neg(self)
    }
}

impl<T: Scalar> Neg for MonicRatio<T> {
    type Output = MonicRatio<T>;
    fn neg(self) -> MonicRatio<T> {
        MonicRatio::neg(&self)
    }
}

impl<T: fmt::Debug> fmt::Debug for MonicRatio<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MonicRatio")
            .field("num", &self.num)
            .field("den", &self.den)
            .finish()
    }
}

/// Bracket notation: `[x^2 - 1]`, `[(x - 1)/x]`.
impl fmt::Display for MonicRatio<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Monic<Rational>| {
            let nonzero = p
                .coeffs()
                .iter()
                .filter(|c| !num_traits::Zero::is_zero(*c))
                .count();
            if nonzero > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den.is_one() {
            write!(f, "[{}]", self.num)
        } else {
            write!(f, "[{}/{}]", wrap(&self.num), wrap(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ghost::ghost;

    type E = MonicRatio<Rational>;

    fn poly(v: &[i64]) -> Monic<Rational> {
        Monic::from_ints(v).unwrap()
    }

    fn el(v: &[i64]) -> E {
        E::from_poly(poly(v))
    }

    fn frac(n: &[i64], d: &[i64]) -> E {
        E::new(poly(n), poly(d))
    }

    #[test]
    fn addition_examples() {
        assert_eq!(el(&[-2, 1]) + el(&[-3, 1]), el(&[6, -5, 1]));
        assert_eq!(frac(&[-1, 1], &[0, 1]) + E::x(), el(&[-1, 1]));
        let r = el(&[6, -5, 1]);
        assert_eq!(&r + &E::zero(), r);
    }

    #[test]
    fn negation_examples() {
        assert_eq!(-el(&[-2, 1]), frac(&[1], &[-2, 1]));
        assert_eq!(-E::zero(), E::zero());
        let r = frac(&[1, 1], &[0, 0, 1]);
        assert_eq!(-(-r.clone()), r);
    }

    #[test]
    fn multiplication_examples() {
        let r = el(&[6, -5, 1]);
        assert_eq!(&E::one() * &r, r);
        assert_eq!(
            el(&[-1, 0, 1]) * el(&[-1, 0, 0, 0, 1]),
            el(&[-1, 0, 0, 0, 1]).scalar(2)
        );
        let lhs = frac(&[-1, 1], &[0, 1]) * el(&[-1, 0, 1]);
        assert_eq!(lhs, frac(&[-1, 0, 1], &[0, 0, 1]));
        // cross-check through ghost coordinates: t_k = 2 [2|k] - 2
        let g = ghost(&lhs, 4);
        assert_eq!(
            g.values(),
            ghost(&(el(&[-1, 0, 1]) - E::x().scalar(2)), 4).values()
        );
        assert_eq!(E::x() * E::x(), E::x());
    }

    #[test]
    fn scalar_examples() {
        assert_eq!(
            el(&[-2, 1]).scalar(3),
            el(&[-2, 1]).scalar(1) + el(&[-2, 1]).scalar(2)
        );
        assert_eq!(el(&[-2, 1]).scalar(3), E::from_poly(poly(&[-2, 1]).pow(3)));
        assert_eq!(E::x().scalar(-1), frac(&[1], &[0, 1]));
        assert_eq!(el(&[6, -5, 1]).scalar(0), E::zero());
    }

    #[test]
    fn equality_examples() {
        assert_eq!(el(&[-1, 0, 1]), el(&[-1, 1]) + el(&[1, 1]));
        assert_ne!(E::x(), E::one());
        assert_eq!(frac(&[-1, 1], &[-1, 1]), E::zero());
    }

    #[test]
    fn x_absorbs_by_degree() {
        let r = frac(&[2, 3, 1], &[5, 1]);
        assert_eq!(&E::x() * &r, E::x().scalar(r.t0()));
    }

    #[test]
    fn ideal_membership() {
        assert!(E::zero().in_ideal(0));
        assert!(!E::x().in_ideal(0));
        assert!(E::x().scalar(-3).in_ideal(5));
        assert!(!E::basis(3).in_ideal(1));
        assert!(!el(&[-2, 1]).in_ideal(7));
    }

    #[test]
    fn display() {
        assert_eq!(frac(&[-1, 1], &[0, 1]).to_string(), "[(x - 1)/x]");
        assert_eq!(el(&[-1, 0, 1]).to_string(), "[x^2 - 1]");
        assert_eq!(E::zero().to_string(), "[1]");
    }
}
