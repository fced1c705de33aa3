//! Power-sum ("ghost") coordinates.
//!
//! `t_k([x - a]) = a^k`, extended additively, with `0^0 = 1` so that `t_0`
//! is the degree map. Each `t_k` is a ring homomorphism to the scalars and
//! the whole family is injective, which is what makes ghost vectors the
//! workhorse for every identity check in the crate.

use crate::error::{Error, Result};
use crate::poly::Monic;
use crate::ring::MonicRatio;
use crate::scalar::Scalar;

/// Truncated ghost vector `(t_0, ..., t_N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ghost<T> {
    values: Vec<T>,
}

impl<T: Scalar> Ghost<T> {
    pub fn new(values: Vec<T>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    /// Highest index `N`; `None` for an empty vector.
    pub fn level(&self) -> Option<usize> {
        self.values.len().checked_sub(1)
    }

    pub fn get(&self, k: usize) -> Option<&T> {
        self.values.get(k)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, T::add_ref)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, T::sub_ref)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip(other, T::mul_ref)
    }

    fn zip(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Self {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

/// `(t_0, ..., t_N)` of `[f]` by Newton's identities.
///
/// Writing `f = x^d + a_1 x^{d-1} + ... + a_d`, the recurrence is
/// `t_k = -(a_1 t_{k-1} + ... + a_{k-1} t_1 + k a_k)` with `a_j = 0` past
/// the degree.
pub fn power_sums<T: Scalar>(f: &Monic<T>, n: usize) -> Ghost<T> {
    let d = f.degree();
    let c = f.coeffs();
    let a = |j: usize| -> &T { &c[d - j] };
    let mut t: Vec<T> = Vec::with_capacity(n + 1);
    t.push(T::from_i64(d as i64));
    for k in 1..=n {
        let mut acc = T::zero();
        for j in 1..k.min(d + 1) {
            if !a(j).is_zero() && !t[k - j].is_zero() {
                acc = acc.add_ref(&a(j).mul_ref(&t[k - j]));
            }
        }
        if k <= d {
            acc = acc.add_ref(&T::from_i64(k as i64).mul_ref(a(k)));
        }
        t.push(acc.neg_ref());
    }
    Ghost::new(t)
}

/// The monic polynomial of degree `d` with power sums `t_1..t_d`.
pub fn coeffs_from_power_sums<T: Scalar>(t: &Ghost<T>, d: usize) -> Result<Monic<T>> {
    let vals = t.values();
    if vals.len() < d + 1 {
        return Err(Error::GhostTooShort {
            len: vals.len(),
            degree: d,
        });
    }
    let expected = T::from_i64(d as i64);
    if vals[0] != expected {
        return Err(Error::InconsistentDegree {
            expected: format!("{expected:?}"),
            found: format!("{:?}", vals[0]),
        });
    }
    // a[j] is the coefficient of x^{d-j}
    let mut a: Vec<T> = vec![T::one()];
    for k in 1..=d {
        let mut acc = vals[k].clone();
        for j in 1..k {
            if !a[j].is_zero() && !vals[k - j].is_zero() {
                acc = acc.add_ref(&a[j].mul_ref(&vals[k - j]));
            }
        }
        a.push(acc.neg_ref().div_ref(&T::from_i64(k as i64)));
    }
    a.reverse();
    Ok(Monic::from_coeffs(a).expect("leading coefficient is one"))
}

/// Ghost vector of an element: numerator minus denominator.
pub fn ghost<T: Scalar>(r: &MonicRatio<T>, n: usize) -> Ghost<T> {
    power_sums(r.num(), n).sub(&power_sums(r.den(), n))
}

/// A single coordinate `t_k(r)`.
pub fn ghost_at<T: Scalar>(r: &MonicRatio<T>, k: usize) -> T {
    ghost(r, k)
        .into_values()
        .pop()
        .expect("ghost vector is nonempty")
}

/// `2^{-m}` with `m` the first index where the ghost vectors differ, or
/// zero for equal elements.
///
/// The difference `r - s` has a nonzero coordinate at some index up to its
/// largest numerator/denominator degree, so the scan is finite.
pub fn ghost_distance<T: Scalar>(r: &MonicRatio<T>, s: &MonicRatio<T>) -> T {
    if r == s {
        return T::zero();
    }
    let diff = r.sub(s);
    let bound = diff.num().degree().max(diff.den().degree());
    let g = ghost(&diff, bound);
    let m = g
        .values()
        .iter()
        .position(|v| !v.is_zero())
        .expect("distinct elements have distinct ghost vectors");
    T::one().div_ref(&T::from_i64(2).pow_u(m as u64))
}

/// `lambda_n`: every root raised to the `n`-th power.
pub fn adams<T: Scalar>(r: &MonicRatio<T>, n: u64) -> MonicRatio<T> {
    r.adams(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_frac, Rational};

    type E = MonicRatio<Rational>;

    fn poly(v: &[i64]) -> Monic<Rational> {
        Monic::from_ints(v).unwrap()
    }

    fn rats(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(
            power_sums(&poly(&[2, -3, 1]), 3).values(),
            rats(&[2, 3, 5, 9])
        );
        assert_eq!(
            power_sums(&Monic::<Rational>::x(), 3).values(),
            rats(&[1, 0, 0, 0])
        );
        assert_eq!(
            power_sums(&poly(&[-1, 0, 0, 1]), 6).values(),
            rats(&[3, 0, 0, 3, 0, 0, 3])
        );
    }

    #[test]
    fn inverse_examples() {
        let t = Ghost::new(rats(&[2, 3, 5]));
        assert_eq!(coeffs_from_power_sums(&t, 2).unwrap(), poly(&[2, -3, 1]));
        let t = Ghost::new(rats(&[1, 7]));
        assert_eq!(coeffs_from_power_sums(&t, 1).unwrap(), poly(&[-7, 1]));
        let t = Ghost::new(rats(&[0]));
        assert_eq!(coeffs_from_power_sums(&t, 0).unwrap(), Monic::one());
        let t = Ghost::new(rats(&[3, 1, 1]));
        assert!(matches!(
            coeffs_from_power_sums(&t, 2),
            Err(Error::InconsistentDegree { .. })
        ));
        assert!(matches!(
            coeffs_from_power_sums(&Ghost::new(rats(&[2])), 2),
            Err(Error::GhostTooShort { .. })
        ));
    }

    #[test]
    fn ghost_examples() {
        let r = E::new(poly(&[-1, 0, 1]), Monic::x_pow(2));
        assert_eq!(ghost(&r, 4).values(), rats(&[0, 0, 2, 0, 2]));
        assert_eq!(ghost(&E::zero(), 5).values(), rats(&[0; 6]));
        assert_eq!(ghost(&E::root(rat(2)), 4).values(), rats(&[1, 2, 4, 8, 16]));
    }

    #[test]
    fn distance_examples() {
        assert_eq!(ghost_distance(&E::one(), &E::root(rat(2))), rat_frac(1, 2));
        assert_eq!(ghost_distance(&E::x(), &E::one()), rat_frac(1, 2));
        let r = E::new(poly(&[1, 1]), poly(&[3, 0, 1]));
        assert_eq!(ghost_distance(&r, &r), rat(0));
        // same degree and trace, differ first at t_2
        let a = E::from_poly(poly(&[0, -3, 1]));
        let b = E::from_poly(poly(&[2, -3, 1]));
        assert_eq!(ghost_distance(&a, &b), rat_frac(1, 4));
    }

    #[test]
    fn adams_examples() {
        assert_eq!(adams(&E::root(rat(3)), 2), E::root(rat(9)));
        assert_eq!(
            adams(&E::from_poly(poly(&[2, -3, 1])), 2),
            E::from_poly(poly(&[4, -5, 1]))
        );
        let r = E::new(poly(&[0, 2, -3, 1]), poly(&[5, 1]));
        assert_eq!(adams(&r, 0), E::one().scalar(r.t0()));
    }

    #[test]
    fn float_instantiation_tracks_exact_values() {
        let f: Monic<f64> = Monic::from_roots([1.5, -0.5, 2.0]);
        let t = power_sums(&f, 4);
        let want = [3.0, 3.0, 6.5, 11.25, 21.125];
        for (a, b) in t.values().iter().zip(want) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }
}
