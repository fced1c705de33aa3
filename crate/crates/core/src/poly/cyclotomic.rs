use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Monic;
use crate::arith::divisors;
use crate::scalar::Scalar;

type Coeffs = Arc<Vec<BigInt>>;

fn cache() -> &'static Mutex<HashMap<u64, Coeffs>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Coeffs>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Exact division by a monic integer polynomial; panics if not exact.
fn div_monic_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, ascending.
///
/// `x^n - 1` divided by every `Phi_d` with `d | n, d < n`. Results are
/// memoized behind a mutex; the lock is never held across the recursive
/// calls for the proper divisors.
pub fn cyclotomic_integer_coeffs(n: u64) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic polynomial index must be positive");
    if let Some(c) = cache().lock().expect("cyclotomic cache poisoned").get(&n) {
        return Arc::clone(c);
    }
    let len = usize::try_from(n).expect("cyclotomic index too large") + 1;
    let mut poly = vec![BigInt::zero(); len];
    poly[0] = -BigInt::one();
    poly[len - 1] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            let phi_d = cyclotomic_integer_coeffs(d);
            poly = div_monic_exact(&poly, &phi_d);
        }
    }
    let poly = Arc::new(poly);
    cache()
        .lock()
        .expect("cyclotomic cache poisoned")
        .entry(n)
        .or_insert_with(|| Arc::clone(&poly));
    poly
}

/// The `n`-th cyclotomic polynomial over any scalar field.
pub fn cyclotomic<T: Scalar>(n: u64) -> Monic<T> {
    let c = cyclotomic_integer_coeffs(n);
    Monic::from_trimmed(c.iter().map(T::from_bigint).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn ints(v: &[i64]) -> Monic<Rational> {
        Monic::from_ints(v).unwrap()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic::<Rational>(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic::<Rational>(2), ints(&[1, 1]));
        assert_eq!(cyclotomic::<Rational>(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic::<Rational>(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic::<Rational>(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_105_has_a_coefficient_two() {
        let c = cyclotomic_integer_coeffs(105);
        assert_eq!(c.len(), 49);
        assert!(c.iter().any(|v| *v == BigInt::from(-2)));
    }

    #[test]
    fn divisor_product_is_x_n_minus_one() {
        for n in 1..=64u64 {
            let prod = divisors(n)
                .into_iter()
                .fold(Monic::<Rational>::one(), |acc, d| acc.mul(&cyclotomic(d)));
            assert_eq!(prod, Monic::x_pow_minus_one(n as usize), "n = {n}");
        }
    }

    #[test]
    fn concurrent_access_is_consistent() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || cyclotomic_integer_coeffs(90 + t % 3)))
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let got = h.join().unwrap();
            assert_eq!(*got, *cyclotomic_integer_coeffs(90 + t as u64 % 3));
        }
    }
}
