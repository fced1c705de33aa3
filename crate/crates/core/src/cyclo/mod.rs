//! Necklace coefficients, the cyclotomic product identity, and the
//! subring of elements whose roots are all zero or roots of unity.

pub mod completion;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use completion::CompletionElem;

use crate::arith::{divisors, mobius, totient};
use crate::error::{Error, Result};
use crate::ghost::ghost;
use crate::poly::{cyclotomic, cyclotomic_integer_coeffs};
use crate::scalar::{rat, Rational};
use crate::{MElem, MonicPoly};

/// `c_1, ..., c_N`, stored 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecklaceVector {
    values: Vec<Rational>,
}

impl NecklaceVector {
    pub fn new(values: Vec<Rational>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `c_n` for `1 <= n <= N`.
    pub fn get(&self, n: usize) -> Option<&Rational> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }
}

/// Moebius inversion of a ghost vector `t_0..t_N` into `c_1..c_N`.
pub fn necklace_from_ghost(t: &[Rational]) -> NecklaceVector {
    let n_max = t.len().saturating_sub(1);
    let values = (1..=n_max as u64)
        .map(|n| {
            let s: Rational = divisors(n)
                .into_iter()
                .map(|d| &t[d as usize] * rat(mobius(n / d)))
                .sum();
            s / rat(n as i64)
        })
        .collect();
    NecklaceVector::new(values)
}

/// `c_n = (1/n) sum_{d | n} mu(n/d) t_d(r)` for `1 <= n <= N`.
pub fn necklace_coeffs(r: &MElem, n: usize) -> NecklaceVector {
    necklace_from_ghost(ghost(r, n).values())
}

/// Whether every `c_n` with `n <= N` is an integer.
pub fn integrality_check(r: &MElem, n: usize) -> Result<bool> {
    if !r.has_integer_coefficients() {
        return Err(Error::NotIntegerCoefficients);
    }
    Ok(necklace_coeffs(r, n).is_integral())
}

/// `x^d f(1/x)` as a power series truncated after `x^N`.
pub fn reversed_series(f: &MonicPoly, n: usize) -> Vec<Rational> {
    let mut s: Vec<Rational> = f.coeffs().iter().rev().cloned().collect();
    s.resize(n + 1, rat(0));
    s.truncate(n + 1);
    s
}

/// `prod_{n=1}^{len} (1 - x^n)^{c_n}` truncated after `x^N`, with `c[n-1]`
/// holding `c_n`. Exponents may be arbitrary rationals.
pub fn cyclotomic_product_series(c: &[Rational], n: usize) -> Vec<Rational> {
    let mut acc = vec![rat(0); n + 1];
    acc[0] = rat(1);
    for (i, e) in c.iter().enumerate() {
        let step = i + 1;
        if e.is_zero() || step > n {
            continue;
        }
        // generalized binomial (1 - y)^e = sum_j binom(e, j) (-y)^j, y = x^step
        let mut factor = vec![rat(0); n + 1];
        let mut b = rat(1);
        for j in 0..=n / step {
            if j > 0 {
                b = b * (e - rat(j as i64 - 1)) / rat(j as i64);
            }
            if b.is_zero() {
                break;
            }
            factor[j * step] = if j % 2 == 0 { b.clone() } else { -b.clone() };
        }
        acc = series_mul(&acc, &factor, n);
    }
    acc
}

fn series_mul(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![rat(0); n + 1];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Compares `x^d f(1/x)` with `prod (1 - x^n)^{c_n}` through `x^N`.
pub fn cyclotomic_identity_check(f: &MonicPoly, n: usize) -> bool {
    let c = necklace_coeffs(&MElem::from_poly(f.clone()), n);
    reversed_series(f, n) == cyclotomic_product_series(c.values(), n)
}

/// `x^a * prod Phi_n^{e_n}` for a single monic integer polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    pub x_power: usize,
    pub phi: BTreeMap<u64, u32>,
}

fn integer_coeffs(f: &MonicPoly) -> Result<Vec<BigInt>> {
    f.coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.numer().clone()))
        .collect::<Option<_>>()
        .ok_or(Error::NotIntegerCoefficients)
}

/// Quotient of `num` by the monic `den` when the division is exact.
fn div_monic(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    let dd = den.len() - 1;
    if num.len() < den.len() {
        return None;
    }
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = std::mem::take(&mut rem[k + dd]);
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate().take(dd) {
                rem[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    rem[..dd].iter().all(Zero::is_zero).then_some(quot)
}

/// Kronecker-style trial division by cyclotomic polynomials.
///
/// `None` when some factor is not cyclotomic. Candidates `n` run upward
/// while `n <= 2 D^2` for the current cofactor degree `D`, skipping those
/// with `phi(n) > D`; each accepted `Phi_n` is divided out completely
/// before moving on, so no index is revisited.
pub fn cyclotomic_factorization(f: &MonicPoly) -> Result<Option<CyclotomicFactorization>> {
    let coeffs = integer_coeffs(f)?;
    let x_power = coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut rest: Vec<BigInt> = coeffs[x_power..].to_vec();
    let mut phi = BTreeMap::new();
    if !rest[0].abs().is_one() {
        return Ok(None);
    }
    let mut n = 1u64;
    loop {
        let d = (rest.len() - 1) as u64;
        if d == 0 {
            return Ok(Some(CyclotomicFactorization { x_power, phi }));
        }
        if n > 2 * d * d {
            return Ok(None);
        }
        if totient(n) <= d {
            let p = cyclotomic_integer_coeffs(n);
            while let Some(q) = div_monic(&rest, &p) {
                rest = q;
                *phi.entry(n).or_insert(0) += 1;
            }
        }
        n += 1;
    }
}

/// Membership in the subring of integer-coefficient elements whose roots
/// are zero or roots of unity.
pub fn is_phi_member(r: &MElem) -> Result<bool> {
    Ok(
        cyclotomic_factorization(r.num())?.is_some()
            && cyclotomic_factorization(r.den())?.is_some(),
    )
}

/// Exponent of each `Phi_n` and of `x`, numerator minus denominator.
fn signed_factorization(r: &MElem) -> Result<(i64, BTreeMap<u64, i64>)> {
    let (Some(num), Some(den)) = (
        cyclotomic_factorization(r.num())?,
        cyclotomic_factorization(r.den())?,
    ) else {
        return Err(Error::NotPhiMember);
    };
    let mut phi: BTreeMap<u64, i64> = BTreeMap::new();
    for (n, e) in num.phi {
        *phi.entry(n).or_default() += i64::from(e);
    }
    for (n, e) in den.phi {
        *phi.entry(n).or_default() -= i64::from(e);
    }
    phi.retain(|_, e| *e != 0);
    Ok((num.x_power as i64 - den.x_power as i64, phi))
}

/// Coordinates of a member in the basis `[x], [1 - x^{-n}]`.
///
/// Peeling uses `[Phi_n] = sum_{d | n} mu(n/d) [x^d - 1]` and
/// `[x^d - 1] = [1 - x^{-d}] + d [x]`. The result is compared against the
/// Moebius inversion of the ghost vector up to the largest index involved.
pub fn phi_decompose(r: &MElem) -> Result<CompletionElem> {
    let (_, phi) = signed_factorization(r)?;
    let mut c: BTreeMap<u64, BigInt> = BTreeMap::new();
    for (&n, &e) in &phi {
        for d in divisors(n) {
            let mu = mobius(n / d);
            if mu != 0 {
                *c.entry(d).or_default() += BigInt::from(e * mu);
            }
        }
    }
    let ce = CompletionElem::new(BigInt::from(r.t0()), c, None)?;

    let top = phi.keys().copied().max().unwrap_or(1);
    let check = necklace_coeffs(r, top as usize);
    for n in 1..=top {
        let want = Rational::from_integer(ce.get(n));
        if check.get(n as usize) != Some(&want) {
            return Err(Error::DecompositionMismatch { index: n });
        }
    }
    Ok(ce)
}

/// Product of two members computed in the `[1 - x^{-n}]` basis.
///
/// Agrees with the root product but avoids resultants whose degree is the
/// product of the input degrees, which matters once the cyclotomic
/// exponents grow.
pub fn phi_mul(a: &MElem, b: &MElem) -> Result<MElem> {
    let (ca, cb) = (phi_decompose(a)?, phi_decompose(b)?);
    let level = crate::arith::lcm(ca.period(), cb.period());
    CompletionElem::mul(&ca, &cb, level).to_melem()
}

/// `x^{x_power} prod Phi_d^{e_d}` as a reduced ratio.
pub(crate) fn cyclotomic_exponents_to_elem(x_power: i64, phi: &[(u64, i64)]) -> MElem {
    let mut num = MonicPoly::x_pow(x_power.max(0) as usize);
    let mut den = MonicPoly::x_pow((-x_power).max(0) as usize);
    for &(d, e) in phi {
        match e.signum() {
            1 => num = num.mul(&cyclotomic(d).pow(e as u64)),
            -1 => den = den.mul(&cyclotomic(d).pow(e.unsigned_abs())),
            _ => {}
        }
    }
    // distinct cyclotomic factors and x are pairwise coprime
    MElem::from_coprime(num, den)
}

/// Whether every nonzero root of `r` is an `N`-th root of unity.
pub fn roots_are_nth_roots_of_unity(r: &MElem, n: u64) -> Result<bool> {
    let mut all = true;
    for f in [r.num(), r.den()] {
        match cyclotomic_factorization(f)? {
            Some(fac) => all &= fac.phi.keys().all(|d| n.is_multiple_of(*d)),
            None => return Ok(false),
        }
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_frac;

    fn poly(v: &[i64]) -> MonicPoly {
        MonicPoly::from_ints(v).unwrap()
    }

    fn el(v: &[i64]) -> MElem {
        MElem::from_poly(poly(v))
    }

    fn rats(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn necklace_examples() {
        assert_eq!(
            necklace_coeffs(&el(&[-2, 1]), 6).values(),
            rats(&[2, 1, 2, 3, 6, 9])
        );
        assert_eq!(
            necklace_coeffs(&el(&[-1, 0, 0, 1]), 6).values(),
            rats(&[0, 0, 1, 0, 0, 0])
        );
        assert_eq!(
            necklace_coeffs(&el(&[-1, 1]), 4).values(),
            rats(&[1, 0, 0, 0])
        );
    }

    #[test]
    fn integrality_examples() {
        assert!(integrality_check(&el(&[-2, 1]), 40).unwrap());
        assert!(integrality_check(&el(&[1, -3, 1]), 40).unwrap());
        let half = MElem::root(rat_frac(1, 2));
        assert_eq!(
            integrality_check(&half, 4),
            Err(Error::NotIntegerCoefficients)
        );
        // not a guard violation, just non-integral data
        assert!(!necklace_coeffs(&half, 4).is_integral());
    }

    #[test]
    fn identity_examples() {
        assert!(cyclotomic_identity_check(&poly(&[-2, 1]), 3));
        assert!(cyclotomic_identity_check(&poly(&[-1, 1]), 5));
        assert!(cyclotomic_identity_check(&MonicPoly::x(), 5));
        assert!(cyclotomic_identity_check(&poly(&[3, -1, 0, 2, 1]), 20));
    }

    #[test]
    fn corrupted_exponent_breaks_identity() {
        let f = poly(&[-2, 1]);
        let mut c = necklace_coeffs(&MElem::from_poly(f.clone()), 6)
            .values()
            .to_vec();
        c[2] += rat(1);
        assert_ne!(reversed_series(&f, 6), cyclotomic_product_series(&c, 6));
    }

    #[test]
    fn membership_examples() {
        let r = MElem::new(poly(&[1, 0, 1]), MonicPoly::x());
        assert!(is_phi_member(&r).unwrap());
        assert!(!is_phi_member(&el(&[-2, 1])).unwrap());
        assert!(!is_phi_member(&el(&[-1, -1, 1])).unwrap());
        assert!(!is_phi_member(&el(&[-2, 0, 1])).unwrap());
        assert_eq!(
            is_phi_member(&MElem::root(rat_frac(1, 3))),
            Err(Error::NotIntegerCoefficients)
        );
    }

    #[test]
    fn decompose_examples() {
        let ce = phi_decompose(&el(&[1, 0, 1])).unwrap();
        assert_eq!(
            ce,
            CompletionElem::from_pairs(2, &[(2, -1), (4, 1)]).unwrap()
        );
        let ce = phi_decompose(&MElem::basis(3)).unwrap();
        assert_eq!(ce, CompletionElem::from_pairs(0, &[(3, 1)]).unwrap());
        assert_eq!(phi_decompose(&MElem::x()).unwrap(), CompletionElem::x());
        assert_eq!(phi_decompose(&el(&[-2, 1])), Err(Error::NotPhiMember));
    }

    #[test]
    fn decompose_roundtrip_on_quotient() {
        let num = cyclotomic::<Rational>(12)
            .mul(&cyclotomic(5))
            .mul(&MonicPoly::x_pow(2));
        let den = cyclotomic::<Rational>(3).pow(2).mul(&cyclotomic(1));
        let r = MElem::new(num, den);
        let ce = phi_decompose(&r).unwrap();
        assert_eq!(ce.to_melem().unwrap(), r);
    }

    #[test]
    fn basis_product_agrees_with_root_product() {
        let a = MElem::new(poly(&[1, 0, 1]), poly(&[0, 1]));
        let b = MElem::new(poly(&[1, 1, 1]), poly(&[-1, 0, 1]));
        assert_eq!(phi_mul(&a, &b).unwrap(), a.mul(&b));
        assert_eq!(phi_mul(&a, &el(&[-2, 1])), Err(Error::NotPhiMember));
    }

    #[test]
    fn nth_roots() {
        let r = MElem::new(poly(&[-1, 0, 0, 0, 0, 0, 1]), MonicPoly::x());
        assert!(roots_are_nth_roots_of_unity(&r, 6).unwrap());
        assert!(!roots_are_nth_roots_of_unity(&r, 4).unwrap());
        assert!(!roots_are_nth_roots_of_unity(&el(&[-2, 1]), 6).unwrap());
    }
}
