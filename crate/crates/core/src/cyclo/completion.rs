//! Elements of the completion in the basis `[x], [1 - x^{-n}]`.
//!
//! An element is `c_0 [x] + sum_n c_n [1 - x^{-n}]` with integer
//! coefficients. Ghost coordinates are divisor sums,
//! `t_k = sum_{d | k} d c_d` for `k >= 1` and `t_0 = c_0`.
//!
//! The product rule used by [`CompletionElem::mul`] follows from
//! `[x^n - 1][x^m - 1] = gcd(n, m) [x^lcm(n, m) - 1]` together with
//! `[x][x] = [x]` and `[x] r = t_0(r) [x]`:
//!
//! ```text
//! [1 - x^-n][1 - x^-m] = ([x^n - 1] - n[x]) ([x^m - 1] - m[x])
//!                      = gcd [x^l - 1] - nm [x] - nm [x] + nm [x]
//!                      = gcd ([1 - x^-l] + l [x]) - nm [x]
//!                      = gcd [1 - x^-l]                  (gcd * lcm = nm)
//! [x][1 - x^-n]         = n [x] - n [x] = 0
//! ```

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{divisors, gcd, lcm};
use crate::cyclo::cyclotomic_exponents_to_elem;
use crate::error::{Error, Result};
use crate::MElem;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompletionElem {
    c0: BigInt,
    c: BTreeMap<u64, BigInt>,
    /// `None` for an exact, finitely supported element; `Some(L)` for a
    /// view truncated after index `L`.
    level: Option<u64>,
}

impl CompletionElem {
    /// Zero coefficients are dropped; indices must lie in `[1, level]`.
    pub fn new(c0: BigInt, c: BTreeMap<u64, BigInt>, level: Option<u64>) -> Result<Self> {
        if let Some(&bad) = c.keys().find(|&&n| n == 0 || level.is_some_and(|l| n > l)) {
            return Err(Error::InvalidArgument(format!(
                "basis index {bad} outside the allowed support"
            )));
        }
        if level == Some(0) {
            return Err(Error::InvalidArgument(
                "truncation level must be positive".into(),
            ));
        }
        let c = c.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(Self { c0, c, level })
    }

    pub fn from_pairs(c0: i64, pairs: &[(u64, i64)]) -> Result<Self> {
        let c = pairs.iter().map(|&(n, v)| (n, BigInt::from(v))).collect();
        Self::new(BigInt::from(c0), c, None)
    }

    pub fn zero() -> Self {
        Self {
            c0: BigInt::zero(),
            c: BTreeMap::new(),
            level: None,
        }
    }

    /// `[x]`.
    pub fn x() -> Self {
        Self {
            c0: BigInt::from(1),
            c: BTreeMap::new(),
            level: None,
        }
    }

    /// `[1 - x^{-n}]`.
    pub fn basis(n: u64) -> Self {
        assert!(n >= 1, "basis index must be positive");
        Self {
            c0: BigInt::zero(),
            c: BTreeMap::from([(n, BigInt::from(1))]),
            level: None,
        }
    }

    pub fn c0(&self) -> &BigInt {
        &self.c0
    }

    pub fn coeffs(&self) -> &BTreeMap<u64, BigInt> {
        &self.c
    }

    pub fn get(&self, n: u64) -> BigInt {
        self.c.get(&n).cloned().unwrap_or_default()
    }

    pub fn level(&self) -> Option<u64> {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c.is_empty()
    }

    /// Same coefficients viewed at a (possibly smaller) truncation level.
    pub fn truncate(&self, level: u64) -> Self {
        let level = self.level.map_or(level, |l| l.min(level));
        Self {
            c0: self.c0.clone(),
            c: self
                .c
                .range(..=level)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
            level: Some(level),
        }
    }

    /// `t_k`, a divisor sum for `k >= 1`.
    pub fn ghost(&self, k: u64) -> Result<BigInt> {
        if let Some(level) = self.level {
            if k > level {
                return Err(Error::BeyondLevel { k, level });
            }
        }
        if k == 0 {
            return Ok(self.c0.clone());
        }
        Ok(divisors(k)
            .into_iter()
            .filter_map(|d| self.c.get(&d).map(|v| v * BigInt::from(d)))
            .sum())
    }

    pub fn add(&self, other: &Self) -> Self {
        let level = min_level(self.level, other.level);
        let mut c = self.c.clone();
        for (k, v) in &other.c {
            *c.entry(*k).or_default() += v;
        }
        c.retain(|k, v| !v.is_zero() && level.is_none_or(|l| *k <= l));
        Self {
            c0: &self.c0 + &other.c0,
            c,
            level,
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self {
                level: self.level,
                ..Self::zero()
            };
        }
        Self {
            c0: &self.c0 * s,
            c: self.c.iter().map(|(k, v)| (*k, v * s)).collect(),
            level: self.level,
        }
    }

    /// Product truncated after index `level`.
    ///
    /// `c_l = sum_{lcm(n, m) = l} gcd(n, m) a_n b_m`; only divisors of `l`
    /// contribute, so every coefficient up to the level is exact.
    pub fn mul(&self, other: &Self, level: u64) -> Self {
        assert!(level >= 1, "truncation level must be positive");
        let level =
            min_level(Some(level), min_level(self.level, other.level)).expect("level is set");
        let mut c: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (&n, a) in &self.c {
            for (&m, b) in &other.c {
                let l = lcm(n, m);
                if l <= level {
                    *c.entry(l).or_default() += a * b * BigInt::from(gcd(n, m));
                }
            }
        }
        c.retain(|_, v| !v.is_zero());
        Self {
            c0: &self.c0 * &other.c0,
            c,
            level: Some(level),
        }
    }

    /// `(c_0 - sum n c_n) [x] + sum c_n [x^n - 1]` as a reduced fraction.
    ///
    /// The stored coefficients are used as-is, so a truncated view
    /// reconstructs the finitely supported element it displays.
    pub fn to_melem(&self) -> Result<MElem> {
        let mut x_power = self.c0.clone();
        // exponent of Phi_d is the sum of c_n over multiples n of d
        let mut phi: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (&n, v) in &self.c {
            x_power -= v * BigInt::from(n);
            for d in divisors(n) {
                *phi.entry(d).or_default() += v;
            }
        }
        let to_i64 = |b: &BigInt| {
            b.to_i64()
                .ok_or_else(|| Error::InvalidArgument(format!("exponent {b} too large")))
        };
        let phi = phi
            .into_iter()
            .map(|(d, e)| Ok((d, to_i64(&e)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(cyclotomic_exponents_to_elem(to_i64(&x_power)?, &phi))
    }

    /// Smallest `N` with support in the divisors of `N`, if finitely supported.
    pub fn period(&self) -> u64 {
        self.c.keys().fold(1, |acc, &n| lcm(acc, n))
    }
}

fn min_level(a: Option<u64>, b: Option<u64>) -> Option<u64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) | (None, x) => x,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ghost::ghost;

    fn ce(c0: i64, pairs: &[(u64, i64)]) -> CompletionElem {
        CompletionElem::from_pairs(c0, pairs).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn ghost_examples() {
        assert_eq!(ce(2, &[(2, -1), (4, 1)]).ghost(4).unwrap(), big(2));
        assert_eq!(ce(0, &[(3, 1)]).ghost(5).unwrap(), big(0));
        assert_eq!(ce(0, &[(3, 1)]).ghost(6).unwrap(), big(3));
        assert_eq!(ce(-7, &[(3, 1)]).ghost(0).unwrap(), big(-7));
        let t = ce(1, &[(2, 1)]).truncate(4);
        assert_eq!(t.ghost(5), Err(Error::BeyondLevel { k: 5, level: 4 }));
    }

    #[test]
    fn add_examples() {
        assert_eq!(ce(1, &[]).add(&ce(0, &[(3, 1)])), ce(1, &[(3, 1)]));
        let a = ce(4, &[(1, 2), (6, -3)]);
        assert!(a.add(&a.neg()).is_zero());
        let s = ce(0, &[(2, 1)]).add(&ce(0, &[(2, -1)]));
        assert!(s.coeffs().is_empty());
        assert_eq!(
            ce(0, &[(5, 1)]).truncate(3).add(&ce(0, &[])).coeffs().len(),
            0
        );
    }

    #[test]
    fn mul_examples() {
        let p = ce(0, &[(2, 1)]).mul(&ce(0, &[(3, 1)]), 12);
        assert_eq!(p.coeffs(), ce(0, &[(6, 1)]).coeffs());
        assert_eq!(p.ghost(6).unwrap(), big(6));
        let p = ce(0, &[(2, 1)]).mul(&ce(0, &[(4, 1)]), 12);
        assert_eq!(p.coeffs(), ce(0, &[(4, 2)]).coeffs());
        assert!(ce(1, &[]).mul(&ce(0, &[(5, 1)]), 12).is_zero());
        // lcm above the level is dropped
        let p = ce(0, &[(4, 1)]).mul(&ce(0, &[(3, 1)]), 10);
        assert!(p.is_zero());
        assert_eq!(p.level(), Some(10));
    }

    #[test]
    fn invalid_support() {
        assert!(CompletionElem::new(big(0), BTreeMap::from([(0, big(1))]), None).is_err());
        assert!(CompletionElem::new(big(0), BTreeMap::from([(9, big(1))]), Some(4)).is_err());
        let dropped = CompletionElem::new(big(0), BTreeMap::from([(2, big(0))]), None).unwrap();
        assert!(dropped.coeffs().is_empty());
    }

    #[test]
    fn reconstruction_matches_ghosts() {
        let e = ce(2, &[(2, -1), (4, 1)]);
        let m = e.to_melem().unwrap();
        assert_eq!(
            m,
            MElem::from_poly(crate::MonicPoly::from_ints(&[1, 0, 1]).unwrap())
        );
        let e = ce(1, &[(1, 2), (2, 1)]);
        let m = e.to_melem().unwrap();
        let g = ghost(&m, 8);
        for k in 0..=8u64 {
            assert_eq!(*g.get(k as usize).unwrap().numer(), e.ghost(k).unwrap());
        }
    }
}
