//! Numeric demonstrations around exponential sums and ghost growth.
//!
//! Everything here is floating point and generic over [`Float`]; the exact
//! algebra the demonstrations illustrate lives in [`crate::cyclo`].

use std::collections::BTreeSet;

use num_complex::Complex;
use num_traits::{Float, FloatConst, Zero};
use serde::Serialize;

use crate::cyclo::is_phi_member;
use crate::error::{Error, Result};
use crate::ghost::ghost;
use crate::scalar::ln_abs;
use crate::MElem;

/// `s_k = sum_j c_j exp(2 pi i k x_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitSumOf<F> {
    coefficients: Vec<Complex<F>>,
    angles: Vec<F>,
}

impl<F: Float + FloatConst> UnitSumOf<F> {
    /// Angles are reduced into `[0, 1)`.
    pub fn new(coefficients: Vec<Complex<F>>, angles: Vec<F>) -> Result<Self> {
        if coefficients.is_empty() || coefficients.len() != angles.len() {
            return Err(Error::InvalidArgument(format!(
                "need matching nonempty lists, got {} coefficients and {} angles",
                coefficients.len(),
                angles.len()
            )));
        }
        if angles.iter().any(|a| !a.is_finite()) {
            return Err(Error::InvalidArgument("angles must be finite".into()));
        }
        let angles = angles.into_iter().map(|a| a - a.floor()).collect();
        Ok(Self {
            coefficients,
            angles,
        })
    }

    pub fn coefficients(&self) -> &[Complex<F>] {
        &self.coefficients
    }

    pub fn angles(&self) -> &[F] {
        &self.angles
    }

    /// `J`, the number of terms.
    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    /// `s_k`. The phase `k x_j` is reduced mod 1 before the exponential so
    /// the error does not grow with the size of the angle.
    pub fn term(&self, k: u64) -> Complex<F> {
        let kf = F::from(k).expect("index fits the float type");
        let tau = F::TAU();
        self.coefficients.iter().zip(&self.angles).fold(
            Complex::new(F::zero(), F::zero()),
            |acc, (c, x)| {
                let phase = kf * *x;
                acc + *c * Complex::cis(tau * (phase - phase.floor()))
            },
        )
    }

    /// `sum_j |c_j|`.
    pub fn l1(&self) -> F {
        self.coefficients
            .iter()
            .fold(F::zero(), |a, c| a + c.norm())
    }

    /// `sum_j |c_j|^2`.
    pub fn l2_squared(&self) -> F {
        self.coefficients
            .iter()
            .fold(F::zero(), |a, c| a + c.norm_sqr())
    }
}

/// Distance to the nearest integer.
pub fn dist_to_int<F: Float>(x: F) -> F {
    (x - x.round()).abs()
}

/// Whether `max_j ||q x_j|| <= q^{-1/J}`.
pub fn shift_predicate<F: Float>(angles: &[F], q: u64) -> bool {
    let qf = F::from(q).expect("q fits the float type");
    let j = F::from(angles.len()).expect("J fits the float type");
    let bound = qf.powf(-j.recip());
    angles.iter().all(|&x| dist_to_int(qf * x) <= bound)
}

/// Smallest `q` in `1..=Q` satisfying [`shift_predicate`].
///
/// Every `q <= 2^J` qualifies because `||x|| <= 1/2 <= q^{-1/J}`; use
/// [`dirichlet_shift_from`] with `min_q = 2^J + 1` for a nontrivial shift.
pub fn dirichlet_shift<F: Float>(angles: &[F], max_q: u64) -> Result<u64> {
    dirichlet_shift_from(angles, 1, max_q)
}

/// Smallest `q` in `min_q..=max_q` satisfying [`shift_predicate`].
pub fn dirichlet_shift_from<F: Float>(angles: &[F], min_q: u64, max_q: u64) -> Result<u64> {
    if angles.is_empty() {
        return Err(Error::InvalidArgument(
            "at least one angle is required".into(),
        ));
    }
    (min_q.max(1)..=max_q)
        .find(|&q| shift_predicate(angles, q))
        .ok_or(Error::NotFound { max_q })
}

/// `|s_k - s_{k+q}| <= 4 pi q^{-1/J} sum |c_j|` for every `k <= K`.
pub fn shift_bound_check<F: Float + FloatConst>(u: &UnitSumOf<F>, q: u64, k_max: u64) -> bool {
    let qf = F::from(q).expect("q fits the float type");
    let j = F::from(u.len()).expect("J fits the float type");
    let four_pi = F::from(4.0).expect("small constant") * F::PI();
    let bound = four_pi * qf.powf(-j.recip()) * u.l1();
    // slack for the rounding in s_k, far below any bound that matters
    let slack = F::from(1e-9).expect("small constant") * (F::one() + u.l1());
    (0..=k_max).all(|k| (u.term(k) - u.term(k + q)).norm() <= bound + slack)
}

/// `(1/K) sum_{k < K} |s_k|^2`, summed in index order.
pub fn mean_square<F: Float + FloatConst>(u: &UnitSumOf<F>, k_max: u64) -> F {
    let total = (0..k_max).fold(F::zero(), |acc, k| acc + u.term(k).norm_sqr());
    total / F::from(k_max).expect("K fits the float type")
}

/// Estimate of the largest root modulus: `max |t_n|^{1/n}` over the upper
/// half `N/2 < n <= N` of the exact ghost vector.
///
/// An estimate only; meaningful for `N >= 16` and a strictly dominant root.
pub fn growth_rate(r: &MElem, n: usize) -> f64 {
    let g = ghost(r, n);
    (n / 2 + 1..=n)
        .filter(|&k| !g.values()[k].is_zero())
        .map(|k| (ln_abs(&g.values()[k]) / k as f64).exp())
        .fold(0.0, f64::max)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DemoReport {
    /// Number of distinct `t_k`, `1 <= k <= K`.
    pub values: usize,
    pub member: bool,
    /// Membership agrees with the value set staying put when `K` doubles.
    pub consistent: bool,
}

pub fn finite_values_unit_roots_demo(r: &MElem, k_max: usize) -> Result<DemoReport> {
    if !r.has_integer_coefficients() {
        return Err(Error::NotIntegerCoefficients);
    }
    let g = ghost(r, 2 * k_max);
    let first: BTreeSet<_> = g.values()[1..=k_max].iter().collect();
    let both: BTreeSet<_> = g.values()[1..].iter().collect();
    let bounded = first.len() == both.len();
    let member = is_phi_member(r)?;
    Ok(DemoReport {
        values: first.len(),
        member,
        consistent: member == bounded,
    })
}
