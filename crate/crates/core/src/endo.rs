//! Continuous ring endomorphisms: two concrete families and checkers for
//! the structural conditions any endomorphism's data must satisfy.
//!
//! An endomorphism `phi` is summarized by its star map, the index function
//! with `t_n(phi(r)) = t_{phi*(n)}(r)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{divisors, factorize, gcd, is_prime, valuation};
use crate::cyclo::{is_phi_member, necklace_coeffs, phi_mul, CompletionElem};
use crate::error::{Error, Result};
use crate::ghost::{ghost, ghost_at};
use crate::scalar::{format_rational, Rational};
use crate::MElem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case", deny_unknown_fields)]
pub enum EndoSpec {
    /// `lambda_k + (t_s - t_0)[x]`: star map `n -> k n`, `0 -> s`.
    AdamsShift { k: u64, s: u64 },
    /// Keeps `t_0` and replaces `t_k` by `t_{gcd(k, N)}`.
    GcdFold {
        #[serde(rename = "N")]
        n: u64,
    },
}

impl EndoSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            EndoSpec::GcdFold { n: 0 } => Err(Error::InvalidSpec("gcd_fold needs N >= 1".into())),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for EndoSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndoSpec::AdamsShift { k, s } => write!(f, "AdamsShift{{k:{k},s:{s}}}"),
            EndoSpec::GcdFold { n } => write!(f, "GcdFold{{N:{n}}}"),
        }
    }
}

/// A candidate ring endomorphism together with its claimed star map.
pub trait Endomorphism {
    fn apply(&self, r: &MElem) -> Result<MElem>;
    fn star(&self, n: u64) -> u64;
}

impl Endomorphism for EndoSpec {
    fn apply(&self, r: &MElem) -> Result<MElem> {
        endo_apply(self, r)
    }

    fn star(&self, n: u64) -> u64 {
        endo_star(self, n)
    }
}

pub fn endo_star(spec: &EndoSpec, n: u64) -> u64 {
    match *spec {
        EndoSpec::AdamsShift { s, .. } if n == 0 => s,
        EndoSpec::AdamsShift { k, .. } => k * n,
        EndoSpec::GcdFold { .. } if n == 0 => 0,
        EndoSpec::GcdFold { n: m } => gcd(n, m),
    }
}

pub fn endo_apply(spec: &EndoSpec, r: &MElem) -> Result<MElem> {
    spec.validate()?;
    match *spec {
        EndoSpec::AdamsShift { k, s } => {
            let image = r.adams(k);
            if s == 0 {
                return Ok(image);
            }
            let shift = ghost_at(r, s as usize) - Rational::from_integer(r.t0().into());
            if !shift.is_integer() {
                return Err(Error::NonIntegralShift {
                    s,
                    value: format_rational(&shift),
                });
            }
            let shift = shift.to_integer().to_i64().ok_or_else(|| {
                Error::InvalidArgument(format!("shift {shift} does not fit in 64 bits"))
            })?;
            Ok(image.add(&MElem::x().scalar(shift)))
        }
        EndoSpec::GcdFold { n } => {
            let c = necklace_coeffs(r, n as usize);
            let mut coeffs = BTreeMap::new();
            for e in divisors(n) {
                let v = c.get(e as usize).expect("divisor within range");
                if !v.is_integer() {
                    return Err(Error::NonIntegralImage {
                        index: e,
                        value: format_rational(v),
                    });
                }
                coeffs.insert(e, v.to_integer());
            }
            CompletionElem::new(BigInt::from(r.t0()), coeffs, None)?.to_melem()
        }
    }
}

/// `phi*(0..=N)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarTable {
    pub entries: Vec<u64>,
}

impl StarTable {
    pub fn new(entries: Vec<u64>) -> Self {
        Self { entries }
    }

    pub fn level(&self) -> usize {
        self.entries.len().saturating_sub(1)
    }
}

pub fn star_table(phi: &impl Endomorphism, n: u64) -> StarTable {
    StarTable::new((0..=n).map(|i| phi.star(i)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub law: String,
    pub pass: bool,
    pub witness: Option<MElem>,
}

impl LawCheck {
    fn new(law: &str, witness: Option<MElem>) -> Self {
        Self {
            law: law.to_string(),
            pass: witness.is_none(),
            witness,
        }
    }
}

/// Exact checks of the endomorphism laws on `samples`.
///
/// Additivity and multiplicativity are tested on consecutive sample pairs
/// (including each sample with itself when there is only one); ghost
/// factorization compares `t_n(phi(r))` with `t_{phi*(n)}(r)` for
/// `0 <= n <= N`. A failing law carries the first sample that broke it.
pub fn endo_verify(
    phi: &(impl Endomorphism + ?Sized),
    samples: &[MElem],
    n: u64,
) -> Result<Vec<LawCheck>> {
    let images = samples
        .iter()
        .map(|r| phi.apply(r))
        .collect::<Result<Vec<_>>>()?;
    let pairs: Vec<(usize, usize)> = match samples.len() {
        0 => vec![],
        1 => vec![(0, 0)],
        len => (0..len - 1).map(|i| (i, i + 1)).collect(),
    };

    let mut add_witness = None;
    let mut mul_witness = None;
    for &(i, j) in &pairs {
        let (a, b) = (&samples[i], &samples[j]);
        if add_witness.is_none() && phi.apply(&a.add(b))? != images[i].add(&images[j]) {
            add_witness = Some(a.clone());
        }
        if mul_witness.is_none() && phi.apply(&a.mul(b))? != image_product(&images[i], &images[j])?
        {
            mul_witness = Some(a.clone());
        }
    }

    let one = MElem::one();
    let one_image = phi.apply(&one)?;
    let id_witness = (one_image != one).then_some(one_image);

    let mut ghost_witness = None;
    let top = (0..=n).map(|i| phi.star(i)).max().unwrap_or(0) as usize;
    for (r, img) in samples.iter().zip(&images) {
        let src = ghost(r, top);
        let dst = ghost(img, n as usize);
        let ok = (0..=n).all(|i| dst.values()[i as usize] == src.values()[phi.star(i) as usize]);
        if !ok {
            ghost_witness = Some(r.clone());
            break;
        }
    }

    Ok(vec![
        LawCheck::new("additivity", add_witness),
        LawCheck::new("multiplicativity", mul_witness),
        LawCheck::new("identity", id_witness),
        LawCheck::new("ghost_factorization", ghost_witness),
    ])
}

/// Images of the bounded families carry large cyclotomic exponents, so
/// members are multiplied in the completion basis instead.
fn image_product(a: &MElem, b: &MElem) -> Result<MElem> {
    let member = |r: &MElem| r.has_integer_coefficients() && is_phi_member(r).unwrap_or(false);
    if member(a) && member(b) {
        phi_mul(a, b)
    } else {
        Ok(a.mul(b))
    }
}

/// The four admissible images of `[x]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum XImage {
    X,
    Zero,
    XMinus1,
    XMinus1OverX,
    Invalid,
}

pub fn classify_image_of_x(m: &MElem) -> XImage {
    if *m == MElem::x() {
        XImage::X
    } else if m.is_zero() {
        XImage::Zero
    } else if *m == MElem::one() {
        XImage::XMinus1
    } else if *m == MElem::basis(1) {
        XImage::XMinus1OverX
    } else {
        XImage::Invalid
    }
}

/// `s_{-inf} [x] + sum_beta s_beta p^{alpha - beta} [x^{p^beta} - 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimePowerForm {
    #[serde(serialize_with = "crate::json::bigint_as_number")]
    pub s_minus_inf: BigInt,
    /// `s_0, ..., s_alpha`, each in `{-1, 0, 1}`.
    pub s: Vec<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FormViolation {
    #[error("{p} is not a prime")]
    NotPrime { p: u64 },
    #[error("coefficient at index {index} lies outside the powers of p")]
    Support { index: u64 },
    #[error("c_{index} = {value} is not divisible by {divisor}")]
    Divisibility {
        index: u64,
        value: BigInt,
        divisor: BigInt,
    },
    #[error("s_{beta} = {quotient} is not in {{-1, 0, 1}}")]
    SignRange { beta: u32, quotient: BigInt },
}

/// Checks that `ce` has the shape forced on an image of `[x^{p^alpha} - 1]`.
///
/// Since `[x^n - 1] = [1 - x^{-n}] + n[x]`, the basis coefficient at `p^b`
/// is `s_b p^{alpha - b}` and `c_0 = s_{-inf} + p^alpha sum s_b`.
pub fn prime_power_form_check(
    ce: &CompletionElem,
    p: u64,
    alpha: u32,
) -> Result<PrimePowerForm, FormViolation> {
    if !is_prime(p) {
        return Err(FormViolation::NotPrime { p });
    }
    let mut powers = BTreeMap::new();
    for b in 0..=alpha {
        powers.insert(p.pow(b), b);
    }
    if let Some(&index) = ce.coeffs().keys().find(|n| !powers.contains_key(n)) {
        return Err(FormViolation::Support { index });
    }
    let pa = BigInt::from(p).pow(alpha);
    let mut s = Vec::with_capacity(alpha as usize + 1);
    let mut sum = BigInt::zero();
    for (&index, &b) in &powers {
        let value = ce.get(index);
        let divisor = BigInt::from(p).pow(alpha - b);
        let (quotient, rem) = value.div_rem(&divisor);
        if !rem.is_zero() {
            return Err(FormViolation::Divisibility {
                index,
                value,
                divisor,
            });
        }
        let sb = quotient
            .to_i8()
            .filter(|v| (-1..=1).contains(v))
            .ok_or(FormViolation::SignRange { beta: b, quotient })?;
        sum += sb;
        s.push(sb);
    }
    Ok(PrimePowerForm {
        s_minus_inf: ce.c0() - pa * sum,
        s,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub pass: bool,
    pub detail: Option<String>,
}

impl Verdict {
    fn from(detail: Option<String>) -> Self {
        Self {
            pass: detail.is_none(),
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarReport {
    pub degenerate: Verdict,
    pub multiplicative: Verdict,
    pub valuation: Verdict,
}

impl StarReport {
    pub fn all_pass(&self) -> bool {
        self.degenerate.pass && self.multiplicative.pass && self.valuation.pass
    }
}

/// Necessary conditions on a star map, checked within the table's range.
pub fn star_checks(table: &StarTable) -> StarReport {
    let e = &table.entries;
    let top = table.level() as u64;

    let zeros: Vec<u64> = (1..=top).filter(|&k| e[k as usize] == 0).collect();
    let degenerate = Verdict::from((!zeros.is_empty() && zeros.len() as u64 != top).then(|| {
        let nz = (1..=top)
            .find(|&k| e[k as usize] != 0)
            .expect("some entry is nonzero");
        format!("phi*({}) = 0 but phi*({nz}) = {}", zeros[0], e[nz as usize])
    }));

    let multiplicative = Verdict::from(multiplicativity_failure(e, top));
    let valuation = Verdict::from(valuation_failure(e, top));
    StarReport {
        degenerate,
        multiplicative,
        valuation,
    }
}

fn multiplicativity_failure(e: &[u64], top: u64) -> Option<String> {
    let base = *e.get(1)?;
    if base == 0 {
        return None;
    }
    // ratio(n) * base = phi*(n); compare cross-multiplied to stay integral
    for m in 2..=top {
        for n in m + 1..=top / m {
            if gcd(m, n) != 1 {
                continue;
            }
            let lhs = u128::from(e[(m * n) as usize]) * u128::from(base);
            let rhs = u128::from(e[m as usize]) * u128::from(e[n as usize]);
            if lhs != rhs {
                return Some(format!("ratio not multiplicative at {m} * {n}"));
            }
        }
    }
    for k in 2..=top {
        let f = factorize(k);
        if f.len() != 1 {
            continue;
        }
        let p = f[0].0;
        let v = e[k as usize];
        let ok =
            v != 0 && v.is_multiple_of(base) && factorize(v / base).iter().all(|&(q, _)| q == p);
        if !ok {
            return Some(format!(
                "phi*({k}) / phi*(1) = {v}/{base} is not a power of {p}"
            ));
        }
    }
    None
}

fn valuation_failure(e: &[u64], top: u64) -> Option<String> {
    for p in (2..=top).filter(|&p| is_prime(p)) {
        let mut seen: BTreeMap<u32, (u64, Option<u32>)> = BTreeMap::new();
        for k in 1..=top {
            let vk = valuation(p, k).expect("k is positive");
            let vphi = valuation(p, e[k as usize]);
            match seen.get(&vk) {
                Some(&(k0, v0)) if v0 != vphi => {
                    return Some(format!(
                        "v_{p}(phi*({k0})) != v_{p}(phi*({k})) though v_{p}({k0}) = v_{p}({k})"
                    ));
                }
                Some(_) => {}
                None => {
                    seen.insert(vk, (k, vphi));
                }
            }
        }
    }
    None
}
