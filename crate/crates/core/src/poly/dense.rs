//! Coefficient-vector arithmetic shared by the monic and bivariate code.
//!
//! Vectors are ascending and trimmed: no trailing zeros, the zero polynomial
//! is the empty vector.

use crate::scalar::Scalar;

pub(crate) fn trim<T: Scalar>(v: &mut Vec<T>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub(crate) fn degree<T>(v: &[T]) -> Option<usize> {
    v.len().checked_sub(1)
}

pub(crate) fn add<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o = o.add_ref(s);
    }
    trim(&mut out);
    out
}

pub(crate) fn sub<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    let neg: Vec<T> = b.iter().map(T::neg_ref).collect();
    add(a, &neg)
}

pub(crate) fn mul<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale<T: Scalar>(a: &[T], c: &T) -> Vec<T> {
    let mut out: Vec<T> = a.iter().map(|x| x.mul_ref(c)).collect();
    trim(&mut out);
    out
}

/// Euclidean division; panics on a zero divisor.
pub(crate) fn divrem<T: Scalar>(a: &[T], b: &[T]) -> (Vec<T>, Vec<T>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead = &b[db];
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![T::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db].div_ref(lead);
        if !c.is_zero() {
            for (i, bi) in b.iter().enumerate() {
                rem[k + i] = rem[k + i].sub_ref(&c.mul_ref(bi));
            }
        }
        quot[k] = c;
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn rem<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    divrem(a, b).1
}

pub(crate) fn make_monic<T: Scalar>(a: &[T]) -> Vec<T> {
    match a.last() {
        None => Vec::new(),
        Some(lead) => {
            let inv = T::one().div_ref(lead);
            scale(a, &inv)
        }
    }
}

/// Monic gcd; the gcd of two zero polynomials is zero.
pub(crate) fn gcd<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    let mut a = make_monic(a);
    let mut b = make_monic(b);
    while !b.is_empty() {
        let r = make_monic(&rem(&a, &b));
        a = b;
        b = r;
    }
    a
}

pub(crate) fn eval<T: Scalar>(a: &[T], x: &T) -> T {
    a.iter()
        .rev()
        .fold(T::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
}

/// `x^e mod m` for a nonconstant modulus.
pub(crate) fn x_pow_mod<T: Scalar>(e: u64, m: &[T]) -> Vec<T> {
    let mut acc = rem(&[T::one()], m);
    let mut base = rem(&[T::zero(), T::one()], m);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &base), m);
        }
        e >>= 1;
        if e > 0 {
            base = rem(&mul(&base, &base), m);
        }
    }
    acc
}

/// Newton-form interpolation through `(nodes[i], values[i])`, returned in
/// the monomial basis.
pub(crate) fn interpolate<T: Scalar>(nodes: &[T], values: &[T]) -> Vec<T> {
    assert_eq!(nodes.len(), values.len());
    let n = nodes.len();
    let mut dd = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = dd[i].sub_ref(&dd[i - 1]);
            let den = nodes[i].sub_ref(&nodes[i - j]);
            dd[i] = num.div_ref(&den);
        }
    }
    let mut out: Vec<T> = Vec::new();
    for i in (0..n).rev() {
        // out = out * (x - nodes[i]) + dd[i]
        let mut next = vec![T::zero(); out.len() + 1];
        for (k, c) in out.iter().enumerate() {
            next[k + 1] = next[k + 1].add_ref(c);
            next[k] = next[k].sub_ref(&c.mul_ref(&nodes[i]));
        }
        next[0] = next[0].add_ref(&dd[i]);
        trim(&mut next);
        out = next;
    }
    out
}

/// Interpolation nodes `0, 1, -1, 2, -2, ...`.
pub(crate) fn symmetric_nodes<T: Scalar>(count: usize) -> Vec<T> {
    (0..count)
        .map(|i| {
            let k = i64::try_from(i.div_ceil(2)).expect("node count overflow");
            T::from_i64(if i % 2 == 1 { k } else { -k })
        })
        .collect()
}
