//! Resultants and the root-level maps built on them.
//!
//! Both [`root_product`] and [`power_roots`] need a resultant whose second
//! argument is bivariate. We never form the bivariate Sylvester matrix:
//! the result is a monic polynomial of known degree `D` in `x`, so it is
//! evaluated at `D + 1` integer nodes (each a univariate resultant over the
//! field) and recovered by exact interpolation.

use super::dense;
use super::Monic;
use crate::ghost::{coeffs_from_power_sums, power_sums};
use crate::scalar::Scalar;

/// Univariate resultant, `Res(a, b) = lc(a)^deg(b) * prod_{a(r)=0} b(r)`.
///
/// Computed by the Euclidean remainder sequence over the field. Either
/// argument may be the zero polynomial, in which case the result is zero
/// unless the other argument is a nonzero constant.
pub fn resultant<T: Scalar>(a: &[T], b: &[T]) -> T {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    dense::trim(&mut a);
    dense::trim(&mut b);
    if a.is_empty() || b.is_empty() {
        let other = if a.is_empty() { &b } else { &a };
        return if other.len() == 1 {
            T::one()
        } else {
            T::zero()
        };
    }
    let mut acc = T::one();
    loop {
        let n = a.len() - 1;
        let m = b.len() - 1;
        if m == 0 {
            return acc.mul_ref(&b[0].pow_u(n as u64));
        }
        if n == 0 {
            return acc.mul_ref(&a[0].pow_u(m as u64));
        }
        // Res(A, B) = (-1)^{nm} lc(B)^{n-k} Res(B, A mod B)
        let r = dense::rem(&a, &b);
        if r.is_empty() {
            return T::zero();
        }
        let k = r.len() - 1;
        let mut factor = b[m].pow_u((n - k) as u64);
        if (n * m) % 2 == 1 {
            factor = factor.neg_ref();
        }
        acc = acc.mul_ref(&factor);
        a = b;
        b = r;
    }
}

/// Above this product degree [`root_product`] switches from the resultant
/// to the power-sum route. The two are cross-checked in the tests.
pub const RESULTANT_ROUTE_MAX_DEGREE: usize = 64;

/// Monic polynomial whose roots are all products `alpha_i * beta_j`.
///
/// Products involving a zero root are counted directly; the rest goes
/// through the resultant for small degrees and through power sums above
/// [`RESULTANT_ROUTE_MAX_DEGREE`].
pub fn root_product<T: Scalar>(f: &Monic<T>, g: &Monic<T>) -> Monic<T> {
    let (a, f1) = f.strip_x();
    let (b, g1) = g.strip_x();
    let zeros = a * g.degree() + b * f1.degree();
    let core = if f1.degree() * g1.degree() <= RESULTANT_ROUTE_MAX_DEGREE {
        root_product_resultant(&f1, &g1)
    } else {
        root_product_power_sums(&f1, &g1)
    };
    core.shift_x(zeros)
}

/// [`root_product`] as `Res_y(f(y), y^m g(x/y))`.
///
/// Zero roots are split off first so the bivariate polynomial
/// `y^m g1(x/y)` has nonzero constant term; the `x`-power of the result is
/// the combinatorial count of products involving a zero root.
pub fn root_product_resultant<T: Scalar>(f: &Monic<T>, g: &Monic<T>) -> Monic<T> {
    let (a, f1) = f.strip_x();
    let (b, g1) = g.strip_x();
    let zeros = a * g.degree() + b * f1.degree();
    let n1 = f1.degree();
    let m = g1.degree();
    if n1 == 0 || m == 0 {
        return Monic::x_pow(zeros);
    }
    let target = n1 * m;
    let nodes: Vec<T> = dense::symmetric_nodes(target + 1);
    let g1c = g1.coeffs();
    let values: Vec<T> = nodes
        .iter()
        .map(|x0| {
            // coefficient of y^j in y^m g1(x0 / y) is g1_{m-j} x0^{m-j}
            let mut bivar = vec![T::zero(); m + 1];
            let mut xp = T::one();
            for i in 0..=m {
                bivar[m - i] = g1c[i].mul_ref(&xp);
                xp = xp.mul_ref(x0);
            }
            resultant(f1.coeffs(), &bivar)
        })
        .collect();
    let r = dense::interpolate(&nodes, &values);
    Monic::normalize(r)
        .expect("root product resultant vanished identically")
        .shift_x(zeros)
}

/// [`root_product`] through `t_k(f * g) = t_k(f) t_k(g)` and Newton's
/// identities. Cheap when the power sums are sparse, as for `x^n - 1`.
pub fn root_product_power_sums<T: Scalar>(f: &Monic<T>, g: &Monic<T>) -> Monic<T> {
    let d = f.degree() * g.degree();
    let t = power_sums(f, d).mul(&power_sums(g, d));
    coeffs_from_power_sums(&t, d).expect("t_0 is the product of the degrees")
}

/// Monic polynomial whose roots are the `n`-th powers of the roots of `f`,
/// with `0^0 = 1`.
pub fn power_roots<T: Scalar>(f: &Monic<T>, n: u64) -> Monic<T> {
    let d = f.degree();
    match n {
        0 => return Monic::linear(T::one()).pow(d as u64),
        1 => return f.clone(),
        _ => {}
    }
    if d == 0 {
        return Monic::one();
    }
    // Res_y(f(y), x0 - y^n) only depends on y^n mod f.
    let y_n = dense::x_pow_mod(n, f.coeffs());
    let nodes: Vec<T> = dense::symmetric_nodes(d + 1);
    let values: Vec<T> = nodes
        .iter()
        .map(|x0| {
            let b = dense::sub(std::slice::from_ref(x0), &y_n);
            resultant(f.coeffs(), &b)
        })
        .collect();
    Monic::normalize(dense::interpolate(&nodes, &values))
        .expect("power-roots resultant vanished identically")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    fn ints(v: &[i64]) -> Monic<Rational> {
        Monic::from_ints(v).unwrap()
    }

    /// Sylvester determinant by fraction-free elimination, independent of
    /// the remainder-sequence route.
    fn sylvester_resultant(a: &[Rational], b: &[Rational]) -> Rational {
        let n = a.len() - 1;
        let m = b.len() - 1;
        let size = n + m;
        if size == 0 {
            return rat(1);
        }
        let mut mat = vec![vec![rat(0); size]; size];
        for row in 0..m {
            for (i, c) in a.iter().rev().enumerate() {
                mat[row][row + i] = c.clone();
            }
        }
        for row in 0..n {
            for (i, c) in b.iter().rev().enumerate() {
                mat[m + row][row + i] = c.clone();
            }
        }
        let mut det = rat(1);
        for col in 0..size {
            let Some(piv) = (col..size).find(|&r| !mat[r][col].is_zero()) else {
                return rat(0);
            };
            if piv != col {
                mat.swap(piv, col);
                det = -det;
            }
            let p = mat[col][col].clone();
            det *= &p;
            let (top, rest) = mat.split_at_mut(col + 1);
            let pivot_row = &top[col];
            for row in rest.iter_mut() {
                let f = &row[col] / &p;
                for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &f * y;
                }
            }
        }
        det
    }

    use num_traits::Zero;

    #[test]
    fn resultant_matches_sylvester() {
        let cases: &[(&[i64], &[i64])] = &[
            (&[2, -3, 1], &[-1, 0, 1]),
            (&[1, 1], &[5, 0, 3, 2]),
            (&[7, 0, -2, 0, 1], &[3, -4, 1]),
            (&[1, 2, 3], &[4, 5, 6, 7, 8]),
            (&[0, 1], &[0, 0, 1]),
            (&[-5, 2, 9, 1], &[1, -1, 1]),
        ];
        for (a, b) in cases {
            let a: Vec<Rational> = a.iter().map(|&x| rat(x)).collect();
            let b: Vec<Rational> = b.iter().map(|&x| rat(x)).collect();
            assert_eq!(
                resultant(&a, &b),
                sylvester_resultant(&a, &b),
                "{a:?} {b:?}"
            );
        }
    }

    #[test]
    fn root_product_examples() {
        assert_eq!(
            root_product(&ints(&[-2, 1]), &ints(&[-3, 1])),
            ints(&[-6, 1])
        );
        assert_eq!(
            root_product(&ints(&[-1, 0, 1]), &ints(&[-1, 0, 0, 1])),
            ints(&[-1, 0, 0, 0, 0, 0, 1])
        );
        let x4m1 = ints(&[-1, 0, 0, 0, 1]);
        assert_eq!(root_product(&ints(&[-1, 0, 1]), &x4m1), x4m1.pow(2));
        assert_eq!(
            root_product(&Monic::x(), &ints(&[-4, 0, 1])),
            Monic::x_pow(2)
        );
    }

    #[test]
    fn both_routes_agree() {
        let polys = [
            ints(&[-2, 1]),
            ints(&[1, 0, 1]),
            ints(&[0, 3, -1, 1]),
            ints(&[5, -4, 0, 2, 1]),
            ints(&[0, 0, 1]),
            ints(&[-1, 0, 0, 0, 0, 0, 0, 1]),
        ];
        for f in &polys {
            for g in &polys {
                assert_eq!(
                    root_product_resultant(f, g),
                    root_product_power_sums(f, g),
                    "{f} {g}"
                );
            }
        }
    }

    #[test]
    fn power_roots_examples() {
        assert_eq!(power_roots(&ints(&[-3, 1]), 2), ints(&[-9, 1]));
        assert_eq!(power_roots(&ints(&[2, -3, 1]), 2), ints(&[4, -5, 1]));
        assert_eq!(power_roots(&ints(&[1, 0, 1]), 2), ints(&[1, 2, 1]));
        assert_eq!(power_roots(&ints(&[2, -3, 1]), 0), ints(&[1, -2, 1]));
        assert_eq!(power_roots(&Monic::x(), 0), ints(&[-1, 1]));
        assert_eq!(power_roots(&ints(&[0, -1, 1]), 3), ints(&[0, -1, 1]));
    }

    #[test]
    fn high_power_uses_reduction() {
        // roots of x^2 + 1 are +-i; i^100 = 1
        assert_eq!(power_roots(&ints(&[1, 0, 1]), 100), ints(&[1, -2, 1]));
    }
}
