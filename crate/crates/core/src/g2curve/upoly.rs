//! Dense univariate polynomials as coefficient vectors, constant term first.

use crate::exactnum::Scalar;

pub fn trim<S: Scalar>(mut p: Vec<S>) -> Vec<S> {
    while p.last().is_some_and(Scalar::is_exact_zero) {
        p.pop();
    }
    p
}

pub fn add<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let n = a.len().max(b.len());
    let zero = a.first().or(b.first()).map(Scalar::zero_like);
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.add_ref(y),
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => zero.clone().expect("n > 0"),
        })
        .collect()
}

pub fn sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    add(a, &scale(b, &b.first().map_or_else(|| a[0].from_i64_like(-1), |x| x.from_i64_like(-1))))
}

pub fn scale<S: Scalar>(a: &[S], s: &S) -> Vec<S> {
    a.iter().map(|x| x.mul_ref(s)).collect()
}

pub fn mul<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![a[0].zero_like(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
        }
    }
    out
}

pub fn derivative<S: Scalar>(a: &[S]) -> Vec<S> {
    a.iter().enumerate().skip(1).map(|(i, c)| c.mul_ref(&c.from_i64_like(i as i64))).collect()
}

pub fn eval<S: Scalar>(a: &[S], x: &S) -> S {
    a.iter().rev().fold(x.zero_like(), |acc, c| acc.mul_ref(x).add_ref(c))
}

pub fn pow<S: Scalar>(a: &[S], e: usize) -> Vec<S> {
    let mut acc = vec![a[0].one_like()];
    for _ in 0..e {
        acc = mul(&acc, a);
    }
    acc
}

/// Remainder of exact division; `b` must have a non-zero leading coefficient.
pub fn rem<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let b = trim(b.to_vec());
    let lead = b.last().expect("divisor is non-zero").clone();
    let mut r = trim(a.to_vec());
    while r.len() >= b.len() {
        let q = r.last().expect("non-empty").div_ref(&lead);
        let off = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[off + i] = r[off + i].sub_ref(&q.mul_ref(c));
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Monic-agnostic gcd by the Euclidean algorithm; exact arithmetic only.
pub fn gcd<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Rational;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(mul(&q(&[-1, 1]), &q(&[1, 1])), q(&[-1, 0, 1]));
        assert_eq!(derivative(&q(&[5, 3, 1])), q(&[3, 2]));
        assert_eq!(eval(&q(&[1, 2, 3]), &Rational::from(2)), 17);
        assert_eq!(pow(&q(&[1, 1]), 3), q(&[1, 3, 3, 1]));
        assert_eq!(sub(&q(&[1, 2]), &q(&[1, 2, 3])), q(&[0, 0, -3]));
    }

    #[test]
    fn gcd_detects_common_factor() {
        let a = mul(&q(&[-1, 1]), &q(&[2, 1]));
        let b = mul(&q(&[-1, 1]), &q(&[3, 1]));
        assert_eq!(gcd(&a, &b).len(), 2);
        assert_eq!(gcd(&q(&[1, 0, 1]), &q(&[0, 2])).len(), 1);
    }
}
