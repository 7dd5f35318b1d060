use rug::{Complex, Rational};

use super::upoly;
use crate::exactnum::{polynomial_roots, ComplexPoly, Scalar};
use crate::{Error, Result};

/// Scalars over which separability of a sextic can be decided.
pub trait CurveScalar: Scalar {
    /// Exact gcd test over the rationals; root separation at the working
    /// precision over the complex numbers.
    fn is_separable(f: &[Self]) -> bool;
}

impl CurveScalar for Rational {
    fn is_separable(f: &[Self]) -> bool {
        upoly::gcd(f, &upoly::derivative(f)).len() == 1
    }
}

impl CurveScalar for Complex {
    fn is_separable(f: &[Self]) -> bool {
        let prec = f[0].prec().0;
        polynomial_roots(&ComplexPoly::new(f.to_vec(), prec)).is_ok()
    }
}

/// `y^2 = f(x)` with `f = c0 + c1 x + ... + x^6` separable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Genus2Curve<S> {
    f: Vec<S>,
}

impl<S: CurveScalar> Genus2Curve<S> {
    /// Constant term first.
    pub fn coefficients(&self) -> &[S] {
        &self.f
    }

    pub fn eval(&self, x: &S) -> S {
        upoly::eval(&self.f, x)
    }

    /// Divides through by the leading coefficient and validates. A vanishing
    /// leading coefficient is reported as a degenerate model.
    pub fn from_sextic(f: &[S]) -> Result<Self> {
        if f.len() != 7 {
            return Err(Error::ArityMismatch { expected: 7, got: f.len() });
        }
        let scale = largest(f);
        if f[6].negligible(&scale) {
            return Err(Error::DegenerateTransform("leading coefficient vanishes".into()));
        }
        let lead = f[6].clone();
        let mut g: Vec<S> = f.iter().map(|c| c.div_ref(&lead)).collect();
        g[6] = lead.one_like();
        validate_curve(&g)
    }
}

impl Genus2Curve<Rational> {
    pub fn to_complex(&self, prec: u32) -> Genus2Curve<Complex> {
        Genus2Curve { f: self.f.iter().map(|c| Complex::with_val(prec, c)).collect() }
    }
}

impl Genus2Curve<Complex> {
    pub fn prec(&self) -> u32 {
        self.f[6].prec().0
    }
}

fn largest<S: Scalar>(f: &[S]) -> S {
    f.iter().max_by(|a, b| a.magnitude().total_cmp(&b.magnitude())).expect("non-empty").clone()
}

/// Checks arity, monicity and separability.
///
/// A complex leading coefficient within tolerance of 1 is accepted and
/// replaced by an exact 1.
pub fn validate_curve<S: CurveScalar>(f: &[S]) -> Result<Genus2Curve<S>> {
    if f.len() != 7 {
        return Err(Error::ArityMismatch { expected: 7, got: f.len() });
    }
    let one = f[6].one_like();
    if !f[6].sub_ref(&one).negligible(&one) {
        return Err(Error::NotMonic);
    }
    let mut f = f.to_vec();
    f[6] = one;
    if !S::is_separable(&f) {
        return Err(Error::Singular);
    }
    Ok(Genus2Curve { f })
}

/// `sum f_i (a x + b)^i (c x + d)^(6-i)` for `g = [[a, b], [c, d]]` and a
/// sextic `f` that need not be monic.
pub fn transform_sextic<S: Scalar>(f: &[S], g: &[[S; 2]; 2]) -> Vec<S> {
    let [[a, b], [c, d]] = g;
    let num = [b.clone(), a.clone()];
    let den = [d.clone(), c.clone()];
    let mut out = vec![a.zero_like(); 7];
    for (i, fi) in f.iter().enumerate() {
        if fi.is_exact_zero() {
            continue;
        }
        let term = upoly::mul(&upoly::pow(&num, i), &upoly::pow(&den, 6 - i));
        out = upoly::add(&out, &upoly::scale(&term, fi));
    }
    out
}

/// The transformed model of [`transform_sextic`], rescaled to be monic. The
/// quadratic twist this introduces is dropped; it does not affect absolute
/// invariants.
pub fn transform_model<S: CurveScalar>(c: &Genus2Curve<S>, g: &[[S; 2]; 2]) -> Result<Genus2Curve<S>> {
    let [[a, b], [cc, d]] = g;
    let det = a.mul_ref(d).sub_ref(&b.mul_ref(cc));
    let det_scale = largest(&[a.mul_ref(d), b.mul_ref(cc), a.one_like()]);
    if det.negligible(&det_scale) {
        return Err(Error::DegenerateTransform("matrix is singular".into()));
    }
    Genus2Curve::from_sextic(&transform_sextic(&c.f, g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    fn g(a: i64, b: i64, c: i64, d: i64) -> [[Rational; 2]; 2] {
        [[Rational::from(a), Rational::from(b)], [Rational::from(c), Rational::from(d)]]
    }

    #[test]
    fn validation_examples() {
        assert!(validate_curve(&q(&[1, 0, 0, 0, 0, 0, 1])).is_ok());
        assert_eq!(validate_curve(&q(&[0, 0, 0, 0, 0, 0, 1])), Err(Error::Singular));
        assert!(validate_curve(&q(&[-36, 0, 49, 0, -14, 0, 1])).is_ok());
        assert_eq!(validate_curve(&q(&[1, 0, 0, 0, 0, 0, 2])), Err(Error::NotMonic));
        assert!(matches!(validate_curve(&q(&[1, 1])), Err(Error::ArityMismatch { .. })));
        let squared = upoly::mul(&q(&[-1, 1]), &q(&[-1, 1]));
        let f = upoly::mul(&squared, &q(&[5, 0, 3, 0, 1]));
        assert_eq!(validate_curve(&f), Err(Error::Singular));
    }

    #[test]
    fn complex_validation() {
        let c = validate_curve(&q(&[1, 0, 0, 0, 0, 0, 1])).unwrap().to_complex(200);
        assert!(validate_curve(c.coefficients()).is_ok());
        let bad: Vec<Complex> = q(&[1, -2, 1, 0, 0, 0, 1]).iter().map(|x| Complex::with_val(200, x)).collect();
        assert!(validate_curve(&bad).is_ok());
        let sing: Vec<Complex> = [0, 0, 0, 0, 0, 0, 1].iter().map(|&x| Complex::with_val(200, x)).collect();
        assert_eq!(validate_curve(&sing), Err(Error::Singular));
    }

    #[test]
    fn transform_examples() {
        let c = validate_curve(&q(&[1, 1, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(transform_model(&c, &g(1, 0, 0, 1)).unwrap(), c);
        let inverted = transform_model(&c, &g(0, 1, 1, 0)).unwrap();
        assert_eq!(inverted.coefficients(), q(&[1, 0, 0, 0, 0, 1, 1]).as_slice());
        let shifted = transform_model(&c, &g(1, 1, 0, 1)).unwrap();
        assert_eq!(shifted.coefficients(), q(&[3, 7, 15, 20, 15, 6, 1]).as_slice());
        assert!(matches!(transform_model(&c, &g(1, 1, 1, 1)), Err(Error::DegenerateTransform(_))));
    }

    #[test]
    fn transform_with_root_at_infinity_is_degenerate() {
        let c = validate_curve(&q(&[0, 1, 0, 0, 0, 0, 1])).unwrap();
        assert!(matches!(transform_model(&c, &g(0, 1, 1, 0)), Err(Error::DegenerateTransform(_))));
    }
}
