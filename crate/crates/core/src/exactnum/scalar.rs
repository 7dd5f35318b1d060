use rug::{Complex, Float, Rational};

/// 2^(-prec/2): the relative tolerance used throughout the crate.
pub fn tolerance(prec: u32) -> Float {
    Float::with_val(prec.max(64), Float::i_exp(1, -((prec / 2) as i32)))
}

/// Shorthand for a complex number at `prec` bits from anything rug accepts.
pub fn complex<T>(prec: u32, value: T) -> Complex
where
    Complex: rug::Assign<T>,
{
    Complex::with_val(prec, value)
}

/// Field operations shared by exact rationals and precision-tracked complex
/// numbers, so curve invariants and the Richelot construction can run over
/// either.
///
/// Constructors take `&self` because a complex value carries the precision
/// new values must be created at.
pub trait Scalar: Clone + std::fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn from_i64_like(&self, v: i64) -> Self;
    fn from_rational_like(&self, v: &Rational) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// Caller guarantees `rhs` is not zero.
    fn div_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn is_exact_zero(&self) -> bool;
    /// Zero test at the working precision: exact for rationals, and
    /// `|self| <= 2^(-prec/2) * |scale|` for complex values.
    fn negligible(&self, scale: &Self) -> bool;
    fn to_complex(&self, prec: u32) -> Complex;
    /// `|self|`, for choosing scales; not used for exact comparisons.
    fn magnitude(&self) -> Float;

    fn one_like(&self) -> Self {
        self.from_i64_like(1)
    }

    fn pow_u32(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::new()
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Rational::from(v)
    }
    fn from_rational_like(&self, v: &Rational) -> Self {
        v.clone()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        Rational::from(self + rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Rational::from(self - rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        Rational::from(self * rhs)
    }
    fn div_ref(&self, rhs: &Self) -> Self {
        Rational::from(self / rhs)
    }
    fn neg_ref(&self) -> Self {
        Rational::from(-self)
    }
    fn is_exact_zero(&self) -> bool {
        self.cmp0().is_eq()
    }
    fn negligible(&self, _scale: &Self) -> bool {
        self.cmp0().is_eq()
    }
    fn to_complex(&self, prec: u32) -> Complex {
        Complex::with_val(prec, self)
    }
    fn magnitude(&self) -> Float {
        Float::with_val(64, self).abs()
    }
}

impl Scalar for Complex {
    fn zero_like(&self) -> Self {
        Complex::new(self.prec())
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Complex::with_val(self.prec(), v)
    }
    fn from_rational_like(&self, v: &Rational) -> Self {
        Complex::with_val(self.prec(), v)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        Complex::with_val(self.prec(), self + rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Complex::with_val(self.prec(), self - rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        Complex::with_val(self.prec(), self * rhs)
    }
    fn div_ref(&self, rhs: &Self) -> Self {
        Complex::with_val(self.prec(), self / rhs)
    }
    fn neg_ref(&self) -> Self {
        Complex::with_val(self.prec(), -self)
    }
    fn is_exact_zero(&self) -> bool {
        self.real().is_zero() && self.imag().is_zero()
    }
    fn negligible(&self, scale: &Self) -> bool {
        let prec = self.prec().0;
        let mag = Float::with_val(prec, self.abs_ref());
        let mut bound = Float::with_val(prec, scale.abs_ref());
        if bound.is_zero() {
            bound = Float::with_val(prec, 1);
        }
        bound *= tolerance(prec);
        mag <= bound
    }
    fn to_complex(&self, prec: u32) -> Complex {
        Complex::with_val(prec, self)
    }
    fn magnitude(&self) -> Float {
        Float::with_val(self.prec().0, self.abs_ref())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_is_half_precision() {
        let t = tolerance(128);
        assert_eq!(t, Float::with_val(128, Float::i_exp(1, -64)));
    }

    #[test]
    fn complex_negligible_is_relative() {
        let scale = complex(128, (1e10, 0.0));
        let tiny = complex(128, (1e-10, 0.0));
        assert!(tiny.negligible(&scale));
        assert!(!scale.negligible(&tiny));
        assert!(!Rational::from((1, 1_000_000)).negligible(&Rational::from(1)));
    }
}
