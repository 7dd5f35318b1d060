use rug::{Complex, Float, Integer, Rational};

use crate::{Error, Result};

/// Arbitrary-precision rational number in lowest terms with a positive
/// denominator. Serialises as `"p/q"`, or `"p"` when `q = 1`.
pub type ExactRational = Rational;

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    t.parse::<Rational>().map_err(|e| Error::Parse(format!("bad rational {t:?}: {e}")))
}

/// Decimal rendering with a fixed number of significant digits derived from
/// the precision, so equal inputs always print identically.
pub fn float_to_string(x: &Float) -> String {
    let digits = (f64::from(x.prec()) * std::f64::consts::LOG10_2).floor() as usize;
    x.to_string_radix(10, Some(digits.max(1)))
}

pub fn complex_to_strings(z: &Complex) -> [String; 2] {
    [float_to_string(z.real()), float_to_string(z.imag())]
}

pub fn complex_from_strings(re: &str, im: &str, prec: u32) -> Result<Complex> {
    let parse = |s: &str| {
        Float::parse(s.trim())
            .map(|v| Float::with_val(prec, v))
            .map_err(|e| Error::Parse(format!("bad decimal {s:?}: {e}")))
    };
    Ok(Complex::with_val(prec, (parse(re)?, parse(im)?)))
}

/// Recovers `p/q` with `q <= denom_bound` from a floating approximation by
/// walking the continued-fraction convergents of its exact binary value.
///
/// The first convergent within `2^(-prec/2)` of `approx` is returned; `None`
/// when the convergents outgrow `denom_bound` first. The tolerance is
/// absolute, so `None` is also returned when the unit in the last place of
/// `approx` exceeds it.
pub fn rational_reconstruct(approx: &Float, prec: u32, denom_bound: &Integer) -> Option<Rational> {
    assert!(prec >= 64, "reconstruction needs at least 64 bits");
    assert!(*denom_bound >= 1, "denominator bound must be positive");
    if let Some(e) = approx.get_exp() {
        if i64::from(e) - i64::from(approx.prec()) > -i64::from(prec / 2) {
            return None;
        }
    }
    let target = approx.to_rational()?;
    let tol = Rational::from((Integer::from(1), Integer::from(1) << (prec / 2)));

    let (mut p_prev, mut q_prev) = (Integer::from(0), Integer::from(1));
    let (mut p_cur, mut q_cur) = (Integer::from(1), Integer::from(0));
    let mut rest = target.clone();
    loop {
        let a = rest.clone().floor().into_numer_denom().0;
        let p_next = Integer::from(&a * &p_cur) + &p_prev;
        let q_next = Integer::from(&a * &q_cur) + &q_prev;
        if q_next > *denom_bound {
            return None;
        }
        p_prev = std::mem::replace(&mut p_cur, p_next);
        q_prev = std::mem::replace(&mut q_cur, q_next);
        let candidate = Rational::from((p_cur.clone(), q_cur.clone()));
        if Rational::from(&target - &candidate).abs() <= tol {
            return Some(candidate);
        }
        let frac = rest - Rational::from(a);
        if frac.cmp0().is_eq() {
            return None;
        }
        rest = frac.recip();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bound(b: u64) -> Integer {
        Integer::from(b)
    }

    #[test]
    fn reconstructs_half() {
        let x = Float::with_val(64, 0.5);
        assert_eq!(rational_reconstruct(&x, 64, &bound(2)), Some(Rational::from((1, 2))));
    }

    #[test]
    fn reconstructs_third() {
        let x = Float::with_val(128, Rational::from((1, 3)));
        assert_eq!(rational_reconstruct(&x, 128, &bound(1_000_000)), Some(Rational::from((1, 3))));
    }

    #[test]
    fn snaps_to_nearby_integer() {
        let x = Float::with_val(128, 2) + Float::with_val(128, Float::i_exp(1, -100));
        assert_eq!(rational_reconstruct(&x, 128, &bound(1_000_000)), Some(Rational::from(2)));
    }

    #[test]
    fn large_values_need_enough_precision() {
        let v = Rational::from((Integer::from(Integer::u_pow_u(10, 60)) * 7 + 1, 7));
        assert_eq!(rational_reconstruct(&Float::with_val(500, &v), 500, &bound(100)), Some(v.clone()));
        assert_eq!(rational_reconstruct(&Float::with_val(200, &v), 200, &bound(100)), None);
    }

    #[test]
    fn gives_up_beyond_bound() {
        let x = Float::with_val(256, Rational::from((1, 1_000_003)));
        assert_eq!(rational_reconstruct(&x, 256, &bound(1000)), None);
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational(" -6/4 ").unwrap(), Rational::from((-3, 2)));
        assert_eq!(Rational::from((4, 2)).to_string(), "2");
        assert!(parse_rational("1/0x").is_err());
    }

    #[test]
    fn complex_strings_roundtrip() {
        let z = Complex::with_val(200, (Rational::from((1, 3)), -2));
        let [re, im] = complex_to_strings(&z);
        let back = complex_from_strings(&re, &im, 200).unwrap();
        let err = Float::with_val(200, (z - back).abs_ref());
        assert!(err < 1e-55);
    }
}
