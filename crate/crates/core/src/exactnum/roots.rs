use std::cmp::Ordering;

use rug::float::Constant;
use rug::{Complex, Float};

use super::complexpoly::ComplexPoly;
use super::scalar::tolerance;
use crate::{Error, Result};

const GUARD_BITS: u32 = 32;
const MAX_ITERATIONS: usize = 2000;

/// All roots of `p` by simultaneous Aberth iteration.
///
/// Each root is certified by `|p(r)| <= 2^(-prec/2) * sum |c_i| max(1, |r|)^i` and
/// the roots are required to be pairwise separated by more than the same
/// tolerance; clustered roots give [`Error::Precision`]. Output is sorted
/// by real part, then imaginary part, treating real parts that agree to
/// tolerance as equal.
pub fn polynomial_roots(p: &ComplexPoly) -> Result<Vec<Complex>> {
    let prec = p.prec();
    let n = p.degree().ok_or_else(|| Error::Precision("zero polynomial has no roots".into()))?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let wp = prec + GUARD_BITS;
    let coeffs: Vec<Complex> = p.coeffs().iter().map(|c| Complex::with_val(wp, c)).collect();
    let work = ComplexPoly::new(coeffs, wp);
    let dwork = work.derivative();
    let lead = Float::with_val(wp, work.leading().expect("non-zero").abs_ref());

    let mut radius = Float::with_val(wp, 0);
    for (i, c) in work.coeffs()[..n].iter().enumerate() {
        let ratio = Float::with_val(wp, c.abs_ref()) / &lead;
        if ratio.is_zero() {
            continue;
        }
        let r = ratio.root(u32::try_from(n - i).expect("small degree"));
        if r > radius {
            radius = r;
        }
    }
    if radius.is_zero() {
        radius = Float::with_val(wp, 1);
    }
    let two_pi = Float::with_val(wp, Constant::Pi) * 2u32;
    let mut z: Vec<Complex> = (0..n)
        .map(|k| {
            let theta = Float::with_val(wp, &two_pi * k as u32) / n as u32 + 0.4f64;
            let (s, c) = theta.sin_cos(Float::new(wp));
            Complex::with_val(wp, (Float::with_val(wp, &c * &radius), Float::with_val(wp, &s * &radius)))
        })
        .collect();

    let stop = Float::with_val(wp, Float::i_exp(1, -(prec as i32)));
    for _ in 0..MAX_ITERATIONS {
        let mut converged = true;
        for k in 0..n {
            let pz = work.eval(&z[k]);
            if pz.real().is_zero() && pz.imag().is_zero() {
                continue;
            }
            let dz = dwork.eval(&z[k]);
            let ratio = Complex::with_val(wp, &pz / &dz);
            let mut repulsion = Complex::new(wp);
            for (j, zj) in z.iter().enumerate() {
                if j != k {
                    let diff = Complex::with_val(wp, &z[k] - zj);
                    repulsion += diff.recip();
                }
            }
            let denom = Complex::with_val(wp, 1) - Complex::with_val(wp, &ratio * &repulsion);
            let step = Complex::with_val(wp, &ratio / &denom);
            if !step.real().is_finite() || !step.imag().is_finite() {
                return Err(Error::Precision("root iteration diverged".into()));
            }
            let size = Float::with_val(wp, step.abs_ref());
            let mag = Float::with_val(wp, z[k].abs_ref()) + 1u32;
            if size > Float::with_val(wp, &stop * &mag) {
                converged = false;
            }
            z[k] -= step;
        }
        if converged {
            break;
        }
    }

    let tol = tolerance(prec);
    let roots: Vec<Complex> = z.into_iter().map(|r| Complex::with_val(prec, r)).collect();
    for r in &roots {
        let residual = Float::with_val(wp, p.eval(r).abs_ref());
        let mut scale = Float::with_val(wp, 0);
        let ar = Float::with_val(wp, r.abs_ref()).max(&Float::with_val(wp, 1));
        let mut power = Float::with_val(wp, 1);
        for c in p.coeffs() {
            scale += Float::with_val(wp, c.abs_ref()) * &power;
            power *= &ar;
        }
        if residual > Float::with_val(wp, &scale * &tol) {
            return Err(Error::Precision("root residual above tolerance".into()));
        }
    }
    let span = roots.iter().fold(Float::with_val(prec, 1), |m, r| m.max(&Float::with_val(prec, r.abs_ref())));
    let sep = Float::with_val(prec, &span * &tol);
    for i in 0..n {
        for j in i + 1..n {
            if Float::with_val(prec, Complex::with_val(prec, &roots[i] - &roots[j]).abs_ref()) <= sep {
                return Err(Error::Precision(format!("roots {i} and {j} cluster below tolerance")));
            }
        }
    }
    let mut roots = roots;
    roots.sort_by(|a, b| canonical_order(a, b, &sep));
    Ok(roots)
}

fn canonical_order(a: &Complex, b: &Complex, sep: &Float) -> Ordering {
    let dre = Float::with_val(sep.prec(), a.real() - b.real());
    if Float::with_val(sep.prec(), dre.abs_ref()) > *sep {
        return a.real().partial_cmp(b.real()).unwrap_or(Ordering::Equal);
    }
    a.imag().partial_cmp(b.imag()).unwrap_or(Ordering::Equal)
}
