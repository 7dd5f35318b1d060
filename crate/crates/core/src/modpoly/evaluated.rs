use rug::{Complex, Float, Integer, Rational};

use crate::exactnum::{rational_reconstruct, tolerance, ComplexPoly, Scalar};
use crate::g2curve::{absolute_igusa, CurveScalar, Genus2Curve, IgusaTriple};
use crate::richelot::all_isogenous_invariants;
use crate::{Error, Result};

/// `P`, `F2`, `F3` evaluated at one curve, with the image invariants they
/// were assembled from.
#[derive(Clone, Debug, PartialEq)]
pub struct EvaluatedModPoly {
    pub p: ComplexPoly,
    pub ftilde2: ComplexPoly,
    pub ftilde3: ComplexPoly,
    pub rational_p: Option<Vec<Rational>>,
    pub source: IgusaTriple<Complex>,
    pub images: Vec<IgusaTriple<Complex>>,
    pub prec: u32,
}

/// Absolute invariants of the 15 (2,2)-isogenous curves. A split step makes
/// `j1` of that image infinite and is reported as [`Error::SplitInput`].
pub fn image_invariants<S: CurveScalar>(c: &Genus2Curve<S>, prec: u32) -> Result<Vec<IgusaTriple<Complex>>> {
    all_isogenous_invariants(c, prec)?
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.invariants.ok_or(Error::SplitInput(i)))
        .collect()
}

/// `prod (X - x_i)`.
pub fn product_from_roots(x: &[Complex], prec: u32) -> ComplexPoly {
    ComplexPoly::from_roots(x, prec)
}

/// `sum_i y_i prod_{j != i} (X - x_j)`, refusing nodes that coincide to
/// tolerance relative to `max(1, |x_i|, |x_j|)`.
pub fn ftilde_from_images(x: &[Complex], y: &[Complex], prec: u32) -> Result<ComplexPoly> {
    assert_eq!(x.len(), y.len());
    let tol = tolerance(prec);
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            let scale = x[i].magnitude().max(&x[j].magnitude()).max(&Float::with_val(prec, 1));
            if Complex::with_val(prec, &x[i] - &x[j]).magnitude() <= scale * &tol {
                return Err(Error::CollidingImages(i, j));
            }
        }
    }
    let mut acc = ComplexPoly::zero(prec);
    for (i, yi) in y.iter().enumerate() {
        let others: Vec<Complex> = x.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v.clone()).collect();
        acc = acc.add(&ComplexPoly::from_roots(&others, prec).scale(yi));
    }
    Ok(acc)
}

fn pick(j: &IgusaTriple<Complex>, k: usize) -> &Complex {
    match k {
        2 => &j.j2,
        3 => &j.j3,
        _ => panic!("k must be 2 or 3"),
    }
}

/// `F_k` for `k` in `{2, 3}`.
pub fn evaluated_ftilde<S: CurveScalar>(c: &Genus2Curve<S>, k: usize, prec: u32) -> Result<ComplexPoly> {
    let images = image_invariants(c, prec)?;
    let x: Vec<Complex> = images.iter().map(|j| j.j1.clone()).collect();
    let y: Vec<Complex> = images.iter().map(|j| pick(j, k).clone()).collect();
    ftilde_from_images(&x, &y, prec)
}

pub fn evaluated_p2<S: CurveScalar>(c: &Genus2Curve<S>, prec: u32) -> Result<EvaluatedModPoly> {
    let images = image_invariants(c, prec)?;
    let x: Vec<Complex> = images.iter().map(|j| j.j1.clone()).collect();
    let y2: Vec<Complex> = images.iter().map(|j| j.j2.clone()).collect();
    let y3: Vec<Complex> = images.iter().map(|j| j.j3.clone()).collect();
    let coeffs: Vec<Complex> = c.coefficients().iter().map(|v| v.to_complex(prec)).collect();
    let source = absolute_igusa(&crate::g2curve::validate_curve(&coeffs)?);
    Ok(EvaluatedModPoly {
        p: product_from_roots(&x, prec),
        ftilde2: ftilde_from_images(&x, &y2, prec)?,
        ftilde3: ftilde_from_images(&x, &y3, prec)?,
        rational_p: None,
        source,
        images,
        prec,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructOptions {
    pub denom_bound: Integer,
    /// Precision is doubled after each failed attempt, up to this cap.
    pub max_prec: u32,
}

impl Default for ReconstructOptions {
    fn default() -> Self {
        Self { denom_bound: Integer::from(1) << 256, max_prec: 2000 }
    }
}

/// Outcome of [`reconstruct_p2`]. On failure `coefficients` is `None` and
/// `failed_coefficient` names the first coefficient that did not
/// reconstruct at the last precision tried.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconstruction {
    pub coefficients: Option<Vec<Rational>>,
    pub attempts: Vec<u32>,
    pub failed_coefficient: Option<usize>,
}

fn try_reconstruct(p: &ComplexPoly, prec: u32, bound: &Integer) -> std::result::Result<Vec<Rational>, usize> {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let scale = c.magnitude().max(&Float::with_val(prec, 1));
            if c.imag().clone().abs() > Float::with_val(prec, &scale * &tolerance(prec)) {
                return Err(i);
            }
            rational_reconstruct(c.real(), prec, bound).ok_or(i)
        })
        .collect()
}

fn agrees(q: &[Rational], p: &ComplexPoly, prec: u32) -> bool {
    q.len() == p.coeffs().len()
        && q.iter().zip(p.coeffs()).all(|(r, c)| {
            let d = Complex::with_val(p.prec(), c - r).magnitude();
            let scale = c.magnitude().max(&Float::with_val(p.prec(), 1));
            d <= scale * tolerance(prec)
        })
}

/// Rational coefficients of `P` for a rational curve.
///
/// Each coefficient is recovered by continued fractions with denominators up
/// to `denom_bound`, then checked against an evaluation at twice the
/// precision. On failure the precision is doubled, up to `max_prec`.
pub fn reconstruct_p2(c: &Genus2Curve<Rational>, prec: u32, opts: &ReconstructOptions) -> Result<Reconstruction> {
    let mut attempts = Vec::new();
    let mut current = prec;
    loop {
        attempts.push(current);
        let p =
            product_from_roots(&image_invariants(c, current)?.into_iter().map(|j| j.j1).collect::<Vec<_>>(), current);
        let failed = match try_reconstruct(&p, current, &opts.denom_bound) {
            Ok(q) => {
                let check = product_from_roots(
                    &image_invariants(c, 2 * current)?.into_iter().map(|j| j.j1).collect::<Vec<_>>(),
                    2 * current,
                );
                if agrees(&q, &check, current) {
                    return Ok(Reconstruction { coefficients: Some(q), attempts, failed_coefficient: None });
                }
                0
            }
            Err(i) => i,
        };
        if current >= opts.max_prec {
            return Ok(Reconstruction { coefficients: None, attempts, failed_coefficient: Some(failed) });
        }
        current = (2 * current).min(opts.max_prec);
    }
}
