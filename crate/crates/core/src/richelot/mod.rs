//! Richelot's construction of the fifteen (2,2)-isogenies out of the
//! Jacobian of `y^2 = f(x)`.
//!
//! Each way of splitting the six roots of `f` into three pairs gives
//! `f = A B C` with monic quadratics. With `[A, B] = A'B - AB'` and `Delta`
//! the determinant of the coefficient vectors of `A, B, C`, the isogenous
//! curve is `Delta y^2 = [A,B][A,C][B,C]` when `Delta != 0`; when
//! `Delta = 0` the Jacobian splits as a product of elliptic curves.

use rayon::prelude::*;
use rug::{Complex, Float};

use crate::exactnum::{polynomial_roots, tolerance, ComplexPoly, Scalar};
use crate::g2curve::{absolute_igusa, transform_sextic, upoly, CurveScalar, Genus2Curve, IgusaTriple};
use crate::{Error, Result};

/// A quadratic `c0 + c1 x + c2 x^2`.
pub type Quadratic = [Complex; 3];

/// `f = A B C`. `pairs` records which roots (in canonical order) make up
/// each factor; the quadratics of a dual triple need not come from roots.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticTriple {
    pub a: Quadratic,
    pub b: Quadratic,
    pub c: Quadratic,
    pub pairs: Option<[(usize, usize); 3]>,
}

impl QuadraticTriple {
    pub fn factors(&self) -> [&Quadratic; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn product(&self) -> Vec<Complex> {
        upoly::mul(&upoly::mul(&self.a, &self.b), &self.c)
    }

    /// The triple `([B,C], [A,C], [A,B])`, each made monic, which factors the
    /// image curve. `None` when a bracket drops degree.
    pub fn dual(&self) -> Option<QuadraticTriple> {
        let monic = |q: Vec<Complex>| -> Option<Quadratic> {
            let scale = q.iter().max_by(|x, y| x.magnitude().total_cmp(&y.magnitude()))?.clone();
            if q[2].negligible(&scale) {
                return None;
            }
            let lead = q[2].clone();
            Some([q[0].div_ref(&lead), q[1].div_ref(&lead), lead.one_like()])
        };
        Some(QuadraticTriple {
            a: monic(bracket(&self.b, &self.c))?,
            b: monic(bracket(&self.a, &self.c))?,
            c: monic(bracket(&self.a, &self.b))?,
            pairs: None,
        })
    }
}

/// Image of one Richelot step: a curve, or the split marker when `Delta`
/// vanishes to tolerance.
#[derive(Clone, Debug, PartialEq)]
pub enum RichelotImage {
    Curve(Genus2Curve<Complex>),
    Split,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RichelotStep {
    pub triple: QuadraticTriple,
    pub delta: Complex,
    pub image: RichelotImage,
}

impl RichelotStep {
    pub fn is_split(&self) -> bool {
        matches!(self.image, RichelotImage::Split)
    }
}

/// One entry of [`all_isogenous_invariants`]; `invariants` is `None` for a
/// split step.
#[derive(Clone, Debug, PartialEq)]
pub struct IsogenyRecord {
    pub triple: QuadraticTriple,
    pub delta: Complex,
    pub invariants: Option<IgusaTriple<Complex>>,
}

/// The six roots of `f` at `prec` bits, sorted by real then imaginary part.
pub fn complex_roots<S: CurveScalar>(f: &Genus2Curve<S>, prec: u32) -> Result<Vec<Complex>> {
    let coeffs: Vec<Complex> = f.coefficients().iter().map(|c| c.to_complex(prec)).collect();
    polynomial_roots(&ComplexPoly::new(coeffs, prec))
}

/// The 15 perfect matchings of `{0, ..., 5}`, in lexicographic order.
pub fn root_pairings() -> Vec<[(usize, usize); 3]> {
    let mut out = Vec::with_capacity(15);
    for j in 1..6 {
        let rest: Vec<usize> = (1..6).filter(|&x| x != j).collect();
        for k in 1..4 {
            let tail: Vec<usize> = rest[1..].iter().copied().filter(|&x| x != rest[k]).collect();
            out.push([(0, j), (rest[0], rest[k]), (tail[0], tail[1])]);
        }
    }
    out
}

fn quadratic_from_roots(r: &Complex, s: &Complex) -> Quadratic {
    let prec = r.prec().0;
    [Complex::with_val(prec, r * s), -Complex::with_val(prec, r + s), Complex::with_val(prec, 1)]
}

/// All 15 factorizations `f = A B C`, each checked to reproduce `f`.
pub fn enumerate_factorizations<S: CurveScalar>(f: &Genus2Curve<S>, prec: u32) -> Result<Vec<QuadraticTriple>> {
    let roots = complex_roots(f, prec)?;
    let target: Vec<Complex> = f.coefficients().iter().map(|c| c.to_complex(prec)).collect();
    let scale = target.iter().fold(Float::with_val(prec, 1), |m, c| m.max(&c.magnitude()));
    let tol = Float::with_val(prec, &scale * &tolerance(prec));
    root_pairings()
        .into_iter()
        .map(|pairs| {
            let [a, b, c] = pairs.map(|(i, j)| quadratic_from_roots(&roots[i], &roots[j]));
            let triple = QuadraticTriple { a, b, c, pairs: Some(pairs) };
            for (x, y) in triple.product().iter().zip(&target) {
                if Complex::with_val(prec, x - y).magnitude() > tol {
                    return Err(Error::Precision("factorization does not reproduce f".into()));
                }
            }
            Ok(triple)
        })
        .collect()
}

/// `[A, B] = A'B - AB'`; its `x^2` coefficient is `a2 b1 - a1 b2`.
pub fn bracket<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let lhs = upoly::mul(&upoly::derivative(a), b);
    let rhs = upoly::mul(a, &upoly::derivative(b));
    let mut out = upoly::sub(&lhs, &rhs);
    out.truncate(3);
    out
}

/// Determinant of the coefficient vectors of `A, B, C` in the basis
/// `1, x, x^2`.
pub fn delta<S: Scalar>(a: &[S], b: &[S], c: &[S]) -> S {
    let minor = |i: usize, j: usize| b[i].mul_ref(&c[j]).sub_ref(&b[j].mul_ref(&c[i]));
    a[0].mul_ref(&minor(1, 2)).sub_ref(&a[1].mul_ref(&minor(0, 2))).add_ref(&a[2].mul_ref(&minor(0, 1)))
}

fn max_magnitude(q: &[Complex]) -> Float {
    q.iter().fold(Float::with_val(q[0].prec().0, 0), |m, c| m.max(&c.magnitude()))
}

/// One Richelot step. The image `[A,B][A,C][B,C]` is made monic by dividing
/// by its leading coefficient; if that coefficient vanishes (a root at
/// infinity) the model is first moved by `x -> (t x + 1)/x` for the first
/// `t = 0, 1, 2, ...` with `G(t)` non-negligible.
pub fn richelot_image(triple: &QuadraticTriple) -> Result<RichelotStep> {
    let prec = triple.a[0].prec().0;
    let d = delta(&triple.a, &triple.b, &triple.c);
    let scale = triple.factors().iter().fold(Float::with_val(prec, 1), |s, q| s * max_magnitude(*q));
    if d.negligible(&Complex::with_val(prec, &scale)) {
        return Ok(RichelotStep { triple: triple.clone(), delta: d, image: RichelotImage::Split });
    }
    let ab = bracket(&triple.a, &triple.b);
    let ac = bracket(&triple.a, &triple.c);
    let bc = bracket(&triple.b, &triple.c);
    let mut g = upoly::mul(&upoly::mul(&ab, &ac), &bc);
    g.resize(7, Complex::new(prec));
    let gscale = Complex::with_val(prec, max_magnitude(&g));
    if g[6].negligible(&gscale) {
        let one = Complex::with_val(prec, 1);
        let zero = Complex::new(prec);
        let t = (0..)
            .map(|t| Complex::with_val(prec, t))
            .find(|t| !upoly::eval(&g, t).negligible(&gscale))
            .expect("a non-zero sextic has a non-root integer");
        g = transform_sextic(&g, &[[t, one.clone()], [one, zero]]);
    }
    let image = Genus2Curve::from_sextic(&g).map_err(|e| Error::Precision(format!("Richelot image rejected: {e}")))?;
    Ok(RichelotStep { triple: triple.clone(), delta: d, image: RichelotImage::Curve(image) })
}

/// Richelot steps for all 15 factorizations, in canonical order.
pub fn all_richelot_steps<S: CurveScalar>(f: &Genus2Curve<S>, prec: u32) -> Result<Vec<RichelotStep>> {
    enumerate_factorizations(f, prec)?.par_iter().map(richelot_image).collect()
}

/// Absolute invariants of every (2,2)-isogenous curve, in canonical order.
pub fn all_isogenous_invariants<S: CurveScalar>(f: &Genus2Curve<S>, prec: u32) -> Result<Vec<IsogenyRecord>> {
    Ok(all_richelot_steps(f, prec)?
        .into_par_iter()
        .map(|step| IsogenyRecord {
            invariants: match &step.image {
                RichelotImage::Curve(c) => Some(absolute_igusa(c)),
                RichelotImage::Split => None,
            },
            triple: step.triple,
            delta: step.delta,
        })
        .collect())
}

pub fn split_count(records: &[IsogenyRecord]) -> usize {
    records.iter().filter(|r| r.invariants.is_none()).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2curve::validate_curve;
    use rug::Rational;

    const PREC: u32 = 300;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    fn cq(v: &[i64]) -> Vec<Complex> {
        v.iter().map(|&x| Complex::with_val(PREC, x)).collect()
    }

    fn quad(v: [i64; 3]) -> Quadratic {
        v.map(|x| Complex::with_val(PREC, x))
    }

    fn small(x: &Complex, scale: f64) -> bool {
        x.magnitude() <= Float::with_val(PREC, tolerance(PREC) * scale)
    }

    #[test]
    fn brackets() {
        let a = quad([0, -1, 1]);
        let b = quad([6, -5, 1]);
        assert_eq!(bracket(&a, &b), cq(&[-6, 12, -4]));
        assert_eq!(bracket(&quad([-1, 0, 1]), &quad([-4, 0, 1])), cq(&[0, -6, 0]));
        assert!(bracket(&a, &a).iter().all(Scalar::is_exact_zero));
        let ba = bracket(&b, &a);
        for (x, y) in ba.iter().zip(bracket(&a, &b)) {
            assert_eq!(*x, -y);
        }
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&q(&[0, -1, 1]), &q(&[6, -5, 1]), &q(&[20, -9, 1])), 32);
        assert_eq!(delta(&q(&[-1, 0, 1]), &q(&[-4, 0, 1]), &q(&[-9, 0, 1])), 0);
    }

    #[test]
    fn pairings_are_the_fifteen_matchings() {
        let p = root_pairings();
        assert_eq!(p.len(), 15);
        let mut seen = std::collections::BTreeSet::new();
        for m in &p {
            let mut used: Vec<usize> = m.iter().flat_map(|&(i, j)| [i, j]).collect();
            used.sort_unstable();
            assert_eq!(used, vec![0, 1, 2, 3, 4, 5]);
            assert!(seen.insert(*m));
        }
    }

    #[test]
    fn bielliptic_curve_has_split_triple() {
        let c = validate_curve(&q(&[-36, 0, 49, 0, -14, 0, 1])).unwrap();
        let triples = enumerate_factorizations(&c, PREC).unwrap();
        assert_eq!(triples.len(), 15);
        // roots sorted as -3, -2, -1, 1, 2, 3: pair i with 5 - i
        let even = triples.iter().find(|t| t.pairs == Some([(0, 5), (1, 4), (2, 3)])).unwrap();
        for (got, want) in even.factors().iter().zip([[-9, 0, 1], [-4, 0, 1], [-1, 0, 1]]) {
            for (x, y) in got.iter().zip(want) {
                assert!(small(&Complex::with_val(PREC, x - y), 10.0));
            }
        }
        let step = richelot_image(even).unwrap();
        assert!(step.is_split());
        let records = all_isogenous_invariants(&c, PREC).unwrap();
        assert!(split_count(&records) >= 1);
    }

    #[test]
    fn generic_curve_has_no_split_steps() {
        let c = validate_curve(&q(&[1, 1, 0, 0, 0, 0, 1])).unwrap();
        let records = all_isogenous_invariants(&c, PREC).unwrap();
        assert_eq!(records.len(), 15);
        assert_eq!(split_count(&records), 0);
        assert!(records.iter().all(|r| r.invariants.as_ref().is_some_and(|j| j.finite)));
        let conj: Vec<Complex> = records.iter().map(|r| r.invariants.as_ref().unwrap().j1.clone()).collect();
        for j in &conj {
            let bar = Complex::with_val(PREC, j.conj_ref());
            assert!(conj.iter().any(|k| Complex::with_val(PREC, k - &bar).negligible(j)));
        }
    }

    #[test]
    fn conjugate_pairing_of_unity_roots_is_real() {
        let c = validate_curve(&q(&[-1, 0, 0, 0, 0, 0, 1])).unwrap();
        let triples = enumerate_factorizations(&c, PREC).unwrap();
        let real = triples
            .iter()
            .filter(|t| t.factors().iter().all(|q| q.iter().all(|x| small(&Complex::with_val(PREC, x.imag()), 10.0))))
            .count();
        assert!(real >= 1);
    }

    #[test]
    fn dual_step_returns_to_the_original_curve() {
        let c = validate_curve(&q(&[2, -1, 3, 1, 0, -2, 1])).unwrap();
        let original = absolute_igusa(&c.to_complex(PREC));
        for triple in enumerate_factorizations(&c, PREC).unwrap() {
            let back = richelot_image(&triple.dual().unwrap()).unwrap();
            let RichelotImage::Curve(curve) = back.image else { panic!("unexpected split") };
            let j = absolute_igusa(&curve);
            for (x, y) in j.as_array().iter().zip(original.as_array()) {
                assert!(Complex::with_val(PREC, *x - y).negligible(y));
            }
        }
    }

    #[test]
    fn image_degree_drop_is_normalised() {
        let triple = QuadraticTriple { a: quad([-1, 0, 1]), b: quad([-4, 0, 1]), c: quad([7, -5, 1]), pairs: None };
        let step = richelot_image(&triple).unwrap();
        assert!(matches!(step.image, RichelotImage::Curve(_)));
    }
}
