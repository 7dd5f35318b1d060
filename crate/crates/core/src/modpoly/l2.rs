use std::sync::OnceLock;

use rug::{Complex, Float};

use crate::exactnum::{tolerance, MultiPoly, Scalar};
use crate::g2curve::IgusaTriple;

/// The shipped term list of `L2` in `j1 j2 j3`.
pub const L2_TERMS: &str = include_str!("../../data/l2.terms");

/// Equation of the locus of curves whose Jacobian is (2,2)-isogenous to a
/// product of elliptic curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitLocusPoly {
    pub poly: MultiPoly,
}

impl SplitLocusPoly {
    pub fn shipped() -> &'static Self {
        static L2: OnceLock<SplitLocusPoly> = OnceLock::new();
        L2.get_or_init(|| Self::parse(L2_TERMS).expect("shipped L2 data parses"))
    }

    pub fn parse(text: &str) -> crate::Result<Self> {
        Ok(Self { poly: MultiPoly::parse_terms(text, &["j1", "j2", "j3"])? })
    }

    /// Exact over the rationals, at the working precision over the complex
    /// numbers.
    pub fn evaluate<S: Scalar>(&self, j: &IgusaTriple<S>) -> S {
        let vars = j.as_array();
        self.poly.terms().fold(j.j1.zero_like(), |acc, (exps, c)| {
            let mut t = j.j1.from_rational_like(c);
            for (v, &e) in vars.iter().zip(exps) {
                t = t.mul_ref(&v.pow_u32(e));
            }
            acc.add_ref(&t)
        })
    }

    /// `sum |c| |j1|^a |j2|^b |j3|^c`, the scale against which a vanishing
    /// value is judged.
    pub fn scale<S: Scalar>(&self, j: &IgusaTriple<S>, prec: u32) -> Float {
        let point: Vec<Complex> = j.as_array().iter().map(|v| v.to_complex(prec)).collect();
        self.poly.eval_abs_scale(&point, prec).expect("arity three")
    }
}

pub fn l2_evaluate<S: Scalar>(j: &IgusaTriple<S>) -> S {
    SplitLocusPoly::shipped().evaluate(j)
}

/// `L2(j) = 0` exactly for rationals, or `|L2(j)| <= rel * scale` for
/// complex values where `rel` defaults to `2^(-prec/2)`.
pub fn l2_vanishes(j: &IgusaTriple<Complex>, rel: Option<&Float>) -> bool {
    let prec = j.j1.prec().0;
    let l2 = SplitLocusPoly::shipped();
    let value = l2.evaluate(j).magnitude();
    let bound = rel.cloned().unwrap_or_else(|| tolerance(prec)) * l2.scale(j, prec);
    value <= bound
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2curve::{absolute_igusa, validate_curve};
    use rug::Rational;

    fn triple(a: Rational, b: Rational, c: Rational) -> IgusaTriple<Rational> {
        IgusaTriple { j1: a, j2: b, j3: c, finite: true }
    }

    #[test]
    fn transcription_checksum() {
        let l2 = SplitLocusPoly::shipped();
        assert_eq!(l2.poly.len(), 34);
        assert_eq!(l2.poly.coefficient(&[5, 0, 0]), 236196);
        assert_eq!(l2.poly.total_degree(), Some(7));
        let abs_sum: Rational = l2.poly.terms().map(|(_, c)| c.clone().abs()).sum();
        assert_eq!(abs_sum, 128724958479u64);
        let one = Rational::from(1);
        assert_eq!(l2_evaluate(&triple(one.clone(), one.clone(), one)), 127484175537u64);
        let v = l2_evaluate(&triple(Rational::from(2), Rational::from(3), Rational::from(5)));
        assert_eq!(v, 2231316505026u64);
        let v = l2_evaluate(&triple(Rational::from((1, 2)), Rational::from((-1, 3)), Rational::from((2, 7))));
        assert_eq!(v, Rational::from((288135592504929139u64, 36756909u64)));
    }

    #[test]
    fn vanishes_at_origin() {
        assert_eq!(l2_evaluate(&triple(Rational::new(), Rational::new(), Rational::new())), 0);
    }

    #[test]
    fn vanishes_on_bielliptic_curve() {
        let c = validate_curve(&[-36, 0, 49, 0, -14, 0, 1].map(Rational::from)).unwrap();
        assert_eq!(l2_evaluate(&absolute_igusa(&c)), 0);
        assert!(l2_vanishes(&absolute_igusa(&c.to_complex(200)), None));
    }

    #[test]
    fn nonzero_on_generic_curve() {
        let c = validate_curve(&[1, 1, 0, 0, 0, 0, 1].map(Rational::from)).unwrap();
        assert_ne!(l2_evaluate(&absolute_igusa(&c)), 0);
        assert!(!l2_vanishes(&absolute_igusa(&c.to_complex(200)), None));
    }
}
