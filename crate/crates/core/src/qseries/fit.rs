use rug::Rational;

use super::series::{FourierSeries, SupportIndex};
use crate::exactnum::nullspace;
use crate::{Error, Result};

/// Linear equations in unknown rationals, obtained by equating
/// coefficients of like powers.
///
/// With `rhs = None` the system is homogeneous and solutions are taken up
/// to scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearTemplate {
    pub coefficients: Vec<Vec<Rational>>,
    pub rhs: Option<Vec<Rational>>,
    pub unknowns: usize,
}

impl LinearTemplate {
    /// Equations `sum_j u_j basis_j = target` (or `= 0`), one per exponent
    /// that occurs in any of the series, up to the common truncation order.
    pub fn from_series(basis: &[FourierSeries], target: Option<&FourierSeries>) -> Self {
        let all: Vec<&FourierSeries> = basis.iter().chain(target).collect();
        let shift = all.iter().map(|s| s.shift()).max().unwrap_or(0);
        let aligned: Vec<FourierSeries> = all.iter().map(|s| s.with_shift(shift)).collect();
        let order = aligned.iter().map(FourierSeries::order).min().unwrap_or(0);
        let mut support: Vec<SupportIndex> =
            aligned.iter().flat_map(|s| s.terms().map(|(i, _)| *i)).filter(|i| i.weight() <= order).collect();
        support.sort();
        support.dedup();
        let n = basis.len();
        let coefficients = support.iter().map(|i| aligned[..n].iter().map(|s| s.coefficient(i)).collect()).collect();
        let rhs = target.map(|_| support.iter().map(|i| aligned[n].coefficient(i)).collect());
        Self { coefficients, rhs, unknowns: n }
    }
}

/// The unique solution of the template, if there is one.
///
/// Returns `Ok(None)` when the system is underdetermined and
/// [`Error::Inconsistent`] when it has no solution (for homogeneous
/// templates: only the trivial one). Homogeneous solutions are scaled so
/// the first non-zero unknown is 1.
pub fn fit_coefficients(t: &LinearTemplate) -> Result<Option<Vec<Rational>>> {
    match &t.rhs {
        None => {
            let basis = nullspace(&t.coefficients_or_empty_row());
            match basis.len() {
                0 => Err(Error::Inconsistent),
                1 => {
                    let v = &basis[0];
                    let lead = v.iter().find(|x| x.cmp0().is_ne()).expect("basis vector is non-zero").clone();
                    Ok(Some(v.iter().map(|x| Rational::from(x / &lead)).collect()))
                }
                _ => Ok(None),
            }
        }
        Some(rhs) => {
            let rows: Vec<Vec<Rational>> = t
                .coefficients_or_empty_row()
                .into_iter()
                .zip(rhs.iter().chain(std::iter::repeat(&Rational::new())))
                .map(|(mut row, b)| {
                    row.push(Rational::from(-b));
                    row
                })
                .collect();
            let basis = nullspace(&rows);
            if basis.iter().all(|v| v[t.unknowns].cmp0().is_eq()) {
                return Err(Error::Inconsistent);
            }
            if basis.len() > 1 {
                return Ok(None);
            }
            let v = &basis[0];
            let scale = v[t.unknowns].clone();
            Ok(Some(v[..t.unknowns].iter().map(|x| Rational::from(x / &scale)).collect()))
        }
    }
}

impl LinearTemplate {
    fn coefficients_or_empty_row(&self) -> Vec<Vec<Rational>> {
        if self.coefficients.is_empty() {
            vec![vec![Rational::new(); self.unknowns]]
        } else {
            self.coefficients.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::series_mul;

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn single_equation() {
        let t = LinearTemplate { coefficients: vec![vec![q(1)]], rhs: Some(vec![q(3)]), unknowns: 1 };
        assert_eq!(fit_coefficients(&t).unwrap(), Some(vec![q(3)]));
    }

    #[test]
    fn inconsistent_and_underdetermined() {
        let t = LinearTemplate { coefficients: vec![vec![q(1)], vec![q(2)]], rhs: Some(vec![q(1), q(3)]), unknowns: 1 };
        assert_eq!(fit_coefficients(&t), Err(Error::Inconsistent));
        let t = LinearTemplate { coefficients: vec![vec![q(1), q(1)]], rhs: Some(vec![q(2)]), unknowns: 2 };
        assert_eq!(fit_coefficients(&t), Ok(None));
        let t = LinearTemplate { coefficients: vec![vec![q(2), q(-4)]], rhs: None, unknowns: 2 };
        assert_eq!(fit_coefficients(&t), Ok(Some(vec![q(1), Rational::from((1, 2))])));
    }

    #[test]
    fn recovers_geometric_series() {
        let one_minus_q1 =
            FourierSeries::from_terms([(SupportIndex::ZERO, q(1)), (SupportIndex::new(1, 0, 0), q(-1))], 3, 0);
        let basis: Vec<FourierSeries> = (0..4)
            .map(|j| series_mul(&FourierSeries::monomial(SupportIndex::new(j, 0, 0), q(1), 3), &one_minus_q1))
            .collect();
        let t = LinearTemplate::from_series(&basis, Some(&FourierSeries::one(3)));
        assert_eq!(fit_coefficients(&t).unwrap(), Some(vec![q(1); 4]));
    }
}
