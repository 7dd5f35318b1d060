use std::collections::BTreeMap;
use std::fmt::Write;

use rug::ops::Pow;
use rug::{Complex, Rational};

use super::rational::parse_rational;
use crate::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored. The variables default to
/// `j1, j2, j3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        Self { vars: vars.iter().map(|v| v.to_string()).collect(), terms: BTreeMap::new() }
    }

    /// The zero polynomial in `j1, j2, j3`.
    pub fn zero_j() -> Self {
        Self::zero(&["j1", "j2", "j3"])
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Adds `c * x^exps`, dropping the term if it cancels.
    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) -> Result<()> {
        if exps.len() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), got: exps.len() });
        }
        let entry = self.terms.entry(exps.clone()).or_default();
        *entry += c;
        if entry.cmp0().is_eq() {
            self.terms.remove(&exps);
        }
        Ok(())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Parses the term format: one `e1 e2 ... en p/q` line per term, blank
    /// lines and `#` comments ignored. The arity is taken from `vars`.
    pub fn parse_terms(text: &str, vars: &[&str]) -> Result<Self> {
        let mut poly = Self::zero(vars);
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != vars.len() + 1 {
                return Err(Error::Parse(format!(
                    "line {}: expected {} fields, got {}",
                    lineno + 1,
                    vars.len() + 1,
                    fields.len()
                )));
            }
            let exps = fields[..vars.len()]
                .iter()
                .map(|f| f.parse::<u32>().map_err(|_| Error::Parse(format!("line {}: bad exponent {f:?}", lineno + 1))))
                .collect::<Result<Vec<u32>>>()?;
            let c = parse_rational(fields[vars.len()])?;
            poly.add_term(exps, c)?;
        }
        Ok(poly)
    }

    pub fn to_terms_string(&self) -> String {
        let mut out = String::new();
        for (e, c) in &self.terms {
            for x in e {
                let _ = write!(out, "{x} ");
            }
            let _ = writeln!(out, "{c}");
        }
        out
    }

    fn check_arity(&self, got: usize) -> Result<()> {
        if got != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), got });
        }
        Ok(())
    }

    fn max_exponents(&self) -> Vec<u32> {
        let mut m = vec![0; self.arity()];
        for e in self.terms.keys() {
            for (slot, &x) in m.iter_mut().zip(e) {
                *slot = (*slot).max(x);
            }
        }
        m
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, point: &[Rational]) -> Result<Rational> {
        self.check_arity(point.len())?;
        let powers: Vec<Vec<Rational>> = point
            .iter()
            .zip(self.max_exponents())
            .map(|(x, n)| {
                let mut v = vec![Rational::from(1)];
                for i in 0..n as usize {
                    let next = Rational::from(&v[i] * x);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = Rational::new();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (pw, &k) in powers.iter().zip(e) {
                t *= &pw[k as usize];
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Evaluation at a complex point, carried out at `prec` bits.
    pub fn eval_complex(&self, point: &[Complex], prec: u32) -> Result<Complex> {
        self.check_arity(point.len())?;
        let powers: Vec<Vec<Complex>> = point
            .iter()
            .zip(self.max_exponents())
            .map(|(x, n)| {
                let mut v = vec![Complex::with_val(prec, 1)];
                for i in 0..n as usize {
                    let next = Complex::with_val(prec, &v[i] * x);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = Complex::new(prec);
        for (e, c) in &self.terms {
            let mut t = Complex::with_val(prec, c);
            for (pw, &k) in powers.iter().zip(e) {
                t *= &pw[k as usize];
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Sum of the absolute values of all terms at a complex point; the
    /// natural scale for judging whether an evaluation vanishes.
    pub fn eval_abs_scale(&self, point: &[Complex], prec: u32) -> Result<rug::Float> {
        self.check_arity(point.len())?;
        let abs: Vec<rug::Float> = point.iter().map(|z| rug::Float::with_val(prec, z.abs_ref())).collect();
        let mut acc = rug::Float::new(prec);
        for (e, c) in &self.terms {
            let mut t = rug::Float::with_val(prec, c.clone().abs());
            for (a, &k) in abs.iter().zip(e) {
                t *= rug::Float::with_val(prec, a.pow(k));
            }
            acc += t;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_eval() {
        let p = MultiPoly::parse_terms("# demo\n5 0 0 236196\n\n0 1 1 -1/2\n", &["j1", "j2", "j3"]).unwrap();
        assert_eq!(p.len(), 2);
        let one = Rational::from(1);
        let zero = Rational::new();
        assert_eq!(p.eval_rational(&[one.clone(), zero.clone(), zero.clone()]).unwrap(), Rational::from(236196));
        assert_eq!(p.eval_rational(&[zero.clone(), Rational::from(2), Rational::from(3)]).unwrap(), Rational::from(-3));
        assert_eq!(p.eval_rational(&[one]), Err(Error::ArityMismatch { expected: 3, got: 1 }));
    }

    #[test]
    fn cancelling_terms_are_dropped() {
        let p = MultiPoly::parse_terms("1 0 0 3\n1 0 0 -3\n", &["j1", "j2", "j3"]).unwrap();
        assert!(p.is_empty());
    }

    #[test]
    fn bad_lines_are_rejected() {
        assert!(MultiPoly::parse_terms("1 0 3\n", &["j1", "j2", "j3"]).is_err());
        assert!(MultiPoly::parse_terms("1 0 x 3\n", &["j1", "j2", "j3"]).is_err());
    }

    #[test]
    fn terms_string_roundtrip() {
        let p = MultiPoly::parse_terms("2 1 0 7/3\n0 0 4 -1\n", &["j1", "j2", "j3"]).unwrap();
        let back = MultiPoly::parse_terms(&p.to_terms_string(), &["j1", "j2", "j3"]).unwrap();
        assert_eq!(p, back);
    }
}
