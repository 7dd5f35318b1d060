use rug::{Complex, Float};

use super::scalar::tolerance;
use crate::{Error, Result};

/// Dense univariate polynomial over complex numbers, constant term first,
/// with every coefficient held at `prec` bits.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPoly {
    coeffs: Vec<Complex>,
    prec: u32,
}

impl ComplexPoly {
    /// Builds from coefficients (constant first); exact zero leading
    /// coefficients are trimmed.
    pub fn new(coeffs: Vec<Complex>, prec: u32) -> Self {
        let mut coeffs: Vec<Complex> = coeffs.into_iter().map(|c| Complex::with_val(prec, c)).collect();
        while coeffs.last().is_some_and(|c| c.real().is_zero() && c.imag().is_zero()) {
            coeffs.pop();
        }
        Self { coeffs, prec }
    }

    pub fn zero(prec: u32) -> Self {
        Self { coeffs: Vec::new(), prec }
    }

    pub fn one(prec: u32) -> Self {
        Self::new(vec![Complex::with_val(prec, 1)], prec)
    }

    /// `prod (X - r)` over the given roots.
    pub fn from_roots(roots: &[Complex], prec: u32) -> Self {
        let mut c = vec![Complex::with_val(prec, 1)];
        for r in roots {
            let mut next = vec![Complex::new(prec); c.len() + 1];
            for (i, a) in c.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= Complex::with_val(prec, a * r);
            }
            c = next;
        }
        Self::new(c, prec)
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Complex> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Complex) -> Complex {
        let mut acc = Complex::new(self.prec);
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let c =
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| Complex::with_val(self.prec, c * i as u32)).collect();
        Self::new(c, self.prec)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.prec);
        }
        let mut c = vec![Complex::new(self.prec); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += Complex::with_val(self.prec, a * b);
            }
        }
        Self::new(c, self.prec)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let mut v = Complex::new(self.prec);
                if let Some(a) = self.coeffs.get(i) {
                    v += a;
                }
                if let Some(b) = other.coeffs.get(i) {
                    v += b;
                }
                v
            })
            .collect();
        Self::new(c, self.prec)
    }

    pub fn scale(&self, s: &Complex) -> Self {
        Self::new(self.coeffs.iter().map(|c| Complex::with_val(self.prec, c * s)).collect(), self.prec)
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> Float {
        self.coeffs.iter().map(|c| Float::with_val(self.prec, c.abs_ref())).fold(Float::new(self.prec), |a, b| {
            if b > a {
                b
            } else {
                a
            }
        })
    }

    /// Drops leading coefficients that are below `2^(-prec/2) * scale`.
    pub fn trim_negligible(mut self, scale: &Float) -> Self {
        let bound = Float::with_val(self.prec, scale * tolerance(self.prec));
        while self.coeffs.last().is_some_and(|c| Float::with_val(self.prec, c.abs_ref()) <= bound) {
            self.coeffs.pop();
        }
        self
    }
}

/// Interpolating polynomial of degree `< nodes.len()` through `(x_i, y_i)`,
/// assembled as `sum_i y_i * prod_{j != i} (X - x_j) / (x_i - x_j)`.
///
/// Fails when two abscissae are closer than `2^(-prec/2)`.
pub fn lagrange_interpolate(nodes: &[(Complex, Complex)], prec: u32) -> Result<ComplexPoly> {
    let tol = tolerance(prec);
    for i in 0..nodes.len() {
        for j in 0..i {
            let d = Float::with_val(prec, Complex::with_val(prec, &nodes[i].0 - &nodes[j].0).abs_ref());
            if d <= tol {
                return Err(Error::CoincidentNodes(j, i));
            }
        }
    }
    let mut acc = ComplexPoly::zero(prec);
    for (i, (xi, yi)) in nodes.iter().enumerate() {
        let others: Vec<Complex> =
            nodes.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, (xj, _))| xj.clone()).collect();
        let basis = ComplexPoly::from_roots(&others, prec);
        let denom = basis.eval(xi);
        acc = acc.add(&basis.scale(&Complex::with_val(prec, yi / &denom)));
    }
    let ymax =
        nodes
            .iter()
            .map(|(_, y)| Float::with_val(prec, y.abs_ref()))
            .fold(Float::new(prec), |a, b| if b > a { b } else { a });
    Ok(acc.trim_negligible(&ymax))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::complex;

    const P: u32 = 200;

    fn c(re: f64) -> Complex {
        complex(P, (re, 0.0))
    }

    fn close(a: &Complex, b: &Complex) -> bool {
        Float::with_val(P, Complex::with_val(P, a - b).abs_ref()) <= Float::with_val(P, 1e-50)
    }

    #[test]
    fn line_through_two_points() {
        let p = lagrange_interpolate(&[(c(0.0), c(0.0)), (c(1.0), c(1.0))], P).unwrap();
        assert_eq!(p.degree(), Some(1));
        assert!(close(&p.coeffs()[0], &c(0.0)));
        assert!(close(&p.coeffs()[1], &c(1.0)));
    }

    #[test]
    fn constant_data_gives_constant() {
        let p = lagrange_interpolate(&[(c(0.0), c(5.0)), (c(1.0), c(5.0)), (c(2.0), c(5.0))], P).unwrap();
        assert_eq!(p.degree(), Some(0));
        assert!(close(&p.coeffs()[0], &c(5.0)));
    }

    #[test]
    fn cubic_roundtrip() {
        let f = ComplexPoly::new(vec![c(1.0), c(0.0), c(0.0), c(1.0)], P);
        let nodes: Vec<_> = [-1.5, 0.25, 2.0, 3.0].iter().map(|&x| (c(x), f.eval(&c(x)))).collect();
        let p = lagrange_interpolate(&nodes, P).unwrap();
        assert_eq!(p.degree(), Some(3));
        for (a, b) in p.coeffs().iter().zip(f.coeffs()) {
            assert!(close(a, b));
        }
    }

    #[test]
    fn coincident_nodes_rejected() {
        let err = lagrange_interpolate(&[(c(1.0), c(0.0)), (c(1.0), c(2.0))], P).unwrap_err();
        assert_eq!(err, Error::CoincidentNodes(0, 1));
    }

    #[test]
    fn product_and_derivative() {
        let p = ComplexPoly::from_roots(&[c(1.0), c(-1.0)], P);
        assert!(close(&p.coeffs()[0], &c(-1.0)));
        assert!(close(&p.coeffs()[1], &c(0.0)));
        let d = p.derivative();
        assert!(close(&d.eval(&c(3.0)), &c(6.0)));
        let sq = p.mul(&p);
        assert_eq!(sq.degree(), Some(4));
        assert!(close(&sq.eval(&c(2.0)), &c(9.0)));
    }
}
