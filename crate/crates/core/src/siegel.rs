//! Numerics on the Siegel upper half-space of degree 2: membership, the
//! fractional-linear action of `Sp(4, Z)` and the polarisation checks that
//! make `C^2 / (Z^2 + Z^2 tau)` a principally polarised torus.

use rand::Rng;
use rug::{Complex, Float};

use crate::exactnum::tolerance;
use crate::sp4::{Block2, SymplecticMatrix};
use crate::{Error, Result};

pub type ComplexMatrix2 = [[Complex; 2]; 2];
type RealMatrix2 = [[Float; 2]; 2];

/// A point `tau = [[tau1, tau2], [tau2, tau3]]` of `H_2`. Symmetry holds by
/// storage; positivity of `Im(tau)` is checked on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct SiegelPoint {
    tau1: Complex,
    tau2: Complex,
    tau3: Complex,
    prec: u32,
}

fn cmul(prec: u32, a: &Complex, b: &Complex) -> Complex {
    Complex::with_val(prec, a * b)
}

fn mat_mul(prec: u32, x: &ComplexMatrix2, y: &ComplexMatrix2) -> ComplexMatrix2 {
    std::array::from_fn(|i| std::array::from_fn(|j| cmul(prec, &x[i][0], &y[0][j]) + cmul(prec, &x[i][1], &y[1][j])))
}

fn block_to_complex(prec: u32, b: &Block2) -> ComplexMatrix2 {
    std::array::from_fn(|i| std::array::from_fn(|j| Complex::with_val(prec, &b[i][j])))
}

fn mat_add(prec: u32, x: &ComplexMatrix2, y: &ComplexMatrix2) -> ComplexMatrix2 {
    std::array::from_fn(|i| std::array::from_fn(|j| Complex::with_val(prec, &x[i][j] + &y[i][j])))
}

fn abs(prec: u32, z: &Complex) -> Float {
    Float::with_val(prec, z.abs_ref())
}

/// Smallest eigenvalue of the symmetric part of a real 2x2 matrix.
fn min_eigenvalue(prec: u32, m: &RealMatrix2) -> Float {
    let off = Float::with_val(prec, &m[0][1] + &m[1][0]) / 2u32;
    let mean = Float::with_val(prec, &m[0][0] + &m[1][1]) / 2u32;
    let half_gap = Float::with_val(prec, &m[0][0] - &m[1][1]) / 2u32;
    let radius = (Float::with_val(prec, half_gap.square_ref()) + Float::with_val(prec, off.square_ref())).sqrt();
    mean - radius
}

fn imag_part(prec: u32, tau: &ComplexMatrix2) -> RealMatrix2 {
    std::array::from_fn(|i| std::array::from_fn(|j| Float::with_val(prec, tau[i][j].imag())))
}

/// `true` iff `tau` is symmetric up to `tol` and the smallest eigenvalue
/// of `Im(tau)` exceeds `tol`.
pub fn is_in_h2(tau: &ComplexMatrix2, tol: &Float) -> bool {
    let prec = tau[0][0].prec().0;
    let defect = abs(prec, &Complex::with_val(prec, &tau[0][1] - &tau[1][0]));
    defect <= *tol && min_eigenvalue(prec, &imag_part(prec, tau)) > *tol
}

impl SiegelPoint {
    pub fn new(tau1: Complex, tau2: Complex, tau3: Complex, prec: u32) -> Result<Self> {
        let p = Self {
            tau1: Complex::with_val(prec, tau1),
            tau2: Complex::with_val(prec, tau2),
            tau3: Complex::with_val(prec, tau3),
            prec,
        };
        if !is_in_h2(&p.matrix(), &tolerance(prec)) {
            return Err(Error::Precision("Im(tau) is not positive definite at this precision".into()));
        }
        Ok(p)
    }

    /// `s * i * 1_2`.
    pub fn scaled_identity(s: u32, prec: u32) -> Self {
        let z = Complex::with_val(prec, (0, s));
        Self::new(z.clone(), Complex::new(prec), z, prec).expect("s i 1_2 lies in H_2 for s > 0")
    }

    /// `X + iY` with `X` symmetric with entries uniform in `[-1, 1]` and
    /// `Y = L^T L + 1/4`, `L` having entries uniform in `[-1, 1]`.
    pub fn random<R: Rng>(rng: &mut R, prec: u32) -> Self {
        let x: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..=1.0));
        let l: [[f64; 2]; 2] = std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(-1.0..=1.0)));
        let y = |i: usize, j: usize| l[0][i] * l[0][j] + l[1][i] * l[1][j] + if i == j { 0.25 } else { 0.0 };
        Self::new(
            Complex::with_val(prec, (x[0], y(0, 0))),
            Complex::with_val(prec, (x[1], y(0, 1))),
            Complex::with_val(prec, (x[2], y(1, 1))),
            prec,
        )
        .expect("L^T L + 1/4 is positive definite")
    }

    pub fn components(&self) -> [&Complex; 3] {
        [&self.tau1, &self.tau2, &self.tau3]
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn matrix(&self) -> ComplexMatrix2 {
        [[self.tau1.clone(), self.tau2.clone()], [self.tau2.clone(), self.tau3.clone()]]
    }

    /// `k * tau`.
    pub fn scale(&self, k: u64) -> Self {
        let m = |z: &Complex| Complex::with_val(self.prec, z * k);
        Self { tau1: m(&self.tau1), tau2: m(&self.tau2), tau3: m(&self.tau3), prec: self.prec }
    }

    /// Largest componentwise distance.
    pub fn distance(&self, other: &Self) -> Float {
        self.components()
            .iter()
            .zip(other.components())
            .map(|(a, b)| abs(self.prec, &Complex::with_val(self.prec, *a - b)))
            .fold(Float::new(self.prec), |m, d| if d > m { d } else { m })
    }

    /// Largest component modulus, used to turn distances into relative errors.
    pub fn magnitude(&self) -> Float {
        self.components().iter().map(|z| abs(self.prec, z)).fold(Float::with_val(self.prec, 1), |m, d| {
            if d > m {
                d
            } else {
                m
            }
        })
    }
}

/// `M tau = (a tau + b)(c tau + d)^{-1}`.
///
/// Fails with a precision error when `c tau + d` is singular at the working
/// precision or the image does not land in `H_2` within tolerance.
pub fn symplectic_act(m: &SymplecticMatrix, tau: &SiegelPoint) -> Result<SiegelPoint> {
    let prec = tau.prec;
    let t = tau.matrix();
    let num = mat_add(prec, &mat_mul(prec, &block_to_complex(prec, &m.a()), &t), &block_to_complex(prec, &m.b()));
    let den = mat_add(prec, &mat_mul(prec, &block_to_complex(prec, &m.c()), &t), &block_to_complex(prec, &m.d()));
    let diag = cmul(prec, &den[0][0], &den[1][1]);
    let anti = cmul(prec, &den[0][1], &den[1][0]);
    let det = Complex::with_val(prec, &diag - &anti);
    let scale = abs(prec, &diag) + abs(prec, &anti);
    if abs(prec, &det) <= Float::with_val(prec, &scale * tolerance(prec)) {
        return Err(Error::Precision("c tau + d is singular at this precision".into()));
    }
    let inv: ComplexMatrix2 = [
        [Complex::with_val(prec, &den[1][1] / &det), -Complex::with_val(prec, &den[0][1] / &det)],
        [-Complex::with_val(prec, &den[1][0] / &det), Complex::with_val(prec, &den[0][0] / &det)],
    ];
    let r = mat_mul(prec, &num, &inv);
    let asym = abs(prec, &Complex::with_val(prec, &r[0][1] - &r[1][0]));
    let size = abs(prec, &r[0][1]) + abs(prec, &r[1][0]) + 1u32;
    if asym > Float::with_val(prec, &size * tolerance(prec)) {
        return Err(Error::Precision("image of the action is not symmetric".into()));
    }
    let tau2 = Complex::with_val(prec, &r[0][1] + &r[1][0]) / 2u32;
    let [[tau1, _], [_, tau3]] = r;
    SiegelPoint::new(tau1, tau2, tau3, prec)
}

/// Outcome of the polarisation checks for the lattice `Z^2 + Z^2 tau`.
#[derive(Clone, Debug)]
pub struct RiemannReport {
    /// `Im(tau)` is positive definite beyond the tolerance; when false the
    /// remaining checks are not meaningful and are reported as failed.
    pub precision_ok: bool,
    /// `H = Im(tau)^{-1}` is positive definite.
    pub hermitian_positive: bool,
    /// `E = Im H` takes integer values on the lattice basis.
    pub riemann_integral: bool,
    pub riemann_skew: bool,
    /// `E(ix, iy) = E(x, y)` on sampled vectors.
    pub complex_invariant: bool,
    /// `E` on the ordered lattice basis `(tau e_1, tau e_2, e_1, e_2)`.
    pub riemann_matrix: [[Float; 4]; 4],
}

impl RiemannReport {
    pub fn pass(&self) -> bool {
        self.precision_ok
            && self.hermitian_positive
            && self.riemann_integral
            && self.riemann_skew
            && self.complex_invariant
    }
}

/// Checks that `H(x, y) = x Im(tau)^{-1} conj(y)^T` is positive definite and
/// that its imaginary part `E` is an integral skew form on the lattice with
/// `E(ix, iy) = E(x, y)`.
///
/// With the basis ordered `(tau e_1, tau e_2, e_1, e_2)`, `E` is the
/// standard form `J`.
pub fn riemann_form_check<R: Rng>(tau: &SiegelPoint, rng: &mut R, samples: usize) -> RiemannReport {
    let prec = tau.prec;
    let tol = tolerance(prec);
    let t = tau.matrix();
    let y = imag_part(prec, &t);
    let zero_e: [[Float; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| Float::new(prec)));
    if min_eigenvalue(prec, &y) <= tol {
        return RiemannReport {
            precision_ok: false,
            hermitian_positive: false,
            riemann_integral: false,
            riemann_skew: false,
            complex_invariant: false,
            riemann_matrix: zero_e,
        };
    }
    let det = Float::with_val(prec, &y[0][0] * &y[1][1]) - Float::with_val(prec, &y[0][1] * &y[1][0]);
    let yinv: RealMatrix2 = [
        [Float::with_val(prec, &y[1][1] / &det), -Float::with_val(prec, &y[0][1] / &det)],
        [-Float::with_val(prec, &y[1][0] / &det), Float::with_val(prec, &y[0][0] / &det)],
    ];
    let hermitian_positive = min_eigenvalue(prec, &yinv) > tol;

    let h = |x: &[Complex; 2], z: &[Complex; 2]| -> Complex {
        let mut acc = Complex::new(prec);
        for i in 0..2 {
            for j in 0..2 {
                let zc = Complex::with_val(prec, z[j].conj_ref());
                acc += Complex::with_val(prec, &x[i] * &zc) * &yinv[i][j];
            }
        }
        acc
    };
    let e_form = |x: &[Complex; 2], z: &[Complex; 2]| Float::with_val(prec, h(x, z).imag());

    let basis: [[Complex; 2]; 4] = [
        [t[0][0].clone(), t[0][1].clone()],
        [t[1][0].clone(), t[1][1].clone()],
        [Complex::with_val(prec, 1), Complex::new(prec)],
        [Complex::new(prec), Complex::with_val(prec, 1)],
    ];
    let e: [[Float; 4]; 4] = std::array::from_fn(|i| std::array::from_fn(|j| e_form(&basis[i], &basis[j])));
    let scale = Float::with_val(prec, tau.magnitude().square_ref())
        * yinv.iter().flatten().map(|v| Float::with_val(prec, v.abs_ref())).fold(Float::new(prec), |a, b| a + b);
    let bound = Float::with_val(prec, &scale * &tol);
    let riemann_integral = e.iter().flatten().all(|v| {
        let nearest = Float::with_val(prec, v.round_ref());
        Float::with_val(prec, v - &nearest).abs() <= bound
    });
    let riemann_skew = (0..4).all(|i| (0..4).all(|j| Float::with_val(prec, &e[i][j] + &e[j][i]).abs() <= bound));

    let mut complex_invariant = true;
    let i_unit = Complex::with_val(prec, (0, 1));
    for _ in 0..samples {
        let mut draw = || -> [Complex; 2] {
            std::array::from_fn(|_| Complex::with_val(prec, (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))))
        };
        let (x, z) = (draw(), draw());
        let ix = x.clone().map(|c| Complex::with_val(prec, &c * &i_unit));
        let iz = z.clone().map(|c| Complex::with_val(prec, &c * &i_unit));
        let gap = Float::with_val(prec, e_form(&ix, &iz) - e_form(&x, &z)).abs();
        complex_invariant &= gap <= bound;
    }

    RiemannReport {
        precision_ok: true,
        hermitian_positive,
        riemann_integral,
        riemann_skew,
        complex_invariant,
        riemann_matrix: e,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const P: u32 = 128;

    fn c(re: f64, im: f64) -> Complex {
        Complex::with_val(P, (re, im))
    }

    fn close(a: &SiegelPoint, b: &SiegelPoint) -> bool {
        a.distance(b) <= Float::with_val(P, 1e-30)
    }

    #[test]
    fn membership() {
        let tol = tolerance(P);
        assert!(is_in_h2(&[[c(0.0, 1.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, 1.0)]], &tol));
        assert!(!is_in_h2(&[[c(0.0, 1.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, -1.0)]], &tol));
        assert!(is_in_h2(&[[c(0.0, 1.0), c(0.1, 0.0)], [c(0.1, 0.0), c(0.0, 2.0)]], &tol));
        assert!(!is_in_h2(&[[c(0.0, 1.0), c(0.1, 0.0)], [c(0.2, 0.0), c(0.0, 2.0)]], &tol));
    }

    #[test]
    fn identity_and_translation() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let tau = SiegelPoint::random(&mut rng, P);
        assert!(close(&symplectic_act(&SymplecticMatrix::identity(), &tau).unwrap(), &tau));
        let m = SymplecticMatrix::from_rows([[1, 0, 2, -1], [0, 1, -1, 3], [0, 0, 1, 0], [0, 0, 0, 1]]).unwrap();
        let shifted = SiegelPoint::new(
            Complex::with_val(P, tau.components()[0] + 2),
            Complex::with_val(P, tau.components()[1] - 1),
            Complex::with_val(P, tau.components()[2] + 3),
            P,
        )
        .unwrap();
        assert!(close(&symplectic_act(&m, &tau).unwrap(), &shifted));
    }

    #[test]
    fn j_acts_as_negative_inverse() {
        let tau = SiegelPoint::new(c(0.3, 1.2), c(0.1, 0.2), c(-0.4, 0.9), P).unwrap();
        let out = symplectic_act(&SymplecticMatrix::j(), &tau).unwrap();
        let [t1, t2, t3] = tau.components();
        let det = Complex::with_val(P, t1 * t3) - Complex::with_val(P, t2 * t2);
        let expected = SiegelPoint::new(
            -Complex::with_val(P, t3 / &det),
            Complex::with_val(P, t2 / &det),
            -Complex::with_val(P, t1 / &det),
            P,
        )
        .unwrap();
        assert!(close(&out, &expected));
    }

    #[test]
    fn riemann_form_at_i() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let r = riemann_form_check(&SiegelPoint::scaled_identity(1, P), &mut rng, 8);
        assert!(r.pass());
        let j = [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]];
        for i in 0..4 {
            for k in 0..4 {
                assert!(Float::with_val(P, &r.riemann_matrix[i][k] - j[i][k]).abs() < 1e-30);
            }
        }
        assert!(riemann_form_check(&SiegelPoint::scaled_identity(2, P), &mut rng, 8).pass());
    }

    #[test]
    fn riemann_form_reports_precision_failure() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let tau = SiegelPoint {
            tau1: Complex::with_val(64, (0, 1)),
            tau2: Complex::new(64),
            tau3: Complex::with_val(64, (0.0, 1e-30)),
            prec: 64,
        };
        let r = riemann_form_check(&tau, &mut rng, 4);
        assert!(!r.precision_ok);
        assert!(!r.pass());
        assert!(SiegelPoint::new(tau.tau1.clone(), tau.tau2.clone(), tau.tau3.clone(), 64).is_err());
    }
}
