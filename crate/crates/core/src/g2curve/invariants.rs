use rug::Rational;

use super::curve::{CurveScalar, Genus2Curve};
use crate::exactnum::Scalar;

/// A binary form of degree `n`: coefficient `i` multiplies `x^i z^(n-i)`.
type BinaryForm<S> = (Vec<S>, usize);

fn falling(n: usize, k: usize) -> i64 {
    (0..k).map(|t| (n - t) as i64).product()
}

/// `d^a/dx^a d^b/dz^b` of a form of degree `n`.
fn partial<S: Scalar>(f: &[S], n: usize, a: usize, b: usize) -> Vec<S> {
    let zero = f[0].zero_like();
    let mut out = vec![zero; n + 1 - a - b];
    for (i, c) in f.iter().enumerate() {
        if i < a || n - i < b {
            continue;
        }
        out[i - a] = c.mul_ref(&c.from_i64_like(falling(i, a) * falling(n - i, b)));
    }
    out
}

fn factorial(n: usize) -> rug::Integer {
    rug::Integer::from(rug::Integer::factorial(n as u32))
}

/// The `k`-th transvectant
/// `(f, g)_k = (m-k)!(n-k)!/(m! n!) sum_j (-1)^j C(k,j) f_{x^(k-j) z^j} g_{x^j z^(k-j)}`.
pub fn transvectant<S: Scalar>(f: &BinaryForm<S>, g: &BinaryForm<S>, k: usize) -> BinaryForm<S> {
    let (fc, m) = f;
    let (gc, n) = g;
    let deg = m + n - 2 * k;
    let mut acc = vec![fc[0].zero_like(); deg + 1];
    for j in 0..=k {
        let binom = rug::Integer::from(rug::Integer::binomial_u(k as u32, j as u32)).to_i64().expect("small");
        let sign = if j % 2 == 0 { binom } else { -binom };
        let a = partial(fc, *m, k - j, j);
        let b = partial(gc, *n, j, k - j);
        for (i, x) in a.iter().enumerate() {
            for (l, y) in b.iter().enumerate() {
                let t = x.mul_ref(y).mul_ref(&x.from_i64_like(sign));
                acc[i + l] = acc[i + l].add_ref(&t);
            }
        }
    }
    let scale = Rational::from((factorial(m - k) * factorial(n - k), factorial(*m) * factorial(*n)));
    let s = fc[0].from_rational_like(&scale);
    (acc.iter().map(|c| c.mul_ref(&s)).collect(), deg)
}

/// Igusa–Clebsch invariants `(I2, I4, I6, I10)`; `I10` is the discriminant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IgusaClebsch<S> {
    pub i2: S,
    pub i4: S,
    pub i6: S,
    pub i10: S,
}

/// Absolute invariants `j1 = I2^5/I10`, `j2 = I2^3 I4/I10`, `j3 = I2^2 I6/I10`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IgusaTriple<S> {
    pub j1: S,
    pub j2: S,
    pub j3: S,
    pub finite: bool,
}

impl<S: Scalar> IgusaTriple<S> {
    pub fn as_array(&self) -> [&S; 3] {
        [&self.j1, &self.j2, &self.j3]
    }
}

/// Clebsch's `A, B, C, D` from transvectants of the sextic, converted to
/// Igusa–Clebsch form. Valid for any binary sextic, including ones whose
/// leading coefficient is not 1.
pub fn igusa_clebsch_of_sextic<S: Scalar>(coeffs: &[S]) -> IgusaClebsch<S> {
    let f: BinaryForm<S> = (coeffs.to_vec(), 6);
    let i = transvectant(&f, &f, 4);
    let delta = transvectant(&i, &i, 2);
    let y1 = transvectant(&f, &i, 4);
    let y2 = transvectant(&i, &y1, 2);
    let y3 = transvectant(&i, &y2, 2);
    let a = transvectant(&f, &f, 6).0.swap_remove(0);
    let b = transvectant(&i, &i, 4).0.swap_remove(0);
    let c = transvectant(&i, &delta, 4).0.swap_remove(0);
    let d = transvectant(&y3, &y1, 2).0.swap_remove(0);
    let n = |v: i64| a.from_i64_like(v);
    let a2 = a.mul_ref(&a);
    let a3 = a2.mul_ref(&a);
    let i2 = n(-120).mul_ref(&a);
    let i4 = n(-720).mul_ref(&a2).add_ref(&n(6750).mul_ref(&b));
    let i6 = n(8640).mul_ref(&a3).sub_ref(&n(108000).mul_ref(&a.mul_ref(&b))).add_ref(&n(202500).mul_ref(&c));
    let i10 = [
        n(-62208).mul_ref(&a3.mul_ref(&a2)),
        n(972000).mul_ref(&a3.mul_ref(&b)),
        n(1620000).mul_ref(&a2.mul_ref(&c)),
        n(-3037500).mul_ref(&a.mul_ref(&b).mul_ref(&b)),
        n(-6075000).mul_ref(&b.mul_ref(&c)),
        n(-4556250).mul_ref(&d),
    ]
    .iter()
    .fold(a.zero_like(), |s, t| s.add_ref(t));
    IgusaClebsch { i2, i4, i6, i10 }
}

pub fn igusa_clebsch<S: CurveScalar>(c: &Genus2Curve<S>) -> IgusaClebsch<S> {
    igusa_clebsch_of_sextic(c.coefficients())
}

/// Weight-zero ratios of the Igusa–Clebsch invariants. `finite` is false
/// only when `I10` is exactly zero, which cannot happen for a validated
/// curve.
pub fn absolute_igusa<S: CurveScalar>(c: &Genus2Curve<S>) -> IgusaTriple<S> {
    absolute_from_clebsch(&igusa_clebsch(c))
}

pub fn absolute_from_clebsch<S: Scalar>(ic: &IgusaClebsch<S>) -> IgusaTriple<S> {
    if ic.i10.is_exact_zero() {
        let z = ic.i2.zero_like();
        return IgusaTriple { j1: z.clone(), j2: z.clone(), j3: z, finite: false };
    }
    let i2_2 = ic.i2.mul_ref(&ic.i2);
    let i2_3 = i2_2.mul_ref(&ic.i2);
    IgusaTriple {
        j1: i2_3.mul_ref(&i2_2).div_ref(&ic.i10),
        j2: i2_3.mul_ref(&ic.i4).div_ref(&ic.i10),
        j3: i2_2.mul_ref(&ic.i6).div_ref(&ic.i10),
        finite: true,
    }
}
