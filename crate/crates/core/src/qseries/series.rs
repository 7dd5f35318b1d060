use std::collections::BTreeMap;
use std::fmt::Write;

use rug::Rational;

use crate::exactnum::parse_rational;
use crate::{Error, Result};

use super::dataset::SeriesDataset;

/// Exponent triple `(k, l, m)` of `q1^k q2^l q3^m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SupportIndex {
    pub k: i64,
    pub l: i64,
    pub m: i64,
}

impl SupportIndex {
    pub const ZERO: Self = Self { k: 0, l: 0, m: 0 };

    pub fn new(k: i64, l: i64, m: i64) -> Self {
        Self { k, l, m }
    }

    /// Positive semi-definiteness of `[[k, l/2], [l/2, m]]`.
    pub fn in_cone(&self) -> bool {
        self.k >= 0 && self.m >= 0 && 4 * self.k * self.m - self.l * self.l >= 0
    }

    pub fn weight(&self) -> i64 {
        self.k + self.m
    }

    fn add(&self, o: &Self) -> Self {
        Self::new(self.k + o.k, self.l + o.l, self.m + o.m)
    }

    fn sub(&self, o: &Self) -> Self {
        Self::new(self.k - o.k, self.l - o.l, self.m - o.m)
    }

    fn offset(&self, d: i64) -> Self {
        Self::new(self.k + d, self.l + d, self.m + d)
    }
}

/// Cone indices with `k + m = w`, ordered by `(k, l)`.
fn cone_layer(w: i64) -> impl Iterator<Item = SupportIndex> {
    (0..=w).flat_map(move |k| {
        let m = w - k;
        let bound = (4 * k * m) as f64;
        let lmax = bound.sqrt().floor() as i64;
        (-lmax..=lmax).map(move |l| SupportIndex::new(k, l, m)).filter(SupportIndex::in_cone)
    })
}

/// `(q1 q2 q3)^(-shift) * sum c(k,l,m) q1^k q2^l q3^m`, truncated to
/// `k + m <= order` in the raw indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourierSeries {
    terms: BTreeMap<SupportIndex, Rational>,
    order: i64,
    shift: i64,
}

impl FourierSeries {
    pub fn zero(order: i64) -> Self {
        Self { terms: BTreeMap::new(), order, shift: 0 }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(SupportIndex::ZERO, Rational::from(1), order)
    }

    pub fn monomial(idx: SupportIndex, c: Rational, order: i64) -> Self {
        Self::from_terms([(idx, c)], order, 0)
    }

    /// Collects terms, summing repeats and dropping zeros and anything past
    /// the truncation order.
    pub fn from_terms<I>(terms: I, order: i64, shift: i64) -> Self
    where
        I: IntoIterator<Item = (SupportIndex, Rational)>,
    {
        let mut map: BTreeMap<SupportIndex, Rational> = BTreeMap::new();
        for (idx, c) in terms {
            if idx.weight() <= order {
                *map.entry(idx).or_default() += c;
            }
        }
        map.retain(|_, c| c.cmp0().is_ne());
        Self { terms: map, order, shift }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SupportIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, idx: &SupportIndex) -> Rational {
        self.terms.get(idx).cloned().unwrap_or_default()
    }

    pub fn truncate(&self, order: i64) -> Self {
        Self::from_terms(self.terms.clone(), order.min(self.order), self.shift)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(i, v)| (*i, Rational::from(v * c))), self.order, self.shift)
    }

    /// Re-expresses the same series with a larger prefactor exponent.
    pub fn with_shift(&self, shift: i64) -> Self {
        assert!(shift >= self.shift, "shift can only grow");
        let d = shift - self.shift;
        Self::from_terms(self.terms.iter().map(|(i, c)| (i.offset(d), c.clone())), self.order + 2 * d, shift)
    }

    /// Lowers the shift while every raw index stays in the cone after
    /// dividing by `q1 q2 q3`.
    pub fn normalize_shift(&self) -> Self {
        let mut s = self.clone();
        while s.shift > 0 && !s.terms.is_empty() && s.terms.keys().all(|i| i.offset(-1).in_cone()) {
            s = Self::from_terms(s.terms.iter().map(|(i, c)| (i.offset(-1), c.clone())), s.order - 2, s.shift - 1);
        }
        s
    }

    /// Parses the term-file layout: optional `shift s` and `order N` header
    /// lines, then one `k l m p/q` line per term.
    pub fn parse(text: &str) -> Result<Self> {
        let mut shift = 0;
        let mut order = None;
        let mut terms = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let int =
                |s: &str| s.parse::<i64>().map_err(|_| Error::Parse(format!("line {}: bad integer {s:?}", n + 1)));
            match fields.as_slice() {
                ["shift", s] => shift = int(s)?,
                ["order", s] => order = Some(int(s)?),
                [k, l, m, c] => terms.push((SupportIndex::new(int(k)?, int(l)?, int(m)?), parse_rational(c)?)),
                _ => return Err(Error::Parse(format!("line {}: unrecognised {line:?}", n + 1))),
            }
        }
        let order = order.ok_or_else(|| Error::Parse("missing `order N` header".into()))?;
        Ok(Self::from_terms(terms, order, shift))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("shift {}\norder {}\n", self.shift, self.order);
        for (i, c) in &self.terms {
            let _ = writeln!(out, "{} {} {} {}", i.k, i.l, i.m, c);
        }
        out
    }
}

/// All stored indices lie in the positive semi-definite cone.
pub fn koecher_check(s: &FourierSeries) -> bool {
    s.terms.keys().all(SupportIndex::in_cone)
}

/// Sum; shifts are aligned to the larger one first and the order drops to
/// the smaller one.
pub fn series_add(a: &FourierSeries, b: &FourierSeries) -> FourierSeries {
    let shift = a.shift.max(b.shift);
    let (a, b) = (a.with_shift(shift), b.with_shift(shift));
    let order = a.order.min(b.order);
    FourierSeries::from_terms(a.terms.into_iter().chain(b.terms), order, shift)
}

/// Truncated product. Shifts add; the order is the smaller of the two.
pub fn series_mul(a: &FourierSeries, b: &FourierSeries) -> FourierSeries {
    let order = a.order.min(b.order);
    let mut acc: BTreeMap<SupportIndex, Rational> = BTreeMap::new();
    for (i, x) in &a.terms {
        if i.weight() > order {
            continue;
        }
        for (j, y) in &b.terms {
            let t = i.add(j);
            if t.weight() > order {
                continue;
            }
            *acc.entry(t).or_default() += Rational::from(x * y);
        }
    }
    FourierSeries::from_terms(acc, order, a.shift + b.shift)
}

/// Multiplicative inverse up to the truncation order.
///
/// The series must have a non-zero constant term and every other term of
/// positive weight `k + m` inside the cone; otherwise the inverse is not a
/// truncated series and [`Error::NotAUnit`] is returned.
pub fn series_invert(s: &FourierSeries) -> Result<FourierSeries> {
    let a0 = s.coefficient(&SupportIndex::ZERO);
    if a0.cmp0().is_eq() {
        return Err(Error::NotAUnit);
    }
    if s.terms.keys().any(|i| *i != SupportIndex::ZERO && (!i.in_cone() || i.weight() == 0)) {
        return Err(Error::NotAUnit);
    }
    let inv_a0 = a0.recip();
    let rest: Vec<(SupportIndex, Rational)> =
        s.terms.iter().filter(|(i, _)| **i != SupportIndex::ZERO).map(|(i, c)| (*i, c.clone())).collect();
    let mut out: BTreeMap<SupportIndex, Rational> = BTreeMap::new();
    out.insert(SupportIndex::ZERO, inv_a0.clone());
    for w in 1..=s.order {
        for t in cone_layer(w) {
            let mut sum = Rational::new();
            for (i, c) in &rest {
                if i.weight() > w {
                    continue;
                }
                if let Some(b) = out.get(&t.sub(i)) {
                    sum += Rational::from(c * b);
                }
            }
            if sum.cmp0().is_ne() {
                out.insert(t, -sum * &inv_a0);
            }
        }
    }
    Ok(FourierSeries::from_terms(out, s.order, -s.shift))
}

/// `numerator / cusp^power`, expanded as
/// `(q1 q2 q3)^(-power) * numerator * unit^(-power)` where
/// `cusp = q1 q2 q3 * unit`.
pub fn laurent_quotient(numerator: &FourierSeries, cusp: &SeriesDataset, power: u32) -> Result<FourierSeries> {
    let unit = cusp.unit_part()?;
    let inv = series_invert(&unit)?;
    let mut acc = numerator.clone();
    for _ in 0..power {
        acc = series_mul(&acc, &inv);
    }
    Ok(FourierSeries::from_terms(acc.terms, acc.order, acc.shift + i64::from(power)))
}
