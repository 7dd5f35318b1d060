use std::path::Path;

use super::series::{koecher_check, FourierSeries, SupportIndex};
use crate::{Error, Result};

/// Leading constant of the weight-10 cusp form normalisation, which makes
/// the `q1 q2 q3` coefficient equal to 1.
pub const CHI10_NORMALIZATION: i64 = -43867;
/// Leading constant of the weight-12 cusp form normalisation (`131 * 593`).
pub const CHI12_NORMALIZATION: i64 = 131 * 593;

/// A named series read from disk. Coefficients of Eisenstein series and
/// cusp forms are external data; nothing here computes them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesDataset {
    pub name: String,
    pub series: FourierSeries,
    pub provenance: String,
}

impl SeriesDataset {
    /// Validates the cone condition, and cusp normalisation for datasets
    /// whose name starts with `chi`.
    pub fn new(name: &str, series: FourierSeries, provenance: &str) -> Result<Self> {
        if !koecher_check(&series) {
            return Err(Error::Parse(format!("{name}: support leaves the semi-definite cone")));
        }
        let ds = Self { name: name.to_string(), series, provenance: provenance.to_string() };
        if name.starts_with("chi") {
            ds.unit_part()?;
        }
        Ok(ds)
    }

    pub fn load(path: &Path, name: &str) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::new(name, FourierSeries::parse(&text)?, &path.display().to_string())
    }

    pub fn normalization_constant(&self) -> Option<i64> {
        match self.name.as_str() {
            "chi10" => Some(CHI10_NORMALIZATION),
            "chi12" => Some(CHI12_NORMALIZATION),
            _ => None,
        }
    }

    /// `cusp / (q1 q2 q3)`. Requires no prefactor, every term divisible by
    /// `q1 q2 q3`, coefficient 1 on `q1 q2 q3` and a quotient supported in
    /// the cone.
    pub fn unit_part(&self) -> Result<FourierSeries> {
        let s = &self.series;
        let bad = |why: &str| Err(Error::NotCuspNormalized(format!("{}: {why}", self.name)));
        if s.shift() != 0 {
            return bad("cusp series carries a Laurent prefactor");
        }
        if s.coefficient(&SupportIndex::new(1, 1, 1)) != 1 {
            return bad("coefficient of q1 q2 q3 is not 1");
        }
        let mut terms = Vec::with_capacity(s.len());
        for (i, c) in s.terms() {
            let u = SupportIndex::new(i.k - 1, i.l - 1, i.m - 1);
            if i.k < 1 || i.l < 1 || i.m < 1 || !u.in_cone() {
                return bad("a term is not divisible by q1 q2 q3 inside the cone");
            }
            terms.push((u, c.clone()));
        }
        Ok(FourierSeries::from_terms(terms, s.order() - 2, 0))
    }
}
