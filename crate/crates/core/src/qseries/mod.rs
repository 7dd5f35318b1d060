//! Truncated trivariate Fourier/Laurent series in `q1, q2, q3`.
//!
//! A term `c q1^k q2^l q3^m` corresponds to the half-integral matrix
//! `T = [[k, l/2], [l/2, m]]`. Modular-form coefficients vanish unless `T`
//! is positive semi-definite, i.e. `k >= 0`, `m >= 0` and `4km - l^2 >= 0`.
//! The exponents `k + m` give a finite filtration on that cone, so series
//! are truncated at `k + m <= order`. Negative powers only enter through
//! the prefactor `(q1 q2 q3)^(-shift)`.

mod dataset;
mod fit;
mod series;

pub use dataset::{SeriesDataset, CHI10_NORMALIZATION, CHI12_NORMALIZATION};
pub use fit::{fit_coefficients, LinearTemplate};
pub use series::{koecher_check, laurent_quotient, series_add, series_invert, series_mul, FourierSeries, SupportIndex};
