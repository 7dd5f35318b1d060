//! Computational infrastructure for genus-2 modular polynomials.
//!
//! The crate is organised by subsystem:
//!
//! * [`exactnum`]: exact rationals, sparse multivariate polynomials, complex
//!   polynomials at explicit precision, rational linear algebra and rational
//!   reconstruction.
//! * [`sp4`]: integral and finite-field symplectic geometry in dimension 4.
//! * [`siegel`]: numerics on the Siegel upper half-space of degree 2.
//! * [`qseries`]: truncated trivariate Fourier/Laurent series.
//! * [`g2curve`]: genus-2 curves `y^2 = f(x)` and their Igusa invariants.
//! * [`richelot`]: the Richelot (2,2)-isogeny engine.
//! * [`modpoly`]: point-evaluated modular polynomials for level 2 and the
//!   split-locus polynomial `L2`.
//!
//! All values are immutable once built and all operations are pure, so
//! everything here can be called from several threads at once.

pub mod error;
pub mod exactnum;
pub mod g2curve;
pub mod modpoly;
pub mod qseries;
pub mod richelot;
pub mod siegel;
pub mod sp4;

pub use error::{Error, Result};

/// Working precision in bits used when a caller does not pick one.
pub const DEFAULT_PREC: u32 = 300;
