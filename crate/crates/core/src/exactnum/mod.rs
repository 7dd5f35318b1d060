//! Exact and precision-tracked arithmetic shared by every other module.

mod complexpoly;
mod linalg;
mod multipoly;
mod rational;
mod roots;
mod scalar;

pub use complexpoly::{lagrange_interpolate, ComplexPoly};
pub use linalg::{mat_vec, nullspace, rank};
pub use multipoly::MultiPoly;
pub use rational::{
    complex_from_strings, complex_to_strings, float_to_string, parse_rational, rational_reconstruct, ExactRational,
};
pub use roots::polynomial_roots;
pub use scalar::{complex, tolerance, Scalar};
