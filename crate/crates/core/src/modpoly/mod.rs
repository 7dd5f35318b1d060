//! Modular polynomials evaluated at a curve, the split-locus polynomial
//! `L2`, and detection of numerator/denominator degrees of a rational
//! function from samples.
//!
//! For a curve `C` with Jacobian `A`, the level-2 modular polynomial
//! evaluated at `C` is `P(X) = prod (X - j1(B))` over the 15 surfaces `B`
//! that are (2,2)-isogenous to `A`. The companions `F2`, `F3` satisfy
//! `Fk(j1(B)) = P'(j1(B)) jk(B)`.

mod degree;
mod evaluated;
mod l2;

pub use degree::degree_profile;
pub use evaluated::{
    evaluated_ftilde, evaluated_p2, ftilde_from_images, image_invariants, product_from_roots, reconstruct_p2,
    EvaluatedModPoly, ReconstructOptions, Reconstruction,
};
pub use l2::{l2_evaluate, l2_vanishes, SplitLocusPoly, L2_TERMS};
