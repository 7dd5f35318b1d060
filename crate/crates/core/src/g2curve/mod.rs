//! Genus-2 curves `y^2 = f(x)` with `f` a monic separable sextic: validation,
//! changes of model and absolute Igusa invariants.

mod curve;
mod invariants;
pub mod upoly;

pub use curve::{transform_model, transform_sextic, validate_curve, CurveScalar, Genus2Curve};
pub use invariants::{
    absolute_from_clebsch, absolute_igusa, igusa_clebsch, igusa_clebsch_of_sextic, transvectant, IgusaClebsch,
    IgusaTriple,
};
