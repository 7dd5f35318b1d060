//! Symplectic geometry in dimension 4, over the integers and over `F_p`.
//!
//! The alternating form is `J = [[0, 1], [-1, 0]]` in 2x2 blocks, and
//! `Gamma0(p)` is the subgroup of `Sp(4, Z)` whose lower-left block vanishes
//! modulo `p`.

mod cosets;
mod matrix;
mod planes;
mod sampling;

pub use cosets::{coset_representatives, verify_coset_set, CosetReport, CosetSet};
pub use matrix::{
    block_relations_hold, gamma0_conjugate, in_gamma0, is_symplectic, Block2, BlockRelationForm, IntMatrix4,
    SymplecticMatrix,
};
pub use planes::{
    enumerate_isotropic_planes, expected_index, is_prime, plane_of_coset, IsotropicPlane, MAX_ENUMERATION_PRIME,
};
pub use sampling::{random_gamma0, random_integer_matrix, random_symplectic};
