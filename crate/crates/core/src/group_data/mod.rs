//! Order formulas for `GL_n(F_q)` and finite groups with an automorphism.

mod finite_group;
mod orders;

pub use finite_group::{
    parse_automorphism, parse_group, FConjClassSet, FiniteGroup, FiniteGroupWithAutomorphism,
};
pub use orders::{
    gl_order, normalizer_fixed_order, torus_order, unipotent_centralizer_order,
    unipotent_class_size, weyl_f_centralizer_order,
};
