//! Hecke elements in the `T_{N;δ}` basis, the Satake transform, Satake
//! parameters and their evaluation homomorphisms.

mod element;
mod eval;
mod param;
mod satake;
pub mod tables;

pub use element::{named_operator, Flavor, HeckeElement, NamedOp};
pub use eval::{closed_form, closed_form_ops, eval_phi};
pub use param::{
    decomposed_generic, poly_derivative, poly_eval, poly_from_roots, random_inert,
    random_inert_with_specials, same_multiset, satake_condition, satisfies_functional_equation,
    semantic_condition, SatakeCondition, SatakeParam,
};
pub use satake::{
    forward_check, named_satake, satake_basis, satake_transform, verify_satake_identity,
    SatakeIdentity, SatakeMatrix,
};
