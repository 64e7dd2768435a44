//! Laurent polynomials in `q`, q-analogues and the d-numbers.

mod laurent;
mod qnum;

pub use laurent::LaurentPoly;
pub(crate) use laurent::{mod_pow, mul_mod};
pub use qnum::{
    check_q_identity, d_bridge_term, d_bullet_number, d_number, odd_product, q_binomial,
    q_binomial_or_zero, q_factorial, q_integer, ProductVariant, QBase, QIdentity,
};
