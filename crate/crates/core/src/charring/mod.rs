//! The symmetric character ring in the generators `m_i`, closed-form
//! characters of `ρ_{N;δ}`, and identities in the ring extended by `λ`.

mod character;
mod inversion;
mod lambda;
mod sym;

pub(crate) use character::{binomial, combinations};
pub use character::{
    character, character_bruteforce, character_in_s_basis, elem_sym, from_elementary_basis,
    to_elementary_basis, BRUTEFORCE_MAX_N,
};
pub use inversion::{chebyshev, InversionLaurent};
pub use lambda::{check_lambda_identity, LambdaIdentity};
pub use sym::{SymLaurent, SymMono};
