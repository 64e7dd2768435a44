//! Exact computations around the spherical Hecke algebras of unramified
//! unitary groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`qcalc`]: Laurent polynomials in `q`, q-analogues and the d-numbers.
//! * [`charring`]: the symmetric character ring in the generators `m_i`.
//! * [`hecke`]: Hecke elements, the Satake transform, Satake parameters.
//! * [`finitegeom`]: brute-force hermitian geometry over `F_{q^2}` and
//!   lattice windows over the chain ring `F_{q^2}[π]/(π^m)`.
//! * [`chow`]: Chern classes in the Chow ring of projective space.
//! * [`verify`]: named verification suites with machine-readable reports.
//!
//! Everything is exact; nothing in here touches floating point except the
//! dimension estimate in [`finitegeom::dl`].

pub mod charring;
pub mod chow;
pub mod error;
pub mod finitegeom;
pub mod hecke;
pub mod qcalc;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
