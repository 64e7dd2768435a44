//! Brute-force finite geometry: hermitian spaces over `F_{q²}`,
//! Deligne–Lusztig point counts, and lattice windows over the chain ring
//! `F_{q²}[π]/(π^m)`.

mod chainring;
mod dl;
mod field;
mod herm;
mod linalg;
mod window;

/// Default cap on the number of candidates any enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

pub use chainring::{CElem, ChainRing, RVec, MAX_M};
pub use dl::{
    dimension_estimate, dl_bullet_points, dl_bullet_points_with_budget, dl_expected_dimension,
    dl_points, dl_points_with_budget, PairOver, SemilinearPair,
};
pub use field::{prime_power, Elem, Fq2, GaloisField, MAX_ORDER};
pub use herm::{
    count_max_isotropic, count_meeting, max_isotropic_closed_form, meeting_closed_form, HermSpace,
};
pub use linalg::{grassmann_count, Vector};
pub use window::{
    bullet_count_census, classify, count_bullet_between, count_bullet_between_in,
    enumerate_window, enumerate_window_with_budget, gamma, mixed_closed_form, mixed_counts,
    mixed_counts_for, window_size, LatticeKind, Window, WindowLattice,
};
