//! Exact-arithmetic and combinatorial engine for vertex models with
//! alternating spins.
//!
//! The crate is organised around the two regimes of the model:
//!
//! * symbolic: trigonometric R-matrices over exact rational functions in
//!   `q` and the spectral variable `z` ([`exact`], [`rmatrix`]);
//! * combinatorial (`q -> 0`): crystal path spaces with alternating levels,
//!   their isomorphisms to tensor products of highest-weight crystals, and
//!   the domain-wall / particle rewriting pictures ([`paths`], [`morphisms`],
//!   [`walls`], [`particles`]).
//!
//! Everything is verifiable at bounded depth by brute force; the `altspin`
//! CLI drives the verification suites.

pub mod exact;
pub mod model;
// pub mod morphisms;
// pub mod particles;
// pub mod paths;
pub mod rmatrix;
// pub mod walls;

pub use exact::{eval::Number, ratfn::RationalFn, rfmatrix::RFMatrix};
pub use model::Model;



