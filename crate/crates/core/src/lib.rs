//! Exact computational workbench for semigroups of cellular-automata
//! transformations on full shift spaces.
//!
//! The crate is split the way the mathematics is:
//!
//! * [`symcore`]: alphabets, words, eventually periodic and lazily generated sequences.
//! * [`ca1d`]: one-sided block maps (application, composition, equality, commutation,
//!   bounded commutant enumeration, hitting constructions).
//! * [`mulca`]: multiplication automata `μ_u` and the exact evaluation map onto the torus.
//! * [`linca`]: linear automata over `ℤ/sℤ` and `GF(p^m)`, and the polynomial isomorphism.
//! * [`ca2d`]: two-sided block maps, `σ⁻¹`, and bi-infinite eventually periodic sequences.
//!
//! Every check in the crate is exact; there is no floating point.

pub mod ca1d;
pub mod ca2d;
pub mod error;
pub mod exec;
pub mod linca;
pub mod mulca;
pub mod symcore;

pub use error::{Error, Result};
pub use exec::Execution;
