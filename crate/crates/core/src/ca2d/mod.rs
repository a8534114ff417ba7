//! Two-sided cellular automata on `Λ_s^ℤ`.

mod biseq;
mod inverse;
mod twosided;

pub use biseq::BiSeq;
pub use inverse::{inverse_candidate, verify_inverse};
pub use twosided::TwoSidedBlockMap;
