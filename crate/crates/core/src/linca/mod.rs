//! Linear cellular automata over `ℤ/sℤ` and `GF(p^m)`.

mod linear;
mod poly;
mod ring;
mod witness;

pub use linear::{construct_linear_hitting, rank, solve, window_independence};
pub use poly::{blockmap_to_poly, is_linear, pointwise_sum, ShiftPolynomial};
pub use ring::{GaloisField, RingSpec};
pub use witness::{p_lambda_witness, PLambdaCounterexample, PLambdaReport};
