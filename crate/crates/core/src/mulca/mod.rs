//! Multiplication automata `μ_u` and the evaluation map `V: Λ_s^ℕ → 𝕋`.

mod mul;
mod torus;
mod witness;

pub use mul::{evaluate, is_prime, mu_const, mu_p, mu_u, prime_factors, preimages, ConstMap, MulSpec};
pub use torus::TorusRational;
pub use witness::{
    conjugacy_phi, power_prime_setup, power_prime_witness, power_prime_witness_with, random_periodic, represents_check,
    DigitViolation, PowerPrimeReport, RepresentsCounterexample, RepresentsReport,
};
