//! Experiment drivers behind the `calab` binary: orbit coverage, commutant campaigns,
//! witness suites and lacunary orbits, each producing a deterministic report.

pub mod campaign;
pub mod config;
pub mod coverage;
pub mod error;
pub mod gens;
pub mod lacunary;
pub mod report;
pub mod witness;

pub use config::ExperimentConfig;
pub use error::{LabError, Result};
pub use report::{render, Format, Report};

/// Enumeration cap: `CALAB_CAP` when set, else the library default.
pub fn enumeration_cap() -> Result<u64> {
    match std::env::var("CALAB_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| LabError::Config(format!("bad CALAB_CAP {v:?}"))),
        Err(_) => Ok(calab_core::ca1d::DEFAULT_CAP),
    }
}
