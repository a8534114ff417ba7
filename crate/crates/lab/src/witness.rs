//! Non-ID witnesses, each with a sabotage switch that must make it fail.

use calab_core::ca1d::chr_product_map;
use calab_core::ca2d::{BiSeq, TwoSidedBlockMap};
use calab_core::linca::{p_lambda_witness, PLambdaReport};
use calab_core::mulca::{power_prime_setup, power_prime_witness_with, PowerPrimeReport};
use calab_core::symcore::{Alphabet, Symbol};
use calab_core::Execution;
use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::error::{LabError, Result};
use crate::report::{opt_field, Report};

/// Where the unit-vector check first failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitCounterexample {
    /// `None` for the zero sequence.
    pub i: Option<i64>,
    pub image: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitVectorReport {
    pub deltas: String,
    pub range: i64,
    pub sabotage: Option<usize>,
    pub passed: bool,
    pub counterexample: Option<UnitCounterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub experiment: String,
    pub power_prime: PowerPrimeReport,
    pub sabotage_power_prime: Option<usize>,
    pub p_lambda: PLambdaReport,
    pub unit_vectors: UnitVectorReport,
    pub passed: bool,
}

impl Report for PowerPrimeReport {
    fn passed(&self) -> bool {
        self.passed
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let violation = self.first_forbidden.as_ref().or(self.first_alternation_break.as_ref());
        let row = vec![
            self.p.to_string(),
            self.m.to_string(),
            self.steps.to_string(),
            self.prefix_len.to_string(),
            self.passed.to_string(),
            opt_field(&violation.map(|v| v.step)),
            opt_field(&violation.map(|v| v.position)),
            opt_field(&violation.map(|v| v.digit)),
        ];
        (vec!["p", "m", "steps", "prefix_len", "passed", "step", "position", "digit"], vec![row])
    }
}

impl Report for PLambdaReport {
    fn passed(&self) -> bool {
        self.passed
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let c = self.counterexample.as_ref();
        let row = vec![
            self.s.to_string(),
            self.p.to_string(),
            self.trials.to_string(),
            self.seed.to_string(),
            self.passed.to_string(),
            opt_field(&c.map(|c| c.map)),
            opt_field(&c.map(|c| c.input)),
            opt_field(&c.map(|c| c.position)),
            opt_field(&c.map(|c| c.output)),
        ];
        (vec!["s", "p", "trials", "seed", "passed", "map", "input", "position", "output"], vec![row])
    }
}

impl Report for WitnessReport {
    fn passed(&self) -> bool {
        self.passed
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = vec![
            vec!["power_prime".to_string(), self.power_prime.passed.to_string()],
            vec!["p_lambda".to_string(), self.p_lambda.passed.to_string()],
            vec!["unit_vectors".to_string(), self.unit_vectors.passed.to_string()],
        ];
        (vec!["witness", "passed"], rows)
    }
}

pub fn power_prime(cfg: &ExperimentConfig) -> Result<PowerPrimeReport> {
    let p = cfg.parse_or("p", 2u64)?;
    let m = cfg.parse_or("m", 2u32)?;
    let steps = cfg.positive("steps", 50)?;
    let prefix = cfg.positive("prefix", 2000)?;
    let (mut map, source) = power_prime_setup(p, m)?;
    if let Some(index) = cfg.parse_opt::<usize>("sabotage")? {
        map = map.with_flipped_entry(index)?;
    }
    Ok(power_prime_witness_with(&map, &source, p, m, steps, prefix)?)
}

pub fn p_lambda(cfg: &ExperimentConfig, exec: Execution) -> Result<PLambdaReport> {
    Ok(p_lambda_witness(
        cfg.parse_or("s", 6usize)?,
        cfg.parse_opt("p")?,
        cfg.positive("trials", 100)?,
        cfg.parse_or("seed", 0u64)?,
        cfg.parse_opt("sabotage")?,
        exec,
    )?)
}

/// Checks that the product map fixes `e^i` for `|i| <= range` and fixes `0̄`.
pub fn unit_vectors(deltas: &str, range: i64, sabotage: Option<usize>) -> Result<UnitVectorReport> {
    let a = Alphabet::new(2)?;
    let ds = deltas
        .chars()
        .map(|c| c.to_digit(2).map(|d| d as Symbol))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| LabError::Config(format!("bad deltas {deltas:?}")))?;
    let mut map = chr_product_map(a, &ds, ds.len())?.map;
    if let Some(index) = sabotage {
        map = map.with_flipped_entry(index)?;
    }
    let t = TwoSidedBlockMap::embed_one_sided(&map);
    let zero = BiSeq::constant(a, 0)?;
    let mut counterexample = None;
    let image = t.apply_biseq(&zero)?;
    if !image.same_sequence(&zero) {
        counterexample = Some(UnitCounterexample { i: None, image: image.to_string() });
    }
    for i in -range..=range {
        if counterexample.is_some() {
            break;
        }
        let e = BiSeq::unit(a, i);
        let image = t.apply_biseq(&e)?;
        if !image.same_sequence(&e) {
            counterexample = Some(UnitCounterexample { i: Some(i), image: image.to_string() });
        }
    }
    Ok(UnitVectorReport { deltas: deltas.to_string(), range, sabotage, passed: counterexample.is_none(), counterexample })
}

/// Sub-config for one witness: keys `<prefix>_<key>` become `<key>`.
fn scoped(cfg: &ExperimentConfig, prefix: &str) -> ExperimentConfig {
    let mut out = ExperimentConfig::new();
    for key in cfg.keys() {
        if let Some(rest) = key.strip_prefix(prefix).and_then(|k| k.strip_prefix('_')) {
            out.set(rest, cfg.get(key).unwrap_or_default());
        }
    }
    out
}

/// Runs all three witnesses. Keys are scoped: `pp_p`, `pp_m`, `pp_steps`, `pp_prefix`,
/// `pp_sabotage`; `pl_s`, `pl_p`, `pl_trials`, `pl_sabotage`; `chr_deltas`, `chr_range`,
/// `chr_sabotage`; `seed` is shared.
pub fn witness_suite(cfg: &ExperimentConfig, exec: Execution) -> Result<WitnessReport> {
    let pp_cfg = scoped(cfg, "pp");
    let power_prime = power_prime(&pp_cfg)?;
    let mut pl_cfg = scoped(cfg, "pl");
    if let Some(seed) = cfg.get("seed") {
        pl_cfg.set("seed", seed);
    }
    let p_lambda = p_lambda(&pl_cfg, exec)?;
    let chr = scoped(cfg, "chr");
    let unit_vectors = unit_vectors(chr.str_or("deltas", "00"), chr.parse_or("range", 20i64)?, chr.parse_opt("sabotage")?)?;
    let passed = power_prime.passed && p_lambda.passed && unit_vectors.passed;
    Ok(WitnessReport {
        experiment: cfg.str_or("experiment", "witness").to_string(),
        sabotage_power_prime: pp_cfg.parse_opt("sabotage")?,
        power_prime,
        p_lambda,
        unit_vectors,
        passed,
    })
}
