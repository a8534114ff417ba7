//! Bounded-radius commutant campaigns.

use std::path::Path;

use calab_core::ca1d::{candidate_count, enumerate_commutant, BlockMap};
use calab_core::linca::{is_linear, RingSpec};
use calab_core::mulca::{mu_u, prime_factors, MulSpec};
use calab_core::symcore::{format_symbols, Alphabet};
use calab_core::Execution;
use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::error::{io_error, Result};
use crate::gens::parse_generators;
use crate::report::{opt_field, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MemberClass {
    Linear,
    Multiplication,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Member {
    pub index: usize,
    pub radius: usize,
    pub table: String,
    pub class: MemberClass,
    /// `u` when the member equals `μ_u`.
    pub multiplier: Option<i64>,
    pub file: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutantReport {
    pub experiment: String,
    pub s: usize,
    pub radius: usize,
    pub generators: Vec<String>,
    pub candidates: String,
    pub size: usize,
    pub members: Vec<Member>,
    pub contains_identity: bool,
    pub contains_mirror: bool,
}

impl Report for CommutantReport {
    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .members
            .iter()
            .map(|m| {
                let class = serde_json::to_value(m.class).expect("enum serializes");
                vec![
                    m.index.to_string(),
                    m.radius.to_string(),
                    m.table.clone(),
                    class.as_str().unwrap_or_default().to_string(),
                    opt_field(&m.multiplier),
                ]
            })
            .collect();
        (vec!["index", "radius", "table", "class", "multiplier"], rows)
    }
}

/// Every `μ_u` of radius at most `radius`: `u = 0` and `±d` for divisors `d` of `s^{radius+1}`.
fn multiplication_maps(alphabet: Alphabet, radius: usize) -> Result<Vec<(i64, BlockMap)>> {
    let s = alphabet.size() as u64;
    let primes: Vec<u64> = prime_factors(s).into_iter().map(|(p, _)| p).collect();
    let bound = s.checked_pow(radius as u32 + 1).unwrap_or(u64::MAX);
    let mut divisors = vec![1u64];
    for &p in &primes {
        let mut more = Vec::new();
        for &d in &divisors {
            let mut x = d;
            while let Some(next) = x.checked_mul(p).filter(|&n| bound % n == 0) {
                more.push(next);
                x = next;
            }
        }
        divisors.extend(more);
    }
    divisors.sort_unstable();
    let mut out = vec![(0, mu_u(&MulSpec::new(alphabet, 0)?)?)];
    for d in divisors {
        for u in [d as i64, -(d as i64)] {
            let map = mu_u(&MulSpec::new(alphabet, u)?)?;
            if map.radius() <= radius {
                out.push((u, map));
            }
        }
    }
    Ok(out)
}

/// Enumerates the commutant of the configured generators and classifies each member.
///
/// With `out_dir`, each member is also written as `member_<index>.ca1`.
pub fn commutant_campaign(cfg: &ExperimentConfig, cap: u64, exec: Execution, out_dir: Option<&Path>) -> Result<CommutantReport> {
    let alphabet = cfg.alphabet()?;
    let gens = parse_generators(cfg.require("gens")?, alphabet)?;
    let radius = cfg.parse_or("radius", 0usize)?;
    let maps: Vec<BlockMap> = gens.iter().map(|g| g.map.clone()).collect();
    let found = enumerate_commutant(alphabet, &maps, radius, cap, exec)?;
    let ring = RingSpec::modular(alphabet.size())?;
    let muls = multiplication_maps(alphabet, radius)?;
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir).map_err(io_error(dir))?;
    }
    let mut members = Vec::with_capacity(found.len());
    for (index, map) in found.iter().enumerate() {
        let multiplier = muls.iter().find(|(_, m)| m.equal(map).unwrap_or(false)).map(|(u, _)| *u);
        let class = if is_linear(map, &ring)? {
            MemberClass::Linear
        } else if multiplier.is_some() {
            MemberClass::Multiplication
        } else {
            MemberClass::Other
        };
        let file = match out_dir {
            Some(dir) => {
                let name = format!("member_{index}.ca1");
                let path = dir.join(&name);
                std::fs::write(&path, map.to_string()).map_err(io_error(&path))?;
                Some(name)
            }
            None => None,
        };
        members.push(Member { index, radius: map.radius(), table: format_symbols(map.table()), class, multiplier, file });
    }
    let has = |u: i64| members.iter().any(|m| m.multiplier == Some(u));
    Ok(CommutantReport {
        experiment: cfg.str_or("experiment", "commutant").to_string(),
        s: alphabet.size(),
        radius,
        generators: gens.iter().map(|g| g.label.clone()).collect(),
        candidates: candidate_count(alphabet, radius).to_string(),
        size: members.len(),
        contains_identity: has(1),
        contains_mirror: has(-1),
        members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(text: &str) -> ExperimentConfig {
        text.parse().unwrap()
    }

    #[test]
    fn linear_generators_have_linear_commutant() {
        let r = commutant_campaign(&cfg("s=2\ngens=linear:3\nradius=3\n"), 1 << 24, Execution::Parallel, None).unwrap();
        assert_eq!(r.size, 16);
        assert!(r.members.iter().all(|m| m.class == MemberClass::Linear));
        assert_eq!(r.candidates, "65536");
    }

    #[test]
    fn shift_commutes_with_everything() {
        let r = commutant_campaign(&cfg("s=2\ngens=sigma\nradius=1\n"), 1 << 24, Execution::Sequential, None).unwrap();
        assert_eq!(r.size, 16);
    }

    #[test]
    fn writes_member_files() {
        let dir = tempfile::tempdir().unwrap();
        let r = commutant_campaign(&cfg("s=2\ngens=id\n"), 1 << 24, Execution::Sequential, Some(dir.path())).unwrap();
        assert_eq!(r.size, 4);
        let text = std::fs::read_to_string(dir.path().join("member_1.ca1")).unwrap();
        let map: BlockMap = text.parse().unwrap();
        assert_eq!(format_symbols(map.table()), r.members[1].table);
    }

    #[test]
    fn multiplication_maps_are_found() {
        let muls = multiplication_maps(Alphabet::new(6).unwrap(), 0).unwrap();
        let us: Vec<i64> = muls.iter().map(|(u, _)| *u).collect();
        assert_eq!(us, [0, 1, -1]);
        let muls = multiplication_maps(Alphabet::new(6).unwrap(), 1).unwrap();
        let us: Vec<i64> = muls.iter().map(|(u, _)| *u).collect();
        assert_eq!(us, [0, 1, -1, 2, -2, 3, -3, 6, -6]);
        assert!(commutant_campaign(&cfg("s=6\ngens=mu:2\nradius=1\n"), 1000, Execution::Sequential, None).is_err());
    }
}
