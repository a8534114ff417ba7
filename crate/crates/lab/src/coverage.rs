//! Orbit coverage: which `k`-windows appear in images of a seed prefix under words in the generators.

use std::collections::BTreeSet;

use calab_core::symcore::{format_symbols, Alphabet, SequenceLiteral, Symbol};
use calab_core::Execution;
use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::error::{LabError, Result};
use crate::gens::{parse_generators, Generator};
use crate::report::Report;

const FORBIDDEN_SAMPLE: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthCoverage {
    pub depth: usize,
    /// Distinct images first reached at this depth.
    pub images: usize,
    pub seen: u64,
    pub total: u64,
    /// `seen/total`, unreduced.
    pub fraction: String,
    /// Up to 32 windows never seen so far, in lex order.
    pub forbidden: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub experiment: String,
    pub s: usize,
    pub k: usize,
    pub seed: String,
    pub prefix_len: usize,
    pub generators: Vec<String>,
    pub depths: Vec<DepthCoverage>,
    pub complete: bool,
}

impl Report for CoverageReport {
    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .depths
            .iter()
            .map(|d| {
                vec![
                    d.depth.to_string(),
                    d.images.to_string(),
                    d.seen.to_string(),
                    d.total.to_string(),
                    d.fraction.clone(),
                    d.forbidden.join(" "),
                ]
            })
            .collect();
        (vec!["depth", "images", "seen", "total", "fraction", "forbidden"], rows)
    }
}

/// A `{0,1}` sequence literal with `s` prepended when missing.
pub(crate) fn sequence_literal(cfg: &ExperimentConfig, key: &str, alphabet: Alphabet) -> Result<SequenceLiteral> {
    let text = cfg.require(key)?;
    let text = if text.split_whitespace().any(|t| t.starts_with("s=")) {
        text.to_string()
    } else {
        format!("s={} {text}", alphabet.size())
    };
    let lit: SequenceLiteral = text.parse()?;
    alphabet.ensure_same(calab_core::symcore::SymbolSource::alphabet(&lit))?;
    Ok(lit)
}

fn mark_windows(seen: &mut [bool], s: usize, k: usize, image: &[Symbol]) {
    if image.len() < k {
        return;
    }
    let modulus = seen.len();
    let mut idx = image[..k - 1].iter().fold(0, |acc, &a| acc * s + a as usize);
    for &a in &image[k - 1..] {
        idx = (idx * s + a as usize) % modulus;
        seen[idx] = true;
    }
}

fn digits(mut idx: usize, s: usize, k: usize) -> Vec<Symbol> {
    let mut w = vec![0; k];
    for slot in w.iter_mut().rev() {
        *slot = (idx % s) as Symbol;
        idx /= s;
    }
    w
}

/// Breadth-first over generator words of length `<= depth`, in generator-index order,
/// deduplicating images by content.
pub fn orbit_coverage(cfg: &ExperimentConfig, cap: u64, exec: Execution) -> Result<CoverageReport> {
    let alphabet = cfg.alphabet()?;
    let s = alphabet.size();
    let gens: Vec<Generator> = parse_generators(cfg.require("gens")?, alphabet)?;
    let seed = sequence_literal(cfg, "seq", alphabet)?;
    let k = cfg.positive("k", 3)?;
    let depth = cfg.parse_or("depth", 4usize)?;
    let prefix_len = cfg.positive("prefix", 1000)?;
    let image_cap = cfg.positive("image_cap", 1 << 16)?;
    let total = alphabet.pow(k).filter(|&t| t as u64 <= cap).ok_or_else(|| {
        LabError::Config(format!("{s}^{k} windows exceed the cap {cap}"))
    })?;

    let mut seen = vec![false; total];
    let mut known: BTreeSet<Vec<Symbol>> = BTreeSet::new();
    let mut frontier = vec![seed.head(prefix_len)];
    let mut depths = Vec::new();
    for d in 0..=depth {
        if d > 0 {
            let images = exec.map_indices(frontier.len() * gens.len(), |i| {
                let (x, g) = (&frontier[i / gens.len()], &gens[i % gens.len()]);
                g.map.apply_slice(x).ok()
            });
            let mut next = Vec::new();
            for image in images.into_iter().flatten() {
                if image.len() >= k && !known.contains(&image) {
                    known.insert(image.clone());
                    next.push(image);
                }
            }
            frontier = next;
        } else {
            known.insert(frontier[0].clone());
        }
        if known.len() > image_cap {
            return Err(LabError::Config(format!("{} distinct images exceed image_cap {image_cap}", known.len())));
        }
        for image in &frontier {
            mark_windows(&mut seen, s, k, image);
        }
        let count = seen.iter().filter(|&&x| x).count();
        let forbidden = (0..total)
            .filter(|&i| !seen[i])
            .take(FORBIDDEN_SAMPLE)
            .map(|i| format_symbols(&digits(i, s, k)))
            .collect();
        depths.push(DepthCoverage {
            depth: d,
            images: frontier.len(),
            seen: count as u64,
            total: total as u64,
            fraction: format!("{count}/{total}"),
            forbidden,
        });
    }
    let complete = depths.last().is_some_and(|d| d.seen == d.total);
    Ok(CoverageReport {
        experiment: cfg.str_or("experiment", "coverage").to_string(),
        s,
        k,
        seed: seed.to_string(),
        prefix_len,
        generators: gens.iter().map(|g| g.label.clone()).collect(),
        depths,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(text: &str) -> ExperimentConfig {
        text.parse().unwrap()
    }

    #[test]
    fn mu2_and_shift_cover_every_window() {
        let c = cfg("s=6\ngens=mu:2 sigma\nseq=gen=champernowne\nk=3\ndepth=10\nprefix=300\n");
        let r = orbit_coverage(&c, 1 << 20, Execution::Parallel).unwrap();
        assert!(r.complete);
        assert_eq!(r.depths.last().unwrap().fraction, "216/216");
        assert!(r.depths.windows(2).all(|w| w[0].seen <= w[1].seen));
    }

    #[test]
    fn digit_three_never_appears_over_four_symbols() {
        let c = cfg("s=4\ngens=mu:2\nseq=gen=thue-morse\nk=2\ndepth=12\nprefix=500\n");
        let r = orbit_coverage(&c, 1 << 20, Execution::Sequential).unwrap();
        for d in &r.depths {
            assert!(d.seen <= 12, "{d:?}");
            assert!(d.forbidden.iter().any(|w| w.contains('3')));
        }
        assert!(r.depths.iter().all(|d| d.forbidden.contains(&"0,3".to_string())));
    }

    #[test]
    fn identity_sees_only_the_seed() {
        let c = cfg("s=2\ngens=id\nseq=cyc=0,1\nk=3\ndepth=3\n");
        let r = orbit_coverage(&c, 1 << 20, Execution::Sequential).unwrap();
        assert!(r.depths.iter().all(|d| d.seen == 2));
        assert_eq!(r.depths[0].forbidden, ["0,0,0", "0,0,1", "0,1,1", "1,0,0", "1,1,0", "1,1,1"]);
        assert_eq!(r.depths[0].fraction, "2/8");
    }

    #[test]
    fn caps_are_enforced() {
        let c = cfg("s=6\ngens=sigma\nseq=gen=champernowne\nk=9\n");
        assert!(orbit_coverage(&c, 1 << 20, Execution::Sequential).is_err());
    }
}
