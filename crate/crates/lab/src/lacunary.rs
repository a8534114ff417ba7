//! Orbits of a truncated lacunary series under `μ_p`.

use calab_core::mulca::{evaluate, mu_p, preimages, TorusRational};
use calab_core::symcore::Alphabet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::error::{LabError, Result};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LacunaryStep {
    pub step: usize,
    pub value: String,
    /// The nearest point of `{0, p^-1, …, p^-D}`.
    pub nearest: String,
    pub distance: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LacunaryReport {
    pub experiment: String,
    pub p: u64,
    pub m: u32,
    pub s: usize,
    pub terms: u32,
    pub limit_depth: u32,
    pub expansion: String,
    pub steps: Vec<LacunaryStep>,
    pub max_distance: String,
}

impl Report for LacunaryReport {
    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .steps
            .iter()
            .map(|r| vec![r.step.to_string(), r.value.clone(), r.nearest.clone(), r.distance.clone()])
            .collect();
        (vec!["step", "value", "nearest", "distance"], rows)
    }
}

fn ratio_text(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// `Σ_{i=1}^{terms} p^{-i²}` as an exact base-`p^m` expansion, pushed through `μ_p` up to `steps` times.
pub fn lacunary_orbit(cfg: &ExperimentConfig) -> Result<LacunaryReport> {
    let p: u64 = cfg.parse_or("p", 2)?;
    let m: u32 = cfg.parse_or("m", 2)?;
    let terms = cfg.positive("terms", 5)? as u32;
    let steps: usize = cfg.parse_or("steps", 20)?;
    let limit_depth = cfg.parse_or("limit_depth", terms * terms)?;
    let s = p.checked_pow(m).filter(|&s| s <= 256).ok_or_else(|| LabError::Config(format!("{p}^{m} is too large")))?;
    let alphabet = Alphabet::new(s as usize)?;
    let map = mu_p(alphabet, p)?;

    let bp = BigInt::from(p);
    let top = terms * terms;
    let numer: BigInt = (1..=terms).map(|i| Pow::pow(&bp, top - i * i)).sum();
    let x = TorusRational::new(numer, Pow::pow(&bp, top))?;
    let mut seq = preimages(&x, alphabet, false).into_iter().next().expect("every point has an expansion");

    let limits: Vec<BigRational> = std::iter::once(BigRational::zero())
        .chain((1..=limit_depth).map(|j| BigRational::new(BigInt::one(), Pow::pow(&bp, j))))
        .collect();
    let mut rows = Vec::with_capacity(steps + 1);
    let mut max = BigRational::zero();
    for step in 0..=steps {
        if step > 0 {
            seq = map.apply_seq(&seq)?;
        }
        let v = evaluate(&seq);
        let (nearest, distance) = limits
            .iter()
            .map(|l| (l, v.distance(&TorusRational::from_rational(l.clone()))))
            .min_by(|a, b| a.1.cmp(&b.1))
            .expect("limit set is nonempty");
        if distance > max {
            max = distance.clone();
        }
        rows.push(LacunaryStep {
            step,
            value: ratio_text(v.as_rational()),
            nearest: ratio_text(nearest),
            distance: ratio_text(&distance),
        });
    }
    Ok(LacunaryReport {
        experiment: cfg.str_or("experiment", "lacunary").to_string(),
        p,
        m,
        s: s as usize,
        terms,
        limit_depth,
        expansion: preimages(&x, alphabet, false)[0].to_string(),
        steps: rows,
        max_distance: ratio_text(&max),
    })
}
