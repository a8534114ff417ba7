use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{RingSpec, ShiftPolynomial};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::symcore::{format_symbols, Symbol};

const MAX_DEGREE: usize = 3;
const INPUT_LEN: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PLambdaCounterexample {
    pub map: usize,
    pub input: usize,
    pub table: String,
    pub word: String,
    pub position: usize,
    pub output: Symbol,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PLambdaReport {
    pub s: usize,
    pub p: usize,
    pub trials: usize,
    pub seed: u64,
    pub sabotage: Option<usize>,
    pub passed: bool,
    pub counterexample: Option<PLambdaCounterexample>,
}

/// Checks that random linear maps over `ℤ/sℤ` send sequences with every symbol divisible by `p`
/// to sequences with the same property.
///
/// Draws `trials` random polynomials of degree at most 3 and `trials` input words of length 40
/// (the first is all zeros) and applies every map to every word. `sabotage` flips one table
/// entry of the first map.
pub fn p_lambda_witness(
    s: usize,
    p: Option<usize>,
    trials: usize,
    seed: u64,
    sabotage: Option<usize>,
    exec: Execution,
) -> Result<PLambdaReport> {
    let ring = RingSpec::modular(s)?;
    let smallest = (2..s).find(|d| s % d == 0).ok_or(Error::NoNontrivialDivisor(s))?;
    let p = p.unwrap_or(smallest);
    if p < 2 || p >= s || s % p != 0 {
        return Err(Error::InvalidArgument(format!("{p} is not a nontrivial divisor of {s}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut maps = Vec::with_capacity(trials);
    let mut inputs = Vec::with_capacity(trials);
    for i in 0..trials {
        let degree = rng.gen_range(0..=MAX_DEGREE);
        let coeffs: Vec<Symbol> = (0..=degree).map(|_| rng.gen_range(0..s) as Symbol).collect();
        let mut tau = ShiftPolynomial::new(ring.clone(), coeffs)?.to_blockmap();
        if i == 0 {
            if let Some(index) = sabotage {
                tau = tau.with_flipped_entry(index)?;
            }
        }
        maps.push(tau);
        let input: Vec<Symbol> = if i == 0 {
            vec![0; INPUT_LEN]
        } else {
            (0..INPUT_LEN).map(|_| (p * rng.gen_range(0..s / p)) as Symbol).collect()
        };
        inputs.push(input);
    }
    // every map against every input
    let counterexample = exec
        .find_first(trials * trials, |idx| {
            let (i, j) = (idx / trials, idx % trials);
            let out = maps[i].apply_slice(&inputs[j]).expect("input longer than any window");
            out.iter().position(|&x| x as usize % p != 0).map(|position| PLambdaCounterexample {
                map: i,
                input: j,
                table: format_symbols(maps[i].table()),
                word: format_symbols(&inputs[j]),
                position,
                output: out[position],
            })
        })
        .map(|(_, c)| c);
    Ok(PLambdaReport { s, p, trials, seed, sabotage, passed: counterexample.is_none(), counterexample })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::{Alphabet, EventuallyPeriodicSeq};

    #[test]
    fn six_two_passes() {
        let report = p_lambda_witness(6, Some(2), 100, 7, None, Execution::Sequential).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(report, p_lambda_witness(6, None, 100, 7, None, Execution::Parallel).unwrap());
    }

    #[test]
    fn hand_example_mod_four() {
        let ring = RingSpec::modular(4).unwrap();
        let tau = ShiftPolynomial::new(ring, vec![1, 1, 1]).unwrap().to_blockmap();
        let a = EventuallyPeriodicSeq::from_digits(Alphabet::new(4).unwrap(), "", "202").unwrap();
        let image = tau.apply_seq(&a).unwrap();
        assert!(image.head(30).iter().all(|&x| x == 0 || x == 2));
        // 2+0+2, 0+2+2, 2+2+0 are all 0 mod 4
        assert!(image.head(30).iter().all(|&x| x == 0));
    }

    #[test]
    fn zero_polynomial_gives_zero() {
        let ring = RingSpec::modular(6).unwrap();
        let tau = ShiftPolynomial::zero(ring).to_blockmap();
        assert!(tau.apply_slice(&[2, 4, 0, 2]).unwrap().iter().all(|&x| x == 0));
    }

    #[test]
    fn errors_and_sabotage() {
        assert_eq!(p_lambda_witness(7, None, 10, 0, None, Execution::Sequential), Err(Error::NoNontrivialDivisor(7)));
        assert!(p_lambda_witness(6, Some(4), 10, 0, None, Execution::Sequential).is_err());
        let report = p_lambda_witness(6, Some(2), 10, 0, Some(0), Execution::Sequential).unwrap();
        assert!(!report.passed);
        let cex = report.counterexample.unwrap();
        assert_eq!((cex.map, cex.input, cex.position), (0, 0, 0));
    }
}
