use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{evaluate, mu_p, TorusRational};
use crate::ca1d::BlockMap;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::symcore::{Alphabet, EventuallyPeriodicSeq, LazySequence, SequenceLiteral, Symbol, Word};

/// Prefix length uniform in `0..=6`, cycle length uniform in `1..=6`, symbols uniform.
pub fn random_periodic(rng: &mut impl Rng, alphabet: Alphabet) -> EventuallyPeriodicSeq {
    let s = alphabet.size();
    let b = rng.gen_range(0..=6);
    let c = rng.gen_range(1..=6);
    let mut draw = |n: usize| (0..n).map(|_| rng.gen_range(0..s) as Symbol).collect::<Vec<_>>();
    let prefix = draw(b);
    let cycle = draw(c);
    EventuallyPeriodicSeq::new(alphabet, prefix, cycle).expect("symbols drawn below s")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentsCounterexample {
    pub trial: usize,
    pub sequence: String,
    pub image: String,
    pub got: TorusRational,
    pub expected: TorusRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentsReport {
    pub s: usize,
    pub u: i64,
    pub trials: usize,
    pub seed: u64,
    pub passed: bool,
    pub counterexample: Option<RepresentsCounterexample>,
}

/// Checks `V(τ(a)) = u·V(a) mod 1` on `trials` seeded random eventually periodic sequences.
pub fn represents_check(tau: &BlockMap, u: i64, trials: usize, seed: u64, exec: Execution) -> RepresentsReport {
    let alphabet = tau.alphabet();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inputs: Vec<_> = (0..trials).map(|_| random_periodic(&mut rng, alphabet)).collect();
    let counterexample = exec
        .find_first(trials, |i| {
            let a = &inputs[i];
            let image = tau.apply_seq(a).expect("alphabet matches");
            let got = evaluate(&image);
            let expected = evaluate(a).times(u);
            (got != expected).then(|| RepresentsCounterexample {
                trial: i,
                sequence: SequenceLiteral::Periodic(a.clone()).to_string(),
                image: SequenceLiteral::Periodic(image).to_string(),
                got,
                expected,
            })
        })
        .map(|(_, c)| c);
    RepresentsReport { s: alphabet.size(), u, trials, seed, passed: counterexample.is_none(), counterexample }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DigitViolation {
    pub step: usize,
    pub position: usize,
    pub digit: Symbol,
    pub allowed: Vec<Symbol>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerPrimeReport {
    pub p: u64,
    pub m: u32,
    pub s: usize,
    pub steps: usize,
    pub prefix_len: usize,
    pub source: String,
    /// Digit `p + 1` never occurs in any image.
    pub forbidden_digit_absent: bool,
    /// Step `k` only uses digits `{0, p^(k mod m)}`.
    pub alternation_holds: bool,
    pub passed: bool,
    pub first_forbidden: Option<DigitViolation>,
    pub first_alternation_break: Option<DigitViolation>,
}

/// The map `μ_p` over `Λ_{p^m}` and the `{0,1}`-valued rich source used by the witness:
/// Thue–Morse for `p = 2`, binary Champernowne otherwise.
pub fn power_prime_setup(p: u64, m: u32) -> Result<(BlockMap, LazySequence)> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("need m >= 2, got {m}")));
    }
    let s = p
        .checked_pow(m)
        .filter(|&s| s <= 256)
        .ok_or_else(|| Error::InvalidArgument(format!("{p}^{m} exceeds the largest alphabet")))?;
    let alphabet = Alphabet::new(s as usize)?;
    let map = mu_p(alphabet, p)?;
    let source = if p == 2 { LazySequence::thue_morse(alphabet) } else { LazySequence::champernowne_binary(alphabet) };
    Ok((map, source))
}

/// Iterates `μ_p` over `Λ_{p^m}` on a `{0,1}`-valued rich prefix and checks that digit
/// `p + 1` never appears.
pub fn power_prime_witness(p: u64, m: u32, steps: usize, prefix_len: usize) -> Result<PowerPrimeReport> {
    let (map, source) = power_prime_setup(p, m)?;
    power_prime_witness_with(&map, &source, p, m, steps, prefix_len)
}

/// [`power_prime_witness`] with an explicit map and source, e.g. a sabotaged table.
pub fn power_prime_witness_with(
    map: &BlockMap,
    source: &LazySequence,
    p: u64,
    m: u32,
    steps: usize,
    prefix_len: usize,
) -> Result<PowerPrimeReport> {
    if prefix_len <= steps + 1 {
        return Err(Error::PrefixExhausted { prefix_len, steps });
    }
    let alphabet = map.alphabet();
    alphabet.ensure_same(source.alphabet())?;
    if map.radius() != 1 {
        // each application must consume exactly one symbol
        return Err(Error::InvalidArgument("witness map must have radius 1".into()));
    }
    let forbidden = (p + 1) as Symbol;
    let mut first_forbidden = None;
    let mut first_alternation_break = None;
    let mut current = source.head(prefix_len);
    for step in 0..=steps {
        if step > 0 {
            current = map.apply_slice(&current)?;
        }
        let power = p.pow(step as u32 % m) as Symbol;
        let allowed = vec![0, power];
        for (position, &digit) in current.iter().enumerate() {
            if digit == forbidden && first_forbidden.is_none() {
                first_forbidden = Some(DigitViolation { step, position, digit, allowed: allowed.clone() });
            }
            if !allowed.contains(&digit) && first_alternation_break.is_none() {
                first_alternation_break = Some(DigitViolation { step, position, digit, allowed: allowed.clone() });
            }
        }
    }
    let forbidden_digit_absent = first_forbidden.is_none();
    let alternation_holds = first_alternation_break.is_none();
    Ok(PowerPrimeReport {
        p,
        m,
        s: alphabet.size(),
        steps,
        prefix_len,
        source: source.to_string(),
        forbidden_digit_absent,
        alternation_holds,
        passed: forbidden_digit_absent && alternation_holds,
        first_forbidden,
        first_alternation_break,
    })
}

/// `φ(a)_k = Σ_j p^{m-1-j} a_{mk+j}`: reads each `m`-block of a base-`p` word as one base-`p^m` digit.
pub fn conjugacy_phi(p: u64, m: u32, prefix: &Word) -> Result<Word> {
    if !super::is_prime(p) {
        return Err(Error::InvalidMultiplier(format!("{p} is not prime")));
    }
    if prefix.alphabet().size() as u64 != p {
        return Err(Error::AlphabetMismatch { left: prefix.alphabet().size(), right: p as usize });
    }
    let block = m as usize;
    if block == 0 || prefix.len() % block != 0 {
        return Err(Error::LengthNotDivisible { len: prefix.len(), block });
    }
    let target = Alphabet::new(p.pow(m) as usize)?;
    let symbols = prefix
        .symbols()
        .chunks(block)
        .map(|chunk| chunk.iter().fold(0u64, |acc, &a| acc * p + a as u64) as Symbol)
        .collect();
    Word::new(target, symbols)
}
