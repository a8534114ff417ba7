use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::TorusRational;
use crate::ca1d::BlockMap;
use crate::error::{Error, Result};
use crate::symcore::{Alphabet, EventuallyPeriodicSeq, Symbol};

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Prime factorization of `n >= 1`, ascending primes.
pub fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `μ_p(a)_k = (p·a_k + ⌊p·a_{k+1}/s⌋) mod s`, radius 1.
pub fn mu_p(alphabet: Alphabet, p: u64) -> Result<BlockMap> {
    let s = alphabet.size() as u64;
    if !is_prime(p) || s % p != 0 {
        return Err(Error::InvalidMultiplier(format!("{p} is not a prime dividing {s}")));
    }
    BlockMap::from_fn(alphabet, 1, |w| ((p * w[0] as u64 + p * w[1] as u64 / s) % s) as Symbol)
}

/// The radius-0 maps `μ_0`, `μ_1`, `μ_{-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstMap {
    Zero,
    Identity,
    /// Digitwise complement `a ↦ s - 1 - a`.
    Mirror,
}

pub fn mu_const(alphabet: Alphabet, which: ConstMap) -> BlockMap {
    let top = (alphabet.size() - 1) as Symbol;
    let f: Box<dyn Fn(&[Symbol]) -> Symbol> = match which {
        ConstMap::Zero => Box::new(|_| 0),
        ConstMap::Identity => Box::new(|w| w[0]),
        ConstMap::Mirror => Box::new(move |w| top - w[0]),
    };
    BlockMap::from_fn(alphabet, 0, f).expect("radius-0 table")
}

/// `u = ±Π p_i^{e_i}` with every `p_i | s`, or `u = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MulSpec {
    alphabet: Alphabet,
    u: i64,
    negative: bool,
    factors: Vec<(u64, u32)>,
}

impl MulSpec {
    pub fn new(alphabet: Alphabet, u: i64) -> Result<Self> {
        let s = alphabet.size() as u64;
        let factors = if u == 0 { vec![] } else { prime_factors(u.unsigned_abs()) };
        if let Some((p, _)) = factors.iter().find(|(p, _)| s % p != 0) {
            return Err(Error::InvalidMultiplier(format!("prime {p} of {u} does not divide {s}")));
        }
        Ok(MulSpec { alphabet, u, negative: u < 0, factors })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn u(&self) -> i64 {
        self.u
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }
}

/// `μ_u = μ_{-1}^{e_0} ∘ μ_{p_1}^{e_1} ∘ … ∘ μ_{p_d}^{e_d}`, normalized; `μ_0` for `u = 0`.
pub fn mu_u(spec: &MulSpec) -> Result<BlockMap> {
    let alphabet = spec.alphabet;
    if spec.u == 0 {
        return Ok(mu_const(alphabet, ConstMap::Zero));
    }
    let mut acc = mu_const(alphabet, if spec.negative { ConstMap::Mirror } else { ConstMap::Identity });
    for &(p, e) in &spec.factors {
        let m = mu_p(alphabet, p)?;
        for _ in 0..e {
            acc = acc.compose(&m)?;
        }
    }
    Ok(acc.normalize())
}

fn digits_value(s: &BigInt, digits: &[Symbol]) -> BigInt {
    digits.iter().fold(BigInt::zero(), |acc, &d| acc * s + BigInt::from(d))
}

/// `V(a) = Σ a_n / s^{n+1}`, exactly, reduced mod 1.
pub fn evaluate(seq: &EventuallyPeriodicSeq) -> TorusRational {
    let s = BigInt::from(seq.alphabet().size());
    let sb = num_traits::pow(s.clone(), seq.b());
    let sc = num_traits::pow(s.clone(), seq.c());
    let prefix = digits_value(&s, seq.prefix());
    let cycle = digits_value(&s, seq.cycle());
    // prefix/s^b + cycle/(s^b (s^c - 1))
    let denom = &sb * (&sc - 1);
    let numer = prefix * (&sc - 1) + cycle;
    TorusRational::new(numer, denom).expect("nonzero denominator")
}

/// All base-`s` expansions of `x`: the upper one first, then the lower one when `x` has a
/// finite expansion. For `x = 0` the all-`(s-1)` expansion is included only on request.
pub fn preimages(x: &TorusRational, alphabet: Alphabet, include_improper: bool) -> Vec<EventuallyPeriodicSeq> {
    let s = alphabet.size();
    let top = (s - 1) as Symbol;
    let upper = long_division(x, alphabet);
    let mut out = vec![upper.clone()];
    if x.is_zero() {
        if include_improper {
            out.push(EventuallyPeriodicSeq::constant(alphabet, top).expect("valid symbol"));
        }
        return out;
    }
    if upper.cycle() == [0] {
        let mut prefix = upper.prefix().to_vec();
        let last = prefix.last_mut().expect("nonzero finite expansion has a prefix");
        *last -= 1;
        out.push(EventuallyPeriodicSeq::new(alphabet, prefix, vec![top]).expect("valid digits").canonicalize());
    }
    out
}

fn long_division(x: &TorusRational, alphabet: Alphabet) -> EventuallyPeriodicSeq {
    let s = BigInt::from(alphabet.size());
    let d = x.denom().clone();
    let mut r = x.numer().clone();
    let mut seen: HashMap<BigInt, usize> = HashMap::new();
    let mut digits = Vec::new();
    loop {
        if let Some(&start) = seen.get(&r) {
            let cycle = digits.split_off(start);
            return EventuallyPeriodicSeq::new(alphabet, digits, cycle).expect("valid digits").canonicalize();
        }
        seen.insert(r.clone(), digits.len());
        let (q, rem) = (&r * &s).div_rem(&d);
        digits.push(q.to_u8().expect("digit below s"));
        r = rem;
    }
}
