use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::mulca::is_prime;
use crate::symcore::{Alphabet, Symbol};

/// `GF(p^m)` with elements packed as base-`p` digit strings, highest coefficient first:
/// `c_{m-1} x^{m-1} + … + c_0 ↦ Σ c_i p^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisField {
    p: u32,
    m: u32,
    /// Monic, low degree first, length `m + 1`.
    modulus: Vec<u32>,
    add: Vec<Symbol>,
    mul: Vec<Symbol>,
    inv: Vec<Symbol>,
}

fn unpack(p: u32, m: u32, mut x: usize) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = (x % p as usize) as u32;
            x /= p as usize;
            d
        })
        .collect()
}

fn pack(p: u32, coeffs: &[u32]) -> usize {
    coeffs.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize)
}

/// Remainder of `f` modulo monic `g` over `𝔽_p` (both low degree first).
fn poly_rem(p: u32, f: &[u32], g: &[u32]) -> Vec<u32> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if lead != 0 {
            for (i, &gc) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * gc) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn monic_of_degree(p: u32, d: u32, lower: usize) -> Vec<u32> {
    let mut f = unpack(p, d, lower);
    f.push(1);
    f
}

impl GaloisField {
    /// The field built from the lexicographically smallest monic irreducible of degree `m`.
    pub fn new(p: u32, m: u32) -> Result<Self> {
        Self::check_params(p, m)?;
        let count = (p as usize).pow(m);
        let modulus = (0..count)
            .map(|lower| monic_of_degree(p, m, lower))
            .find(|f| is_irreducible(p, f))
            .expect("irreducible polynomials exist in every degree");
        Self::with_modulus(p, m, modulus)
    }

    /// `modulus` is monic of degree `m`, low degree first, and must be irreducible.
    pub fn with_modulus(p: u32, m: u32, modulus: Vec<u32>) -> Result<Self> {
        Self::check_params(p, m)?;
        if modulus.len() != m as usize + 1 || modulus[m as usize] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidArgument(format!("modulus must be monic of degree {m} over F_{p}")));
        }
        if !is_irreducible(p, &modulus) {
            return Err(Error::InvalidArgument(format!("modulus {modulus:?} is reducible over F_{p}")));
        }
        let q = (p as usize).pow(m);
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for x in 0..q {
            let xv = unpack(p, m, x);
            for y in 0..q {
                let yv = unpack(p, m, y);
                let sum: Vec<u32> = xv.iter().zip(&yv).map(|(a, b)| (a + b) % p).collect();
                add[x * q + y] = pack(p, &sum) as Symbol;
                let mut prod = vec![0u32; 2 * m as usize];
                for (i, a) in xv.iter().enumerate() {
                    for (j, b) in yv.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + a * b) % p;
                    }
                }
                mul[x * q + y] = pack(p, &poly_rem(p, &prod, &modulus)) as Symbol;
            }
        }
        let mut inv = vec![0; q];
        for x in 1..q {
            inv[x] = (1..q).find(|&y| mul[x * q + y] == 1).expect("nonzero elements are invertible") as Symbol;
        }
        Ok(GaloisField { p, m, modulus, add, mul, inv })
    }

    fn check_params(p: u32, m: u32) -> Result<()> {
        if !is_prime(p as u64) || m == 0 {
            return Err(Error::InvalidArgument(format!("GF({p}^{m}) needs p prime and m >= 1")));
        }
        match (p as usize).checked_pow(m) {
            Some(q) if q <= 256 => Ok(()),
            _ => Err(Error::InvalidArgument(format!("GF({p}^{m}) exceeds the largest alphabet"))),
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> usize {
        (self.p as usize).pow(self.m)
    }
}

fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let m = (f.len() - 1) as u32;
    (1..=m / 2).all(|d| (0..(p as usize).pow(d)).all(|lower| poly_rem(p, f, &monic_of_degree(p, d, lower)).iter().any(|&c| c != 0)))
}

/// The symbol ring: `ℤ/sℤ` with the identity encoding, or a finite field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Modular { s: usize },
    Field(GaloisField),
}

impl RingSpec {
    pub fn modular(s: usize) -> Result<Self> {
        Alphabet::new(s)?;
        Ok(RingSpec::Modular { s })
    }

    pub fn field(p: u32, m: u32) -> Result<Self> {
        Ok(RingSpec::Field(GaloisField::new(p, m)?))
    }

    pub fn size(&self) -> usize {
        match self {
            RingSpec::Modular { s } => *s,
            RingSpec::Field(f) => f.order(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.size()).expect("ring sizes are valid alphabets")
    }

    pub fn is_field(&self) -> bool {
        match self {
            RingSpec::Modular { s } => is_prime(*s as u64),
            RingSpec::Field(_) => true,
        }
    }

    #[inline]
    pub fn add(&self, a: Symbol, b: Symbol) -> Symbol {
        match self {
            RingSpec::Modular { s } => ((a as usize + b as usize) % s) as Symbol,
            RingSpec::Field(f) => f.add[a as usize * f.order() + b as usize],
        }
    }

    #[inline]
    pub fn mul(&self, a: Symbol, b: Symbol) -> Symbol {
        match self {
            RingSpec::Modular { s } => ((a as usize * b as usize) % s) as Symbol,
            RingSpec::Field(f) => f.mul[a as usize * f.order() + b as usize],
        }
    }

    pub fn neg(&self, a: Symbol) -> Symbol {
        (0..self.size() as Symbol).find(|&b| self.add(a, b) == 0).expect("additive inverse")
    }

    pub fn sub(&self, a: Symbol, b: Symbol) -> Symbol {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse, when it exists.
    pub fn inv(&self, a: Symbol) -> Option<Symbol> {
        match self {
            RingSpec::Field(f) => (a != 0).then(|| f.inv[a as usize]),
            RingSpec::Modular { .. } => (1..self.size() as Symbol).find(|&b| self.mul(a, b) == 1),
        }
    }

    /// `Σ coeffs_i · values_i`.
    pub fn dot(&self, coeffs: &[Symbol], values: &[Symbol]) -> Symbol {
        coeffs.iter().zip(values).fold(0, |acc, (&c, &v)| self.add(acc, self.mul(c, v)))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Modular { s } => write!(f, "mod:{s}"),
            RingSpec::Field(gf) => write!(f, "gf:{}^{}", gf.p, gf.m),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad ring {text:?}; expected mod:<s> or gf:<p>^<m>"));
        if let Some(s) = text.strip_prefix("mod:") {
            return RingSpec::modular(s.parse().map_err(|_| bad())?);
        }
        if let Some(rest) = text.strip_prefix("gf:") {
            let (p, m) = rest.split_once('^').unwrap_or((rest, "1"));
            return RingSpec::field(p.parse().map_err(|_| bad())?, m.parse().map_err(|_| bad())?);
        }
        Err(bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_modulus_and_log_table() {
        let gf = GaloisField::new(2, 2).unwrap();
        assert_eq!(gf.modulus(), &[1, 1, 1]);
        let ring = RingSpec::Field(gf);
        // ω = 2 generates the multiplicative group: ω, ω² = ω + 1, ω³ = 1
        assert_eq!(ring.mul(2, 2), 3);
        assert_eq!(ring.mul(2, 3), 1);
        assert_eq!(ring.add(2, 3), 1);
        assert_eq!(ring.inv(3), Some(2));
    }

    #[test]
    fn gf8_uses_smallest_irreducible() {
        let gf = GaloisField::new(2, 3).unwrap();
        assert_eq!(gf.modulus(), &[1, 1, 0, 1]);
        assert!(GaloisField::with_modulus(2, 3, vec![1, 0, 1, 1]).is_ok());
        assert!(GaloisField::with_modulus(2, 2, vec![1, 0, 1]).is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, m) in [(2, 2), (2, 3), (3, 2), (5, 1), (2, 4)] {
            let ring = RingSpec::field(p, m).unwrap();
            let q = ring.size() as Symbol;
            for a in 0..q {
                assert_eq!(ring.add(a, 0), a);
                assert_eq!(ring.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(ring.mul(a, ring.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(ring.mul(a, b), ring.mul(b, a));
                    for c in 0..q {
                        assert_eq!(ring.mul(a, ring.add(b, c)), ring.add(ring.mul(a, b), ring.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn prime_field_matches_modular() {
        for p in [2u32, 3, 5, 7] {
            let f = RingSpec::field(p, 1).unwrap();
            let z = RingSpec::modular(p as usize).unwrap();
            for a in 0..p as Symbol {
                for b in 0..p as Symbol {
                    assert_eq!(f.add(a, b), z.add(a, b));
                    assert_eq!(f.mul(a, b), z.mul(a, b));
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        for text in ["mod:6", "gf:2^2", "gf:3^2"] {
            assert_eq!(text.parse::<RingSpec>().unwrap().to_string(), text);
        }
        assert!("gf:4^1".parse::<RingSpec>().is_err());
        assert!("zz:3".parse::<RingSpec>().is_err());
        assert!(!RingSpec::modular(6).unwrap().is_field());
        assert!(RingSpec::modular(7).unwrap().is_field());
    }
}
