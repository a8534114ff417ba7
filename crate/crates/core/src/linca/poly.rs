use std::fmt;
use std::str::FromStr;

use super::RingSpec;
use crate::ca1d::BlockMap;
use crate::error::{Error, Result};
use crate::symcore::{format_symbols, parse_symbols, Symbol};

/// `p_τ(x) = c_0 + c_1 x + … + c_r x^r`, trailing zeros trimmed. Substituting `σ` for `x`
/// gives the linear map `τ(a)_k = Σ c_i a_{k+i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftPolynomial {
    ring: RingSpec,
    coeffs: Vec<Symbol>,
}

impl ShiftPolynomial {
    pub fn new(ring: RingSpec, mut coeffs: Vec<Symbol>) -> Result<Self> {
        ring.alphabet().check_all(&coeffs)?;
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(ShiftPolynomial { ring, coeffs })
    }

    pub fn zero(ring: RingSpec) -> Self {
        ShiftPolynomial { ring, coeffs: vec![] }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Symbol] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn coeff(&self, i: usize) -> Symbol {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &ShiftPolynomial) -> Result<ShiftPolynomial> {
        self.same_ring(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.ring.add(self.coeff(i), other.coeff(i))).collect();
        ShiftPolynomial::new(self.ring.clone(), coeffs)
    }

    /// The ring product, which corresponds to composition of the linear maps.
    pub fn mul(&self, other: &ShiftPolynomial) -> Result<ShiftPolynomial> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(ShiftPolynomial::zero(self.ring.clone()));
        }
        let mut coeffs = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.ring.add(coeffs[i + j], self.ring.mul(a, b));
            }
        }
        ShiftPolynomial::new(self.ring.clone(), coeffs)
    }

    fn same_ring(&self, other: &ShiftPolynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("ring mismatch: {} vs {}", self.ring, other.ring)))
        }
    }

    /// The block map of radius `deg p` (0 for the zero polynomial).
    pub fn to_blockmap(&self) -> BlockMap {
        let radius = self.degree().unwrap_or(0);
        let coeffs: Vec<Symbol> = (0..=radius).map(|i| self.coeff(i)).collect();
        BlockMap::from_fn(self.ring.alphabet(), radius, |w| self.ring.dot(&coeffs, w))
            .expect("linear table fits")
    }
}

fn check_ring(tau: &BlockMap, ring: &RingSpec) -> Result<()> {
    tau.alphabet().ensure_same(ring.alphabet())
}

/// Exhaustive linearity test: `f(w) = Σ w_i f(e^i)` for every block `w`.
pub fn is_linear(tau: &BlockMap, ring: &RingSpec) -> Result<bool> {
    check_ring(tau, ring)?;
    let coeffs = basis_values(tau);
    Ok(tau.alphabet().words(tau.radius() + 1).zip(tau.table()).all(|(w, &f)| ring.dot(&coeffs, &w) == f))
}

/// `f(e^i)` for each standard basis block `e^i`.
fn basis_values(tau: &BlockMap) -> Vec<Symbol> {
    let width = tau.radius() + 1;
    (0..width)
        .map(|i| {
            let mut e = vec![0; width];
            e[i] = 1;
            tau.lookup(&e)
        })
        .collect()
}

/// `p_τ` with `c_i = f(e^i)` when `τ` is linear.
pub fn blockmap_to_poly(tau: &BlockMap, ring: &RingSpec) -> Result<Option<ShiftPolynomial>> {
    if !is_linear(tau, ring)? {
        return Ok(None);
    }
    ShiftPolynomial::new(ring.clone(), basis_values(tau)).map(Some)
}

/// `(τ + μ)(a)_k = τ(a)_k + μ(a)_k` in the ring.
pub fn pointwise_sum(tau: &BlockMap, mu: &BlockMap, ring: &RingSpec) -> Result<BlockMap> {
    check_ring(tau, ring)?;
    check_ring(mu, ring)?;
    let radius = tau.radius().max(mu.radius());
    let (a, b) = (tau.padded(radius), mu.padded(radius));
    let table = a.table().iter().zip(b.table()).map(|(&x, &y)| ring.add(x, y)).collect();
    BlockMap::new(tau.alphabet(), radius, table)
}

impl fmt::Display for ShiftPolynomial {
    /// `ring=<ring> coeffs=<c_0,...,c_r>`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = if self.coeffs.is_empty() { "0".to_string() } else { format_symbols(&self.coeffs) };
        write!(f, "ring={} coeffs={}", self.ring, coeffs)
    }
}

impl FromStr for ShiftPolynomial {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let fields = crate::symcore::literal_fields(text)?;
        if let Some(k) = fields.keys().find(|k| !["ring", "coeffs"].contains(k)) {
            return Err(Error::Parse(format!("unknown key {k:?}")));
        }
        let ring: RingSpec = fields.get("ring").ok_or_else(|| Error::Parse("missing ring=".into()))?.parse()?;
        let coeffs = fields.get("coeffs").ok_or_else(|| Error::Parse("missing coeffs=".into()))?;
        let coeffs = parse_symbols(coeffs, ring.alphabet())?;
        ShiftPolynomial::new(ring, coeffs)
    }
}
