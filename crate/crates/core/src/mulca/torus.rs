use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational point of `𝕋 = ℝ/ℤ`, kept reduced with value in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusRational(BigRational);

impl TorusRational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Self::from_rational(BigRational::new(numer.into(), denom)))
    }

    /// Reduces any rational mod 1.
    pub fn from_rational(x: BigRational) -> Self {
        let floor = x.floor();
        TorusRational(x - floor)
    }

    pub fn zero() -> Self {
        TorusRational(BigRational::zero())
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `m_u(x) = u·x mod 1`.
    pub fn times(&self, u: impl Into<BigInt>) -> Self {
        Self::from_rational(&self.0 * BigRational::from_integer(u.into()))
    }

    pub fn neg(&self) -> Self {
        Self::from_rational(-self.0.clone())
    }

    /// Circular distance `min(|x - y|, 1 - |x - y|)`.
    pub fn distance(&self, other: &Self) -> BigRational {
        let d = (&self.0 - &other.0).abs();
        let e = BigRational::one() - &d;
        d.min(e)
    }

    /// Whether the reduced denominator has only prime factors dividing `s`.
    pub fn has_finite_expansion(&self, s: usize) -> bool {
        let mut d = self.denom().clone();
        let s = BigInt::from(s);
        loop {
            let g = d.gcd(&s);
            if g.is_one() {
                return d.is_one();
            }
            while (&d % &g).is_zero() {
                d /= &g;
            }
        }
    }
}

impl fmt::Display for TorusRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for TorusRational {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (n, d) = text.split_once('/').unwrap_or((text, "1"));
        let parse = |t: &str| t.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad integer {t:?}")));
        Self::new(parse(n)?, parse(d)?)
    }
}

impl Serialize for TorusRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
