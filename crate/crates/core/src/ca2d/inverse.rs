use super::TwoSidedBlockMap;
use crate::error::{Error, Result};
use crate::mulca::{mu_u, MulSpec};
use crate::symcore::Alphabet;

/// `σ^{−k} ∘ μ_v` with `u·v = s^k` and `k` minimal: the two-sided inverse of `μ_u`.
pub fn inverse_candidate(alphabet: Alphabet, u: u64) -> Result<TwoSidedBlockMap> {
    let s = alphabet.size() as u64;
    MulSpec::new(alphabet, i64::try_from(u).map_err(|_| Error::InvalidMultiplier(u.to_string()))?)?;
    if u == 0 {
        return Err(Error::InvalidMultiplier("μ_0 is not invertible".into()));
    }
    let mut power = 1u64;
    let mut k = 0i64;
    while power % u != 0 {
        power = power.checked_mul(s).ok_or_else(|| Error::InvalidMultiplier(format!("{u} needs too large a power of {s}")))?;
        k += 1;
    }
    let v = MulSpec::new(alphabet, (power / u) as i64)?;
    TwoSidedBlockMap::shift_power(alphabet, -k)?.compose(&TwoSidedBlockMap::embed_one_sided(&mu_u(&v)?))
}

/// Whether the candidate inverts `μ_u` on both sides.
pub fn verify_inverse(alphabet: Alphabet, u: u64) -> Result<bool> {
    let forward = TwoSidedBlockMap::embed_one_sided(&mu_u(&MulSpec::new(alphabet, u as i64)?)?);
    let inverse = inverse_candidate(alphabet, u)?;
    let id = TwoSidedBlockMap::identity(alphabet);
    Ok(forward.compose(&inverse)?.equal(&id)? && inverse.compose(&forward)?.equal(&id)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_law_pairs() {
        for (s, u) in [(6, 2), (6, 3), (10, 2), (10, 5), (12, 2), (12, 3), (12, 4), (12, 6)] {
            assert!(verify_inverse(Alphabet::new(s).unwrap(), u).unwrap(), "s={s} u={u}");
        }
    }

    #[test]
    fn candidate_shape() {
        let inv = inverse_candidate(Alphabet::new(6).unwrap(), 2).unwrap().normalize();
        assert_eq!((inv.memory(), inv.anticipation()), (1, 0));
        let a = Alphabet::new(12).unwrap();
        // u = 8 needs s^2 = 144 = 8 · 18
        let inv = inverse_candidate(a, 8).unwrap();
        assert_eq!(inv.memory(), 2);
        assert!(verify_inverse(a, 8).unwrap());
        assert!(inverse_candidate(Alphabet::new(6).unwrap(), 5).is_err());
        assert!(inverse_candidate(Alphabet::new(6).unwrap(), 0).is_err());
    }
}
