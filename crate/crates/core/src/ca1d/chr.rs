use super::BlockMap;
use crate::error::{Error, Result};
use crate::symcore::{Alphabet, Symbol};

/// A product-form map `τ(a)_k = a_k + Π_{i=1}^{r} (a_{k+i} + δ_i)` over `𝔽_2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChrMap {
    pub map: BlockMap,
    /// Minimal `m` with `δ_i = δ_{i+m}` for `i = 1..=r-m`.
    pub least_period: usize,
}

pub fn chr_product_map(alphabet: Alphabet, deltas: &[Symbol], r: usize) -> Result<ChrMap> {
    if alphabet.size() != 2 {
        return Err(Error::InvalidArgument(format!("product maps live over Λ_2, not {alphabet}")));
    }
    if r < 2 || deltas.len() != r {
        return Err(Error::InvalidArgument(format!("need r >= 2 and r deltas, got r={r}, {} deltas", deltas.len())));
    }
    alphabet.check_all(deltas)?;
    let map = BlockMap::from_fn(alphabet, r, |w| {
        let product = (1..=r).all(|i| (w[i] ^ deltas[i - 1]) == 1);
        w[0] ^ product as Symbol
    })?;
    let least_period = (1..=r)
        .find(|&m| (0..r - m).all(|i| deltas[i] == deltas[i + m]))
        .expect("m = r always qualifies");
    Ok(ChrMap { map, least_period })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Alphabet {
        Alphabet::new(2).unwrap()
    }

    #[test]
    fn examples() {
        let chr = chr_product_map(a2(), &[0, 0], 2).unwrap();
        assert_eq!(chr.least_period, 1);
        for w in a2().words(3) {
            assert_eq!(chr.map.lookup(&w), (w[0] + w[1] * w[2]) % 2);
        }
        let chr = chr_product_map(a2(), &[1, 1], 2).unwrap();
        assert_eq!(chr.least_period, 1);
        for w in a2().words(3) {
            assert_eq!(chr.map.lookup(&w), (w[0] + (w[1] + 1) * (w[2] + 1)) % 2);
        }
        assert_eq!(chr_product_map(a2(), &[0, 1, 0], 3).unwrap().least_period, 2);
        assert_eq!(chr_product_map(a2(), &[0, 1, 1], 3).unwrap().least_period, 3);
    }

    #[test]
    fn errors() {
        assert!(chr_product_map(Alphabet::new(3).unwrap(), &[0, 0], 2).is_err());
        assert!(chr_product_map(a2(), &[0], 1).is_err());
        assert!(chr_product_map(a2(), &[0, 0, 0], 2).is_err());
    }
}
