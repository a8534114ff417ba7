use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::blockmap::{decode_block, first_disagreement, table_len};
use super::BlockMap;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::symcore::Alphabet;

/// Default ceiling on the number of candidate tables `enumerate_commutant` will scan.
pub const DEFAULT_CAP: u64 = 1 << 24;

/// `s^(s^(r+1))`, the number of block maps of radius exactly `r` (as tables).
pub fn candidate_count(alphabet: Alphabet, radius: usize) -> BigUint {
    let entries = BigUint::from(alphabet.size()).pow(radius as u32 + 1);
    match entries.to_u32() {
        Some(e) => BigUint::from(alphabet.size()).pow(e),
        // astronomically large; any cap rejects it
        None => BigUint::from(u64::MAX) * BigUint::from(u64::MAX),
    }
}

/// Every block map of radius `<= max_radius` commuting with all `gens`, normalized,
/// in table-lex order of the radius-`max_radius` candidate.
pub fn enumerate_commutant(
    alphabet: Alphabet,
    gens: &[BlockMap],
    max_radius: usize,
    cap: u64,
    exec: Execution,
) -> Result<Vec<BlockMap>> {
    for g in gens {
        alphabet.ensure_same(g.alphabet())?;
    }
    let count = candidate_count(alphabet, max_radius);
    if count > BigUint::from(cap) {
        return Err(Error::EnumerationTooLarge { count, cap });
    }
    let count = count.to_u64().expect("count below cap fits in u64");
    let s = alphabet.size();
    let len = table_len(alphabet, max_radius + 1)?;
    Ok(exec.filter_map_range(0..count, |idx| {
        let table = decode_block(s, idx as usize, len);
        let commutes = gens
            .iter()
            .all(|g| first_disagreement(s, max_radius, &table, g.radius(), g.table()).is_none());
        commutes.then(|| BlockMap::new(alphabet, max_radius, table).expect("candidate table").normalize())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ca1d::chr_product_map;
    use crate::mulca::{mu_const, ConstMap};

    fn a2() -> Alphabet {
        Alphabet::new(2).unwrap()
    }

    #[test]
    fn identity_commutes_with_everything() {
        let all = enumerate_commutant(a2(), &[BlockMap::identity(a2())], 0, DEFAULT_CAP, Execution::Sequential).unwrap();
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn shift_commutant_is_everything() {
        let all = enumerate_commutant(a2(), &[BlockMap::shift(a2())], 1, DEFAULT_CAP, Execution::Parallel).unwrap();
        assert_eq!(all.len(), 16);
    }

    #[test]
    fn chr_commutant_at_radius_two() {
        // Oracle: direct pairwise check of every radius-2 table.
        let chr = chr_product_map(a2(), &[0, 0], 2).unwrap().map;
        let gens = [chr.clone(), BlockMap::shift(a2())];
        let found = enumerate_commutant(a2(), &gens, 2, DEFAULT_CAP, Execution::Parallel).unwrap();
        let brute: Vec<BlockMap> = (0..256u32)
            .map(|bits| {
                let table = (0..8).map(|i| ((bits >> (7 - i)) & 1) as u8).collect();
                BlockMap::new(a2(), 2, table).unwrap()
            })
            .filter(|m| m.commutes(&chr).unwrap())
            .map(|m| m.normalize())
            .collect();
        assert_eq!(found, brute);
        let contains = |m: &BlockMap| found.iter().any(|x| x.equal(m).unwrap());
        assert!(contains(&BlockMap::identity(a2())));
        assert!(contains(&chr));
        // σ and σ² have radius <= 2 and commute with every block map
        assert!(contains(&BlockMap::shift(a2())));
        assert!(contains(&BlockMap::shift_power(a2(), 2).unwrap()));
        assert!(contains(&mu_const(a2(), ConstMap::Zero)));
    }

    #[test]
    fn cap_is_reported() {
        let err = enumerate_commutant(a2(), &[], 4, DEFAULT_CAP, Execution::Sequential).unwrap_err();
        match err {
            Error::EnumerationTooLarge { count, cap } => {
                assert_eq!(count, BigUint::from(1u64 << 32));
                assert_eq!(cap, DEFAULT_CAP);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn strategies_agree() {
        let chr = chr_product_map(a2(), &[1, 0], 2).unwrap().map;
        let seq = enumerate_commutant(a2(), &[chr.clone()], 2, DEFAULT_CAP, Execution::Sequential).unwrap();
        let par = enumerate_commutant(a2(), &[chr], 2, DEFAULT_CAP, Execution::Parallel).unwrap();
        assert_eq!(seq, par);
    }
}
