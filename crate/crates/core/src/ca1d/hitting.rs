use std::collections::HashMap;

use super::blockmap::block_index;
use super::BlockMap;
use crate::error::{Error, Result};
use crate::symcore::{Alphabet, EventuallyPeriodicSeq, Symbol, SymbolSource, Word};

/// Where the windows of a hitting construction are read from.
#[derive(Debug, Clone, Copy)]
pub enum HittingSource<'a> {
    /// An exact eventually periodic sequence.
    Periodic(&'a EventuallyPeriodicSeq),
    /// A finite prefix of a (typically rich) sequence.
    Prefix(&'a Word),
}

impl HittingSource<'_> {
    fn alphabet(&self) -> Alphabet {
        match self {
            HittingSource::Periodic(s) => s.alphabet(),
            HittingSource::Prefix(w) => w.alphabet(),
        }
    }

    fn window(&self, start: usize, len: usize) -> Option<Vec<Symbol>> {
        match self {
            HittingSource::Periodic(s) => s.window(start, len),
            HittingSource::Prefix(w) => w.window(start, len),
        }
    }
}

/// Builds `τ` with `τ(source)_{[0,|target|)} = target`: the window `a_{[i,i+k)}` is sent to
/// `target_i` and every other block to 0.
///
/// `k` is the smallest window length for which equal windows never ask for different symbols.
pub fn construct_table_hitting(source: HittingSource<'_>, target: &Word) -> Result<BlockMap> {
    let alphabet = source.alphabet();
    alphabet.ensure_same(target.alphabet())?;
    let n = target.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let max_k = match source {
        // two tails of an eventually periodic sequence agreeing on b + c symbols are equal
        HittingSource::Periodic(s) => s.b() + s.c() + 1,
        HittingSource::Prefix(w) => (w.len() + 1).saturating_sub(n),
    };
    for k in 1..=max_k {
        let mut assigned: HashMap<Vec<Symbol>, Symbol> = HashMap::with_capacity(n);
        let consistent = (0..n).all(|i| {
            let w = source.window(i, k).expect("window inside source");
            *assigned.entry(w).or_insert(target.symbols()[i]) == target.symbols()[i]
        });
        if !consistent {
            continue;
        }
        let s = alphabet.size();
        let len = alphabet
            .pow(k)
            .filter(|&l| l <= super::MAX_TABLE_LEN)
            .ok_or_else(|| Error::InvalidArgument(format!("window length {k} over {alphabet} is too large")))?;
        let mut table = vec![0; len];
        for (w, x) in assigned {
            table[block_index(s, &w)] = x;
        }
        return BlockMap::new(alphabet, k - 1, table);
    }
    Err(match source {
        HittingSource::Periodic(s) => Error::InsufficientWordVariety(format!(
            "target of length {n} cannot be separated by windows of {}",
            s.canonicalize()
        )),
        HittingSource::Prefix(w) => Error::PrefixTooShort(format!(
            "no window length up to {max_k} separates {n} positions in a prefix of length {}",
            w.len()
        )),
    })
}
