use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::symcore::{parse_symbols, Alphabet, EventuallyPeriodicSeq, Symbol, Word};

/// Largest lookup table we are willing to materialize.
pub const MAX_TABLE_LEN: usize = 1 << 26;

/// A one-sided cellular automaton given by its local rule `f: Λ_s^{r+1} → Λ_s`.
///
/// `table[index(a_0 … a_r)]` with `index = Σ a_j s^{r-j}` (so `a_0` is the most
/// significant digit), and `τ(a)_k = f(a_k … a_{k+r})`.
///
/// The derived `PartialEq` compares representations; use [`BlockMap::equal`] to
/// compare transformations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockMap {
    alphabet: Alphabet,
    radius: usize,
    table: Vec<Symbol>,
}

pub(crate) fn table_len(alphabet: Alphabet, width: usize) -> Result<usize> {
    alphabet
        .pow(width)
        .filter(|&n| n <= MAX_TABLE_LEN)
        .ok_or_else(|| Error::InvalidArgument(format!("table for {width} coordinates over {alphabet} is too large")))
}

/// Index of a block, first symbol most significant.
#[inline]
pub(crate) fn block_index(s: usize, block: &[Symbol]) -> usize {
    block.iter().fold(0, |acc, &a| acc * s + a as usize)
}

/// Digits of `idx` as a block of length `width`.
pub(crate) fn decode_block(s: usize, mut idx: usize, width: usize) -> Vec<Symbol> {
    let mut w = vec![0; width];
    for slot in w.iter_mut().rev() {
        *slot = (idx % s) as Symbol;
        idx /= s;
    }
    w
}

impl BlockMap {
    pub fn new(alphabet: Alphabet, radius: usize, table: Vec<Symbol>) -> Result<Self> {
        let len = table_len(alphabet, radius + 1)?;
        if table.len() != len {
            return Err(Error::InvalidArgument(format!(
                "radius {radius} over {alphabet} needs {len} table entries, got {}",
                table.len()
            )));
        }
        alphabet.check_all(&table)?;
        Ok(BlockMap { alphabet, radius, table })
    }

    /// Tabulates `f` over all blocks of length `radius + 1` in lex order.
    pub fn from_fn(alphabet: Alphabet, radius: usize, f: impl Fn(&[Symbol]) -> Symbol) -> Result<Self> {
        table_len(alphabet, radius + 1)?;
        let table = alphabet.words(radius + 1).map(|w| f(&w)).collect();
        Self::new(alphabet, radius, table)
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        Self::from_fn(alphabet, 0, |w| w[0]).expect("identity table")
    }

    /// The left shift `σ(a)_k = a_{k+1}`.
    pub fn shift(alphabet: Alphabet) -> Self {
        Self::from_fn(alphabet, 1, |w| w[1]).expect("shift table")
    }

    /// `σ^k`, radius `k`.
    pub fn shift_power(alphabet: Alphabet, k: usize) -> Result<Self> {
        Self::from_fn(alphabet, k, |w| w[k])
    }

    pub fn constant(alphabet: Alphabet, symbol: Symbol) -> Result<Self> {
        alphabet.check(symbol as usize)?;
        Self::from_fn(alphabet, 0, |_| symbol)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn table(&self) -> &[Symbol] {
        &self.table
    }

    /// `f(block)`; `block` must have length `radius + 1`.
    #[inline]
    pub fn lookup(&self, block: &[Symbol]) -> Symbol {
        debug_assert_eq!(block.len(), self.radius + 1);
        self.table[block_index(self.alphabet.size(), block)]
    }

    /// `τ` on a finite word: output length `|w| - r`.
    pub fn apply_slice(&self, prefix: &[Symbol]) -> Result<Vec<Symbol>> {
        let width = self.radius + 1;
        if prefix.len() < width {
            return Err(Error::InsufficientContext { needed: width, got: prefix.len() });
        }
        let s = self.alphabet.size();
        let modulus = self.table.len();
        let mut idx = block_index(s, &prefix[..self.radius]);
        let mut out = Vec::with_capacity(prefix.len() - self.radius);
        for &a in &prefix[self.radius..] {
            idx = (idx * s + a as usize) % modulus;
            out.push(self.table[idx]);
        }
        Ok(out)
    }

    pub fn apply(&self, prefix: &Word) -> Result<Word> {
        self.alphabet.ensure_same(prefix.alphabet())?;
        Word::new(self.alphabet, self.apply_slice(prefix.symbols())?)
    }

    /// Exact image of an eventually periodic sequence, canonicalized.
    pub fn apply_seq(&self, seq: &EventuallyPeriodicSeq) -> Result<EventuallyPeriodicSeq> {
        self.alphabet.ensure_same(seq.alphabet())?;
        let (b, c) = (seq.b(), seq.c());
        let image = self.apply_slice(&seq.head(b + c + self.radius))?;
        let cycle = image[b..].to_vec();
        let mut prefix = image;
        prefix.truncate(b);
        Ok(EventuallyPeriodicSeq::new(self.alphabet, prefix, cycle)?.canonicalize())
    }

    /// `self ∘ inner`, of radius `r_self + r_inner`.
    pub fn compose(&self, inner: &BlockMap) -> Result<BlockMap> {
        self.alphabet.ensure_same(inner.alphabet)?;
        let radius = self.radius + inner.radius;
        let s = self.alphabet.size();
        let len = table_len(self.alphabet, radius + 1)?;
        let mut mid = vec![0; self.radius + 1];
        let table = (0..len)
            .map(|idx| {
                let w = decode_block(s, idx, radius + 1);
                for (j, m) in mid.iter_mut().enumerate() {
                    *m = inner.lookup(&w[j..j + inner.radius + 1]);
                }
                self.lookup(&mid)
            })
            .collect();
        Ok(BlockMap { alphabet: self.alphabet, radius, table })
    }

    /// The same transformation described with a larger radius (ignored trailing coordinates).
    pub fn padded(&self, radius: usize) -> BlockMap {
        assert!(radius >= self.radius, "cannot pad radius {} down to {radius}", self.radius);
        let extra = self.alphabet.pow(radius - self.radius).expect("padding overflow");
        let len = table_len(self.alphabet, radius + 1).expect("padded table too large");
        let table = (0..len).map(|idx| self.table[idx / extra]).collect();
        BlockMap { alphabet: self.alphabet, radius, table }
    }

    /// Minimal-radius form: drops trailing coordinates the rule ignores.
    /// Leading coordinates are never dropped.
    pub fn normalize(&self) -> BlockMap {
        let s = self.alphabet.size();
        let mut table = self.table.clone();
        let mut radius = self.radius;
        while radius > 0 && table.chunks(s).all(|chunk| chunk.iter().all(|&x| x == chunk[0])) {
            table = table.iter().step_by(s).copied().collect();
            radius -= 1;
        }
        BlockMap { alphabet: self.alphabet, radius, table }
    }

    /// Equality as transformations of `Λ_s^ℕ`.
    pub fn equal(&self, other: &BlockMap) -> Result<bool> {
        self.alphabet.ensure_same(other.alphabet)?;
        let radius = self.radius.max(other.radius);
        if self.radius == other.radius {
            return Ok(self.table == other.table);
        }
        Ok(self.padded(radius).table == other.padded(radius).table)
    }

    /// The lexicographically smallest block of length `r_self + r_other + 1` on which
    /// `self ∘ other` and `other ∘ self` disagree, if any.
    pub fn noncommuting_block(&self, other: &BlockMap) -> Result<Option<Vec<Symbol>>> {
        self.alphabet.ensure_same(other.alphabet)?;
        let s = self.alphabet.size();
        Ok(first_disagreement(s, self.radius, &self.table, other.radius, &other.table)
            .map(|idx| decode_block(s, idx, self.radius + other.radius + 1)))
    }

    pub fn commutes(&self, other: &BlockMap) -> Result<bool> {
        Ok(self.noncommuting_block(other)?.is_none())
    }

    /// Copy with table entry `index` replaced by `(entry + 1) mod s`.
    pub fn with_flipped_entry(&self, index: usize) -> Result<BlockMap> {
        let mut table = self.table.clone();
        let entry = table
            .get_mut(index)
            .ok_or_else(|| Error::InvalidArgument(format!("table index {index} out of range")))?;
        *entry = ((*entry as usize + 1) % self.alphabet.size()) as Symbol;
        Ok(BlockMap { table, ..self.clone() })
    }
}

/// Smallest block index where `τ∘μ` and `μ∘τ` differ, both viewed at radius `r_τ + r_μ`.
pub(crate) fn first_disagreement(s: usize, rt: usize, tt: &[Symbol], rm: usize, tm: &[Symbol]) -> Option<usize> {
    let width = rt + rm + 1;
    let count = s.pow(width as u32);
    let mut w = vec![0 as Symbol; width];
    let mut via_m = vec![0 as Symbol; rt + 1];
    let mut via_t = vec![0 as Symbol; rm + 1];
    for idx in 0..count {
        if idx > 0 {
            // odometer increment
            let mut j = width;
            while j > 0 {
                j -= 1;
                if (w[j] as usize) + 1 < s {
                    w[j] += 1;
                    break;
                }
                w[j] = 0;
            }
        }
        for (j, v) in via_m.iter_mut().enumerate() {
            *v = tm[block_index(s, &w[j..j + rm + 1])];
        }
        for (j, v) in via_t.iter_mut().enumerate() {
            *v = tt[block_index(s, &w[j..j + rt + 1])];
        }
        if tt[block_index(s, &via_m)] != tm[block_index(s, &via_t)] {
            return Some(idx);
        }
    }
    None
}

impl fmt::Display for BlockMap {
    /// The `CA1` file format: header line, then the table in lex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CA1 s={} r={}", self.alphabet.size(), self.radius)?;
        let body: Vec<String> = self.table.iter().map(|x| x.to_string()).collect();
        writeln!(f, "{}", body.join(" "))
    }
}

impl FromStr for BlockMap {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty block-map file".into()))?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("CA1") {
            return Err(Error::Parse(format!("expected CA1 header, got {header:?}")));
        }
        let mut s = None;
        let mut r = None;
        for part in parts {
            match part.split_once('=') {
                Some(("s", v)) => s = v.parse::<usize>().ok(),
                Some(("r", v)) => r = v.parse::<usize>().ok(),
                _ => return Err(Error::Parse(format!("unexpected header field {part:?}"))),
            }
        }
        let (s, r) = s.zip(r).ok_or_else(|| Error::Parse("header needs s= and r=".into()))?;
        let alphabet = Alphabet::new(s)?;
        let body = lines.next().unwrap_or("");
        if lines.next().is_some() {
            return Err(Error::Parse("trailing content after table line".into()));
        }
        let table = parse_symbols(&body.split_whitespace().collect::<Vec<_>>().join(","), alphabet)?;
        BlockMap::new(alphabet, r, table)
    }
}
