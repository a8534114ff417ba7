use std::fmt;
use std::str::FromStr;

use crate::ca1d::BlockMap;
use crate::ca1d::{block_index, decode_block, table_len};
use crate::error::{Error, Result};
use crate::symcore::{parse_symbols, Alphabet, Symbol, Word};

/// A two-sided cellular automaton: `τ(a)_k = f(a_{k−m} … a_{k+a})` for memory `m` and
/// anticipation `a`, with the leftmost coordinate most significant in the table index.
///
/// Unlike the one-sided [`BlockMap::normalize`], [`TwoSidedBlockMap::normalize`] trims
/// ignored coordinates from both ends, since positions in `Λ^ℤ` are absolute.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoSidedBlockMap {
    alphabet: Alphabet,
    memory: usize,
    anticipation: usize,
    table: Vec<Symbol>,
}

impl TwoSidedBlockMap {
    pub fn new(alphabet: Alphabet, memory: usize, anticipation: usize, table: Vec<Symbol>) -> Result<Self> {
        let len = table_len(alphabet, memory + anticipation + 1)?;
        if table.len() != len {
            return Err(Error::InvalidArgument(format!(
                "memory {memory}, anticipation {anticipation} over {alphabet} needs {len} entries, got {}",
                table.len()
            )));
        }
        alphabet.check_all(&table)?;
        Ok(TwoSidedBlockMap { alphabet, memory, anticipation, table })
    }

    pub fn from_fn(alphabet: Alphabet, memory: usize, anticipation: usize, f: impl Fn(&[Symbol]) -> Symbol) -> Result<Self> {
        let width = memory + anticipation + 1;
        let len = table_len(alphabet, width)?;
        let table = (0..len).map(|idx| f(&decode_block(alphabet.size(), idx, width))).collect();
        Self::new(alphabet, memory, anticipation, table)
    }

    /// The one-sided map viewed on `Λ^ℤ`: memory 0, anticipation `r`, same table.
    pub fn embed_one_sided(tau: &BlockMap) -> Self {
        TwoSidedBlockMap { alphabet: tau.alphabet(), memory: 0, anticipation: tau.radius(), table: tau.table().to_vec() }
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        Self::embed_one_sided(&BlockMap::identity(alphabet))
    }

    pub fn shift(alphabet: Alphabet) -> Self {
        Self::embed_one_sided(&BlockMap::shift(alphabet))
    }

    /// `σ⁻¹`: memory 1, `f(a_{−1}, a_0) = a_{−1}`.
    pub fn sigma_inverse(alphabet: Alphabet) -> Self {
        Self::from_fn(alphabet, 1, 0, |w| w[0]).expect("width 2 table")
    }

    /// `σ^k` for any integer `k`.
    pub fn shift_power(alphabet: Alphabet, k: i64) -> Result<Self> {
        let n = k.unsigned_abs() as usize;
        if k >= 0 {
            Self::from_fn(alphabet, 0, n, |w| w[n])
        } else {
            Self::from_fn(alphabet, n, 0, |w| w[0])
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn memory(&self) -> usize {
        self.memory
    }

    pub fn anticipation(&self) -> usize {
        self.anticipation
    }

    pub fn table(&self) -> &[Symbol] {
        &self.table
    }

    fn width(&self) -> usize {
        self.memory + self.anticipation + 1
    }

    pub fn lookup(&self, window: &[Symbol]) -> Symbol {
        debug_assert_eq!(window.len(), self.width());
        self.table[block_index(self.alphabet.size(), window)]
    }

    /// Image of a finite window: output `j` sits over input position `j + memory`.
    pub fn apply_slice(&self, window: &[Symbol]) -> Result<Vec<Symbol>> {
        let width = self.width();
        if window.len() < width {
            return Err(Error::InsufficientContext { needed: width, got: window.len() });
        }
        Ok(window.windows(width).map(|w| self.lookup(w)).collect())
    }

    pub fn apply_word(&self, window: &Word) -> Result<Word> {
        self.alphabet.ensure_same(window.alphabet())?;
        Word::new(self.alphabet, self.apply_slice(window.symbols())?)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &TwoSidedBlockMap) -> Result<TwoSidedBlockMap> {
        self.alphabet.ensure_same(inner.alphabet)?;
        let memory = self.memory + inner.memory;
        let anticipation = self.anticipation + inner.anticipation;
        let width = memory + anticipation + 1;
        let s = self.alphabet.size();
        let len = table_len(self.alphabet, width)?;
        let mut mid = vec![0; self.width()];
        let table = (0..len)
            .map(|idx| {
                let w = decode_block(s, idx, width);
                for (j, m) in mid.iter_mut().enumerate() {
                    *m = inner.lookup(&w[j..j + inner.width()]);
                }
                self.lookup(&mid)
            })
            .collect();
        Ok(TwoSidedBlockMap { alphabet: self.alphabet, memory, anticipation, table })
    }

    /// Minimal `(memory, anticipation)` form of the same transformation.
    pub fn normalize(&self) -> TwoSidedBlockMap {
        let s = self.alphabet.size();
        let mut out = self.clone();
        while out.anticipation > 0 && out.table.chunks(s).all(|c| c.iter().all(|&x| x == c[0])) {
            out.table = out.table.iter().step_by(s).copied().collect();
            out.anticipation -= 1;
        }
        while out.memory > 0 {
            let block = out.table.len() / s;
            let (head, rest) = out.table.split_at(block);
            if !rest.chunks(block).all(|c| c == head) {
                break;
            }
            out.table.truncate(block);
            out.memory -= 1;
        }
        out
    }

    /// Equality as transformations of `Λ^ℤ`.
    pub fn equal(&self, other: &TwoSidedBlockMap) -> Result<bool> {
        self.alphabet.ensure_same(other.alphabet)?;
        Ok(self.normalize() == other.normalize())
    }

    /// The lexicographically smallest window of length `m_τ + m_μ + a_τ + a_μ + 1` on which
    /// `self ∘ other` and `other ∘ self` disagree, if any.
    pub fn noncommuting_window(&self, other: &TwoSidedBlockMap) -> Result<Option<Vec<Symbol>>> {
        let left = self.compose(other)?;
        let right = other.compose(self)?;
        Ok(left
            .table
            .iter()
            .zip(&right.table)
            .position(|(x, y)| x != y)
            .map(|idx| decode_block(self.alphabet.size(), idx, left.width())))
    }

    pub fn commutes(&self, other: &TwoSidedBlockMap) -> Result<bool> {
        Ok(self.noncommuting_window(other)?.is_none())
    }

    /// The one-sided map, when the normalized form has memory 0.
    pub fn sigma_plus(&self) -> Option<BlockMap> {
        let n = self.normalize();
        (n.memory == 0).then(|| BlockMap::new(n.alphabet, n.anticipation, n.table).expect("valid table"))
    }

    /// `(k, σ^k ∘ τ)` with `k` the normalized memory, so the result acts on `Λ^ℕ`.
    pub fn shift_into_plus(&self) -> Result<(usize, BlockMap)> {
        let k = self.normalize().memory;
        let shifted = Self::shift_power(self.alphabet, k as i64)?.compose(self)?;
        let plus = shifted.sigma_plus().expect("shifting by the memory removes it");
        Ok((k, plus))
    }

    /// Copy with table entry `index` replaced by `(entry + 1) mod s`.
    pub fn with_flipped_entry(&self, index: usize) -> Result<TwoSidedBlockMap> {
        let mut table = self.table.clone();
        let entry = table
            .get_mut(index)
            .ok_or_else(|| Error::InvalidArgument(format!("table index {index} out of range")))?;
        *entry = ((*entry as usize + 1) % self.alphabet.size()) as Symbol;
        Ok(TwoSidedBlockMap { table, ..self.clone() })
    }
}

impl fmt::Display for TwoSidedBlockMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CA2 s={} m={} a={}", self.alphabet.size(), self.memory, self.anticipation)?;
        let cells: Vec<String> = self.table.iter().map(|x| x.to_string()).collect();
        writeln!(f, "{}", cells.join(" "))
    }
}

impl FromStr for TwoSidedBlockMap {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or(Error::EmptyInput)?;
        let rest = header.strip_prefix("CA2").ok_or_else(|| Error::Parse("expected CA2 header".into()))?;
        let fields = crate::symcore::literal_fields(rest)?;
        let get = |k: &str| -> Result<usize> {
            let v = fields.get(k).ok_or_else(|| Error::Parse(format!("missing {k}=")))?;
            v.parse().map_err(|_| Error::Parse(format!("bad {k}={v}")))
        };
        let alphabet = Alphabet::new(get("s")?)?;
        let table = lines.flat_map(str::split_whitespace).collect::<Vec<_>>().join(",");
        Self::new(alphabet, get("m")?, get("a")?, parse_symbols(&table, alphabet)?)
    }
}
