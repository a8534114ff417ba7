//! Alphabets, finite words and exact sequence representations.

mod lazy;
mod literal;
mod periodic;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use lazy::{Generator, LazySequence, Substitution};
pub use literal::{format_symbols, key_values as literal_fields, parse_symbols, SequenceLiteral};
pub(crate) use periodic::primitive_root;
pub use periodic::{detect_eventual_period, enumerate_b, word_variety_length, EventuallyPeriodicSeq};

/// A symbol of `Λ_s = {0, ..., s-1}`.
pub type Symbol = u8;

/// The symbol set `Λ_s`. Sizes above 256 are rejected because symbols are stored as bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct Alphabet(u16);

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if !(2..=256).contains(&size) {
            return Err(Error::InvalidAlphabet(size));
        }
        Ok(Alphabet(size as u16))
    }

    #[inline]
    pub fn size(self) -> usize {
        self.0 as usize
    }

    pub fn check(self, symbol: usize) -> Result<Symbol> {
        if symbol < self.size() {
            Ok(symbol as Symbol)
        } else {
            Err(Error::SymbolOutOfRange { symbol, size: self.size() })
        }
    }

    pub fn check_all(self, symbols: &[Symbol]) -> Result<()> {
        symbols.iter().try_for_each(|&a| self.check(a as usize).map(|_| ()))
    }

    pub fn ensure_same(self, other: Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch { left: self.size(), right: other.size() })
        }
    }

    /// `s^n`, or `None` on overflow.
    pub fn pow(self, n: usize) -> Option<usize> {
        u32::try_from(n).ok().and_then(|n| self.size().checked_pow(n))
    }

    /// Every word of length `len` in lexicographic order (first symbol most significant).
    pub fn words(self, len: usize) -> impl Iterator<Item = Vec<Symbol>> {
        let s = self.size();
        let count = self.pow(len).expect("word enumeration overflow");
        (0..count).map(move |mut idx| {
            let mut w = vec![0; len];
            for slot in w.iter_mut().rev() {
                *slot = (idx % s) as Symbol;
                idx /= s;
            }
            w
        })
    }
}

impl TryFrom<usize> for Alphabet {
    type Error = Error;
    fn try_from(size: usize) -> Result<Self> {
        Alphabet::new(size)
    }
}

impl From<Alphabet> for usize {
    fn from(a: Alphabet) -> usize {
        a.size()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Λ_{}", self.0)
    }
}

/// A finite word over an alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    symbols: Vec<Symbol>,
}

impl Word {
    pub fn new(alphabet: Alphabet, symbols: Vec<Symbol>) -> Result<Self> {
        alphabet.check_all(&symbols)?;
        Ok(Word { alphabet, symbols })
    }

    /// Builds a word from a string of decimal digits; handy for alphabets up to 10.
    pub fn from_digits(alphabet: Alphabet, digits: &str) -> Result<Self> {
        let symbols = digits
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("not a digit: {c:?}")))
                    .and_then(|d| alphabet.check(d as usize))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { alphabet, symbols })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// `a_{[i,j)}`.
    pub fn slice(&self, i: usize, j: usize) -> Word {
        Word { alphabet: self.alphabet, symbols: self.symbols[i..j].to_vec() }
    }
}

impl AsRef<[Symbol]> for Word {
    fn as_ref(&self) -> &[Symbol] {
        &self.symbols
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet.size() <= 10 {
            self.symbols.iter().try_for_each(|a| write!(f, "{a}"))
        } else {
            f.write_str(&format_symbols(&self.symbols))
        }
    }
}

/// Anything that can be read symbol by symbol from index 0.
pub trait SymbolSource {
    fn alphabet(&self) -> Alphabet;

    /// Symbol at index `n`, or `None` past the end of a finite source.
    fn symbol_at(&self, n: usize) -> Option<Symbol>;

    /// `a_{[start, start+len)}`, or `None` if the source is too short.
    fn window(&self, start: usize, len: usize) -> Option<Vec<Symbol>> {
        (start..start + len).map(|n| self.symbol_at(n)).collect()
    }
}

impl SymbolSource for Word {
    fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    fn symbol_at(&self, n: usize) -> Option<Symbol> {
        self.symbols.get(n).copied()
    }

    fn window(&self, start: usize, len: usize) -> Option<Vec<Symbol>> {
        self.symbols.get(start..start + len).map(<[Symbol]>::to_vec)
    }
}
