use std::fmt;

use super::{Alphabet, Symbol, SymbolSource};
use crate::error::{Error, Result};

/// A deterministic index-to-symbol rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// Concatenation of all words over `{0..base}` in length-then-lex order.
    Champernowne { base: u8 },
    /// `t(n)` = parity of the binary digit sum of `n`, valued in `{0, 1}`.
    ThueMorse,
    /// Fixed point of a non-erasing substitution.
    Substitution(Substitution),
}

/// A substitution `x ↦ rules[x]` whose iterates from `start` converge to a fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    rules: Vec<Vec<Symbol>>,
    start: Symbol,
}

impl Substitution {
    /// Requires `rules[start]` to begin with `start` and have length at least 2.
    pub fn new(rules: Vec<Vec<Symbol>>, start: Symbol) -> Result<Self> {
        let n = rules.len();
        if rules.iter().any(Vec::is_empty) {
            return Err(Error::InvalidArgument("substitution images must be nonempty".into()));
        }
        if rules.iter().flatten().any(|&x| x as usize >= n) {
            return Err(Error::InvalidArgument("substitution image uses an undefined symbol".into()));
        }
        let head = rules
            .get(start as usize)
            .ok_or_else(|| Error::InvalidArgument(format!("no rule for start symbol {start}")))?;
        if head[0] != start || head.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "rule for {start} must start with {start} and grow to define a fixed point"
            )));
        }
        Ok(Substitution { rules, start })
    }

    pub fn rules(&self) -> &[Vec<Symbol>] {
        &self.rules
    }

    pub fn start(&self) -> Symbol {
        self.start
    }

    fn symbol(&self, n: usize) -> Symbol {
        // lens[j][x] = |θ^j(x)|, saturating
        let mut lens: Vec<Vec<usize>> = vec![vec![1; self.rules.len()]];
        while lens.last().unwrap()[self.start as usize] <= n {
            let prev = lens.last().unwrap();
            let next = self
                .rules
                .iter()
                .map(|img| img.iter().fold(0usize, |acc, &y| acc.saturating_add(prev[y as usize])))
                .collect();
            lens.push(next);
        }
        let mut cur = self.start;
        let mut idx = n;
        for level in (0..lens.len() - 1).rev() {
            for &y in &self.rules[cur as usize] {
                let l = lens[level][y as usize];
                if idx < l {
                    cur = y;
                    break;
                }
                idx -= l;
            }
        }
        cur
    }
}

/// A lazily generated one-sided sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LazySequence {
    alphabet: Alphabet,
    generator: Generator,
}

impl LazySequence {
    pub fn new(alphabet: Alphabet, generator: Generator) -> Result<Self> {
        match &generator {
            Generator::Champernowne { base } if (*base as usize) < 2 || *base as usize > alphabet.size() => {
                return Err(Error::InvalidArgument(format!(
                    "Champernowne base {base} must lie in 2..={}",
                    alphabet.size()
                )))
            }
            Generator::Substitution(sub) if sub.rules.len() > alphabet.size() => {
                return Err(Error::SymbolOutOfRange { symbol: sub.rules.len() - 1, size: alphabet.size() })
            }
            _ => {}
        }
        Ok(LazySequence { alphabet, generator })
    }

    /// Champernowne sequence in base `s`.
    pub fn champernowne(alphabet: Alphabet) -> Self {
        LazySequence { alphabet, generator: Generator::Champernowne { base: alphabet.size().min(255) as u8 } }
    }

    /// Binary Champernowne sequence embedded as the digits `{0, 1}` of `Λ_s`.
    pub fn champernowne_binary(alphabet: Alphabet) -> Self {
        LazySequence { alphabet, generator: Generator::Champernowne { base: 2 } }
    }

    pub fn thue_morse(alphabet: Alphabet) -> Self {
        LazySequence { alphabet, generator: Generator::ThueMorse }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn generator(&self) -> &Generator {
        &self.generator
    }

    /// Built-in generators known not to be eventually periodic.
    pub fn is_rich(&self) -> bool {
        matches!(self.generator, Generator::Champernowne { .. } | Generator::ThueMorse)
    }

    pub fn symbol(&self, n: usize) -> Symbol {
        match &self.generator {
            Generator::Champernowne { base } => champernowne_symbol(*base as u128, n as u128),
            Generator::ThueMorse => (n.count_ones() % 2) as Symbol,
            Generator::Substitution(sub) => sub.symbol(n),
        }
    }

    pub fn head(&self, len: usize) -> Vec<Symbol> {
        match &self.generator {
            Generator::Substitution(sub) => {
                let mut text = vec![sub.start];
                while text.len() < len {
                    text = text.iter().flat_map(|&x| sub.rules[x as usize].iter().copied()).collect();
                }
                text.truncate(len);
                text
            }
            _ => (0..len).map(|n| self.symbol(n)).collect(),
        }
    }
}

fn champernowne_symbol(base: u128, mut n: u128) -> Symbol {
    let mut width = 1u32;
    let mut count = base;
    while n >= count * width as u128 {
        n -= count * width as u128;
        width += 1;
        count *= base;
    }
    let word = n / width as u128;
    let pos = (n % width as u128) as u32;
    ((word / base.pow(width - 1 - pos)) % base) as Symbol
}

impl SymbolSource for LazySequence {
    fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    fn symbol_at(&self, n: usize) -> Option<Symbol> {
        Some(self.symbol(n))
    }

    fn window(&self, start: usize, len: usize) -> Option<Vec<Symbol>> {
        match self.generator {
            Generator::Substitution(_) => Some(self.head(start + len).split_off(start)),
            _ => Some((start..start + len).map(|n| self.symbol(n)).collect()),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Champernowne { base } => write!(f, "champernowne:{base}"),
            Generator::ThueMorse => f.write_str("thue-morse"),
            Generator::Substitution(sub) => {
                f.write_str("subst:")?;
                for (x, img) in sub.rules.iter().enumerate() {
                    if x > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}>")?;
                    img.iter().try_for_each(|y| write!(f, "{}", digit_char(*y)))?;
                }
                if sub.start != 0 {
                    write!(f, "@{}", sub.start)?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for LazySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={} gen={}", self.alphabet.size(), self.generator)
    }
}

pub(super) fn digit_char(d: Symbol) -> char {
    std::char::from_digit(d as u32, 36).expect("substitution symbols are below 36")
}
