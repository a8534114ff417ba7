//! Textual sequence literals:
//!
//! ```text
//! s=<s> pre=<c,s,v> cyc=<c,s,v>     eventually periodic
//! s=<s> gen=<champernowne[:base]|thue-morse|subst:0>01,1>10[@start]>
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{Alphabet, EventuallyPeriodicSeq, Generator, LazySequence, Substitution, Symbol, SymbolSource};
use crate::error::{Error, Result};

/// Either kind of one-sided sequence, as written in a literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceLiteral {
    Periodic(EventuallyPeriodicSeq),
    Lazy(LazySequence),
}

/// Comma-separated decimal symbols.
pub fn format_symbols(symbols: &[Symbol]) -> String {
    symbols.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
}

/// Inverse of [`format_symbols`]; the empty string is the empty word.
pub fn parse_symbols(text: &str, alphabet: Alphabet) -> Result<Vec<Symbol>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(vec![]);
    }
    text.split(',')
        .map(|t| {
            let v: usize = t.trim().parse().map_err(|_| Error::Parse(format!("bad symbol {t:?}")))?;
            alphabet.check(v)
        })
        .collect()
}

/// Splits whitespace-separated `key=value` tokens, rejecting duplicates.
pub fn key_values(text: &str) -> Result<BTreeMap<&str, &str>> {
    let mut out = BTreeMap::new();
    for token in text.split_whitespace() {
        let (k, v) = token.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {token:?}")))?;
        if out.insert(k, v).is_some() {
            return Err(Error::Parse(format!("duplicate key {k:?}")));
        }
    }
    Ok(out)
}

pub(crate) fn parse_alphabet(fields: &BTreeMap<&str, &str>) -> Result<Alphabet> {
    let s = fields.get("s").ok_or_else(|| Error::Parse("missing s=".into()))?;
    Alphabet::new(s.parse().map_err(|_| Error::Parse(format!("bad alphabet size {s:?}")))?)
}

fn parse_generator(text: &str) -> Result<Generator> {
    if text == "thue-morse" {
        return Ok(Generator::ThueMorse);
    }
    if let Some(rest) = text.strip_prefix("champernowne") {
        let base = match rest.strip_prefix(':') {
            Some(b) => b.parse().map_err(|_| Error::Parse(format!("bad base {b:?}")))?,
            None if rest.is_empty() => 0,
            None => return Err(Error::Parse(format!("unknown generator {text:?}"))),
        };
        return Ok(Generator::Champernowne { base });
    }
    if let Some(rest) = text.strip_prefix("subst:") {
        let (rules_text, start) = match rest.split_once('@') {
            Some((r, st)) => (r, st.parse().map_err(|_| Error::Parse(format!("bad start {st:?}")))?),
            None => (rest, 0),
        };
        let mut rules: BTreeMap<usize, Vec<Symbol>> = BTreeMap::new();
        for rule in rules_text.split(',') {
            let (lhs, rhs) = rule.split_once('>').ok_or_else(|| Error::Parse(format!("bad rule {rule:?}")))?;
            let x: usize = lhs.parse().map_err(|_| Error::Parse(format!("bad symbol {lhs:?}")))?;
            let img = rhs
                .chars()
                .map(|c| c.to_digit(36).map(|d| d as Symbol).ok_or_else(|| Error::Parse(format!("bad digit {c:?}"))))
                .collect::<Result<Vec<_>>>()?;
            rules.insert(x, img);
        }
        if rules.keys().copied().ne(0..rules.len()) {
            return Err(Error::Parse("substitution rules must cover 0..n without gaps".into()));
        }
        return Ok(Generator::Substitution(Substitution::new(rules.into_values().collect(), start)?));
    }
    Err(Error::Parse(format!("unknown generator {text:?}")))
}

impl FromStr for SequenceLiteral {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let fields = key_values(text)?;
        let alphabet = parse_alphabet(&fields)?;
        let known = |k: &&str| ["s", "pre", "cyc", "gen"].contains(k);
        if let Some(k) = fields.keys().find(|k| !known(k)) {
            return Err(Error::Parse(format!("unknown key {k:?}")));
        }
        if let Some(gen) = fields.get("gen") {
            if fields.contains_key("pre") || fields.contains_key("cyc") {
                return Err(Error::Parse("gen= cannot be combined with pre=/cyc=".into()));
            }
            let generator = match parse_generator(gen)? {
                Generator::Champernowne { base: 0 } => Generator::Champernowne { base: alphabet.size().min(255) as u8 },
                g => g,
            };
            return Ok(SequenceLiteral::Lazy(LazySequence::new(alphabet, generator)?));
        }
        let cycle = fields.get("cyc").ok_or_else(|| Error::Parse("missing cyc= or gen=".into()))?;
        let prefix = parse_symbols(fields.get("pre").copied().unwrap_or(""), alphabet)?;
        let cycle = parse_symbols(cycle, alphabet)?;
        Ok(SequenceLiteral::Periodic(EventuallyPeriodicSeq::new(alphabet, prefix, cycle)?))
    }
}

impl FromStr for EventuallyPeriodicSeq {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text.parse()? {
            SequenceLiteral::Periodic(seq) => Ok(seq),
            SequenceLiteral::Lazy(_) => Err(Error::Parse("expected an eventually periodic literal".into())),
        }
    }
}

impl fmt::Display for SequenceLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceLiteral::Periodic(seq) => write!(
                f,
                "s={} pre={} cyc={}",
                seq.alphabet().size(),
                format_symbols(seq.prefix()),
                format_symbols(seq.cycle())
            ),
            SequenceLiteral::Lazy(lazy) => write!(f, "{lazy}"),
        }
    }
}

impl SymbolSource for SequenceLiteral {
    fn alphabet(&self) -> Alphabet {
        match self {
            SequenceLiteral::Periodic(s) => s.alphabet(),
            SequenceLiteral::Lazy(s) => s.alphabet(),
        }
    }

    fn symbol_at(&self, n: usize) -> Option<Symbol> {
        match self {
            SequenceLiteral::Periodic(s) => s.symbol_at(n),
            SequenceLiteral::Lazy(s) => s.symbol_at(n),
        }
    }

    fn window(&self, start: usize, len: usize) -> Option<Vec<Symbol>> {
        match self {
            SequenceLiteral::Periodic(s) => s.window(start, len),
            SequenceLiteral::Lazy(s) => s.window(start, len),
        }
    }
}

impl SequenceLiteral {
    pub fn head(&self, len: usize) -> Vec<Symbol> {
        match self {
            SequenceLiteral::Periodic(s) => s.head(len),
            SequenceLiteral::Lazy(s) => s.head(len),
        }
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_periodic() {
        let lit: SequenceLiteral = "s=3 pre=1,2 cyc=2,1".parse().unwrap();
        let SequenceLiteral::Periodic(seq) = &lit else { panic!() };
        assert_eq!(seq.prefix(), &[1, 2]);
        assert_eq!(seq.cycle(), &[2, 1]);
        assert_eq!(lit.to_string(), "s=3 pre=1,2 cyc=2,1");
        let empty: EventuallyPeriodicSeq = "s=15 pre= cyc=7".parse().unwrap();
        assert_eq!(empty.b(), 0);
        assert_eq!(empty.cycle(), &[7]);
    }

    #[test]
    fn parse_lazy() {
        for text in ["s=6 gen=champernowne:6", "s=2 gen=thue-morse", "s=3 gen=subst:0>01,1>20,2>1"] {
            let lit: SequenceLiteral = text.parse().unwrap();
            assert_eq!(lit.to_string(), text);
        }
        let lit: SequenceLiteral = "s=6 gen=champernowne".parse().unwrap();
        assert_eq!(lit.to_string(), "s=6 gen=champernowne:6");
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "pre=1 cyc=0",
            "s=2 pre=2 cyc=0",
            "s=2 cyc=",
            "s=2 gen=nope",
            "s=2 gen=thue-morse cyc=0",
            "s=2 cyc=0 extra=1",
            "s=2 gen=champernowne:3",
        ] {
            assert!(bad.parse::<SequenceLiteral>().is_err(), "{bad}");
        }
    }

    proptest! {
        #[test]
        fn periodic_literal_round_trip(
            s in 2usize..20,
            pre in proptest::collection::vec(0u8..2, 0..5),
            cyc in proptest::collection::vec(0u8..2, 1..5),
        ) {
            let a = Alphabet::new(s).unwrap();
            let lit = SequenceLiteral::Periodic(EventuallyPeriodicSeq::new(a, pre, cyc).unwrap());
            prop_assert_eq!(lit.to_string().parse::<SequenceLiteral>().unwrap(), lit);
        }
    }
}
