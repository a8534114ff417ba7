use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigUint;

use super::{Alphabet, Symbol, SymbolSource, Word};
use crate::error::{Error, Result};

/// `a_0 ... a_{b-1} (a_b ... a_{b+c-1})^∞`: a finite prefix followed by a repeating cycle.
///
/// The derived equality compares representations. Two values denote the same
/// sequence iff their [`canonicalize`](Self::canonicalize)d forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EventuallyPeriodicSeq {
    prefix: Word,
    cycle: Word,
}

impl EventuallyPeriodicSeq {
    pub fn new(alphabet: Alphabet, prefix: Vec<Symbol>, cycle: Vec<Symbol>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::InvalidArgument("cycle must be nonempty".into()));
        }
        Ok(EventuallyPeriodicSeq {
            prefix: Word::new(alphabet, prefix)?,
            cycle: Word::new(alphabet, cycle)?,
        })
    }

    /// Builds from digit strings, e.g. `from_digits(a, "12", "21")`.
    pub fn from_digits(alphabet: Alphabet, prefix: &str, cycle: &str) -> Result<Self> {
        let prefix = Word::from_digits(alphabet, prefix)?;
        let cycle = Word::from_digits(alphabet, cycle)?;
        Self::new(alphabet, prefix.into_symbols(), cycle.into_symbols())
    }

    pub fn constant(alphabet: Alphabet, symbol: Symbol) -> Result<Self> {
        Self::new(alphabet, vec![], vec![symbol])
    }

    pub fn alphabet(&self) -> Alphabet {
        self.prefix.alphabet()
    }

    pub fn prefix(&self) -> &[Symbol] {
        self.prefix.symbols()
    }

    pub fn cycle(&self) -> &[Symbol] {
        self.cycle.symbols()
    }

    /// Prefix length `b`.
    pub fn b(&self) -> usize {
        self.prefix.len()
    }

    /// Cycle length `c`.
    pub fn c(&self) -> usize {
        self.cycle.len()
    }

    pub fn symbol(&self, n: usize) -> Symbol {
        let b = self.b();
        if n < b {
            self.prefix()[n]
        } else {
            self.cycle()[(n - b) % self.c()]
        }
    }

    /// The first `len` symbols.
    pub fn head(&self, len: usize) -> Vec<Symbol> {
        (0..len).map(|n| self.symbol(n)).collect()
    }

    /// The left shift `σ^k`.
    pub fn shift(&self, k: usize) -> Self {
        let b = self.b();
        let (prefix, rot) = if k <= b { (self.prefix()[k..].to_vec(), 0) } else { (vec![], (k - b) % self.c()) };
        let mut cycle = self.cycle().to_vec();
        cycle.rotate_left(rot);
        Self::new(self.alphabet(), prefix, cycle).expect("shift preserves validity")
    }

    /// Minimal `b`, then minimal `c`, denoting the same sequence. Idempotent.
    pub fn canonicalize(&self) -> Self {
        let mut cycle = primitive_root(self.cycle()).to_vec();
        let mut prefix = self.prefix().to_vec();
        while let (Some(&p), Some(&q)) = (prefix.last(), cycle.last()) {
            if p != q {
                break;
            }
            prefix.pop();
            cycle.rotate_right(1);
        }
        Self::new(self.alphabet(), prefix, cycle).expect("canonicalize preserves validity")
    }

    pub fn is_canonical(&self) -> bool {
        self.canonicalize() == *self
    }

    /// Whether both denote the same infinite sequence.
    pub fn same_sequence(&self, other: &Self) -> bool {
        self.alphabet() == other.alphabet() && self.canonicalize() == other.canonicalize()
    }
}

impl SymbolSource for EventuallyPeriodicSeq {
    fn alphabet(&self) -> Alphabet {
        self.prefix.alphabet()
    }

    fn symbol_at(&self, n: usize) -> Option<Symbol> {
        Some(self.symbol(n))
    }
}

impl fmt::Display for EventuallyPeriodicSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.prefix, self.cycle)
    }
}

/// The shortest `w` with `cycle = w^j`.
pub(crate) fn primitive_root(cycle: &[Symbol]) -> &[Symbol] {
    let c = cycle.len();
    (1..=c)
        .filter(|d| c % d == 0)
        .find(|&d| (d..c).all(|i| cycle[i] == cycle[i - d]))
        .map(|d| &cycle[..d])
        .unwrap_or(cycle)
}

/// Heuristic eventual-period detection on a finite prefix.
///
/// Returns the smallest `(b, c)`, ordered by `b + c` and then `c`, such that
/// positions `b..L` are `c`-periodic and `3(b + c) <= L`.
pub fn detect_eventual_period(prefix: &[Symbol]) -> Result<Option<(usize, usize)>> {
    let len = prefix.len();
    if len == 0 {
        return Err(Error::EmptyInput);
    }
    let budget = len / 3;
    let mut best: Option<(usize, usize)> = None;
    for c in 1..=budget {
        // smallest b such that prefix[b..] is c-periodic
        let b = (0..len - c).rev().find(|&i| prefix[i] != prefix[i + c]).map_or(0, |i| i + 1);
        if b + c > budget {
            continue;
        }
        let better = match best {
            None => true,
            Some((bb, bc)) => (b + c, c) < (bb + bc, bc),
        };
        if better {
            best = Some((b, c));
        }
    }
    Ok(best)
}

/// Minimal `k` making the `b + c - 1` windows `a_{[i,i+k)}`, `i < b + c - 1`, pairwise distinct.
/// Returns 1 when there is at most one window.
pub fn word_variety_length(seq: &EventuallyPeriodicSeq) -> usize {
    let seq = seq.canonicalize();
    let count = (seq.b() + seq.c()).saturating_sub(1);
    if count <= 1 {
        return 1;
    }
    let limit = 2 * (seq.b() + seq.c()) + 2;
    for k in 1..=limit {
        let text = seq.head(count + k);
        let mut seen = HashSet::with_capacity(count);
        if (0..count).all(|i| seen.insert(&text[i..i + k])) {
            return k;
        }
    }
    unreachable!("canonical sequences have distinct windows below length {limit}")
}

/// All sequences with a representation of prefix length `b` and cycle length `c`,
/// as sorted, deduplicated canonical forms.
pub fn enumerate_b(b: usize, c: usize, alphabet: Alphabet, cap: u64) -> Result<Vec<EventuallyPeriodicSeq>> {
    if c == 0 {
        return Err(Error::InvalidArgument("cycle length must be at least 1".into()));
    }
    let count = BigUint::from(alphabet.size()).pow((b + c) as u32);
    if count > BigUint::from(cap) {
        return Err(Error::EnumerationTooLarge { count, cap });
    }
    let set: BTreeSet<_> = alphabet
        .words(b + c)
        .map(|w| {
            EventuallyPeriodicSeq::new(alphabet, w[..b].to_vec(), w[b..].to_vec())
                .expect("enumerated words are valid")
                .canonicalize()
        })
        .collect();
    Ok(set.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::LazySequence;
    use proptest::prelude::*;

    fn alpha(s: usize) -> Alphabet {
        Alphabet::new(s).unwrap()
    }

    fn digits(s: &str) -> Vec<Symbol> {
        s.bytes().map(|c| c - b'0').collect()
    }

    /// Independent oracle: scan every (b, c) with b + c <= L/3 in the stated order.
    fn brute_detect(prefix: &[Symbol]) -> Option<(usize, usize)> {
        let len = prefix.len();
        for total in 1..=len / 3 {
            for c in 1..=total {
                let b = total - c;
                if (b..len - c).all(|i| prefix[i] == prefix[i + c]) {
                    return Some((b, c));
                }
            }
        }
        None
    }

    #[test]
    fn detect_examples() {
        assert_eq!(detect_eventual_period(&digits("000000000")).unwrap(), Some((0, 1)));
        assert_eq!(brute_detect(&digits("0110101010101")), Some((2, 2)));
        assert_eq!(detect_eventual_period(&digits("0110101010101")).unwrap(), Some((2, 2)));
        let tm = LazySequence::thue_morse(alpha(2)).head(60);
        assert_eq!(brute_detect(&tm), None);
        assert_eq!(detect_eventual_period(&tm).unwrap(), None);
        assert_eq!(detect_eventual_period(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn canonicalize_examples() {
        let a2 = alpha(2);
        let s = EventuallyPeriodicSeq::from_digits(a2, "1", "00").unwrap().canonicalize();
        assert_eq!(s, EventuallyPeriodicSeq::from_digits(a2, "1", "0").unwrap());

        // 1 2 2 1 2 1 ...: index 1 and 3 differ, so b stays 2; only the cycle shrinks.
        let raw = EventuallyPeriodicSeq::from_digits(alpha(3), "12", "2121").unwrap();
        let canon = raw.canonicalize();
        assert_eq!(canon, EventuallyPeriodicSeq::from_digits(alpha(3), "12", "21").unwrap());
        assert_eq!(raw.head(20), canon.head(20));

        let seven = EventuallyPeriodicSeq::new(alpha(15), vec![], vec![7]).unwrap();
        assert_eq!(seven.canonicalize(), seven);
    }

    #[test]
    fn word_variety_examples() {
        let a2 = alpha(2);
        assert_eq!(word_variety_length(&EventuallyPeriodicSeq::from_digits(a2, "", "0").unwrap()), 1);
        assert_eq!(word_variety_length(&EventuallyPeriodicSeq::from_digits(a2, "1", "0").unwrap()), 1);
        assert_eq!(word_variety_length(&EventuallyPeriodicSeq::from_digits(a2, "", "0011").unwrap()), 2);
    }

    /// Oracle: raw pairs compared index-wise over b + c symbols (enough to separate any two
    /// members of B_{b,c}).
    fn brute_b_count(b: usize, c: usize, a: Alphabet) -> usize {
        let heads: BTreeSet<Vec<Symbol>> = a
            .words(b + c)
            .map(|w| EventuallyPeriodicSeq::new(a, w[..b].to_vec(), w[b..].to_vec()).unwrap().head(4 * (b + c) + 4))
            .collect();
        heads.len()
    }

    #[test]
    fn enumerate_b_examples() {
        let a2 = alpha(2);
        let b01 = enumerate_b(0, 1, a2, 1 << 20).unwrap();
        assert_eq!(b01.len(), 2);
        let b11 = enumerate_b(1, 1, a2, 1 << 20).unwrap();
        assert_eq!(b11.len(), 4);
        let expect: BTreeSet<_> = [("", "0"), ("", "1"), ("1", "0"), ("0", "1")]
            .iter()
            .map(|(p, c)| EventuallyPeriodicSeq::from_digits(a2, p, c).unwrap())
            .collect();
        assert_eq!(b11.into_iter().collect::<BTreeSet<_>>(), expect);
        let b22 = enumerate_b(2, 2, a2, 1 << 20).unwrap();
        assert_eq!(brute_b_count(2, 2, a2), 16);
        assert_eq!(b22.len(), 16);
        assert_eq!(brute_b_count(2, 3, alpha(3)), enumerate_b(2, 3, alpha(3), 1 << 20).unwrap().len());
        assert!(matches!(enumerate_b(4, 4, a2, 100), Err(Error::EnumerationTooLarge { .. })));
    }

    #[test]
    fn b_sets_are_shift_closed() {
        let a2 = alpha(2);
        for (b, c) in [(1, 2), (2, 2), (1, 3)] {
            let set: BTreeSet<_> = enumerate_b(b, c, a2, 1 << 20).unwrap().into_iter().collect();
            for x in &set {
                assert!(set.contains(&x.shift(1).canonicalize()), "{x} shifted left B_{{{b},{c}}}");
            }
        }
    }

    #[test]
    fn rich_generators_have_no_detected_period() {
        for seq in [
            LazySequence::champernowne(alpha(2)),
            LazySequence::champernowne(alpha(3)),
            LazySequence::champernowne(alpha(6)),
            LazySequence::thue_morse(alpha(2)),
            LazySequence::thue_morse(alpha(4)),
        ] {
            assert!(seq.is_rich());
            for len in [30, 60, 120] {
                assert_eq!(detect_eventual_period(&seq.head(len)).unwrap(), None, "{seq} at {len}");
            }
        }
    }

    fn arb_seq() -> impl Strategy<Value = EventuallyPeriodicSeq> {
        (2usize..5).prop_flat_map(|s| {
            (
                Just(s),
                proptest::collection::vec(0..s as u8, 0..6),
                proptest::collection::vec(0..s as u8, 1..6),
            )
                .prop_map(|(s, p, c)| EventuallyPeriodicSeq::new(alpha(s), p, c).unwrap())
        })
    }

    proptest! {
        #[test]
        fn canonicalize_preserves_symbols(seq in arb_seq()) {
            let canon = seq.canonicalize();
            let n = 10 * (seq.b() + seq.c());
            prop_assert_eq!(seq.head(n), canon.head(n));
            prop_assert_eq!(canon.canonicalize(), canon.clone());
            prop_assert!(canon.b() <= seq.b());
            prop_assert_eq!(seq.c() % canon.c(), 0);
        }

        #[test]
        fn detection_recovers_canonical_pair(seq in arb_seq(), extra in 0usize..10) {
            let canon = seq.canonicalize();
            let len = 3 * (canon.b() + canon.c()) + extra;
            prop_assert_eq!(
                detect_eventual_period(&canon.head(len)).unwrap(),
                Some((canon.b(), canon.c()))
            );
        }

        #[test]
        fn word_variety_is_minimal(seq in arb_seq()) {
            let canon = seq.canonicalize();
            let k = word_variety_length(&canon);
            let count = (canon.b() + canon.c()).saturating_sub(1);
            let distinct = |k: usize| {
                let text = canon.head(count + k);
                let set: HashSet<_> = (0..count).map(|i| text[i..i + k].to_vec()).collect();
                set.len() == count
            };
            prop_assert!(distinct(k));
            if k > 1 {
                prop_assert!(!distinct(k - 1));
            }
        }
    }
}
