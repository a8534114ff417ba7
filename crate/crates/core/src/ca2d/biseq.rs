use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::TwoSidedBlockMap;
use crate::error::{Error, Result};
use crate::symcore::{format_symbols, literal_fields, parse_symbols, primitive_root, Alphabet, Symbol};

/// A bi-infinite sequence `… L L L core R R R …` with `core[0]` at absolute position `start`.
///
/// `left` is written in reading order, so the symbol at `start − 1` is the last symbol of `left`.
/// Derived equality is structural; [`BiSeq::same_sequence`] compares the sequences themselves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiSeq {
    alphabet: Alphabet,
    left: Vec<Symbol>,
    core: Vec<Symbol>,
    right: Vec<Symbol>,
    start: i64,
}

impl BiSeq {
    pub fn new(alphabet: Alphabet, left: Vec<Symbol>, core: Vec<Symbol>, right: Vec<Symbol>, start: i64) -> Result<Self> {
        if left.is_empty() || right.is_empty() {
            return Err(Error::InvalidArgument("both cycles must be nonempty".into()));
        }
        for part in [&left, &core, &right] {
            alphabet.check_all(part)?;
        }
        Ok(BiSeq { alphabet, left, core, right, start })
    }

    pub fn constant(alphabet: Alphabet, symbol: Symbol) -> Result<Self> {
        Self::new(alphabet, vec![symbol], vec![], vec![symbol], 0)
    }

    /// `e^i`: a single 1 at position `i` on a background of zeros.
    pub fn unit(alphabet: Alphabet, i: i64) -> Self {
        Self::new(alphabet, vec![0], vec![1], vec![0], i).expect("0 and 1 are in every alphabet")
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn left(&self) -> &[Symbol] {
        &self.left
    }

    pub fn core(&self) -> &[Symbol] {
        &self.core
    }

    pub fn right(&self) -> &[Symbol] {
        &self.right
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    fn end(&self) -> i64 {
        self.start + self.core.len() as i64
    }

    pub fn symbol(&self, n: i64) -> Symbol {
        if n < self.start {
            let back = (self.start - 1 - n) as usize % self.left.len();
            self.left[self.left.len() - 1 - back]
        } else if n < self.end() {
            self.core[(n - self.start) as usize]
        } else {
            self.right[(n - self.end()) as usize % self.right.len()]
        }
    }

    /// Symbols at positions `from..to`.
    pub fn window(&self, from: i64, to: i64) -> Vec<Symbol> {
        (from..to).map(|n| self.symbol(n)).collect()
    }

    /// Primitive cycles, core trimmed against both cycles, and for purely periodic
    /// sequences an empty core with `start` in `0..c`.
    pub fn canonicalize(&self) -> Self {
        let mut left = primitive_root(&self.left).to_vec();
        let mut right = primitive_root(&self.right).to_vec();
        let mut core = self.core.clone();
        let mut start = self.start;
        while let (Some(&x), Some(&y)) = (core.last(), right.last()) {
            if x != y {
                break;
            }
            core.pop();
            right.rotate_right(1);
        }
        let mut skip = 0;
        while skip < core.len() && core[skip] == left[0] {
            skip += 1;
            left.rotate_left(1);
        }
        core.drain(..skip);
        start += skip as i64;
        // with no core, push the boundary right while the left pattern still continues
        while core.is_empty() && left != right && right[0] == left[0] {
            left.rotate_left(1);
            right.rotate_left(1);
            start += 1;
        }
        if core.is_empty() && left == right {
            let c = right.len() as i64;
            let shift = start.rem_euclid(c);
            right.rotate_right(shift as usize);
            left = right.clone();
            start = 0;
        }
        BiSeq { alphabet: self.alphabet, left, core, right, start }
    }

    /// Whether both denote the same element of `Λ^ℤ`.
    pub fn same_sequence(&self, other: &Self) -> bool {
        if self.alphabet != other.alphabet {
            return false;
        }
        let (x, y) = (self.canonicalize(), other.canonicalize());
        let lo = x.start.min(y.start) - x.left.len().lcm(&y.left.len()) as i64;
        let hi = x.end().max(y.end()) + x.right.len().lcm(&y.right.len()) as i64;
        x.window(lo, hi) == y.window(lo, hi)
    }

    pub fn shift(&self, k: i64) -> Self {
        BiSeq { start: self.start - k, ..self.clone() }
    }
}

impl TwoSidedBlockMap {
    /// Exact image of a bi-infinite eventually periodic sequence, canonicalized.
    pub fn apply_biseq(&self, x: &BiSeq) -> Result<BiSeq> {
        self.alphabet().ensure_same(x.alphabet)?;
        let (m, a) = (self.memory() as i64, self.anticipation() as i64);
        // outputs left of `lo` read only the left cycle, outputs from `hi` on only the right cycle
        let lo = x.start - a;
        let hi = x.end() + m;
        let image = |from: i64, to: i64| self.apply_slice(&x.window(from - m, to + a)).expect("window is wide enough");
        let left = image(lo - x.left.len() as i64, lo);
        let core = image(lo, hi);
        let right = image(hi, hi + x.right.len() as i64);
        Ok(BiSeq::new(x.alphabet, left, core, right, lo)?.canonicalize())
    }
}

impl fmt::Display for BiSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "s={} left={} core={} right={}",
            self.alphabet.size(),
            format_symbols(&self.left),
            format_symbols(&self.core),
            format_symbols(&self.right)
        )?;
        if self.start != 0 {
            write!(f, " start={}", self.start)?;
        }
        Ok(())
    }
}

impl FromStr for BiSeq {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let fields = literal_fields(text)?;
        if let Some(k) = fields.keys().find(|k| !["s", "left", "core", "right", "start"].contains(k)) {
            return Err(Error::Parse(format!("unknown key {k:?}")));
        }
        let get = |k: &str| fields.get(k).copied().ok_or_else(|| Error::Parse(format!("missing {k}=")));
        let alphabet = Alphabet::new(get("s")?.parse().map_err(|_| Error::Parse("bad s=".into()))?)?;
        let start = match fields.get("start") {
            Some(v) => v.parse().map_err(|_| Error::Parse(format!("bad start={v}")))?,
            None => 0,
        };
        Self::new(
            alphabet,
            parse_symbols(get("left")?, alphabet)?,
            parse_symbols(fields.get("core").copied().unwrap_or(""), alphabet)?,
            parse_symbols(get("right")?, alphabet)?,
            start,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ca1d::chr_product_map;
    use proptest::prelude::*;

    fn a(s: usize) -> Alphabet {
        Alphabet::new(s).unwrap()
    }

    #[test]
    fn symbol_indexing() {
        let x = BiSeq::new(a(4), vec![1, 2], vec![3], vec![0, 1, 2], 5).unwrap();
        assert_eq!(x.window(1, 12), vec![1, 2, 1, 2, 3, 0, 1, 2, 0, 1, 2]);
        assert_eq!(BiSeq::unit(a(2), -3).window(-5, 0), vec![0, 0, 1, 0, 0]);
    }

    #[test]
    fn canonical_forms() {
        let x = BiSeq::new(a(2), vec![0, 0], vec![0, 1, 0, 0], vec![0], -1).unwrap();
        assert_eq!(x.canonicalize(), BiSeq::unit(a(2), 0));
        let z = BiSeq::new(a(2), vec![0, 1], vec![0, 1, 0], vec![1, 0], 3).unwrap().canonicalize();
        assert!(z.core().is_empty());
        assert_eq!((z.start(), z.left(), z.right()), (0, &[1u8, 0][..], &[1u8, 0][..]));
        assert!(z.same_sequence(&BiSeq::new(a(2), vec![1, 0], vec![], vec![1, 0], 2).unwrap()));
        assert!(!z.same_sequence(&z.shift(1)));
        // the boundary between 0̄ and (01)̄ is not unique until canonicalized
        let p = BiSeq::new(a(2), vec![0], vec![], vec![0, 1], 0).unwrap();
        let q = BiSeq::new(a(2), vec![0], vec![], vec![1, 0], 1).unwrap();
        assert_eq!(p.canonicalize(), q.canonicalize());
    }

    #[test]
    fn identity_and_sigma_inverse() {
        let x = BiSeq::new(a(3), vec![2, 1], vec![0, 0, 2], vec![1], -2).unwrap();
        let id = TwoSidedBlockMap::identity(a(3));
        assert!(id.apply_biseq(&x).unwrap().same_sequence(&x));
        let inv = TwoSidedBlockMap::sigma_inverse(a(2));
        assert_eq!(inv.apply_biseq(&BiSeq::unit(a(2), 0)).unwrap(), BiSeq::unit(a(2), 1));
        let sigma = TwoSidedBlockMap::shift(a(2));
        assert_eq!(sigma.apply_biseq(&BiSeq::unit(a(2), 0)).unwrap(), BiSeq::unit(a(2), -1));
    }

    #[test]
    fn chr_fixes_units() {
        let chr = chr_product_map(a(2), &[0, 0], 2).unwrap();
        let t = TwoSidedBlockMap::embed_one_sided(&chr.map);
        for i in -20..=20 {
            assert_eq!(t.apply_biseq(&BiSeq::unit(a(2), i)).unwrap(), BiSeq::unit(a(2), i));
        }
    }

    #[test]
    fn literal_round_trip() {
        let x = BiSeq::unit(a(2), -4);
        assert_eq!(x.to_string(), "s=2 left=0 core=1 right=0 start=-4");
        assert_eq!(x.to_string().parse::<BiSeq>().unwrap(), x);
        let y: BiSeq = "s=3 left=1,2 core= right=0".parse().unwrap();
        assert!(y.core().is_empty());
        assert!("s=3 left= core=1 right=0".parse::<BiSeq>().is_err());
    }

    fn arb_biseq() -> impl Strategy<Value = BiSeq> {
        let part = |lo| proptest::collection::vec(0u8..3, lo..4);
        (part(1), part(0), part(1), -5i64..5)
            .prop_map(|(l, c, r, st)| BiSeq::new(Alphabet::new(3).unwrap(), l, c, r, st).unwrap())
    }

    proptest! {
        #[test]
        fn canonicalize_preserves_symbols(x in arb_biseq()) {
            let y = x.canonicalize();
            prop_assert_eq!(x.window(-30, 30), y.window(-30, 30));
            prop_assert_eq!(y.canonicalize(), y.clone());
            prop_assert!(x.same_sequence(&y));
        }

        #[test]
        fn canonical_form_is_unique(x in arb_biseq(), k in 0usize..4) {
            // rewrite the same sequence with a longer core
            let y = x.canonicalize();
            let from = y.start() - k as i64;
            let to = y.start() + y.core().len() as i64 + k as i64;
            let mut left = y.left().to_vec();
            let n = left.len();
            left.rotate_right(k % n);
            let mut right = y.right().to_vec();
            let n = right.len();
            right.rotate_left(k % n);
            let z = BiSeq::new(y.alphabet(), left, y.window(from, to), right, from).unwrap();
            prop_assert_eq!(z.window(-30, 30), y.window(-30, 30));
            prop_assert_eq!(z.canonicalize(), y);
        }

        #[test]
        fn apply_matches_windowed_application(
            x in arb_biseq(),
            table in proptest::collection::vec(0u8..3, 27),
        ) {
            let t = TwoSidedBlockMap::new(Alphabet::new(3).unwrap(), 1, 1, table).unwrap();
            let image = t.apply_biseq(&x).unwrap();
            prop_assert_eq!(image.window(-20, 20), t.apply_slice(&x.window(-21, 21)).unwrap());
        }
    }
}
