//! Two-sided automata: the embedding, inverses of multiplication maps, and bi-infinite images.

use calab_core::ca1d::{chr_product_map, construct_table_hitting, BlockMap, HittingSource};
use calab_core::ca2d::{verify_inverse, BiSeq, TwoSidedBlockMap};
use calab_core::mulca::{mu_const, mu_p, ConstMap};
use calab_core::symcore::{Alphabet, LazySequence, Symbol, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn alpha(s: usize) -> Alphabet {
    Alphabet::new(s).unwrap()
}

#[test]
fn inverse_law() {
    for (s, u) in [(6, 2), (6, 3), (10, 2), (10, 5), (12, 2), (12, 3), (12, 4), (12, 6)] {
        assert!(verify_inverse(alpha(s), u).unwrap(), "s={s} u={u}");
    }
}

#[test]
fn unit_vectors_form_an_invariant_set() {
    let a = alpha(2);
    let chr = TwoSidedBlockMap::embed_one_sided(&chr_product_map(a, &[0, 0], 2).unwrap().map);
    let shifts = [TwoSidedBlockMap::shift(a), TwoSidedBlockMap::sigma_inverse(a)];
    let zero = BiSeq::constant(a, 0).unwrap();
    let member = |x: &BiSeq| x.same_sequence(&zero) || (-30..=30).any(|i| x.same_sequence(&BiSeq::unit(a, i)));
    for i in -20..=20 {
        let e = BiSeq::unit(a, i);
        assert_eq!(chr.apply_biseq(&e).unwrap(), e);
        for g in &shifts {
            assert!(member(&g.apply_biseq(&e).unwrap()));
        }
    }
    assert!(chr.apply_biseq(&zero).unwrap().same_sequence(&zero));
}

#[test]
fn one_sided_commutation_is_preserved() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let a = alpha(3);
    for _ in 0..200 {
        let rg = rng.gen_range(0..=1);
        let mut map = |r: usize| {
            let t: Vec<Symbol> = (0..3usize.pow(r as u32 + 1)).map(|_| rng.gen_range(0..3)).collect();
            BlockMap::new(a, r, t).unwrap()
        };
        let (f, g) = (map(1), map(rg));
        let (ef, eg) = (TwoSidedBlockMap::embed_one_sided(&f), TwoSidedBlockMap::embed_one_sided(&g));
        assert_eq!(ef.commutes(&eg).unwrap(), f.commutes(&g).unwrap());
        assert!(ef.sigma_plus().unwrap().equal(&f).unwrap());
    }
}

#[test]
fn mirror_and_zero_still_disagree_on_two_sided_space() {
    let a = alpha(10);
    let mirror = TwoSidedBlockMap::embed_one_sided(&mu_const(a, ConstMap::Mirror));
    let zero = TwoSidedBlockMap::embed_one_sided(&mu_const(a, ConstMap::Zero));
    assert!(!mirror.commutes(&zero).unwrap());
    let m2 = TwoSidedBlockMap::embed_one_sided(&mu_p(a, 2).unwrap());
    assert!(mirror.commutes(&m2).unwrap());
}

/// A hitting map realized at the center of a two-sided sequence whose right half is rich.
#[test]
fn targets_appear_at_the_center() {
    let a = alpha(6);
    let rich = LazySequence::champernowne(a);
    let prefix = Word::new(a, rich.head(600)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for n in 0..=3usize {
        for k in [0usize, 2, 5] {
            let target: Vec<Symbol> = (0..2 * n + 1).map(|_| rng.gen_range(0..6)).collect();
            let target = Word::new(a, target).unwrap();
            let hit = construct_table_hitting(HittingSource::Prefix(&prefix), &target).unwrap();
            let shift = TwoSidedBlockMap::shift_power(a, n as i64 - k as i64).unwrap();
            let t = TwoSidedBlockMap::embed_one_sided(&hit).compose(&shift).unwrap();
            // y_j = rich_{j+k} for j >= -k, zeros further left
            let (lo, hi) = (-(n as i64) - t.memory() as i64, n as i64 + 1 + t.anticipation() as i64);
            let y: Vec<Symbol> =
                (lo..hi).map(|j| if j + (k as i64) < 0 { 0 } else { rich.symbol((j + k as i64) as usize) }).collect();
            assert_eq!(t.apply_slice(&y).unwrap(), target.symbols(), "n={n} k={k}");
        }
    }
}
