//! Images of eventually periodic sequences under random block maps.

use calab_core::ca1d::BlockMap;
use calab_core::symcore::{enumerate_b, Alphabet, Symbol};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_map(rng: &mut ChaCha8Rng, alphabet: Alphabet) -> BlockMap {
    let radius = rng.gen_range(0..=2);
    let s = alphabet.size();
    let len = s.pow(radius as u32 + 1);
    let table: Vec<Symbol> = (0..len).map(|_| rng.gen_range(0..s) as Symbol).collect();
    BlockMap::new(alphabet, radius, table).unwrap()
}

#[test]
fn b12_is_invariant_under_random_maps() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for s in [2, 3] {
        let alphabet = Alphabet::new(s).unwrap();
        let members = enumerate_b(1, 2, alphabet, 1 << 20).unwrap();
        for _ in 0..100 {
            let tau = random_map(&mut rng, alphabet);
            for x in &members {
                let y = tau.apply_seq(x).unwrap();
                assert!(y.b() <= x.b(), "{tau} {x} -> {y}");
                assert_eq!(x.c() % y.c(), 0, "{tau} {x} -> {y}");
                assert!(members.contains(&y), "{y} left B_(1,2)");
                let head = tau.apply_slice(&x.head(40 + tau.radius())).unwrap();
                assert_eq!(y.head(40), head);
            }
        }
    }
}
