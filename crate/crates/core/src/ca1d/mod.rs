//! One-sided block maps: the calculus of `CAT(Λ_s^ℕ)`.

mod blockmap;
mod chr;
mod enumerate;
mod hitting;
mod semigroup;

pub use blockmap::{BlockMap, MAX_TABLE_LEN};
pub(crate) use blockmap::{block_index, decode_block, table_len};
pub use chr::{chr_product_map, ChrMap};
pub use enumerate::{candidate_count, enumerate_commutant, DEFAULT_CAP};
pub use hitting::{construct_table_hitting, HittingSource};
pub use semigroup::SemigroupPresentation;
