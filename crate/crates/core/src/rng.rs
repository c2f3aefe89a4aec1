//! Seed derivation.
//!
//! Every random object is drawn from a ChaCha12 generator keyed by a 64-bit
//! seed. Independent pieces of one object use distinct ChaCha streams,
//! `(tag << 48) | index`, so they never overlap and can be generated in any
//! order (or in parallel) with identical results.
//!
//! | tag | use |
//! |-----|-----|
//! | `ROWS` | row selector `R` of a SORS operator |
//! | `SIGNS` | sign diagonal `D` of a SORS operator |
//! | `OUTER_SIGNS` | outer sign diagonal of a block operator |
//! | `MIXER` | dense mixing matrix `B` (one stream per row) |
//! | `DENSE` | sub-gaussian operator entries (one stream per row) |
//! | `SAMPLE` | dataset points (one stream per point) |
//! | `FRAME` | random orthonormal frame for ambient embedding |
//! | `SUBSAMPLE` | secant subsampling and Monte-Carlo trials |
//!
//! Repetition seeds are derived with [`derive_seed`], a SplitMix64 step.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

pub type Rng = ChaCha12Rng;

pub const ROWS: u64 = 1;
pub const SIGNS: u64 = 2;
pub const OUTER_SIGNS: u64 = 3;
pub const MIXER: u64 = 4;
pub const DENSE: u64 = 5;
pub const SAMPLE: u64 = 6;
pub const FRAME: u64 = 7;
pub const SUBSAMPLE: u64 = 8;

/// Generator for sub-stream `index` of kind `tag` under `seed`.
pub fn stream(seed: u64, tag: u64, index: u64) -> Rng {
    debug_assert!(index < 1 << 48);
    let mut rng = Rng::seed_from_u64(seed);
    rng.set_stream((tag << 48) | index);
    rng
}

/// Child seed number `index` of `seed` (SplitMix64 finalizer).
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(index.wrapping_add(1)));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
