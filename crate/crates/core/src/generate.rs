//! Deterministic coloring generators.
//!
//! All randomness flows through ChaCha8 with an explicit 64-bit seed, so a
//! given `(seed, len, r)` triple yields the same color array on every
//! platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::DnColoring;
use crate::Result;

/// `len` colors drawn uniformly from `0..r`.
pub fn seeded_colors(seed: u64, len: usize, r: u8) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len).map(|_| rng.random_range(0..r)).collect()
}

/// The color of a single value under a seeded coloring, computable without
/// materializing the whole table. Mixing the value into the stream seed
/// keeps lookups order independent.
pub fn seeded_value_color(seed: u64, value: u64, r: u8) -> u8 {
    let mixed = seed ^ value.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    let mut rng = ChaCha8Rng::seed_from_u64(mixed);
    rng.random_range(0..r)
}

/// A seeded uniform coloring of `D(n)`.
pub fn random_dn_coloring(n: u8, r: u8, seed: u64) -> Result<DnColoring> {
    let len = 1usize << (2 * n as u32);
    DnColoring::new(n, r, seeded_colors(seed, len, r))
}
