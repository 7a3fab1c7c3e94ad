//! Seed derivation.
//!
//! Every random decision in the toolkit flows from a single master seed.
//! Independent tasks (realizations, grid cells, walk starts, swap chains)
//! derive their own seed by hashing the master seed together with a list of
//! task indices through splitmix64. Two tasks with different index paths get
//! statistically independent streams, and the derivation is a pure function,
//! so whole experiment suites are reproducible from one `--seed`.

use rand_pcg::Pcg64Mcg;

/// One round of the splitmix64 mixing function.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derive a child seed from `master` and a path of task indices.
pub fn derive_seed(master: u64, path: &[u64]) -> u64 {
    let mut state = splitmix64(master);
    for &idx in path {
        state = splitmix64(state ^ splitmix64(idx.wrapping_add(0x1657_6675_93D0_E0D5)));
    }
    state
}

/// RNG seeded from a derivation path. Pcg64Mcg is small, fast and gives the
/// same stream on every platform.
pub fn rng_from(master: u64, path: &[u64]) -> Pcg64Mcg {
    Pcg64Mcg::new(derive_seed(master, path) as u128 | 1)
}
