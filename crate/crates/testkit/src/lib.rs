//! Independent oracles and seeded instance generators for validating the
//! rhomix library. Everything here is deliberately implemented from scratch
//! with different algorithms than the code under test: Gaussian elimination
//! instead of closed forms, Jacobi rotations instead of characteristic
//! polynomials, boolean matrix powers instead of BFS-based structure
//! analysis, and brute-force subset enumeration for symmetric polynomials.

#![allow(clippy::needless_range_loop)]

pub mod brute;
pub mod elim;
pub mod gen;
pub mod jacobi;
pub mod powers;

pub use rand_chacha::ChaCha8Rng;

/// Deterministic RNG for test sweeps.
pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}
