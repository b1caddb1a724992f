//! Deterministic random streams.
//!
//! Every random decision in the crate is drawn from a [`ChaCha8Rng`] keyed by
//! a 64-bit seed and a stream id. ChaCha is counter-based, so independent
//! streams split from one seed never overlap and the output is identical on
//! every platform. Integer draws go through [`uniform_index`], which samples
//! in `u64` so results do not depend on the width of `usize`; rand's slice
//! helpers sample in `u32` below 2^32 and are likewise width-independent.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use rand_chacha::ChaCha8Rng as StreamRng;

/// Named sub-streams; keep these stable, changing one changes every result.
pub mod stream {
    pub const GENERATOR: u64 = 0;
    pub const INIT_EXPERTISE: u64 = 1;
    pub const INIT_CURIOUS: u64 = 2;
    pub const INIT_ENTHUSIASTIC: u64 = 3;
    pub const INIT_SUPPORTER: u64 = 4;
    pub const DYNAMICS: u64 = 5;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RngSeed(pub u64);

impl RngSeed {
    pub fn stream(self, id: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.0);
        rng.set_stream(id);
        rng
    }

    pub fn offset(self, by: u64) -> RngSeed {
        RngSeed(self.0.wrapping_add(by))
    }
}

impl From<u64> for RngSeed {
    fn from(seed: u64) -> Self {
        RngSeed(seed)
    }
}

impl std::fmt::Display for RngSeed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Uniform integer in `0..n`. Panics if `n == 0`.
#[inline]
pub fn uniform_index<R: Rng + ?Sized>(rng: &mut R, n: usize) -> usize {
    rng.gen_range(0..n as u64) as usize
}

/// Bernoulli trial with the strict `draw < p` convention.
#[inline]
pub fn bernoulli<R: Rng + ?Sized>(rng: &mut R, p: f64) -> bool {
    rng.gen::<f64>() < p
}

/// In-place uniform shuffle.
pub fn shuffle<T, R: Rng + ?Sized>(rng: &mut R, items: &mut [T]) {
    items.shuffle(rng);
}

/// `amount` distinct indices from `0..n`, uniformly, in draw order.
pub fn sample_indices<R: Rng + ?Sized>(rng: &mut R, n: usize, amount: usize) -> Vec<usize> {
    rand::seq::index::sample(rng, n, amount).into_vec()
}

/// Count of failures before the first success of a Bernoulli(1 - p) trial,
/// i.e. a geometric variate with mean `p / (1 - p)`.
pub fn geometric_failures<R: Rng + ?Sized>(rng: &mut R, p: f64) -> usize {
    let mut count = 0;
    while bernoulli(rng, p) {
        count += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_independent_and_reproducible() {
        let seed = RngSeed(42);
        let a: Vec<u64> = (0..4).map(|_| seed.stream(0).gen()).collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
        let x: u64 = seed.stream(0).gen();
        let y: u64 = seed.stream(1).gen();
        assert_ne!(x, y);
    }

    #[test]
    fn sample_indices_distinct() {
        let mut rng = RngSeed(7).stream(0);
        let mut s = sample_indices(&mut rng, 50, 50);
        s.sort_unstable();
        assert_eq!(s, (0..50).collect::<Vec<_>>());
        let s = sample_indices(&mut rng, 10, 0);
        assert!(s.is_empty());
    }

    #[test]
    fn geometric_mean_matches() {
        let mut rng = RngSeed(3).stream(0);
        let n = 200_000;
        let total: usize = (0..n).map(|_| geometric_failures(&mut rng, 0.37)).sum();
        let mean = total as f64 / n as f64;
        let expected = 0.37 / 0.63;
        assert!((mean - expected).abs() < 0.01, "{mean} vs {expected}");
        assert_eq!(geometric_failures(&mut rng, 0.0), 0);
    }
}
