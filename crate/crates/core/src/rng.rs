//! Deterministic pseudo-random sampling.
//!
//! The verification report must be byte-stable across runs and toolchains,
//! so its randomized checks use this fixed SplitMix64 generator with pinned
//! seeds instead of an external RNG whose stream could change.

/// SplitMix64. The output stream for a given seed is fixed forever.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Uniform integer in the inclusive range `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    /// Nonzero integer in `-mag..=mag`.
    pub fn nonzero_int(&mut self, mag: i64) -> i64 {
        loop {
            let v = self.int_in(-mag, mag);
            if v != 0 {
                return v;
            }
        }
    }
}
