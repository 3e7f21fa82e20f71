//! Seedable random numbers with a pinned algorithm.
//!
//! Sampling results are part of the crate's observable behaviour
//! (`measure_sample` is deterministic per seed), so the generator is
//! pinned to a specific published algorithm rather than delegated to a
//! library whose stream may change between versions.

/// SplitMix64 (Steele, Lea & Vigna; the `SplittableRandom` finalizer).
///
/// 64 bits of state, period 2⁶⁴, output sequence fully determined by the
/// seed and stable across platforms. Plenty for sampling measurement
/// outcomes and probe vectors; not a cryptographic generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 random mantissa bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform in `{0, 1, ..., bound − 1}` (Lemire multiply-shift;
    /// the ≤ 2⁻⁵⁸ bias at desk-scale bounds is irrelevant here).
    pub fn below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        (((self.next_u64() as u128) * (bound as u128)) >> 64) as usize
    }
}
