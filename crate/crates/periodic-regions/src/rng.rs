//! Deterministic random numbers for the Monte Carlo oracles.
//!
//! The estimators promise bit-identical results for a given (seed, samples)
//! pair, across platforms and across releases of this crate. That rules out
//! depending on an external generator whose stream might change under a
//! version bump, so a small named generator lives here: SplitMix64, the
//! 64-bit mix by Steele, Lea and Flood. It is a counter-based bijection with
//! full period 2^64, passes BigCrush, and is four lines long, which makes the
//! reproducibility contract auditable.

/// SplitMix64 stream.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    /// Stream seeded directly by a 64-bit value.
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Independent substream `index` of a master seed.
    ///
    /// The pair is mixed through one SplitMix64 step each, so substreams of
    /// the same seed (and equal indices of different seeds) are decorrelated.
    /// Stratified estimators use one substream per stratum and combine the
    /// partial sums in fixed stratum order, keeping the total independent of
    /// any internal scheduling.
    pub fn substream(seed: u64, index: u64) -> Self {
        let mut outer = SplitMix64::new(seed);
        let base = outer.next_u64();
        SplitMix64::new(base ^ mix(index.wrapping_add(0x9e37_79b9_7f4a_7c15)))
    }

    /// Next raw 64-bit value.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        mix(self.state)
    }

    /// Uniform f64 in `[0, 1)`, using the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0)
    }

    /// Uniform f64 in the open interval `(0, 1)`.
    ///
    /// Rejects exact zeros (probability 2^-53 per draw) so samplers may
    /// divide by the variate or take logarithms.
    pub fn next_f64_open(&mut self) -> f64 {
        loop {
            let x = self.next_f64();
            if x > 0.0 {
                return x;
            }
        }
    }
}

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_stream_is_frozen() {
        // First outputs for seed 1234567, from the published SplitMix64
        // reference implementation. These values must never change.
        let mut rng = SplitMix64::new(1234567);
        assert_eq!(rng.next_u64(), 6457827717110365317);
        assert_eq!(rng.next_u64(), 3203168211198807973);
        assert_eq!(rng.next_u64(), 9817491932198370423);
    }

    #[test]
    fn zero_seed_stream_is_frozen() {
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 16294208416658607535);
        assert_eq!(rng.next_u64(), 7960286522194355700);
    }

    #[test]
    fn doubles_are_in_unit_interval() {
        let mut rng = SplitMix64::new(42);
        for _ in 0..10_000 {
            let x = rng.next_f64();
            assert!((0.0..1.0).contains(&x));
        }
    }

    #[test]
    fn doubles_have_plausible_mean() {
        let mut rng = SplitMix64::new(7);
        let n = 100_000;
        let mean = (0..n).map(|_| rng.next_f64()).sum::<f64>() / n as f64;
        // Standard error is about 1/sqrt(12 n) = 9e-4; allow five of them.
        assert!((mean - 0.5).abs() < 5e-3, "mean {mean}");
    }

    #[test]
    fn substreams_differ_and_are_deterministic() {
        let mut a = SplitMix64::substream(99, 0);
        let mut b = SplitMix64::substream(99, 1);
        let mut a2 = SplitMix64::substream(99, 0);
        let first_a = a.next_u64();
        assert_ne!(first_a, b.next_u64());
        assert_eq!(first_a, a2.next_u64());
    }
}
