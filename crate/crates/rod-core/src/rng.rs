//! Seed derivation and Gaussian variate generation.
//!
//! Every stochastic component takes an explicit `u64` seed and draws from its
//! own ChaCha8 stream. Parent seeds split into child seeds through a
//! SplitMix64 finalizer, so parallel work items get decorrelated streams that
//! depend only on `(parent, index)` — never on scheduling order.
//!
//! Normal variates use the Box-Muller transform: with `u1 in (0, 1]` and
//! `u2 in [0, 1)` drawn from the stream,
//!
//! ```text
//! z0 = sqrt(-2 ln u1) * cos(2 pi u2)
//! z1 = sqrt(-2 ln u1) * sin(2 pi u2)
//! ```
//!
//! emitted in pair order. The transform is pinned here (rather than taken
//! from a distributions crate) so seeded outputs survive dependency upgrades.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer; bijective on `u64` with full avalanche.
fn splitmix64(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derives the seed for child work item `index` of the stream seeded by
/// `parent`.
pub fn child_seed(parent: u64, index: u64) -> u64 {
    splitmix64(parent ^ splitmix64(index))
}

/// Deterministic stream of standard-normal variates (Box-Muller over a
/// ChaCha8 uniform stream).
#[derive(Debug, Clone)]
pub struct GaussianStream {
    rng: ChaCha8Rng,
    spare: Option<f64>,
}

impl GaussianStream {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            spare: None,
        }
    }

    /// Next standard-normal variate.
    pub fn next_normal(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        // 1 - u maps [0, 1) onto (0, 1], keeping the log argument positive.
        let u1: f64 = 1.0 - self.rng.random::<f64>();
        let u2: f64 = self.rng.random::<f64>();
        let radius = (-2.0 * u1.ln()).sqrt();
        let angle = std::f64::consts::TAU * u2;
        self.spare = Some(radius * angle.sin());
        radius * angle.cos()
    }
}
