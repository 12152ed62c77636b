//! Seedable RNG with independent substreams.
//!
//! Monte Carlo trials draw from `substream(seed, trial)` so estimates are
//! bit-reproducible and independent of how trials are scheduled across
//! threads.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn substream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}
