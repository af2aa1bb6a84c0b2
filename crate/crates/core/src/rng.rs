//! Reproducible random streams.
//!
//! Every random draw in the crate goes through [`RngSeed::rng`], which builds a
//! ChaCha8 generator (`rand_chacha::ChaCha8Rng`). The 64-bit seed is expanded
//! to the 256-bit ChaCha key with `SeedableRng::seed_from_u64` (a PCG32 key
//! schedule) and the stream id selects the ChaCha stream through
//! `set_stream`. ChaCha is a pure software cipher, so a given
//! `(seed, stream)` yields the same sequence on every platform.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// A seed plus a stream id selecting an independent substream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct RngSeed {
    pub seed: u64,
    pub stream: u64,
}

impl RngSeed {
    pub fn new(seed: u64) -> Self {
        RngSeed { seed, stream: 0 }
    }

    pub fn with_stream(self, stream: u64) -> Self {
        RngSeed { stream, ..self }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}

impl From<u64> for RngSeed {
    fn from(seed: u64) -> Self {
        RngSeed::new(seed)
    }
}
