//! Counter-based random streams.
//!
//! Every stream is a ChaCha8 keystream: the key holds the user seed and the
//! purpose of the stream, the ChaCha stream id is the trial index. Any
//! trial can therefore be regenerated on its own, on any thread.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// What a stream is used for inside one trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamPurpose {
    /// Vehicles of `lane` ahead of the ego (`forward`) or behind it.
    Lane { lane: u32, forward: bool },
    /// RCS fluctuation of the target.
    Fluctuation,
}

impl StreamPurpose {
    fn id(self) -> u64 {
        match self {
            Self::Fluctuation => 1,
            Self::Lane { lane, forward } => 0x100 + 2 * u64::from(lane) + u64::from(forward),
        }
    }
}

/// Stream factory for one trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialStreams {
    pub seed: u64,
    pub trial: u64,
}

impl TrialStreams {
    pub fn new(seed: u64, trial: u64) -> Self {
        Self { seed, trial }
    }

    pub fn stream(&self, purpose: StreamPurpose) -> ChaCha8Rng {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&self.seed.to_le_bytes());
        key[8..16].copy_from_slice(&purpose.id().to_le_bytes());
        let mut rng = ChaCha8Rng::from_seed(key);
        rng.set_stream(self.trial);
        rng
    }
}
