use rand_chacha::ChaCha8Rng;

use super::LinkKey;
use crate::seed::rng_from;

/// Domain tags keep link streams apart from other consumers of the seed.
const LINK_STREAM: u64 = 0x4C49_4E4B;
const AUX_STREAM: u64 = 0x4155_5849;

/// Master seed from which every per-link, per-trial stream is derived.
///
/// A stream is ChaCha8 seeded with the SplitMix64 fold of
/// `(tag, seed, from, to, trial)`. Keying by link endpoints rather than by
/// position means adding a link never shifts another link's noise, and
/// keying by trial makes trials order-independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeededRng {
    seed: u64,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn link_stream(&self, link: LinkKey, trial: u64) -> ChaCha8Rng {
        rng_from(&[LINK_STREAM, self.seed, u64::from(link.from), u64::from(link.to), trial])
    }

    /// Stream for anything that is not link noise (e.g. message bits),
    /// separated by a caller-chosen `purpose`.
    pub fn aux_stream(&self, purpose: u64, trial: u64) -> ChaCha8Rng {
        rng_from(&[AUX_STREAM, self.seed, purpose, trial])
    }
}
