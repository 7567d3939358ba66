//! Seedable, splittable random streams.
//!
//! Every sampler takes an explicit `&mut R: Rng`. Experiments derive one
//! independent stream per trial with [`stream`], so results depend only on
//! `(root_seed, stream_id)` and never on scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

/// Stream `id` of the generator rooted at `root_seed`.
pub fn stream(root_seed: u64, id: u64) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(root_seed);
    rng.set_stream(id);
    rng
}
