use rand::Rng;

use super::{LinkKey, SeededRng};
use crate::gf2::BitVector;
use crate::num::Probability;

/// Crossover of two cascaded BSCs: `p1(1 − p2) + (1 − p1)p2`.
pub fn bsc_convolve<T: Probability>(p1: T, p2: T) -> T {
    p1.clone() * (T::one() - p2.clone()) + (T::one() - p1) * p2
}

/// Left fold of [`bsc_convolve`]; the empty path is noiseless.
pub fn effective_crossover<T: Probability>(path: &[T]) -> T {
    path.iter()
        .cloned()
        .fold(T::zero(), bsc_convolve)
}

/// Sends `x` over a BSC with crossover `p`, drawing the error vector from
/// the stream keyed by `(link, trial)`. Returns `(y, e)` with `y = x ⊕ e`.
pub fn bsc_transmit(
    x: &BitVector,
    p: f64,
    rng: &SeededRng,
    link: LinkKey,
    trial: u64,
) -> (BitVector, BitVector) {
    let mut e = BitVector::zeros(x.len());
    if p > 0.0 {
        let mut stream = rng.link_stream(link, trial);
        for i in 0..x.len() {
            if stream.gen::<f64>() < p {
                e.set(i, true);
            }
        }
    }
    let y = x.xor(&e).expect("error vector matches the word length");
    (y, e)
}
