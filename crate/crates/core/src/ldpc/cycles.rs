use crate::gf2::SparseGf2Matrix;

/// Number of length-4 cycles in the Tanner graph of `h`.
///
/// Two columns sharing `s` rows close `C(s, 2)` four-cycles.
pub fn count_4cycles(h: &SparseGf2Matrix) -> u64 {
    let mut shared = vec![0u32; h.cols()];
    let mut touched = Vec::new();
    let mut total = 0u64;
    for c in 0..h.cols() {
        for &r in h.col(c) {
            for &other in h.row(r) {
                if other > c {
                    if shared[other] == 0 {
                        touched.push(other);
                    }
                    shared[other] += 1;
                }
            }
        }
        for other in touched.drain(..) {
            let s = u64::from(shared[other]);
            total += s * (s - 1) / 2;
            shared[other] = 0;
        }
    }
    total
}
