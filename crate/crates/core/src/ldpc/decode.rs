//! LLR-domain sum-product decoding with a flooding schedule.
//!
//! One iteration updates every bit-to-check message from the previous
//! check-to-bit messages, then every check-to-bit message with the exact
//! tanh rule. The syndrome of the a-posteriori hard decision is checked
//! before the first iteration and after each one, so a prior that is already
//! a codeword reports zero iterations.

use super::{LlrVector, TannerGraph};
use crate::error::Result;
use crate::gf2::BitVector;
use crate::num::Real;

/// Message magnitude cap; keeps `atanh` of a product that rounds to ±1 finite.
pub const MESSAGE_CLAMP: f64 = 30.0;

#[derive(Debug, Clone, PartialEq)]
pub struct DecodeResult<T> {
    pub hard_decision: BitVector,
    /// The hard decision satisfies every check.
    pub converged: bool,
    pub iterations_used: usize,
    /// A-posteriori LLRs after the last completed iteration.
    pub posterior: Vec<T>,
}

pub fn sum_product_decode<T: Real>(
    graph: &TannerGraph,
    prior: &LlrVector<T>,
    max_iters: usize,
) -> Result<DecodeResult<T>> {
    prior.check_len(graph.bit_count())?;
    let prior = prior.values();
    let clamp = T::of(MESSAGE_CLAMP);
    let two = T::two();
    let edges = graph.edge_count();

    let mut to_check = vec![T::zero(); edges];
    let mut to_bit = vec![T::zero(); edges];
    let mut tanh_buf = Vec::new();
    let mut suffix = Vec::new();
    let mut posterior = prior.to_vec();
    let mut hard: Vec<bool> = posterior.iter().map(|&v| v < T::zero()).collect();

    let mut iterations = 0;
    let mut converged = graph.satisfied_by(&hard);
    while !converged && iterations < max_iters {
        iterations += 1;

        for (b, &p) in prior.iter().enumerate() {
            let incident = graph.bit_edges(b);
            let total = incident.iter().fold(p, |acc, &e| acc + to_bit[e]);
            for &e in incident {
                to_check[e] = (total - to_bit[e]).max(-clamp).min(clamp);
            }
        }

        for c in 0..graph.check_count() {
            let range = graph.check_edges(c);
            tanh_buf.clear();
            // tanh(m/2) = expm1(m) / (expm1(m) + 2)
            tanh_buf.extend(range.clone().map(|e| {
                let x = to_check[e].exp_m1();
                x / (x + two)
            }));

            // Product over all other edges via prefix/suffix products, so a
            // zero factor never needs a division.
            let d = tanh_buf.len();
            suffix.clear();
            suffix.resize(d + 1, T::one());
            for i in (0..d).rev() {
                suffix[i] = suffix[i + 1] * tanh_buf[i];
            }
            let mut prefix = T::one();
            for (i, e) in range.enumerate() {
                let others = prefix * suffix[i + 1];
                // 2·atanh(t) = ln1p(2t / (1 - t))
                let llr = (two * others / (T::one() - others)).ln_1p();
                to_bit[e] = llr.max(-clamp).min(clamp);
                prefix = prefix * tanh_buf[i];
            }
        }

        for (b, &p) in prior.iter().enumerate() {
            let v = graph.bit_edges(b).iter().fold(p, |acc, &e| acc + to_bit[e]);
            posterior[b] = v;
            hard[b] = v < T::zero();
        }
        converged = graph.satisfied_by(&hard);
    }

    Ok(DecodeResult {
        hard_decision: BitVector::from_bools(hard),
        converged,
        iterations_used: iterations,
        posterior,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::SparseGf2Matrix;
    use crate::ldpc::bsc_llr;

    fn hamming_graph() -> TannerGraph {
        TannerGraph::from_matrix(
            &SparseGf2Matrix::from_strs(&["1101100", "1011010", "0111001"]).unwrap(),
        )
    }

    #[test]
    fn codeword_prior_stops_before_first_iteration() {
        let g = hamming_graph();
        let c: BitVector = "1110000".parse().unwrap();
        assert!(g.is_codeword(&c));
        let r = sum_product_decode(&g, &bsc_llr(&c, 0.05).unwrap(), 20).unwrap();
        assert!(r.converged);
        assert_eq!(r.iterations_used, 0);
        assert_eq!(r.hard_decision, c);
    }

    #[test]
    fn corrects_single_flip() {
        let g = hamming_graph();
        let c: BitVector = "1110000".parse().unwrap();
        let mut y = c.clone();
        y.flip(4);
        let r = sum_product_decode(&g, &bsc_llr(&y, 0.05).unwrap(), 20).unwrap();
        assert!(r.converged);
        assert!(r.iterations_used >= 1);
        assert_eq!(r.hard_decision, c);
    }

    #[test]
    fn erased_prior_reports_consistently() {
        let g = hamming_graph();
        let r = sum_product_decode(&g, &LlrVector::<f64>::erased(7), 5).unwrap();
        assert_eq!(r.converged, g.is_codeword(&r.hard_decision));
        // All-zero LLRs tie-break to the all-zero word, which is a codeword.
        assert!(r.converged);
        assert_eq!(r.iterations_used, 0);
    }

    #[test]
    fn prior_length_checked() {
        let g = hamming_graph();
        assert!(sum_product_decode(&g, &LlrVector::<f64>::erased(6), 5).is_err());
    }

    #[test]
    fn saturated_priors_stay_finite() {
        let g = hamming_graph();
        let y: BitVector = "1111111".parse().unwrap();
        let prior = LlrVector::from_values(vec![-1e6; 7]).unwrap();
        let r = sum_product_decode(&g, &prior, 10).unwrap();
        assert!(r.posterior.iter().all(|v: &f64| v.is_finite()));
        assert_eq!(r.hard_decision, y);
    }

    #[test]
    fn f32_agrees_with_f64_on_hard_decisions() {
        let g = hamming_graph();
        for pos in 0..7 {
            let mut y = BitVector::zeros(7);
            y.flip(pos);
            let r64 = sum_product_decode(&g, &LlrVector::<f64>::bsc(&y, 0.05).unwrap(), 20).unwrap();
            let r32 = sum_product_decode(&g, &LlrVector::<f32>::bsc(&y, 0.05).unwrap(), 20).unwrap();
            assert_eq!(r64.hard_decision, r32.hard_decision);
            assert_eq!(r64.converged, r32.converged);
        }
    }
}
