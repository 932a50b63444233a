use super::{build_h_extn, build_h_joint, DestinationObservation, Strategy, StrategyOutcome};
use crate::error::{dim, Result};
use crate::gf2::BitVector;
use crate::ldpc::{sum_product_decode, LdpcCode, LlrVector, TannerGraph};
use crate::network::bsc_convolve;
use crate::num::Real;

/// The four destination decoders for one code pair, with the joint and
/// extended Tanner graphs built once up front.
#[derive(Debug, Clone)]
pub struct StrategyDecoder {
    code_a: LdpcCode,
    code_b: LdpcCode,
    joint: TannerGraph,
    extended: TannerGraph,
}

impl StrategyDecoder {
    pub fn new(code_a: &LdpcCode, code_b: &LdpcCode) -> Result<Self> {
        let (ha, hb) = (code_a.parity_check(), code_b.parity_check());
        Ok(Self {
            joint: TannerGraph::from_matrix(&build_h_joint(ha, hb)?),
            extended: TannerGraph::from_matrix(&build_h_extn(ha, hb)?),
            code_a: code_a.clone(),
            code_b: code_b.clone(),
        })
    }

    pub fn code_a(&self) -> &LdpcCode {
        &self.code_a
    }

    pub fn code_b(&self) -> &LdpcCode {
        &self.code_b
    }

    pub fn n(&self) -> usize {
        self.code_a.n()
    }

    pub fn decode<T: Real>(
        &self,
        strategy: Strategy,
        obs: &DestinationObservation,
        max_iters: usize,
    ) -> Result<StrategyOutcome> {
        if obs.len() != self.n() {
            return Err(dim(format!(
                "observation length {} does not match code length {}",
                obs.len(),
                self.n()
            )));
        }
        match strategy {
            Strategy::Independent => self.independent::<T>(obs, max_iters),
            Strategy::Serial => self.serial::<T>(obs, max_iters),
            Strategy::Joint => self.joint::<T>(obs, max_iters),
            Strategy::Extended => self.extended::<T>(obs, max_iters),
        }
    }

    fn independent<T: Real>(&self, obs: &DestinationObservation, max_iters: usize) -> Result<StrategyOutcome> {
        let a = decode_word::<T>(self.code_a.graph(), &obs.y_direct, obs.p_direct, max_iters)?;
        let y_b = obs.y_direct.xor(&obs.y_combined)?;
        let p_b = bsc_convolve(obs.p_direct, obs.p_combined);
        let b = decode_word::<T>(self.code_b.graph(), &y_b, p_b, max_iters)?;
        Ok(StrategyOutcome::from_parts(a, b))
    }

    fn serial<T: Real>(&self, obs: &DestinationObservation, max_iters: usize) -> Result<StrategyOutcome> {
        let a = decode_word::<T>(self.code_a.graph(), &obs.y_direct, obs.p_direct, max_iters)?;
        // ĉ_A is used even when A did not converge.
        let y_b = a.0.xor(&obs.y_combined)?;
        let b = decode_word::<T>(self.code_b.graph(), &y_b, obs.p_combined, max_iters)?;
        Ok(StrategyOutcome::from_parts(a, b))
    }

    fn joint<T: Real>(&self, obs: &DestinationObservation, max_iters: usize) -> Result<StrategyOutcome> {
        let n = self.n();
        let prior = LlrVector::concat(&[
            &LlrVector::<T>::bsc(&obs.y_direct, T::of(obs.p_direct))?,
            &LlrVector::bsc(&obs.y_combined, T::of(obs.p_combined))?,
        ]);
        let r = sum_product_decode(&self.joint, &prior, max_iters)?;
        let c_hat_a = r.hard_decision.slice(0, n);
        let c_hat_ab = r.hard_decision.slice(n, 2 * n);
        Ok(StrategyOutcome {
            c_hat_b: c_hat_a.xor(&c_hat_ab)?,
            c_hat_a,
            converged_a: r.converged,
            converged_b: r.converged,
            iterations: r.iterations_used,
        })
    }

    fn extended<T: Real>(&self, obs: &DestinationObservation, max_iters: usize) -> Result<StrategyOutcome> {
        let n = self.n();
        let prior = LlrVector::concat(&[
            &LlrVector::<T>::bsc(&obs.y_direct, T::of(obs.p_direct))?,
            &LlrVector::erased(n),
            &LlrVector::bsc(&obs.y_combined, T::of(obs.p_combined))?,
        ]);
        let r = sum_product_decode(&self.extended, &prior, max_iters)?;
        Ok(StrategyOutcome {
            c_hat_a: r.hard_decision.slice(0, n),
            c_hat_b: r.hard_decision.slice(n, 2 * n),
            converged_a: r.converged,
            converged_b: r.converged,
            iterations: r.iterations_used,
        })
    }
}

/// One BSC-prior decode: (hard decision, converged, iterations).
pub(crate) fn decode_word<T: Real>(
    graph: &TannerGraph,
    y: &BitVector,
    p: f64,
    max_iters: usize,
) -> Result<(BitVector, bool, usize)> {
    let prior = LlrVector::<T>::bsc(y, T::of(p))?;
    let r = sum_product_decode(graph, &prior, max_iters)?;
    Ok((r.hard_decision, r.converged, r.iterations_used))
}

fn one_shot(
    strategy: Strategy,
    code_a: &LdpcCode,
    code_b: &LdpcCode,
    obs: &DestinationObservation,
    max_iters: usize,
) -> Result<StrategyOutcome> {
    StrategyDecoder::new(code_a, code_b)?.decode::<f64>(strategy, obs, max_iters)
}

/// Channel-decodes `c_A` from the direct tap, and `c_B` from the XOR of both
/// taps at the convolved crossover.
pub fn decode_independent(
    code_a: &LdpcCode,
    code_b: &LdpcCode,
    obs: &DestinationObservation,
    max_iters: usize,
) -> Result<StrategyOutcome> {
    one_shot(Strategy::Independent, code_a, code_b, obs, max_iters)
}

/// Decodes `c_A`, then strips `ĉ_A` from the combined tap before decoding `c_B`.
pub fn decode_serial(
    code_a: &LdpcCode,
    code_b: &LdpcCode,
    obs: &DestinationObservation,
    max_iters: usize,
) -> Result<StrategyOutcome> {
    one_shot(Strategy::Serial, code_a, code_b, obs, max_iters)
}

/// Decodes `[c_A, c_A ⊕ c_B]` on the joint graph; `ĉ_B = ĉ_A ⊕ ĉ_AB`.
pub fn decode_joint(
    code_a: &LdpcCode,
    code_b: &LdpcCode,
    obs: &DestinationObservation,
    max_iters: usize,
) -> Result<StrategyOutcome> {
    one_shot(Strategy::Joint, code_a, code_b, obs, max_iters)
}

/// Decodes `[c_A, c_B, c_A ⊕ c_B]` on the extended graph with `c_B` erased.
pub fn decode_extended(
    code_a: &LdpcCode,
    code_b: &LdpcCode,
    obs: &DestinationObservation,
    max_iters: usize,
) -> Result<StrategyOutcome> {
    one_shot(Strategy::Extended, code_a, code_b, obs, max_iters)
}
