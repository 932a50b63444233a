//! Destinations that receive several noisy XOR combinations of more than
//! two source codewords. The butterfly is the two-source special case with
//! packets `{A}` and `{A, B}`.

use super::build_extended;
use super::pair::decode_word;
use crate::error::{dim, Error, Result};
use crate::gf2::BitVector;
use crate::ldpc::{sum_product_decode, LdpcCode, LlrVector, TannerGraph};
use crate::num::Real;

/// Noisy copy of the XOR of the source codewords listed in `sources`,
/// received through a BSC with crossover `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReceivedPacket {
    pub sources: Vec<usize>,
    pub y: BitVector,
    pub p: f64,
}

impl ReceivedPacket {
    pub fn new(sources: Vec<usize>, y: BitVector, p: f64) -> Self {
        Self { sources, y, p }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultiOutcome {
    pub codewords: Vec<BitVector>,
    pub converged: Vec<bool>,
    pub iterations: usize,
}

fn validate(codes: &[&LdpcCode], packets: &[ReceivedPacket]) -> Result<usize> {
    let n = codes.first().ok_or_else(|| dim("no source codes"))?.n();
    if codes.iter().any(|c| c.n() != n) {
        return Err(dim("source codes differ in length"));
    }
    for (i, pk) in packets.iter().enumerate() {
        let mut s = pk.sources.clone();
        s.sort_unstable();
        s.dedup();
        if s.is_empty() || s.len() != pk.sources.len() || s.iter().any(|&x| x >= codes.len()) {
            return Err(Error::Config(format!("packet {i} has invalid sources {:?}", pk.sources)));
        }
        if pk.y.len() != n {
            return Err(dim(format!("packet {i} has length {}, expected {n}", pk.y.len())));
        }
    }
    Ok(n)
}

/// Serial peeling: repeatedly pick the first packet with exactly one
/// undecoded source, strip the already decoded codewords from it and
/// channel-decode what remains.
pub fn peel_decode<T: Real>(
    codes: &[&LdpcCode],
    packets: &[ReceivedPacket],
    max_iters: usize,
) -> Result<MultiOutcome> {
    validate(codes, packets)?;
    let mut decoded: Vec<Option<(BitVector, bool)>> = vec![None; codes.len()];
    let mut used = vec![false; packets.len()];
    let mut iterations = 0;
    loop {
        let next = packets.iter().enumerate().find_map(|(i, pk)| {
            let mut open = pk.sources.iter().filter(|&&s| decoded[s].is_none());
            match (used[i], open.next(), open.next()) {
                (false, Some(&s), None) => Some((i, s)),
                _ => None,
            }
        });
        let Some((i, target)) = next else { break };
        used[i] = true;
        let pk = &packets[i];
        let mut y = pk.y.clone();
        for &s in pk.sources.iter().filter(|&&s| s != target) {
            y.xor_assign(&decoded[s].as_ref().expect("known").0)?;
        }
        let (c, conv, it) = decode_word::<T>(codes[target].graph(), &y, pk.p, max_iters)?;
        iterations += it;
        decoded[target] = Some((c, conv));
    }
    if let Some(s) = decoded.iter().position(Option::is_none) {
        return Err(Error::Config(format!("packets cannot be peeled down to source {s}")));
    }
    let (codewords, converged) = decoded.into_iter().map(Option::unwrap).unzip();
    Ok(MultiOutcome {
        codewords,
        converged,
        iterations,
    })
}

/// One sum-product decode over the extended graph: a block per source
/// codeword and a block per multi-source packet, tied by identity checks.
/// Sources with no direct observation start erased.
pub fn extended_decode<T: Real>(
    codes: &[&LdpcCode],
    packets: &[ReceivedPacket],
    max_iters: usize,
) -> Result<MultiOutcome> {
    let n = validate(codes, packets)?;
    let mut source_prior = vec![vec![T::zero(); n]; codes.len()];
    let mut combos = Vec::new();
    let mut combo_priors = Vec::new();
    for pk in packets {
        let llr = LlrVector::<T>::bsc(&pk.y, T::of(pk.p))?;
        if let [s] = pk.sources[..] {
            for (acc, &v) in source_prior[s].iter_mut().zip(llr.values()) {
                *acc = *acc + v;
            }
        } else {
            combos.push(pk.sources.clone());
            combo_priors.push(llr);
        }
    }
    let hs: Vec<_> = codes.iter().map(|c| c.parity_check()).collect();
    let graph = TannerGraph::from_matrix(&build_extended(&hs, &combos)?);
    let source_prior = source_prior
        .into_iter()
        .map(LlrVector::from_values)
        .collect::<Result<Vec<_>>>()?;
    let parts: Vec<&LlrVector<T>> = source_prior.iter().chain(&combo_priors).collect();
    let r = sum_product_decode(&graph, &LlrVector::concat(&parts), max_iters)?;
    Ok(MultiOutcome {
        codewords: (0..codes.len()).map(|s| r.hard_decision.slice(s * n, (s + 1) * n)).collect(),
        converged: vec![r.converged; codes.len()],
        iterations: r.iterations_used,
    })
}
