use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ExperimentConfig;
use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::ldpc::LdpcCode;
use crate::network::{simulate, LinkKey, NetworkTopology, SeededRng, Transcript};
use crate::seed::derive_seed;
use crate::strategies::{DestinationObservation, Strategy, StrategyDecoder};

/// Floor for analytic tap crossovers, so noiseless links still give finite LLRs.
pub const MIN_CROSSOVER: f64 = 1e-9;
/// Frames decoded between checks of the stopping rule.
pub const BATCH_FRAMES: u64 = 64;
const MESSAGE_STREAM: u64 = 0x4D53_4753;

pub const CSV_HEADER: &str = "strategy,p,frames,bit_errors_a,bit_errors_b,ber_a,ber_b,mean_iters,conv_rate";

/// Which destination tap carries `c_A` alone and which carries `c_A ⊕ c_B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TapRoles {
    pub direct: LinkKey,
    pub combined: LinkKey,
    pub word_a: String,
    pub word_b: String,
}

pub fn tap_roles(topo: &NetworkTopology, node: u32) -> Result<TapRoles> {
    let taps = topo
        .taps(node)
        .ok_or_else(|| Error::Config(format!("node {node} has no destination taps")))?;
    let (mut direct, mut combined) = (None, None);
    for &link in taps {
        let words: Vec<&String> = topo.link_model(link).expect("taps are links").words.iter().collect();
        match words.len() {
            1 if direct.is_none() => direct = Some((link, words[0].clone())),
            2 if combined.is_none() => combined = Some((link, [words[0].clone(), words[1].clone()])),
            _ => {}
        }
    }
    let (Some((direct, word_a)), Some((combined, pair))) = (direct, combined) else {
        return Err(Error::Config(format!(
            "node {node} needs one tap carrying a single word and one carrying an XOR of two"
        )));
    };
    let word_b = match pair {
        [x, y] if x == word_a => y,
        [x, y] if y == word_a => x,
        _ => {
            return Err(Error::Config(format!(
                "combined tap {combined} does not include the direct word {word_a}"
            )))
        }
    };
    Ok(TapRoles {
        direct,
        combined,
        word_a,
        word_b,
    })
}

/// Decoding result of one strategy on one frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FrameResult {
    pub errors_a: u32,
    pub errors_b: u32,
    pub iterations: u32,
    pub converged: bool,
}

/// Everything fixed for one sweep point.
#[derive(Debug, Clone)]
pub struct PointContext {
    pub p: f64,
    pub topology: NetworkTopology,
    pub taps: TapRoles,
    pub p_direct: f64,
    pub p_combined: f64,
    pub rng: SeededRng,
}

/// Codes and decoders shared by every point of a sweep.
#[derive(Debug, Clone)]
pub struct SweepSetup {
    pub config: ExperimentConfig,
    decoder: StrategyDecoder,
}

impl SweepSetup {
    pub fn new(config: ExperimentConfig) -> Result<Self> {
        config.validate()?;
        let (a, b) = config.code.build()?;
        Ok(Self {
            decoder: StrategyDecoder::new(&a, &b)?,
            config,
        })
    }

    pub fn code_a(&self) -> &LdpcCode {
        self.decoder.code_a()
    }

    pub fn code_b(&self) -> &LdpcCode {
        self.decoder.code_b()
    }

    pub fn decoder(&self) -> &StrategyDecoder {
        &self.decoder
    }

    pub fn point(&self, p: f64) -> Result<PointContext> {
        let topology = self.config.topology(p)?;
        let taps = tap_roles(&topology, self.config.destination_node())?;
        let (p_direct, p_combined) = match self.config.llr_override {
            Some(o) => (o.p_direct, o.p_combined),
            None => (
                topology.effective_crossover(taps.direct).expect("tap exists").max(MIN_CROSSOVER),
                topology.effective_crossover(taps.combined).expect("tap exists").max(MIN_CROSSOVER),
            ),
        };
        Ok(PointContext {
            p,
            rng: SeededRng::new(derive_seed(&[self.config.seed, p.to_bits()])),
            topology,
            taps,
            p_direct,
            p_combined,
        })
    }

    /// Messages, transcript and destination observation of one frame.
    pub fn frame(&self, ctx: &PointContext, trial: u64) -> Result<(BitVector, BitVector, Transcript, DestinationObservation)> {
        let mut stream = ctx.rng.aux_stream(MESSAGE_STREAM, trial);
        let u_a = BitVector::random(self.code_a().k(), &mut stream);
        let u_b = BitVector::random(self.code_b().k(), &mut stream);
        let inputs = BTreeMap::from([
            (ctx.taps.word_a.clone(), self.code_a().encode(&u_a)?),
            (ctx.taps.word_b.clone(), self.code_b().encode(&u_b)?),
        ]);
        let tr = simulate(&ctx.topology, &inputs, &ctx.rng, trial)?;
        let rec = |l: LinkKey| tr.get(l).expect("tap simulated").y.clone();
        let obs = DestinationObservation::new(rec(ctx.taps.direct), rec(ctx.taps.combined), ctx.p_direct, ctx.p_combined)?;
        Ok((u_a, u_b, tr, obs))
    }

    /// Decodes one frame with every configured strategy, in config order.
    pub fn run_frame(&self, ctx: &PointContext, trial: u64) -> Result<Vec<FrameResult>> {
        let (u_a, u_b, _, obs) = self.frame(ctx, trial)?;
        self.config
            .strategies
            .iter()
            .map(|&s| {
                let out = self.decoder.decode::<f64>(s, &obs, self.config.max_iters)?;
                let ua = self.code_a().extract_message(&out.c_hat_a)?;
                let ub = self.code_b().extract_message(&out.c_hat_b)?;
                Ok(FrameResult {
                    errors_a: ua.hamming_distance(&u_a)? as u32,
                    errors_b: ub.hamming_distance(&u_b)? as u32,
                    iterations: out.iterations as u32,
                    converged: out.converged_a && out.converged_b,
                })
            })
            .collect()
    }

    /// Frames `start..end` in parallel; results are in trial order.
    pub fn run_frames(&self, ctx: &PointContext, start: u64, end: u64) -> Result<Vec<Vec<FrameResult>>> {
        (start..end).into_par_iter().map(|t| self.run_frame(ctx, t)).collect()
    }

    /// One sweep point under the stopping rule: batches of
    /// [`BATCH_FRAMES`] until every strategy has `min_errors` on its worse
    /// stream, or `max_frames` frames.
    pub fn run_point(&self, p: f64) -> Result<Vec<BerRecord>> {
        let ctx = self.point(p)?;
        let cfg = &self.config;
        let mut acc: Vec<Accumulator> = cfg
            .strategies
            .iter()
            .map(|&s| Accumulator::new(s, p, self.code_a().k(), self.code_b().k()))
            .collect();
        let mut next = 0;
        while next < cfg.max_frames && !acc.iter().all(|a| a.worse_errors() >= cfg.min_errors) {
            let end = (next + BATCH_FRAMES).min(cfg.max_frames);
            for frame in self.run_frames(&ctx, next, end)? {
                for (a, r) in acc.iter_mut().zip(&frame) {
                    a.add(r);
                }
            }
            next = end;
        }
        Ok(acc.iter().map(Accumulator::record).collect())
    }
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BerRecord {
    pub strategy: Strategy,
    pub p: f64,
    pub frames: u64,
    pub bit_errors_a: u64,
    pub bit_errors_b: u64,
    pub ber_a: f64,
    pub ber_b: f64,
    pub mean_iters: f64,
    pub conv_rate: f64,
}

/// Running totals for one (strategy, p).
#[derive(Debug, Clone)]
pub struct Accumulator {
    strategy: Strategy,
    p: f64,
    k_a: usize,
    k_b: usize,
    frames: u64,
    errors_a: u64,
    errors_b: u64,
    iterations: u64,
    converged: u64,
}

impl Accumulator {
    pub fn new(strategy: Strategy, p: f64, k_a: usize, k_b: usize) -> Self {
        Self {
            strategy,
            p,
            k_a,
            k_b,
            frames: 0,
            errors_a: 0,
            errors_b: 0,
            iterations: 0,
            converged: 0,
        }
    }

    pub fn add(&mut self, r: &FrameResult) {
        self.frames += 1;
        self.errors_a += u64::from(r.errors_a);
        self.errors_b += u64::from(r.errors_b);
        self.iterations += u64::from(r.iterations);
        self.converged += u64::from(r.converged);
    }

    pub fn worse_errors(&self) -> u64 {
        self.errors_a.max(self.errors_b)
    }

    pub fn record(&self) -> BerRecord {
        let frames = self.frames as f64;
        let ratio = |num: u64, den: f64| if den > 0.0 { num as f64 / den } else { 0.0 };
        BerRecord {
            strategy: self.strategy,
            p: self.p,
            frames: self.frames,
            bit_errors_a: self.errors_a,
            bit_errors_b: self.errors_b,
            ber_a: ratio(self.errors_a, frames * self.k_a as f64),
            ber_b: ratio(self.errors_b, frames * self.k_b as f64),
            mean_iters: ratio(self.iterations, frames),
            conv_rate: ratio(self.converged, frames),
        }
    }
}

/// Rayon pool sized by `NETRELAY_THREADS` (unset or 0: one per core).
pub fn thread_pool() -> Result<rayon::ThreadPool> {
    let threads = match std::env::var("NETRELAY_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::Config(format!("NETRELAY_THREADS={v:?} is not a count")))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Config(e.to_string()))
}

pub fn run_ber_sweep(cfg: &ExperimentConfig) -> Result<Vec<BerRecord>> {
    let setup = SweepSetup::new(cfg.clone())?;
    let pool = thread_pool()?;
    pool.install(|| {
        let mut out = Vec::new();
        for &p in &cfg.p_list {
            out.extend(setup.run_point(p)?);
        }
        Ok(out)
    })
}

pub fn records_to_csv(records: &[BerRecord]) -> String {
    let mut s = String::with_capacity(64 * (records.len() + 1));
    s.push_str(CSV_HEADER);
    s.push('\n');
    for r in records {
        writeln!(
            s,
            "{},{},{},{},{},{},{},{},{}",
            r.strategy, r.p, r.frames, r.bit_errors_a, r.bit_errors_b, r.ber_a, r.ber_b, r.mean_iters, r.conv_rate
        )
        .expect("writing to a String");
    }
    s
}
