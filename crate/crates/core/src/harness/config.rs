use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ldpc::{construct_correlated_pair, construct_regular, LdpcCode, RegularParams};
use crate::network::{butterfly, fig1_network, NetworkTopology, TopologySpec};
use crate::strategies::Strategy;

/// Network a sweep runs on. For `File`, every link's `p` in the file is a
/// multiplier applied to the sweep crossover.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum NetworkChoice {
    Butterfly { mult_26: f64 },
    Fig1,
    File { path: PathBuf },
}

/// How the second code relates to the first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodePair {
    /// Two independently drawn regular codes.
    #[default]
    Independent,
    /// `HB == HA`.
    Shared,
    /// Each `HB` column keeps all but one of the rows of the `HA` column.
    Correlated,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeConfig {
    pub n: usize,
    pub wc: usize,
    pub wr: usize,
    pub seed_a: u64,
    pub seed_b: u64,
    #[serde(default)]
    pub pair: CodePair,
}

impl Default for CodeConfig {
    fn default() -> Self {
        Self {
            n: 500,
            wc: 3,
            wr: 6,
            seed_a: 1,
            seed_b: 2,
            pair: CodePair::Independent,
        }
    }
}

impl CodeConfig {
    pub fn build(&self) -> Result<(LdpcCode, LdpcCode)> {
        let a = construct_regular(self.n, self.wc, self.wr, self.seed_a)?;
        let b = match self.pair {
            CodePair::Independent => construct_regular(self.n, self.wc, self.wr, self.seed_b)?,
            CodePair::Shared => a.clone(),
            CodePair::Correlated => {
                let h = construct_correlated_pair(a.parity_check(), self.seed_b)?;
                LdpcCode::from_parity_check(h)?.with_params(RegularParams {
                    wc: self.wc,
                    wr: self.wr,
                    seed: self.seed_b,
                })
            }
        };
        Ok((a, b))
    }
}

/// Replaces the analytic tap crossovers used for LLRs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrossoverOverride {
    pub p_direct: f64,
    pub p_combined: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub network: NetworkChoice,
    /// Observing node; defaults to 6 on the butterfly and 4 on the
    /// four-node network.
    #[serde(default)]
    pub destination: Option<u32>,
    #[serde(default)]
    pub code: CodeConfig,
    pub strategies: Vec<Strategy>,
    pub p_list: Vec<f64>,
    pub max_iters: usize,
    pub min_errors: u64,
    pub max_frames: u64,
    pub seed: u64,
    #[serde(default)]
    pub llr_override: Option<CrossoverOverride>,
    #[serde(default)]
    pub output: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            network: NetworkChoice::Butterfly { mult_26: 3.0 },
            destination: None,
            code: CodeConfig::default(),
            strategies: Strategy::ALL.to_vec(),
            p_list: vec![0.01, 0.02, 0.03],
            max_iters: 20,
            min_errors: 100,
            max_frames: 100_000,
            seed: 1,
            llr_override: None,
            output: None,
        }
    }
}

fn config(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let cfg: Self = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("configs always serialize")
    }

    pub fn destination_node(&self) -> u32 {
        self.destination.unwrap_or(match self.network {
            NetworkChoice::Fig1 => 4,
            _ => 6,
        })
    }

    /// Largest factor between the sweep `p` and any link crossover.
    fn max_multiplier(&self, file: Option<&TopologySpec>) -> f64 {
        match (&self.network, file) {
            (NetworkChoice::Butterfly { mult_26 }, _) => mult_26.max(1.0),
            (NetworkChoice::Fig1, _) => 1.0,
            (NetworkChoice::File { .. }, Some(spec)) => spec.links.iter().map(|l| l.p).fold(0.0, f64::max),
            (NetworkChoice::File { .. }, None) => 0.0,
        }
    }

    fn file_spec(&self) -> Result<Option<TopologySpec>> {
        match &self.network {
            NetworkChoice::File { path } => Ok(Some(NetworkTopology::load(path)?.spec().clone())),
            _ => Ok(None),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let c = &self.code;
        if c.n == 0 || c.wc < 2 || c.wr <= c.wc || !(c.n * c.wc).is_multiple_of(c.wr) {
            return Err(config(format!(
                "code parameters n={} wc={} wr={} need wr > wc >= 2 and wr | n*wc",
                c.n, c.wc, c.wr
            )));
        }
        if self.strategies.is_empty() {
            return Err(config("no strategies selected"));
        }
        let mut seen = self.strategies.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != self.strategies.len() {
            return Err(config("strategy listed twice"));
        }
        if self.p_list.is_empty() {
            return Err(config("empty p list"));
        }
        if self.max_iters == 0 || self.max_frames == 0 {
            return Err(config("max_iters and max_frames must be positive"));
        }
        if let NetworkChoice::Butterfly { mult_26 } = self.network {
            if !(mult_26 > 0.0) {
                return Err(config(format!("mult_26 must be positive, got {mult_26}")));
            }
        }
        let spec = self.file_spec()?;
        let mult = self.max_multiplier(spec.as_ref());
        for &p in &self.p_list {
            if !(p >= 0.0 && p * mult < 0.5) {
                return Err(config(format!(
                    "p = {p} with link multiplier {mult} leaves [0, 0.5)"
                )));
            }
        }
        if let Some(o) = self.llr_override {
            for q in [o.p_direct, o.p_combined] {
                if !(q > 0.0 && q < 0.5) {
                    return Err(config(format!("override crossover {q} outside (0, 0.5)")));
                }
            }
        }
        let probe = self.topology(self.p_list[0])?;
        super::sweep::tap_roles(&probe, self.destination_node())?;
        Ok(())
    }

    /// The network at sweep point `p`.
    pub fn topology(&self, p: f64) -> Result<NetworkTopology> {
        match &self.network {
            NetworkChoice::Butterfly { mult_26 } => butterfly(p, *mult_26),
            NetworkChoice::Fig1 => fig1_network(p, p, p, p),
            NetworkChoice::File { path } => {
                let mut spec = NetworkTopology::load(path)?.spec().clone();
                for l in &mut spec.links {
                    l.p *= p;
                }
                NetworkTopology::new(spec)
            }
        }
    }
}
