//! Command-line front end. Exit codes: 0 success, 1 usage or configuration
//! error, 2 verification failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::{
    records_to_csv, run_ber_sweep, run_region_report, run_verify, CodeConfig, CodePair, CrossoverOverride,
    ExperimentConfig, NetworkChoice,
};
use crate::error::{Error, Result};
use crate::ldpc::construct_regular;
use crate::rate_region::LinkParams;
use crate::strategies::Strategy;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "netrelay", version, about = "LDPC decoding over forwarding/XOR relay networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Monte-Carlo BER sweep; writes one CSV row per (p, strategy).
    Ber(BerArgs),
    /// Achievable rate regions of the four-node network as CSV.
    Regions(RegionArgs),
    /// Builds a regular 4-cycle-free code and writes it as alist.
    MakeCode(MakeCodeArgs),
    /// Runs the invariant suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum NetworkArg {
    Butterfly,
    Fig1,
}

#[derive(Debug, Args)]
struct BerArgs {
    /// JSON experiment config; when given, the sweep flags below are ignored.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "butterfly")]
    network: NetworkArg,
    /// Topology JSON whose link crossovers are multipliers of p.
    #[arg(long, conflicts_with = "network")]
    topology: Option<PathBuf>,
    /// Comma-separated crossovers; an entry `lo:hi:count` expands to evenly spaced points.
    #[arg(long, default_value = "0.01,0.02,0.03")]
    p_list: String,
    #[arg(long, default_value_t = 3.0)]
    mult_26: f64,
    #[arg(long)]
    destination: Option<u32>,
    #[arg(long, default_value_t = 500)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    wc: usize,
    #[arg(long, default_value_t = 6)]
    wr: usize,
    #[arg(long, default_value_t = 1)]
    seed_a: u64,
    #[arg(long, default_value_t = 2)]
    seed_b: u64,
    /// Use the A code for B as well.
    #[arg(long)]
    shared_code: bool,
    /// Derive the B code column-by-column from the A code.
    #[arg(long, conflicts_with = "shared_code")]
    correlated_code: bool,
    #[arg(long, default_value = "independent,serial,joint,extended")]
    strategies: String,
    #[arg(long, default_value_t = 20)]
    max_iters: usize,
    #[arg(long, default_value_t = 100)]
    min_errors: u64,
    #[arg(long, default_value_t = 100_000)]
    max_frames: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// LLR crossover for the direct tap instead of the analytic value.
    #[arg(long, requires = "p_combined")]
    p_direct: Option<f64>,
    #[arg(long, requires = "p_direct")]
    p_combined: Option<f64>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RegionArgs {
    #[arg(long, default_value_t = 0.05)]
    p13: f64,
    #[arg(long, default_value_t = 0.05)]
    p23: f64,
    #[arg(long, default_value_t = 0.05)]
    p34: f64,
    #[arg(long, default_value_t = 0.05)]
    p14: f64,
    #[arg(long, default_value_t = 101)]
    samples: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct MakeCodeArgs {
    #[arg(long, default_value_t = 500)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    wc: usize,
    #[arg(long, default_value_t = 6)]
    wr: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

/// Parses `0.01,0.02` and `lo:hi:count` entries.
pub fn parse_p_list(text: &str) -> Result<Vec<f64>> {
    let bad = |item: &str| Error::Config(format!("cannot parse p entry {item:?}"));
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let parts: Vec<&str> = item.split(':').collect();
        match parts[..] {
            [v] => out.push(v.parse().map_err(|_| bad(item))?),
            [lo, hi, count] => {
                let lo: f64 = lo.parse().map_err(|_| bad(item))?;
                let hi: f64 = hi.parse().map_err(|_| bad(item))?;
                let count: usize = count.parse().map_err(|_| bad(item))?;
                if count < 2 {
                    return Err(bad(item));
                }
                out.extend((0..count).map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64));
            }
            _ => return Err(bad(item)),
        }
    }
    Ok(out)
}

fn parse_strategies(text: &str) -> Result<Vec<Strategy>> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::parse).collect()
}

impl BerArgs {
    fn into_config(self) -> Result<ExperimentConfig> {
        if let Some(path) = &self.config {
            let mut cfg = ExperimentConfig::load(path)?;
            if self.out.is_some() {
                cfg.output = self.out;
            }
            return Ok(cfg);
        }
        let network = match (&self.topology, self.network) {
            (Some(path), _) => NetworkChoice::File { path: path.clone() },
            (None, NetworkArg::Butterfly) => NetworkChoice::Butterfly { mult_26: self.mult_26 },
            (None, NetworkArg::Fig1) => NetworkChoice::Fig1,
        };
        let pair = match (self.shared_code, self.correlated_code) {
            (true, _) => CodePair::Shared,
            (_, true) => CodePair::Correlated,
            _ => CodePair::Independent,
        };
        let cfg = ExperimentConfig {
            network,
            destination: self.destination,
            code: CodeConfig {
                n: self.n,
                wc: self.wc,
                wr: self.wr,
                seed_a: self.seed_a,
                seed_b: self.seed_b,
                pair,
            },
            strategies: parse_strategies(&self.strategies)?,
            p_list: parse_p_list(&self.p_list)?,
            max_iters: self.max_iters,
            min_errors: self.min_errors,
            max_frames: self.max_frames,
            seed: self.seed,
            llr_override: self.p_direct.zip(self.p_combined).map(|(p_direct, p_combined)| CrossoverOverride {
                p_direct,
                p_combined,
            }),
            output: self.out,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

fn emit(text: &str, path: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Ber(args) => {
            let cfg = args.into_config()?;
            let csv = records_to_csv(&run_ber_sweep(&cfg)?);
            emit(&csv, cfg.output.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Regions(a) => {
            let lp = LinkParams::new(a.p13, a.p23, a.p34, a.p14).map_err(|e| Error::Config(e.to_string()))?;
            let rep = run_region_report(&lp, a.samples).map_err(|e| Error::Config(e.to_string()))?;
            emit(&rep.csv, a.out.as_deref(), stdout)?;
            writeln!(stderr, "subset chain: {}", rep.chain_summary())?;
            Ok(if rep.chain.passed() { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::MakeCode(a) => {
            let code = construct_regular(a.n, a.wc, a.wr, a.seed)?;
            emit(&code.to_alist(), a.out.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify(a) => {
            let results = run_verify(a.seed)?;
            for r in &results {
                let verdict = if r.passed { "PASS" } else { "FAIL" };
                writeln!(stdout, "{verdict} {}: {}", r.name, r.detail)?;
            }
            Ok(if results.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_VERIFY })
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_CONFIG
        }
    }
}
