//! Experiment runner: BER sweeps, rate-region reports, invariant suites and
//! the `netrelay` command line.

pub mod cli;
mod config;
mod regions;
mod sweep;
mod verify;

pub use config::{CodeConfig, CodePair, CrossoverOverride, ExperimentConfig, NetworkChoice};
pub use regions::{run_region_report, RegionReport, REGION_CSV_HEADER};
pub use sweep::{
    records_to_csv, run_ber_sweep, tap_roles, thread_pool, Accumulator, BerRecord, FrameResult, PointContext,
    SweepSetup, TapRoles, BATCH_FRAMES, CSV_HEADER, MIN_CROSSOVER,
};
pub use verify::{k33_code, ml_decode, run_verify, CheckResult};
