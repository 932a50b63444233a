//! LDPC channel coding over networks whose relays only forward or XOR
//! hard-decided packets.
//!
//! * [`gf2`]: packed binary vectors, sparse binary matrices, elimination.
//! * [`ldpc`]: regular 4-cycle-free codes, encoding, sum-product decoding.
//! * [`network`]: BSC links, relay DAGs, the butterfly and four-node networks.
//! * [`strategies`]: independent, serial, joint and extended-graph decoding.
//! * [`rate_region`]: closed-form achievable rate regions.
//! * [`harness`]: Monte-Carlo BER sweeps, region reports and the CLI.
//!
//! Soft-information code is generic over [`num::Real`] (`f32`/`f64`) and the
//! crossover algebra over [`num::Probability`], which admits exact rationals.
//! The aliases below fix the common instantiations.

pub mod error;
pub mod gf2;
pub mod harness;
pub mod ldpc;
pub mod network;
pub mod num;
pub mod rate_region;
pub mod seed;
pub mod strategies;

pub use error::{Error, Result};

/// Arbitrary-precision rational, for exact checks of the crossover algebra.
pub type Rational = num_rational::BigRational;

pub type LlrVectorF64 = ldpc::LlrVector<f64>;
pub type LlrVectorF32 = ldpc::LlrVector<f32>;
pub type DecodeResultF64 = ldpc::DecodeResult<f64>;
pub type RateRegionF64 = rate_region::RateRegion<f64>;
pub type LinkParamsF64 = rate_region::LinkParams<f64>;
pub type ExactLinkParams = rate_region::LinkParams<Rational>;
