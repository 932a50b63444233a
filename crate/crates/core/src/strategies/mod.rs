//! Destination decoding strategies for a direct tap carrying `c_A` and a
//! combined tap carrying `c_A ⊕ c_B`.
//!
//! | strategy      | graph                        | `c_B` estimate                  |
//! |---------------|------------------------------|---------------------------------|
//! | `independent` | `HA`, then `HB`              | decode of `y_direct ⊕ y_comb`   |
//! | `serial`      | `HA`, then `HB`              | decode of `ĉ_A ⊕ y_comb`        |
//! | `joint`       | `[[HA,0],[HA⊕HB,HB]]`        | `ĉ_A ⊕ ĉ_AB`                    |
//! | `extended`    | `[[HA,0,0],[0,HB,0],[I,I,I]]` | middle block                    |

mod matrices;
mod multi;
mod pair;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{dim, Error, Result};
use crate::gf2::BitVector;

pub use matrices::{build_extended, build_h_extn, build_h_joint, nnz_accounting};
pub use multi::{extended_decode, peel_decode, MultiOutcome, ReceivedPacket};
pub use pair::{decode_extended, decode_independent, decode_joint, decode_serial, StrategyDecoder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Independent,
    Serial,
    Joint,
    Extended,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [
        Strategy::Independent,
        Strategy::Serial,
        Strategy::Joint,
        Strategy::Extended,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Independent => "independent",
            Strategy::Serial => "serial",
            Strategy::Joint => "joint",
            Strategy::Extended => "extended",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown strategy {s:?}")))
    }
}

/// What the destination sees: noisy `c_A` and noisy `c_A ⊕ c_B`, with the
/// crossover used to build each tap's LLRs.
#[derive(Debug, Clone, PartialEq)]
pub struct DestinationObservation {
    pub y_direct: BitVector,
    pub y_combined: BitVector,
    pub p_direct: f64,
    pub p_combined: f64,
}

impl DestinationObservation {
    pub fn new(y_direct: BitVector, y_combined: BitVector, p_direct: f64, p_combined: f64) -> Result<Self> {
        if y_direct.len() != y_combined.len() {
            return Err(dim(format!(
                "tap lengths differ: {} vs {}",
                y_direct.len(),
                y_combined.len()
            )));
        }
        for p in [p_direct, p_combined] {
            if !(p > 0.0 && p < 0.5) {
                return Err(Error::Parameter(format!("tap crossover {p} outside (0, 0.5)")));
            }
        }
        Ok(Self {
            y_direct,
            y_combined,
            p_direct,
            p_combined,
        })
    }

    pub fn len(&self) -> usize {
        self.y_direct.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y_direct.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyOutcome {
    pub c_hat_a: BitVector,
    pub c_hat_b: BitVector,
    pub converged_a: bool,
    pub converged_b: bool,
    /// Sum-product iterations over every constituent decode.
    pub iterations: usize,
}

impl StrategyOutcome {
    fn from_parts(a: (BitVector, bool, usize), b: (BitVector, bool, usize)) -> Self {
        Self {
            c_hat_a: a.0,
            c_hat_b: b.0,
            converged_a: a.1,
            converged_b: b.1,
            iterations: a.2 + b.2,
        }
    }
}
