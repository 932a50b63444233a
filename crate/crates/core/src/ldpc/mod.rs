//! LDPC codes: construction, encoding and sum-product decoding.

mod code;
mod construct;
mod cycles;
mod decode;
mod graph;
mod llr;

pub use code::{LdpcCode, RegularParams};
pub use construct::{construct_correlated_pair, construct_regular};
pub use cycles::count_4cycles;
pub use decode::{sum_product_decode, DecodeResult, MESSAGE_CLAMP};
pub use graph::TannerGraph;
pub use llr::{bsc_llr, erased_llr, LlrVector};

/// `encode(code, u)`.
pub fn encode(code: &LdpcCode, u: &crate::gf2::BitVector) -> crate::Result<crate::gf2::BitVector> {
    code.encode(u)
}
