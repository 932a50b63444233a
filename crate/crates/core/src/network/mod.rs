//! Packet transport over DAGs of binary symmetric channels whose relays
//! forward or XOR hard-decided words.

mod builtin;
mod channel;
mod rng;
mod simulate;
mod topology;

pub use builtin::{butterfly, fig1_network, WORD_A, WORD_B};
pub use channel::{bsc_convolve, bsc_transmit, effective_crossover};
pub use rng::SeededRng;
pub use simulate::{simulate, LinkRecord, Transcript};
pub use topology::{
    DestinationTaps, LinkKey, LinkModel, LinkSpec, NetworkTopology, NodeRole, NodeSpec,
    SourceAssignment, TopologySpec,
};
