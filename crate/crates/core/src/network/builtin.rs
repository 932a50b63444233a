use super::{
    DestinationTaps, LinkKey, LinkSpec, NetworkTopology, NodeRole, NodeSpec, SourceAssignment,
    TopologySpec,
};
use crate::error::{Error, Result};

pub const WORD_A: &str = "A";
pub const WORD_B: &str = "B";

fn node(id: u32, role: NodeRole) -> NodeSpec {
    NodeSpec { id, role }
}

fn link(from: u32, to: u32, p: f64) -> LinkSpec {
    LinkSpec { from, to, p }
}

fn assign(from: u32, to: u32, word: &str) -> SourceAssignment {
    SourceAssignment {
        from,
        to,
        word: word.to_string(),
    }
}

/// The seven-node butterfly.
///
/// Source 1 sends `c_A` on 1→2 and `c_B` on 1→3; nodes 2, 3 and 5 forward;
/// node 4 XORs its two inputs. Destination 6 taps 2→6 and 5→6, destination 7
/// taps 3→7 and 5→7. Every link has crossover `p` except 2→6, which has
/// `mult_26 · p`.
pub fn butterfly(p: f64, mult_26: f64) -> Result<NetworkTopology> {
    let p26 = mult_26 * p;
    if !((0.0..0.5).contains(&p) && (0.0..0.5).contains(&p26)) {
        return Err(Error::Parameter(format!(
            "butterfly needs p and {mult_26}*p in [0, 0.5), got p = {p}"
        )));
    }
    use NodeRole::*;
    NetworkTopology::new(TopologySpec {
        nodes: vec![
            node(1, Source),
            node(2, Forward),
            node(3, Forward),
            node(4, Xor),
            node(5, Forward),
            node(6, Destination),
            node(7, Destination),
        ],
        links: vec![
            link(1, 2, p),
            link(1, 3, p),
            link(2, 4, p),
            link(2, 6, p26),
            link(3, 4, p),
            link(3, 7, p),
            link(4, 5, p),
            link(5, 6, p),
            link(5, 7, p),
        ],
        source_assignments: vec![assign(1, 2, WORD_A), assign(1, 3, WORD_B)],
        destination_taps: vec![
            DestinationTaps {
                node: 6,
                links: vec![LinkKey::new(2, 6), LinkKey::new(5, 6)],
            },
            DestinationTaps {
                node: 7,
                links: vec![LinkKey::new(3, 7), LinkKey::new(5, 7)],
            },
        ],
    })
}

/// The four-node network behind the rate-region analysis.
///
/// Node 1 sends one word on both 1→3 and 1→4, node 2 sends on 2→3, node 3
/// XORs onto 3→4, and destination 4 taps 1→4 and 3→4.
pub fn fig1_network(p13: f64, p23: f64, p34: f64, p14: f64) -> Result<NetworkTopology> {
    use NodeRole::*;
    NetworkTopology::new(TopologySpec {
        nodes: vec![node(1, Source), node(2, Source), node(3, Xor), node(4, Destination)],
        links: vec![
            link(1, 3, p13),
            link(1, 4, p14),
            link(2, 3, p23),
            link(3, 4, p34),
        ],
        source_assignments: vec![assign(1, 3, WORD_A), assign(1, 4, WORD_A), assign(2, 3, WORD_B)],
        destination_taps: vec![DestinationTaps {
            node: 4,
            links: vec![LinkKey::new(1, 4), LinkKey::new(3, 4)],
        }],
    })
}
