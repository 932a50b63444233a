use std::collections::BTreeMap;

use super::{bsc_transmit, LinkKey, NetworkTopology, NodeRole, SeededRng};
use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Transmitted word, received word and error vector of one link.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkRecord {
    pub x: BitVector,
    pub y: BitVector,
    pub e: BitVector,
}

/// Everything that crossed every link during one trial.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Transcript {
    links: BTreeMap<LinkKey, LinkRecord>,
}

impl Transcript {
    pub fn get(&self, link: LinkKey) -> Option<&LinkRecord> {
        self.links.get(&link)
    }

    fn record(&self, from: u32, to: u32) -> &LinkRecord {
        self.links
            .get(&LinkKey::new(from, to))
            .unwrap_or_else(|| panic!("no link {from}->{to} in transcript"))
    }

    /// `X_{from,to}`. Panics if the link does not exist.
    pub fn x(&self, from: u32, to: u32) -> &BitVector {
        &self.record(from, to).x
    }

    pub fn y(&self, from: u32, to: u32) -> &BitVector {
        &self.record(from, to).y
    }

    pub fn e(&self, from: u32, to: u32) -> &BitVector {
        &self.record(from, to).e
    }

    pub fn iter(&self) -> impl Iterator<Item = (LinkKey, &LinkRecord)> {
        self.links.iter().map(|(k, r)| (*k, r))
    }

    /// Re-derives every relay output from the recorded upstream `Y`s and
    /// checks `Y = X ⊕ E` on every link.
    pub fn check_consistency(&self, topo: &NetworkTopology) -> Result<()> {
        for (key, rec) in &self.links {
            if rec.x.xor(&rec.e)? != rec.y {
                return Err(Error::Config(format!("Y != X xor E on {key}")));
            }
        }
        for &node in topo.order() {
            let expected = match topo.role(node) {
                Some(NodeRole::Forward | NodeRole::Xor) => self.relay_output(topo, node)?,
                _ => continue,
            };
            for out in topo.outgoing(node) {
                if self.links[out].x != expected {
                    return Err(Error::Config(format!("relay output mismatch on {out}")));
                }
            }
        }
        Ok(())
    }

    fn relay_output(&self, topo: &NetworkTopology, node: u32) -> Result<BitVector> {
        let mut inputs = topo.incoming(node).iter().map(|l| &self.links[l].y);
        let first = inputs.next().expect("relays have inputs").clone();
        inputs.try_fold(first, |acc, y| acc.xor(y))
    }
}

/// Runs one trial: sources emit their assigned words, forward nodes copy
/// their received word to every outgoing link, XOR nodes emit the XOR of
/// their two received words, and every link is a BSC.
pub fn simulate(
    topo: &NetworkTopology,
    inputs: &BTreeMap<String, BitVector>,
    rng: &SeededRng,
    trial: u64,
) -> Result<Transcript> {
    let mut len = None;
    for word in topo.words() {
        let v = inputs
            .get(word)
            .ok_or_else(|| Error::Config(format!("no input for source word {word:?}")))?;
        match len {
            None => len = Some(v.len()),
            Some(n) if n != v.len() => {
                return Err(Error::Config(format!(
                    "source word {word:?} has length {}, expected {n}",
                    v.len()
                )))
            }
            _ => {}
        }
    }

    let mut transcript = Transcript::default();
    for &node in topo.order() {
        let relayed = match topo.role(node).expect("ordered nodes exist") {
            NodeRole::Destination => continue,
            NodeRole::Source => None,
            NodeRole::Forward | NodeRole::Xor => Some(transcript.relay_output(topo, node)?),
        };
        for &out in topo.outgoing(node) {
            let x = match &relayed {
                Some(x) => x.clone(),
                None => inputs[topo.assigned_word(out).expect("validated")].clone(),
            };
            let p = topo.crossover(out).expect("validated");
            let (y, e) = bsc_transmit(&x, p, rng, out, trial);
            transcript.links.insert(out, LinkRecord { x, y, e });
        }
    }
    Ok(transcript)
}
