use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::effective_crossover;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LinkKey {
    pub from: u32,
    pub to: u32,
}

impl LinkKey {
    pub const fn new(from: u32, to: u32) -> Self {
        Self { from, to }
    }
}

impl fmt::Display for LinkKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.from, self.to)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeRole {
    Source,
    Forward,
    Xor,
    Destination,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeSpec {
    pub id: u32,
    pub role: NodeRole,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkSpec {
    pub from: u32,
    pub to: u32,
    /// BSC crossover probability, in `[0, 0.5)`.
    pub p: f64,
}

impl LinkSpec {
    pub fn key(&self) -> LinkKey {
        LinkKey::new(self.from, self.to)
    }
}

/// Codeword `word` enters the network on source link `from -> to`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SourceAssignment {
    pub from: u32,
    pub to: u32,
    pub word: String,
}

/// Incoming links observed by a destination.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DestinationTaps {
    pub node: u32,
    pub links: Vec<LinkKey>,
}

/// On-disk (JSON) form of a topology.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopologySpec {
    pub nodes: Vec<NodeSpec>,
    pub links: Vec<LinkSpec>,
    pub source_assignments: Vec<SourceAssignment>,
    pub destination_taps: Vec<DestinationTaps>,
}

/// What a link carries: the XOR of a set of source words plus the XOR of
/// the error vectors of a set of links.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkModel {
    pub words: BTreeSet<String>,
    pub error_links: BTreeSet<LinkKey>,
}

/// Validated relay network: a DAG of BSC links between source, forward,
/// XOR and destination nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkTopology {
    spec: TopologySpec,
    roles: BTreeMap<u32, NodeRole>,
    order: Vec<u32>,
    incoming: BTreeMap<u32, Vec<LinkKey>>,
    outgoing: BTreeMap<u32, Vec<LinkKey>>,
    crossover: BTreeMap<LinkKey, f64>,
    assignment: BTreeMap<LinkKey, String>,
    models: BTreeMap<LinkKey, LinkModel>,
}

fn config(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}

impl NetworkTopology {
    pub fn new(spec: TopologySpec) -> Result<Self> {
        let mut roles = BTreeMap::new();
        for n in &spec.nodes {
            if roles.insert(n.id, n.role).is_some() {
                return Err(config(format!("node {} declared twice", n.id)));
            }
        }

        let mut incoming: BTreeMap<u32, Vec<LinkKey>> = roles.keys().map(|&id| (id, Vec::new())).collect();
        let mut outgoing = incoming.clone();
        let mut crossover = BTreeMap::new();
        for l in &spec.links {
            let key = l.key();
            if !roles.contains_key(&l.from) || !roles.contains_key(&l.to) {
                return Err(config(format!("link {key} references an unknown node")));
            }
            if l.from == l.to {
                return Err(config(format!("self-loop {key}")));
            }
            if !(l.p >= 0.0 && l.p < 0.5) {
                return Err(config(format!("link {key} crossover {} outside [0, 0.5)", l.p)));
            }
            if crossover.insert(key, l.p).is_some() {
                return Err(config(format!("link {key} declared twice")));
            }
            outgoing.get_mut(&l.from).expect("checked").push(key);
            incoming.get_mut(&l.to).expect("checked").push(key);
        }

        for (&id, &role) in &roles {
            let (ins, outs) = (incoming[&id].len(), outgoing[&id].len());
            let ok = match role {
                NodeRole::Source => ins == 0 && outs > 0,
                NodeRole::Forward => ins == 1,
                NodeRole::Xor => ins == 2,
                NodeRole::Destination => outs == 0,
            };
            if !ok {
                return Err(config(format!(
                    "node {id} ({role:?}) has {ins} inputs and {outs} outputs"
                )));
            }
        }

        let order = topological_order(&roles, &incoming, &outgoing)?;

        let mut assignment = BTreeMap::new();
        for a in &spec.source_assignments {
            let key = LinkKey::new(a.from, a.to);
            if roles.get(&a.from) != Some(&NodeRole::Source) || !crossover.contains_key(&key) {
                return Err(config(format!("assignment on {key}, which is not a source link")));
            }
            if assignment.insert(key, a.word.clone()).is_some() {
                return Err(config(format!("source link {key} assigned twice")));
            }
        }
        for (&id, _) in roles.iter().filter(|(_, &r)| r == NodeRole::Source) {
            if let Some(missing) = outgoing[&id].iter().find(|k| !assignment.contains_key(k)) {
                return Err(config(format!("source link {missing} has no assigned word")));
            }
        }

        let mut topo = Self {
            spec,
            roles,
            order,
            incoming,
            outgoing,
            crossover,
            assignment,
            models: BTreeMap::new(),
        };
        topo.models = topo.build_models();

        for taps in &topo.spec.destination_taps {
            if topo.roles.get(&taps.node) != Some(&NodeRole::Destination) {
                return Err(config(format!("taps declared on non-destination node {}", taps.node)));
            }
            for link in &taps.links {
                if link.to != taps.node || !topo.crossover.contains_key(link) {
                    return Err(config(format!("node {} cannot tap link {link}", taps.node)));
                }
                if topo.models[link].words.is_empty() {
                    return Err(config(format!("tap {link} carries no source word")));
                }
            }
        }
        Ok(topo)
    }

    fn build_models(&self) -> BTreeMap<LinkKey, LinkModel> {
        let mut models: BTreeMap<LinkKey, LinkModel> = BTreeMap::new();
        for &node in &self.order {
            let upstream = match self.roles[&node] {
                NodeRole::Source | NodeRole::Destination => None,
                NodeRole::Forward | NodeRole::Xor => {
                    let mut acc = LinkModel {
                        words: BTreeSet::new(),
                        error_links: BTreeSet::new(),
                    };
                    for l in &self.incoming[&node] {
                        let m = &models[l];
                        acc.words = acc.words.symmetric_difference(&m.words).cloned().collect();
                        acc.error_links = acc
                            .error_links
                            .symmetric_difference(&m.error_links)
                            .copied()
                            .collect();
                    }
                    Some(acc)
                }
            };
            for &out in &self.outgoing[&node] {
                let mut m = match &upstream {
                    Some(u) => u.clone(),
                    None => LinkModel {
                        words: BTreeSet::from([self.assignment[&out].clone()]),
                        error_links: BTreeSet::new(),
                    },
                };
                // Each link's own error enters once; it cannot already be present.
                m.error_links.insert(out);
                models.insert(out, m);
            }
        }
        models
    }

    pub fn spec(&self) -> &TopologySpec {
        &self.spec
    }

    pub fn role(&self, node: u32) -> Option<NodeRole> {
        self.roles.get(&node).copied()
    }

    /// Node ids in an order where every link goes forward.
    pub fn order(&self) -> &[u32] {
        &self.order
    }

    pub fn incoming(&self, node: u32) -> &[LinkKey] {
        self.incoming.get(&node).map_or(&[], Vec::as_slice)
    }

    pub fn outgoing(&self, node: u32) -> &[LinkKey] {
        self.outgoing.get(&node).map_or(&[], Vec::as_slice)
    }

    pub fn links(&self) -> impl Iterator<Item = LinkKey> + '_ {
        self.crossover.keys().copied()
    }

    pub fn crossover(&self, link: LinkKey) -> Option<f64> {
        self.crossover.get(&link).copied()
    }

    pub fn assigned_word(&self, link: LinkKey) -> Option<&str> {
        self.assignment.get(&link).map(String::as_str)
    }

    /// Distinct source words, sorted.
    pub fn words(&self) -> BTreeSet<&str> {
        self.assignment.values().map(String::as_str).collect()
    }

    pub fn taps(&self, node: u32) -> Option<&[LinkKey]> {
        self.spec
            .destination_taps
            .iter()
            .find(|t| t.node == node)
            .map(|t| t.links.as_slice())
    }

    pub fn link_model(&self, link: LinkKey) -> Option<&LinkModel> {
        self.models.get(&link)
    }

    /// Marginal crossover of a link's word against the XOR of its source
    /// words: the cascade of every link error that reaches it. Correlation
    /// between different links' observations is ignored.
    pub fn effective_crossover(&self, link: LinkKey) -> Option<f64> {
        let m = self.models.get(&link)?;
        let path: Vec<f64> = m.error_links.iter().map(|k| self.crossover[k]).collect();
        Some(effective_crossover(&path))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::new(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.spec).expect("topology specs always serialize")
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

fn topological_order(
    roles: &BTreeMap<u32, NodeRole>,
    incoming: &BTreeMap<u32, Vec<LinkKey>>,
    outgoing: &BTreeMap<u32, Vec<LinkKey>>,
) -> Result<Vec<u32>> {
    let mut pending: BTreeMap<u32, usize> = incoming.iter().map(|(&id, l)| (id, l.len())).collect();
    let mut ready: Vec<u32> = pending.iter().filter(|(_, &d)| d == 0).map(|(&id, _)| id).collect();
    ready.reverse();
    let mut order = Vec::with_capacity(roles.len());
    while let Some(node) = ready.pop() {
        order.push(node);
        for l in &outgoing[&node] {
            let d = pending.get_mut(&l.to).expect("link endpoints exist");
            *d -= 1;
            if *d == 0 {
                ready.push(l.to);
            }
        }
    }
    if order.len() != roles.len() {
        return Err(config("topology contains a cycle"));
    }
    Ok(order)
}
