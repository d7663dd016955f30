//! The 175-node business process network and its reference top-30 lists.
//!
//! The corpus is shipped as loose text files under `data/` (node list and
//! link list) plus `data/gbpm.expected.json`, and embedded into the binary
//! from the same files. Fixture labels are resolved to node indices once;
//! names that occur more than once in the node list, or that are spelled
//! differently in the top-30 lists, go through an explicit resolution table
//! stored in the JSON file.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{parse_link_list, parse_node_list, DirectedGraph, NodeId};

pub const NODES_TEXT: &str = include_str!("../data/gbpm.nodes.txt");
pub const LINKS_TEXT: &str = include_str!("../data/gbpm.links.txt");
pub const EXPECTED_JSON: &str = include_str!("../data/gbpm.expected.json");

pub const NODE_COUNT: usize = 175;
/// Links after duplicate collapse.
pub const LINK_COUNT: usize = 240;
/// SHA-256 of [`LINKS_TEXT`].
pub const LINKS_SHA256: &str = "1648357d852fabb7afeb4c89a6703daefba1db1a2654edaa8d313ebf6f6bae11";

pub const NODES_FILE: &str = "gbpm.nodes.txt";
pub const LINKS_FILE: &str = "gbpm.links.txt";
pub const EXPECTED_FILE: &str = "gbpm.expected.json";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureEntry {
    pub position: usize,
    /// Label exactly as printed in the reference list.
    pub label: String,
    pub node: NodeId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolution {
    pub label: String,
    pub candidates: Vec<NodeId>,
    pub node: NodeId,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedRankings {
    pub resolutions: Vec<Resolution>,
    pub pagerank_top30: Vec<FixtureEntry>,
    pub cheirank_top30: Vec<FixtureEntry>,
    pub two_d_rank_top30: Vec<FixtureEntry>,
}

fn nodes_of(entries: &[FixtureEntry]) -> Vec<NodeId> {
    entries.iter().map(|e| e.node).collect()
}

#[derive(Debug, Clone)]
pub struct GbpmCorpus {
    pub graph: DirectedGraph,
    pub expected: ExpectedRankings,
}

impl GbpmCorpus {
    pub fn expected_pagerank_top30(&self) -> Vec<NodeId> {
        nodes_of(&self.expected.pagerank_top30)
    }

    pub fn expected_cheirank_top30(&self) -> Vec<NodeId> {
        nodes_of(&self.expected.cheirank_top30)
    }

    pub fn expected_2drank_top30(&self) -> Vec<NodeId> {
        nodes_of(&self.expected.two_d_rank_top30)
    }

    pub fn resolve_label(&self, label: &str) -> Result<LabelMatch> {
        resolve_label(self.graph.labels(), label)
    }
}

fn assemble(nodes: &str, links: &str, expected: &str) -> Result<GbpmCorpus> {
    let labels = parse_node_list(nodes)?;
    let graph = parse_link_list(links, labels.len())?.with_labels(labels)?;
    let expected: ExpectedRankings = serde_json::from_str(expected)?;
    Ok(GbpmCorpus { graph, expected })
}

/// The embedded corpus.
pub fn load_gbpm() -> GbpmCorpus {
    assemble(NODES_TEXT, LINKS_TEXT, EXPECTED_JSON).expect("embedded corpus is well-formed")
}

/// Loads the corpus from loose files in `dir`.
pub fn load_gbpm_from_dir(dir: &Path) -> Result<GbpmCorpus> {
    let read = |name: &str| {
        let path = dir.join(name);
        std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    };
    assemble(
        &read(NODES_FILE)?,
        &read(LINKS_FILE)?,
        &read(EXPECTED_FILE)?,
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelMatch {
    Unique(NodeId),
    /// The label names several nodes; all candidates in index order.
    Ambiguous(Vec<NodeId>),
}

/// Exact-match lookup of a node label.
pub fn resolve_label(labels: &[String], label: &str) -> Result<LabelMatch> {
    let hits: Vec<NodeId> = labels
        .iter()
        .enumerate()
        .filter(|(_, l)| l.as_str() == label)
        .map(|(i, _)| NodeId::from_index(i))
        .collect();
    match hits.len() {
        0 => Err(Error::NotFound(label.to_string())),
        1 => Ok(LabelMatch::Unique(hits[0])),
        _ => Ok(LabelMatch::Ambiguous(hits)),
    }
}
