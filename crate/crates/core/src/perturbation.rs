//! What-if link edits and rank displacement reports.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::google::DampingFactor;
use crate::graph::{DirectedGraph, NodeId};
use crate::ranking::{analyze, Analysis, Convergence};

pub type Link = (NodeId, NodeId);

/// `{"add": [[src, dst], ...], "remove": [[src, dst], ...]}`, 1-based.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioJson {
    #[serde(default)]
    pub add: Vec<[usize; 2]>,
    #[serde(default)]
    pub remove: Vec<[usize; 2]>,
}

/// A base graph plus link edits, validated on construction.
#[derive(Debug, Clone)]
pub struct Scenario {
    base: DirectedGraph,
    added: Vec<Link>,
    removed: Vec<Link>,
}

impl Scenario {
    pub fn new(base: DirectedGraph, added: Vec<Link>, removed: Vec<Link>) -> Result<Self> {
        validate(&base, &added, &removed)?;
        Ok(Scenario {
            base,
            added,
            removed,
        })
    }

    pub fn from_json(base: DirectedGraph, doc: &ScenarioJson) -> Result<Self> {
        let convert = |pairs: &[[usize; 2]]| -> Result<Vec<Link>> {
            pairs
                .iter()
                .map(|&[s, d]| match (NodeId::new(s), NodeId::new(d)) {
                    (Some(s), Some(d)) => Ok((s, d)),
                    _ => Err(Error::Range {
                        record: s,
                        index: if s == 0 { s } else { d },
                        n: base.n(),
                    }),
                })
                .collect()
        };
        let added = convert(&doc.add)?;
        let removed = convert(&doc.remove)?;
        Self::new(base, added, removed)
    }

    pub fn from_json_str(base: DirectedGraph, text: &str) -> Result<Self> {
        let doc: ScenarioJson = serde_json::from_str(text)?;
        Self::from_json(base, &doc)
    }

    pub fn base(&self) -> &DirectedGraph {
        &self.base
    }

    pub fn added(&self) -> &[Link] {
        &self.added
    }

    pub fn removed(&self) -> &[Link] {
        &self.removed
    }
}

fn scenario_error((src, dst): Link, reason: &str) -> Error {
    Error::Scenario {
        src,
        dst,
        reason: reason.to_string(),
    }
}

fn validate(base: &DirectedGraph, added: &[Link], removed: &[Link]) -> Result<()> {
    let n = base.n();
    for &link in added.iter().chain(removed) {
        if link.0.get() > n || link.1.get() > n {
            return Err(scenario_error(link, &format!("node outside 1..={n}")));
        }
    }
    for &link in added {
        if removed.contains(&link) {
            return Err(scenario_error(link, "both added and removed"));
        }
    }
    for (i, &link) in added.iter().enumerate() {
        if base.has_link(link.0.index(), link.1.index()) {
            return Err(scenario_error(link, "added link already exists"));
        }
        if added[..i].contains(&link) {
            return Err(scenario_error(link, "added twice"));
        }
    }
    for (i, &link) in removed.iter().enumerate() {
        if !base.has_link(link.0.index(), link.1.index()) {
            return Err(scenario_error(link, "removed link does not exist"));
        }
        if removed[..i].contains(&link) {
            return Err(scenario_error(link, "removed twice"));
        }
    }
    Ok(())
}

/// The base graph with the scenario's edits applied; the base is untouched.
pub fn apply_scenario(s: &Scenario) -> Result<DirectedGraph> {
    validate(&s.base, &s.added, &s.removed)?;
    let mut g = s.base.clone();
    let lists = g.out_links_mut();
    for &(src, dst) in &s.removed {
        lists[src.index()].retain(|&t| t != dst.index());
    }
    for &(src, dst) in &s.added {
        lists[src.index()].push(dst.index());
    }
    Ok(g)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Displacement {
    pub node: NodeId,
    /// `K_after − K_before`; negative means the node moved up.
    pub delta_k: i64,
    pub delta_k_star: i64,
    pub delta_k2: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankDiff {
    pub displacements: Vec<Displacement>,
    pub kendall_tau_pagerank: f64,
    pub kappa_before: f64,
    pub kappa_after: f64,
    /// Nodes without out-links after the edit that had some before.
    pub newly_dangling: Vec<NodeId>,
    /// Nodes that had no out-links before the edit and have some after.
    pub no_longer_dangling: Vec<NodeId>,
}

impl RankDiff {
    pub fn total(&self, pick: impl Fn(&Displacement) -> i64) -> i64 {
        self.displacements.iter().map(pick).sum()
    }
}

/// Kendall's tau-a between two strict rankings of the same nodes.
pub fn kendall_tau(a: &[usize], b: &[usize]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Dimension {
            expected: a.len(),
            got: b.len(),
        });
    }
    let n = a.len();
    if n < 2 {
        return Ok(1.0);
    }
    let mut score: i64 = 0;
    for i in 0..n {
        for j in i + 1..n {
            let s = (a[i] as i64 - a[j] as i64).signum() * (b[i] as i64 - b[j] as i64).signum();
            score += s;
        }
    }
    let pairs = (n * (n - 1) / 2) as f64;
    Ok(score as f64 / pairs)
}

/// Ranks both graphs and reports per-node displacements.
pub fn diff_rankings(
    before: &DirectedGraph,
    after: &DirectedGraph,
    alpha: DampingFactor,
    conv: &Convergence,
) -> Result<RankDiff> {
    if before.n() != after.n() {
        return Err(Error::Incompatible(format!(
            "node counts differ: {} vs {}",
            before.n(),
            after.n()
        )));
    }
    if before.labels() != after.labels() {
        return Err(Error::Incompatible("node labels differ".into()));
    }

    let (a, b) = std::thread::scope(|scope| {
        let h = scope.spawn(|| analyze(before, alpha, conv));
        let b = analyze(after, alpha, conv);
        (h.join().expect("ranking thread panicked"), b)
    });
    let (a, b): (Analysis, Analysis) = (a?, b?);

    let delta = |x: &[usize], y: &[usize], i: usize| y[i] as i64 - x[i] as i64;
    let displacements = (0..before.n())
        .map(|i| Displacement {
            node: NodeId::from_index(i),
            delta_k: delta(a.pagerank.ranks(), b.pagerank.ranks(), i),
            delta_k_star: delta(a.cheirank.ranks(), b.cheirank.ranks(), i),
            delta_k2: delta(a.two_d.ranks(), b.two_d.ranks(), i),
        })
        .collect();

    let dangling_shift = |from: &DirectedGraph, to: &DirectedGraph| {
        (0..from.n())
            .filter(|&i| from.out_degree(i) > 0 && to.out_degree(i) == 0)
            .map(NodeId::from_index)
            .collect()
    };

    Ok(RankDiff {
        displacements,
        kendall_tau_pagerank: kendall_tau(a.pagerank.ranks(), b.pagerank.ranks())?,
        kappa_before: a.kappa,
        kappa_after: b.kappa,
        newly_dangling: dangling_shift(before, after),
        no_longer_dangling: dangling_shift(after, before),
    })
}
