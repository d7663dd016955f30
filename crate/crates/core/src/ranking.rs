//! PageRank, CheiRank, 2DRank and the PageRank–CheiRank correlator.
//!
//! Ranks are 1-based: rank 1 is the node with the largest probability.
//! Per-node vectors are indexed by the node's 0-based position.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::google::{DampingFactor, GoogleMatrix};
use crate::graph::DirectedGraph;

/// Relative gap below which two probabilities are treated as tied.
///
/// Structurally equivalent nodes have identical exact probabilities but the
/// iterates differ in the last few ulps, depending on summation order.
pub const TIE_RTOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Convergence {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for Convergence {
    fn default() -> Self {
        Convergence {
            tol: 1e-12,
            max_iter: 10_000,
        }
    }
}

impl Convergence {
    pub fn validate(&self) -> Result<()> {
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "tolerance must be positive, got {}",
                self.tol
            )));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidArgument("max_iter must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RankKind {
    PageRank,
    CheiRank,
}

/// Rank permutation in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ordering {
    /// `node_by_rank[r]` is the node at rank `r + 1`.
    pub node_by_rank: Vec<usize>,
    /// `rank_by_node[i]` is the 1-based rank of node `i`.
    pub rank_by_node: Vec<usize>,
}

impl Ordering {
    fn from_order(node_by_rank: Vec<usize>) -> Self {
        let mut rank_by_node = vec![0; node_by_rank.len()];
        for (r, &node) in node_by_rank.iter().enumerate() {
            rank_by_node[node] = r + 1;
        }
        Ordering {
            node_by_rank,
            rank_by_node,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankVector {
    pub kind: RankKind,
    pub probabilities: Vec<f64>,
    pub ordering: Ordering,
    pub iterations: usize,
    /// L1 change of the final iteration.
    pub residual: f64,
}

impl RankVector {
    pub fn n(&self) -> usize {
        self.probabilities.len()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ordering.rank_by_node
    }

    pub fn rank_of(&self, node: usize) -> usize {
        self.ordering.rank_by_node[node]
    }

    /// Nodes in rank order.
    pub fn order(&self) -> &[usize] {
        &self.ordering.node_by_rank
    }

    /// The first `k` nodes in rank order.
    pub fn top(&self, k: usize) -> &[usize] {
        let order = self.order();
        &order[..k.min(order.len())]
    }
}

/// Sorts nodes by decreasing probability; ties (within [`TIE_RTOL`]) go to
/// the lower node index first.
pub fn order_nodes(p: &[f64]) -> Result<Ordering> {
    order_nodes_with_tolerance(p, TIE_RTOL)
}

pub fn order_nodes_with_tolerance(p: &[f64], rtol: f64) -> Result<Ordering> {
    if let Some((node, &value)) = p.iter().enumerate().find(|(_, x)| !x.is_finite()) {
        return Err(Error::InvalidProbability { node, value });
    }
    let mut idx: Vec<usize> = (0..p.len()).collect();
    idx.sort_by(|&a, &b| p[b].total_cmp(&p[a]).then(a.cmp(&b)));

    // Chain runs of near-equal neighbours into tie groups, then order each
    // group by index.
    let mut start = 0;
    for k in 1..=idx.len() {
        let breaks = k == idx.len() || {
            let (a, b) = (p[idx[k - 1]], p[idx[k]]);
            (a - b).abs() > rtol * a.abs().max(b.abs())
        };
        if breaks {
            idx[start..k].sort_unstable();
            start = k;
        }
    }
    Ok(Ordering::from_order(idx))
}

/// Power iteration `v <- G v` from the uniform vector, renormalized in L1
/// each step, until the L1 change drops below `conv.tol`.
pub fn pagerank(gm: &GoogleMatrix, conv: &Convergence) -> Result<RankVector> {
    stationary(gm, conv, RankKind::PageRank)
}

/// PageRank of the Google matrix of the link-reversed graph.
pub fn cheirank(g: &DirectedGraph, alpha: DampingFactor, conv: &Convergence) -> Result<RankVector> {
    let gm = GoogleMatrix::from_graph(&g.reverse(), alpha);
    stationary(&gm, conv, RankKind::CheiRank)
}

fn stationary(gm: &GoogleMatrix, conv: &Convergence, kind: RankKind) -> Result<RankVector> {
    conv.validate()?;
    let n = gm.n();
    if n == 0 {
        return Err(Error::InvalidArgument("graph has no nodes".into()));
    }
    let mut v = vec![1.0 / n as f64; n];
    let mut next = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for iteration in 1..=conv.max_iter {
        gm.apply_into(&v, &mut next)?;
        let norm: f64 = next.iter().sum();
        next.iter_mut().for_each(|x| *x /= norm);
        residual = v.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut v, &mut next);
        if residual < conv.tol {
            let ordering = order_nodes(&v)?;
            return Ok(RankVector {
                kind,
                probabilities: v,
                ordering,
                iterations: iteration,
                residual,
            });
        }
    }
    Err(Error::Convergence {
        iterations: conv.max_iter,
        residual,
    })
}

/// 2DRank positions, one per node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoDRank {
    pub ordering: Ordering,
}

impl TwoDRank {
    pub fn ranks(&self) -> &[usize] {
        &self.ordering.rank_by_node
    }

    pub fn order(&self) -> &[usize] {
        &self.ordering.node_by_rank
    }

    pub fn top(&self, k: usize) -> &[usize] {
        &self.order()[..k.min(self.order().len())]
    }
}

fn validate_permutation(ranks: &[usize], what: &str) -> Result<Vec<usize>> {
    let n = ranks.len();
    let mut node_at = vec![usize::MAX; n];
    for (node, &r) in ranks.iter().enumerate() {
        if r == 0 || r > n {
            return Err(Error::InvalidRank(format!(
                "{what}: rank {r} of node {} outside 1..={n}",
                node + 1
            )));
        }
        if node_at[r - 1] != usize::MAX {
            return Err(Error::InvalidRank(format!(
                "{what}: rank {r} assigned twice"
            )));
        }
        node_at[r - 1] = node;
    }
    Ok(node_at)
}

/// Square crawl over the `(K, K*)` plane.
///
/// For `j = 1, 2, ...` the node with `K = j` is appended if its `K* <= j`,
/// then the node with `K* = j` is appended if its `K <= j` and it was not
/// just taken. The append position is `K₂`.
pub fn two_d_rank(k: &[usize], k_star: &[usize]) -> Result<TwoDRank> {
    if k.len() != k_star.len() {
        return Err(Error::Dimension {
            expected: k.len(),
            got: k_star.len(),
        });
    }
    let by_k = validate_permutation(k, "K")?;
    let by_k_star = validate_permutation(k_star, "K*")?;
    let n = k.len();
    let mut order = Vec::with_capacity(n);
    for j in 1..=n {
        let a = by_k[j - 1];
        if k_star[a] <= j {
            order.push(a);
        }
        let b = by_k_star[j - 1];
        if b != a && k[b] <= j {
            order.push(b);
        }
    }
    debug_assert_eq!(order.len(), n);
    Ok(TwoDRank {
        ordering: Ordering::from_order(order),
    })
}

/// Closed form of [`two_d_rank`]: sort by `max(K, K*)`, the node whose `K`
/// attains the maximum first.
pub fn two_d_rank_sorted(k: &[usize], k_star: &[usize]) -> Result<TwoDRank> {
    if k.len() != k_star.len() {
        return Err(Error::Dimension {
            expected: k.len(),
            got: k_star.len(),
        });
    }
    validate_permutation(k, "K")?;
    validate_permutation(k_star, "K*")?;
    let mut order: Vec<usize> = (0..k.len()).collect();
    order.sort_by_key(|&i| {
        let square = k[i].max(k_star[i]);
        (square, usize::from(k[i] != square))
    });
    Ok(TwoDRank {
        ordering: Ordering::from_order(order),
    })
}

/// `κ = N Σ P(i) P*(i) − 1`.
pub fn correlator(p: &[f64], p_star: &[f64]) -> Result<f64> {
    if p.len() != p_star.len() {
        return Err(Error::Dimension {
            expected: p.len(),
            got: p_star.len(),
        });
    }
    let dot: f64 = p.iter().zip(p_star).map(|(a, b)| a * b).sum();
    Ok(p.len() as f64 * dot - 1.0)
}

/// Every ranking of one graph at one damping factor.
#[derive(Debug, Clone, PartialEq)]
pub struct Analysis {
    pub pagerank: RankVector,
    pub cheirank: RankVector,
    pub two_d: TwoDRank,
    pub kappa: f64,
}

pub fn analyze(g: &DirectedGraph, alpha: DampingFactor, conv: &Convergence) -> Result<Analysis> {
    let pagerank = pagerank(&GoogleMatrix::from_graph(g, alpha), conv)?;
    let cheirank = cheirank(g, alpha, conv)?;
    let two_d = two_d_rank(pagerank.ranks(), cheirank.ranks())?;
    let kappa = correlator(&pagerank.probabilities, &cheirank.probabilities)?;
    Ok(Analysis {
        pagerank,
        cheirank,
        two_d,
        kappa,
    })
}

/// Exponent of `P ~ K^β` implied by a degree exponent ν, `β = −1/(ν − 1)`.
pub fn implied_tail_exponent(nu: f64) -> f64 {
    -1.0 / (nu - 1.0)
}
