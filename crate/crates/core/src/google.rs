//! Column-stochastic matrix `S` of a graph and the damped Google operator
//! `G = αS + (1 − α)/N`.
//!
//! Column `j` of `S` spreads the mass of node `j` evenly over its targets.
//! Dangling columns are implicitly uniform. `G` is only ever applied as a
//! sparse product plus two rank-one terms; [`GoogleMatrix::materialize`]
//! builds the dense form for the eigensolver.

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

/// Largest order accepted by [`GoogleMatrix::materialize`].
pub const DENSE_LIMIT: usize = 10_000;

pub const DEFAULT_ALPHA: f64 = 0.85;

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct DampingFactor(f64);

impl DampingFactor {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha > 0.0 && alpha < 1.0 {
            Ok(DampingFactor(alpha))
        } else {
            Err(Error::InvalidArgument(format!(
                "damping factor must lie in (0, 1), got {alpha}"
            )))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl Default for DampingFactor {
    fn default() -> Self {
        DampingFactor(DEFAULT_ALPHA)
    }
}

#[derive(Debug, Clone)]
struct Column {
    targets: Vec<usize>,
    weight: f64,
}

#[derive(Debug, Clone)]
pub struct StochasticMatrix {
    columns: Vec<Column>,
    dangling: Vec<usize>,
}

impl StochasticMatrix {
    pub fn from_graph(g: &DirectedGraph) -> Self {
        let columns = (0..g.n())
            .map(|j| {
                let targets = g.out_links(j).to_vec();
                let weight = if targets.is_empty() {
                    0.0
                } else {
                    1.0 / targets.len() as f64
                };
                Column { targets, weight }
            })
            .collect();
        StochasticMatrix {
            columns,
            dangling: g.dangling(),
        }
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn dangling(&self) -> &[usize] {
        &self.dangling
    }

    pub fn is_dangling(&self, j: usize) -> bool {
        self.columns[j].targets.is_empty()
    }

    /// Explicit `(row, weight)` entries of column `j`; empty for dangling columns.
    pub fn column(&self, j: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let c = &self.columns[j];
        c.targets.iter().map(move |&t| (t, c.weight))
    }

    /// Effective entry `S_ij`, with the uniform repair of dangling columns.
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        let c = &self.columns[j];
        if c.targets.is_empty() {
            1.0 / self.n() as f64
        } else if c.targets.contains(&i) {
            c.weight
        } else {
            0.0
        }
    }
}

pub fn build_stochastic(g: &DirectedGraph) -> StochasticMatrix {
    StochasticMatrix::from_graph(g)
}

#[derive(Debug, Clone)]
pub struct GoogleMatrix {
    s: StochasticMatrix,
    alpha: DampingFactor,
}

impl GoogleMatrix {
    pub fn new(s: StochasticMatrix, alpha: DampingFactor) -> Self {
        GoogleMatrix { s, alpha }
    }

    pub fn from_graph(g: &DirectedGraph, alpha: DampingFactor) -> Self {
        Self::new(StochasticMatrix::from_graph(g), alpha)
    }

    pub fn n(&self) -> usize {
        self.s.n()
    }

    pub fn alpha(&self) -> DampingFactor {
        self.alpha
    }

    pub fn stochastic(&self) -> &StochasticMatrix {
        &self.s
    }

    /// `y = G v`.
    pub fn apply(&self, v: &[f64]) -> Result<Vec<f64>> {
        let mut out = vec![0.0; self.n()];
        self.apply_into(v, &mut out)?;
        Ok(out)
    }

    /// `out = G v` without allocating.
    pub fn apply_into(&self, v: &[f64], out: &mut [f64]) -> Result<()> {
        let n = self.n();
        if v.len() != n {
            return Err(Error::Dimension {
                expected: n,
                got: v.len(),
            });
        }
        if out.len() != n {
            return Err(Error::Dimension {
                expected: n,
                got: out.len(),
            });
        }
        let alpha = self.alpha.get();
        let total: f64 = v.iter().sum();
        let dangling_mass: f64 = self.s.dangling.iter().map(|&j| v[j]).sum();
        let shift = (alpha * dangling_mass + (1.0 - alpha) * total) / n as f64;
        out.fill(shift);
        for (j, col) in self.s.columns.iter().enumerate() {
            let share = alpha * col.weight * v[j];
            for &t in &col.targets {
                out[t] += share;
            }
        }
        Ok(())
    }

    /// Dense `G`, refusing orders above [`DENSE_LIMIT`].
    pub fn materialize(&self) -> Result<DenseMatrix> {
        let n = self.n();
        if n > DENSE_LIMIT {
            return Err(Error::Size {
                n,
                limit: DENSE_LIMIT,
            });
        }
        let alpha = self.alpha.get();
        let teleport = (1.0 - alpha) / n as f64;
        let uniform = alpha / n as f64 + teleport;
        let mut m = DenseMatrix::zeros(n);
        for j in 0..n {
            if self.s.is_dangling(j) {
                for i in 0..n {
                    m[(i, j)] = uniform;
                }
            } else {
                for i in 0..n {
                    m[(i, j)] = teleport;
                }
                for (i, w) in self.s.column(j) {
                    m[(i, j)] += alpha * w;
                }
            }
        }
        Ok(m)
    }
}
