//! In/out degree histograms and a log-log power-law fit.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    In,
    Out,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::In => "in",
            Direction::Out => "out",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeDistribution {
    pub direction: Direction,
    /// degree -> number of nodes with that degree, including degree 0.
    pub counts: BTreeMap<usize, usize>,
    pub fitted_nu: Option<f64>,
}

impl DegreeDistribution {
    pub fn node_count(&self) -> usize {
        self.counts.values().sum()
    }

    /// Σ d·count(d), i.e. the number of links.
    pub fn link_count(&self) -> usize {
        self.counts.iter().map(|(d, c)| d * c).sum()
    }

    /// Fits ν and stores it when it is finite and positive.
    pub fn fit(&mut self) -> Result<f64> {
        let nu = fit_powerlaw(self)?;
        self.fitted_nu = (nu.is_finite() && nu > 0.0).then_some(nu);
        Ok(nu)
    }
}

pub fn degree_distribution(g: &DirectedGraph, direction: Direction) -> DegreeDistribution {
    let degrees = match direction {
        Direction::In => g.in_degrees(),
        Direction::Out => g.out_degrees(),
    };
    let mut counts = BTreeMap::new();
    for d in degrees {
        *counts.entry(d).or_insert(0) += 1;
    }
    DegreeDistribution {
        direction,
        counts,
        fitted_nu: None,
    }
}

/// Exponent ν of `count(d) ~ d^-ν` by ordinary least squares of
/// `ln count` on `ln d`, over degrees `d >= 1` with a nonzero count.
pub fn fit_powerlaw(dist: &DegreeDistribution) -> Result<f64> {
    let points: Vec<(f64, f64)> = dist
        .counts
        .iter()
        .filter(|&(&d, &c)| d >= 1 && c > 0)
        .map(|(&d, &c)| ((d as f64).ln(), (c as f64).ln()))
        .collect();
    if points.len() < 3 {
        return Err(Error::InsufficientData {
            needed: 3,
            got: points.len(),
        });
    }
    let m = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / m;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / m;
    let (sxy, sxx) = points.iter().fold((0.0, 0.0), |(sxy, sxx), &(x, y)| {
        let dx = x - mean_x;
        (sxy + dx * (y - mean_y), sxx + dx * dx)
    });
    Ok(-(sxy / sxx))
}
