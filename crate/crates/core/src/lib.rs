//! Google matrix analysis of directed graphs.
//!
//! Builds the damped column-stochastic Google matrix of a directed graph and
//! derives from it PageRank, CheiRank (PageRank of the reversed graph), the
//! combined 2DRank ordering, the PageRank–CheiRank correlator and the full
//! complex eigenvalue spectrum. The bundled 175-node business process
//! network is available through [`gbpm`].
//!
//! ```
//! use rankforge_core::{analyze, Convergence, DampingFactor, DirectedGraph};
//!
//! let g = DirectedGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
//! let a = analyze(&g, DampingFactor::default(), &Convergence::default()).unwrap();
//! assert!(a.kappa.abs() < 1e-9);
//! ```

pub mod degree;
pub mod dense;
pub mod eigen;
pub mod error;
pub mod gbpm;
pub mod google;
pub mod graph;
pub mod perturbation;
pub mod ranking;
pub mod spectrum;

pub use degree::{degree_distribution, fit_powerlaw, DegreeDistribution, Direction};
pub use dense::DenseMatrix;
pub use eigen::Eigenvalue;
pub use error::{Error, Result};
pub use gbpm::{load_gbpm, GbpmCorpus, LabelMatch};
pub use google::{build_stochastic, DampingFactor, GoogleMatrix, StochasticMatrix};
pub use graph::{parse_link_list, parse_node_list, DirectedGraph, NodeId};
pub use perturbation::{apply_scenario, diff_rankings, kendall_tau, RankDiff, Scenario};
pub use ranking::{
    analyze, cheirank, correlator, order_nodes, pagerank, two_d_rank, Analysis, Convergence,
    RankKind, RankVector, TwoDRank,
};
pub use spectrum::{full_spectrum, spectral_stats, trace_check, SpectralStats, Spectrum};
