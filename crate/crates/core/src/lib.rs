//! Exact computation of graph resolvability parameters (metric dimension,
//! adjacency dimension, locating-domination number and broadcast
//! dimension) on undirected and directed graphs, with generators and
//! certificate constructions for grids, clique families and out-trees.

pub mod bounds;
pub mod certificates;
pub mod cli;
pub mod constructions;
mod cover;
pub mod families;
pub mod graph;
pub mod io;
pub mod random;
pub mod solver;

pub use certificates::{
    cost, resolves, verify_adjacency_set, verify_broadcast, verify_locating_dominating,
    verify_resolving_set, Broadcast, CertificateError, Mode, VerificationReport,
};
pub use families::FamilySpec;
pub use graph::{
    all_pairs_distances, cartesian_product, max_degree, truncated_distance, Distance,
    DistanceMatrix, Graph, GraphError, GridCoords,
};
pub use solver::{
    solve_adjacency_dimension, solve_broadcast_dimension, solve_locating_dominating,
    solve_metric_dimension, Parameter, SolveError, SolveResult, Solver, Witness,
};
