//! Exact solvers for metric dimension, adjacency dimension,
//! locating-domination number and broadcast dimension.
//!
//! Set-valued parameters are minimum covers of a pair universe: vertex `z`
//! covers the pair `{x, y}` when it tells `x` and `y` apart. The search
//! deepens on the cardinality and walks subsets in lexicographic order, so
//! the first cover found at the smallest feasible size is optimal and is the
//! lexicographically least optimal witness. Broadcast dimension deepens on
//! total cost the same way, over weight vectors in lexicographic order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::certificates::Broadcast;
use crate::cover::{BitSet, SetCover};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};

pub const DEFAULT_MAX_VERTICES: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameter {
    Dim,
    Adim,
    Ld,
    Bdim,
}

impl Parameter {
    pub const ALL: [Parameter; 4] = [
        Parameter::Dim,
        Parameter::Adim,
        Parameter::Ld,
        Parameter::Bdim,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Parameter::Dim => "dim",
            Parameter::Adim => "adim",
            Parameter::Ld => "ld",
            Parameter::Bdim => "bdim",
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Parameter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parameter::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown parameter `{s}` (expected dim, adim, ld or bdim)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph has {n} vertices; exact search is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("no certificate for {parameter} exists{}", cap.map(|c| format!(" with cost at most {c}")).unwrap_or_default())]
    Infeasible {
        parameter: Parameter,
        cap: Option<u64>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    Set(Vec<usize>),
    Broadcast(Broadcast),
}

impl Witness {
    /// The witness as a broadcast; sets become their 0/1 indicator.
    pub fn to_broadcast(&self, n: usize) -> Broadcast {
        match self {
            Witness::Set(s) => Broadcast::indicator(n, s).expect("witness inside the graph"),
            Witness::Broadcast(f) => f.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub parameter: Parameter,
    pub value: u64,
    pub witness: Witness,
    pub nodes_explored: u64,
}

/// Exact solver with a size guardrail.
#[derive(Debug, Clone, Copy)]
pub struct Solver {
    pub max_vertices: usize,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

/// Index of the pair `x < y` in `0..n(n-1)/2`.
pub(crate) fn pair_index(n: usize, x: usize, y: usize) -> usize {
    debug_assert!(x < y && y < n);
    x * (2 * n - x - 1) / 2 + (y - x - 1)
}

pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Pairs that `z` separates when all distances out of `z` are cut off at
/// `k + 1` (`None` keeps exact distances).
pub(crate) fn separated_pairs(dm: &DistanceMatrix, z: usize, k: Option<u32>) -> BitSet {
    let n = dm.order();
    let row: Vec<u32> = dm
        .row(z)
        .iter()
        .map(|d| match k {
            Some(k) => d.truncate(k),
            None => d.value().unwrap_or(u32::MAX),
        })
        .collect();
    let mut s = BitSet::new(pair_count(n));
    for x in 0..n {
        for y in x + 1..n {
            if row[x] != row[y] {
                s.insert(pair_index(n, x, y));
            }
        }
    }
    s
}

/// Largest useful weight at `v`: beyond its eccentricity no truncated
/// distance out of `v` changes. A vertex that reaches nothing still
/// separates itself from everything else with weight 1.
pub(crate) fn weight_cap(dm: &DistanceMatrix, v: usize) -> u32 {
    dm.eccentricity(v).max(1)
}

impl Solver {
    pub fn new(max_vertices: usize) -> Self {
        Solver { max_vertices }
    }

    fn check_size(&self, g: &Graph) -> Result<(), SolveError> {
        if g.order() > self.max_vertices {
            return Err(SolveError::TooLarge {
                n: g.order(),
                limit: self.max_vertices,
            });
        }
        Ok(())
    }

    pub fn solve(&self, g: &Graph, parameter: Parameter) -> Result<SolveResult, SolveError> {
        match parameter {
            Parameter::Dim => self.metric_dimension(g),
            Parameter::Adim => self.adjacency_dimension(g),
            Parameter::Ld => self.locating_dominating(g),
            Parameter::Bdim => self.broadcast_dimension(g, None),
        }
    }

    fn min_cover(
        &self,
        parameter: Parameter,
        covers: &[BitSet],
        universe: usize,
    ) -> Result<SolveResult, SolveError> {
        let mut search = SetCover::new(covers, universe);
        let all = BitSet::full(universe);
        if !search.feasible(&all) {
            return Err(SolveError::Infeasible {
                parameter,
                cap: None,
            });
        }
        for size in 0..=covers.len() {
            if let Some(set) = search.first_of_size(&all, size) {
                return Ok(SolveResult {
                    parameter,
                    value: set.len() as u64,
                    witness: Witness::Set(set),
                    nodes_explored: search.nodes,
                });
            }
        }
        unreachable!("a feasible cover uses at most every vertex")
    }

    /// Smallest set separating every pair by exact distance.
    pub fn metric_dimension(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        self.check_size(g)?;
        let dm = all_pairs_distances(g);
        let covers: Vec<BitSet> = (0..g.order())
            .map(|z| separated_pairs(&dm, z, None))
            .collect();
        self.min_cover(Parameter::Dim, &covers, pair_count(g.order()))
    }

    /// Smallest set separating every pair under `d_1`.
    pub fn adjacency_dimension(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        self.check_size(g)?;
        let dm = all_pairs_distances(g);
        let covers: Vec<BitSet> = (0..g.order())
            .map(|z| separated_pairs(&dm, z, Some(1)))
            .collect();
        self.min_cover(Parameter::Adim, &covers, pair_count(g.order()))
    }

    /// Smallest locating-dominating set: an adjacency resolving set that
    /// also reaches every vertex. The universe is the pairs followed by one
    /// element per vertex.
    pub fn locating_dominating(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        self.check_size(g)?;
        let n = g.order();
        let dm = all_pairs_distances(g);
        let pairs = pair_count(n);
        let covers: Vec<BitSet> = (0..n)
            .map(|z| {
                let mut s = BitSet::new(pairs + n);
                s.union_with(&separated_pairs(&dm, z, Some(1)));
                for v in 0..n {
                    if dm.get(z, v).truncate(1) <= 1 {
                        s.insert(pairs + v);
                    }
                }
                s
            })
            .collect();
        self.min_cover(Parameter::Ld, &covers, pairs + n)
    }

    /// Minimum-cost resolving broadcast. With `cost_cap`, gives up with
    /// [`SolveError::Infeasible`] when every resolving broadcast costs more.
    pub fn broadcast_dimension(
        &self,
        g: &Graph,
        cost_cap: Option<u64>,
    ) -> Result<SolveResult, SolveError> {
        self.check_size(g)?;
        let mut search = BroadcastSearch::new(g);
        // the whole vertex set with weight 1 always resolves
        let cap = cost_cap.unwrap_or(g.order() as u64);
        let all = BitSet::full(pair_count(g.order()));
        for budget in 0..=cap {
            let mut weights = vec![0; g.order()];
            if search.first(&all, 0, budget, &mut weights) {
                return Ok(SolveResult {
                    parameter: Parameter::Bdim,
                    value: budget,
                    witness: Witness::Broadcast(Broadcast::new(weights)),
                    nodes_explored: search.nodes,
                });
            }
        }
        Err(SolveError::Infeasible {
            parameter: Parameter::Bdim,
            cap: Some(cap),
        })
    }

    /// Every minimum-cost resolving broadcast, in lexicographic order.
    pub fn optimal_broadcasts(&self, g: &Graph) -> Result<Vec<Broadcast>, SolveError> {
        let best = self.broadcast_dimension(g, None)?;
        let mut search = BroadcastSearch::new(g);
        let mut out = Vec::new();
        let mut weights = vec![0; g.order()];
        let all = BitSet::full(pair_count(g.order()));
        search.all(&all, 0, best.value, &mut weights, &mut out);
        Ok(out)
    }
}

struct BroadcastSearch {
    caps: Vec<u32>,
    /// `covers[v][w - 1]`: pairs separated by weight `w` at `v`.
    covers: Vec<Vec<BitSet>>,
    universe: usize,
    nodes: u64,
}

impl BroadcastSearch {
    fn new(g: &Graph) -> Self {
        let dm = all_pairs_distances(g);
        let n = g.order();
        let caps: Vec<u32> = (0..n).map(|v| weight_cap(&dm, v)).collect();
        let covers = (0..n)
            .map(|v| {
                (1..=caps[v])
                    .map(|w| separated_pairs(&dm, v, Some(w)))
                    .collect()
            })
            .collect();
        BroadcastSearch {
            caps,
            covers,
            universe: pair_count(n),
            nodes: 0,
        }
    }

    fn cover(&self, v: usize, w: u32) -> &BitSet {
        &self.covers[v][w as usize - 1]
    }

    /// Whether the vertices from `v` on, with `budget` left to spend, could
    /// still cover `uncovered`. Coverage is monotone in the weight.
    fn reachable(&self, uncovered: &BitSet, v: usize, budget: u64) -> bool {
        let mut union = BitSet::new(self.universe);
        for u in v..self.caps.len() {
            let w = u64::from(self.caps[u]).min(budget) as u32;
            if w > 0 {
                union.union_with(self.cover(u, w));
            }
        }
        uncovered.is_subset(&union)
    }

    fn max_weight(&self, v: usize, budget: u64) -> u32 {
        u64::from(self.caps[v]).min(budget) as u32
    }

    fn first(&mut self, uncovered: &BitSet, v: usize, budget: u64, weights: &mut [u32]) -> bool {
        self.nodes += 1;
        if uncovered.is_empty() {
            return true;
        }
        if v == weights.len() || budget == 0 || !self.reachable(uncovered, v, budget) {
            return false;
        }
        for w in 0..=self.max_weight(v, budget) {
            let mut next = uncovered.clone();
            if w > 0 {
                next.difference_with(self.cover(v, w));
            }
            weights[v] = w;
            if self.first(&next, v + 1, budget - u64::from(w), weights) {
                return true;
            }
        }
        weights[v] = 0;
        false
    }

    fn all(
        &mut self,
        uncovered: &BitSet,
        v: usize,
        budget: u64,
        weights: &mut [u32],
        out: &mut Vec<Broadcast>,
    ) {
        if uncovered.is_empty() {
            out.push(Broadcast::new(weights.to_vec()));
            return;
        }
        if v == weights.len() || budget == 0 || !self.reachable(uncovered, v, budget) {
            return;
        }
        for w in 0..=self.max_weight(v, budget) {
            let mut next = uncovered.clone();
            if w > 0 {
                next.difference_with(self.cover(v, w));
            }
            weights[v] = w;
            self.all(&next, v + 1, budget - u64::from(w), weights, out);
        }
        weights[v] = 0;
    }
}

pub fn solve_metric_dimension(g: &Graph) -> Result<SolveResult, SolveError> {
    Solver::default().metric_dimension(g)
}

pub fn solve_adjacency_dimension(g: &Graph) -> Result<SolveResult, SolveError> {
    Solver::default().adjacency_dimension(g)
}

pub fn solve_locating_dominating(g: &Graph) -> Result<SolveResult, SolveError> {
    Solver::default().locating_dominating(g)
}

pub fn solve_broadcast_dimension(
    g: &Graph,
    cost_cap: Option<u64>,
) -> Result<SolveResult, SolveError> {
    Solver::default().broadcast_dimension(g, cost_cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path;

    #[test]
    fn pair_indices_are_dense() {
        let n = 6;
        let mut seen = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                seen.push(pair_index(n, x, y));
            }
        }
        assert_eq!(seen, (0..pair_count(n)).collect::<Vec<_>>());
    }

    #[test]
    fn parameter_names_round_trip() {
        for p in Parameter::ALL {
            assert_eq!(p.name().parse::<Parameter>(), Ok(p));
        }
        assert!("width".parse::<Parameter>().is_err());
    }

    #[test]
    fn size_guardrail() {
        let g = path(30, false);
        assert_eq!(
            solve_adjacency_dimension(&g),
            Err(SolveError::TooLarge { n: 30, limit: 26 })
        );
        assert!(Solver::new(30).metric_dimension(&g).is_ok());
    }

    #[test]
    fn cost_cap_reports_infeasible() {
        let g = path(5, false);
        assert_eq!(
            solve_broadcast_dimension(&g, Some(0)),
            Err(SolveError::Infeasible {
                parameter: Parameter::Bdim,
                cap: Some(0)
            })
        );
    }

    #[test]
    fn single_vertex_needs_nothing() {
        let g = Graph::empty(1, false);
        for p in [Parameter::Dim, Parameter::Adim, Parameter::Bdim] {
            assert_eq!(Solver::default().solve(&g, p).unwrap().value, 0, "{p}");
        }
        // the lone vertex still has to be dominated
        assert_eq!(solve_locating_dominating(&g).unwrap().value, 1);
    }

    #[test]
    fn isolated_vertices_need_weight_one() {
        // eccentricity 0 everywhere; weight 1 still separates a vertex
        let g = Graph::empty(2, false);
        let r = solve_broadcast_dimension(&g, None).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.witness, Witness::Broadcast(Broadcast::new(vec![0, 1])));
    }
}
