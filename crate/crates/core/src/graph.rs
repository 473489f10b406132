//! Graph representation, breadth-first distances and the truncated
//! distance `d_k(u, v) = min(d(u, v), k + 1)` that every resolvability
//! parameter is defined over.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    OutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("operation requires an undirected graph")]
    Directed,
}

/// A finite simple graph on the vertices `0..n`.
///
/// Out-neighbour lists are kept sorted. For undirected graphs every edge is
/// stored in both lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    directed: bool,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range
    /// endpoints. In an undirected graph `(u, v)` and `(v, u)` are the same
    /// edge and may appear only once.
    pub fn new(
        n: usize,
        directed: bool,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u].push(v);
            if !directed {
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, directed, adj })
    }

    /// Graph with no edges.
    pub fn empty(n: usize, directed: bool) -> Self {
        Graph {
            n,
            directed,
            adj: vec![Vec::new(); n],
        }
    }

    pub(crate) fn from_edges_unchecked(
        n: usize,
        directed: bool,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        Graph::new(n, directed, edges).expect("generator produced an invalid edge list")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Out-neighbours (all neighbours when undirected), sorted.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Canonical edge list: lexicographically sorted, and with `u < v` for
    /// undirected graphs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if self.directed || u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = self.adj.iter().map(Vec::len).sum();
        if self.directed {
            total
        } else {
            total / 2
        }
    }

    /// Out-degree of `v` (the degree for undirected graphs).
    pub fn out_degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        if !self.directed {
            return self.adj[v].len();
        }
        self.adj
            .iter()
            .filter(|list| list.binary_search(&v).is_ok())
            .count()
    }

    /// Breadth-first distances from `source`, stopping once `max_depth` is
    /// exceeded. Vertices further away are reported as unreachable.
    pub fn bfs_from(&self, source: usize, max_depth: Option<u32>) -> Vec<Distance> {
        let mut dist = vec![Distance::UNREACHABLE; self.n];
        dist[source] = Distance(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].0;
            if max_depth.is_some_and(|m| du >= m) {
                continue;
            }
            for &v in &self.adj[u] {
                if !dist[v].is_finite() {
                    dist[v] = Distance(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// A shortest-path length, or [`Distance::UNREACHABLE`], which compares
/// greater than every finite distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Distance(u32);

impl Distance {
    pub const UNREACHABLE: Distance = Distance(u32::MAX);

    pub fn finite(d: u32) -> Self {
        assert!(d != u32::MAX, "finite distance out of range");
        Distance(d)
    }

    pub fn is_finite(self) -> bool {
        self != Self::UNREACHABLE
    }

    pub fn value(self) -> Option<u32> {
        self.is_finite().then_some(self.0)
    }

    /// `min(self, k + 1)`.
    pub fn truncate(self, k: u32) -> u32 {
        self.0.min(k.saturating_add(1))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(d) => write!(f, "{d}"),
            None => f.write_str("inf"),
        }
    }
}

/// All-pairs shortest-path lengths; row `u` holds the distances out of `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Distance] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite distance out of `v` (0 for a vertex that reaches
    /// nothing else).
    pub fn eccentricity(&self, v: usize) -> u32 {
        self.row(v)
            .iter()
            .filter_map(|d| d.value())
            .max()
            .unwrap_or(0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|u| (0..u).all(|v| self.get(u, v) == self.get(v, u)))
    }
}

/// One breadth-first search per source.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut data = Vec::with_capacity(n * n);
    for s in 0..n {
        data.extend(g.bfs_from(s, None));
    }
    DistanceMatrix { n, data }
}

/// `d_k(u, v) = min(d(u, v), k + 1)`; unreachable pairs give `k + 1`.
pub fn truncated_distance(dm: &DistanceMatrix, u: usize, v: usize, k: u32) -> u32 {
    dm.get(u, v).truncate(k)
}

/// Largest out-degree (the maximum degree for undirected graphs).
pub fn max_degree(g: &Graph) -> usize {
    (0..g.order()).map(|v| g.out_degree(v)).max().unwrap_or(0)
}

/// Column-major labelling of an `rows x cols` grid: vertex `col * rows + row`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridCoords {
    pub rows: usize,
    pub cols: usize,
}

impl GridCoords {
    pub fn new(rows: usize, cols: usize) -> Self {
        GridCoords { rows, cols }
    }

    pub fn vertex(&self, row: usize, col: usize) -> usize {
        debug_assert!(row < self.rows && col < self.cols);
        col * self.rows + row
    }

    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v % self.rows, v / self.rows)
    }

    pub fn order(&self) -> usize {
        self.rows * self.cols
    }
}

/// Cartesian product `g1 □ g2`. The pair `(u, u')` with `u` in `g1` gets
/// index `u' * |g1| + u`, so `P_n □ P_m` comes out with the column-major grid
/// labelling (`g1` indexes rows, `g2` columns).
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    if g1.is_directed() || g2.is_directed() {
        return Err(GraphError::Directed);
    }
    let (n1, n2) = (g1.order(), g2.order());
    let index = |u: usize, u2: usize| u2 * n1 + u;
    let mut edges = Vec::new();
    for u2 in 0..n2 {
        for (u, v) in g1.edges() {
            edges.push((index(u, u2), index(v, u2)));
        }
    }
    for u in 0..n1 {
        for (u2, v2) in g2.edges() {
            edges.push((index(u, u2), index(u, v2)));
        }
    }
    Graph::new(n1 * n2, false, edges)
}

/// Cartesian product of two paths together with its grid coordinates.
pub fn grid_product(rows: usize, cols: usize) -> (Graph, GridCoords) {
    let g =
        cartesian_product(&path(rows, false), &path(cols, false)).expect("paths are undirected");
    (g, GridCoords::new(rows, cols))
}

pub(crate) fn path(n: usize, directed: bool) -> Graph {
    Graph::from_edges_unchecked(n, directed, (1..n).map(|i| (i - 1, i)))
}
