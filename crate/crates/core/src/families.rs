//! Deterministic generators for the graph families studied here.
//!
//! Orientation conventions for the clique families: inside the `v`-clique
//! `v_i -> v_j` for `i < j`; inside the `u`-clique `u_b -> u_b'` when the
//! binary string `b` precedes `b'`. Vertex `v_j` (1-based `j`) is index
//! `j - 1` and `u_b` is index `k + b` with the first digit of `b` most
//! significant.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{grid_product, path, Graph, GridCoords};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: {reason}")]
    InvalidParameters {
        family: &'static str,
        reason: String,
    },
}

fn invalid(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameters {
        family,
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Grid { rows: usize, cols: usize },
    FK { k: usize, oriented: bool },
    RK { k: usize, oriented: bool },
    KaryOutTree { k: usize, layers: usize },
    MaxdegTight { m: usize, delta: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match *self {
            FamilySpec::Path { n } => Ok(make_path(n)),
            FamilySpec::Cycle { n } => make_cycle(n),
            FamilySpec::Complete { n } => Ok(make_complete(n)),
            FamilySpec::Grid { rows, cols } => make_grid(rows, cols).map(|(g, _)| g),
            FamilySpec::FK { k, oriented } => make_f_k(k, oriented),
            FamilySpec::RK { k, oriented } => make_r_k(k, oriented),
            FamilySpec::KaryOutTree { k, layers } => make_kary_out_tree(k, layers),
            FamilySpec::MaxdegTight { m, delta } => make_maxdeg_tight(m, delta),
        }
    }
}

pub fn make_path(n: usize) -> Graph {
    path(n, false)
}

pub fn make_cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(invalid("cycle", "needs at least 3 vertices"));
    }
    Ok(Graph::from_edges_unchecked(
        n,
        false,
        (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))),
    ))
}

pub fn make_complete(n: usize) -> Graph {
    Graph::from_edges_unchecked(
        n,
        false,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))),
    )
}

/// `P_rows □ P_cols` with column-major labels.
pub fn make_grid(rows: usize, cols: usize) -> Result<(Graph, GridCoords), FamilyError> {
    if rows == 0 || cols == 0 {
        return Err(invalid("grid", "rows and cols must be at least 1"));
    }
    Ok(grid_product(rows, cols))
}

/// Index of `v_j`, `j` 1-based.
pub fn clique_v(j: usize) -> usize {
    j - 1
}

/// Index of `u_b` in a clique family with parameter `k`.
pub fn clique_u(k: usize, b: usize) -> usize {
    k + b
}

/// Digit `j` (1-based, from the left) of the `k`-digit binary string `b`.
pub fn digit(k: usize, b: usize, j: usize) -> bool {
    (b >> (k - j)) & 1 == 1
}

fn check_k(family: &'static str, k: usize) -> Result<(), FamilyError> {
    if k == 0 {
        return Err(invalid(family, "k must be at least 1"));
    }
    if k > 16 {
        return Err(invalid(family, "k above 16 gives more than 65552 vertices"));
    }
    Ok(())
}

fn clique_edges(k: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 1..=k {
        for j in i + 1..=k {
            edges.push((clique_v(i), clique_v(j)));
        }
    }
    let count = 1 << k;
    for b in 0..count {
        for c in b + 1..count {
            edges.push((clique_u(k, b), clique_u(k, c)));
        }
    }
    edges
}

/// `F_k`: a clique on `v_1..v_k`, a clique on the `2^k` vertices `u_b`, and
/// `u_b ~ v_j` exactly when digit `j` of `b` is 1. Oriented, every edge at a
/// `v` vertex points into the `v` side.
pub fn make_f_k(k: usize, oriented: bool) -> Result<Graph, FamilyError> {
    check_k("f_k", k)?;
    let mut edges = clique_edges(k);
    for b in 0..1usize << k {
        for j in 1..=k {
            if digit(k, b, j) {
                edges.push((clique_u(k, b), clique_v(j)));
            }
        }
    }
    Ok(Graph::from_edges_unchecked(k + (1 << k), oriented, edges))
}

/// `R_k`: the complete graph on the vertices of `F_k`. Oriented, the edge
/// `v_i u_b` points into `v_i` when digit `i` of `b` is 1 and out of it
/// otherwise.
pub fn make_r_k(k: usize, oriented: bool) -> Result<Graph, FamilyError> {
    check_k("r_k", k)?;
    let mut edges = clique_edges(k);
    for b in 0..1usize << k {
        for i in 1..=k {
            let (v, u) = (clique_v(i), clique_u(k, b));
            edges.push(if digit(k, b, i) { (u, v) } else { (v, u) });
        }
    }
    Ok(Graph::from_edges_unchecked(k + (1 << k), oriented, edges))
}

/// Complete `k`-ary tree with `layers` layers, edges directed away from the
/// root, numbered breadth-first: the children of `i` are `k*i + 1 ..= k*i + k`.
pub fn make_kary_out_tree(k: usize, layers: usize) -> Result<Graph, FamilyError> {
    if k == 0 || layers == 0 {
        return Err(invalid("kary_out_tree", "k and layers must be at least 1"));
    }
    let mut n = 0usize;
    let mut width = 1usize;
    for _ in 0..layers {
        n = n
            .checked_add(width)
            .filter(|&n| n <= 1 << 24)
            .ok_or_else(|| invalid("kary_out_tree", "tree too large"))?;
        width = width.saturating_mul(k);
    }
    Ok(Graph::from_edges_unchecked(
        n,
        true,
        (1..n).map(|c| ((c - 1) / k, c)),
    ))
}

/// Depth of each vertex of a breadth-first numbered out-tree.
pub fn kary_depths(k: usize, n: usize) -> Vec<usize> {
    let mut depth = vec![0; n];
    for c in 1..n {
        depth[c] = depth[(c - 1) / k] + 1;
    }
    depth
}

/// Circulant `d`-regular graph on `m` vertices: offsets `1..=d/2`, plus
/// `m/2` when `d` is odd.
fn circulant(m: usize, d: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for o in 1..=d / 2 {
        for i in 0..m {
            let j = (i + o) % m;
            edges.push((i.min(j), i.max(j)));
        }
    }
    if d % 2 == 1 {
        for i in 0..m / 2 {
            edges.push((i, i + m / 2));
        }
    }
    edges
}

/// The graph meeting the max-degree lower bound with equality: a
/// `(delta - 1)`-regular `H` on `m` vertices with every edge subdivided, one
/// pendant per vertex of `H`, and one isolated vertex. `H` is the circulant
/// above; its vertices are `0..m`, followed by the subdivision vertices, the
/// pendants (`h`'s pendant after `h`'s position), and the isolated vertex.
///
/// The order is `m (delta + 3) / 2 + 1`.
pub fn make_maxdeg_tight(m: usize, delta: usize) -> Result<Graph, FamilyError> {
    if delta < 2 {
        return Err(invalid("maxdeg_tight", "delta must be at least 2"));
    }
    if delta > m {
        return Err(invalid("maxdeg_tight", "delta must not exceed m"));
    }
    if !((delta - 1) * m).is_multiple_of(2) {
        return Err(invalid("maxdeg_tight", "(delta - 1) * m must be even"));
    }
    let h = circulant(m, delta - 1);
    let mut edges = Vec::with_capacity(2 * h.len() + m);
    let mut next = m;
    for &(a, b) in &h {
        edges.push((a, next));
        edges.push((b, next));
        next += 1;
    }
    for v in 0..m {
        edges.push((v, next + v));
    }
    let n = next + m + 1;
    Ok(Graph::from_edges_unchecked(n, false, edges))
}
