//! Rewriting a resolving broadcast on an out-directed tree into an
//! adjacency resolving broadcast of no greater cost.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::certificates::{resolves, verify_broadcast, Broadcast, CertificateError};
use crate::graph::{all_pairs_distances, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("graph is not a tree with every edge directed away from the root")]
    NotOutTree,
    #[error("input is not a resolving broadcast")]
    InvalidBroadcast,
    #[error(transparent)]
    Certificate(#[from] CertificateError),
    #[error("rewriting vertex {vertex} left the pairs {pairs:?} undifferentiated")]
    RewriteBrokeValidity {
        vertex: usize,
        pairs: Vec<(usize, usize)>,
    },
    #[error("vertex {vertex} of weight {weight} is crucial for {size} vertices")]
    CrucialSetTooLarge {
        vertex: usize,
        weight: u32,
        size: usize,
    },
    #[error("rewriting raised the cost from {before} to {after}")]
    CostIncreased { before: u64, after: u64 },
    #[error("rewriting did not settle after {0} steps")]
    DidNotSettle(usize),
}

/// One rewrite: `vertex` lost `weight` and every member of `crucial` except
/// `excluded_child` gained 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RewriteStep {
    pub vertex: usize,
    pub weight: u32,
    pub crucial: Vec<usize>,
    pub excluded_child: Option<usize>,
}

/// A depth holding more than one vertex of a crucial set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerViolation {
    pub vertex: usize,
    pub depth: usize,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransformOutcome {
    pub broadcast: Broadcast,
    pub steps: Vec<RewriteStep>,
    pub layer_violations: Vec<LayerViolation>,
}

/// Vertices `u` for which support vertex `v` is crucial: some pair
/// `(u, w)` is resolved by `v` and by no other support vertex.
pub fn crucial_vertices(
    g: &Graph,
    f: &Broadcast,
    v: usize,
) -> Result<BTreeSet<usize>, CertificateError> {
    if f.len() != g.order() {
        return Err(CertificateError::LengthMismatch {
            expected: g.order(),
            found: f.len(),
        });
    }
    if v >= g.order() {
        return Err(CertificateError::VertexOutOfRange(v));
    }
    if f.weight(v) == 0 {
        return Err(CertificateError::NotInSupport(v));
    }
    let dm = all_pairs_distances(g);
    let others: Vec<usize> = f.support().into_iter().filter(|&z| z != v).collect();
    let n = g.order();
    let mut crucial = BTreeSet::new();
    for x in 0..n {
        for y in x + 1..n {
            if !resolves(&dm, f, v, x, y)? {
                continue;
            }
            let mut shared = false;
            for &z in &others {
                if resolves(&dm, f, z, x, y)? {
                    shared = true;
                    break;
                }
            }
            if !shared {
                crucial.insert(x);
                crucial.insert(y);
            }
        }
    }
    Ok(crucial)
}

/// Root and depths of an out-tree, or `None` if `g` is not one.
fn out_tree_depths(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if !g.is_directed() || n == 0 || g.edge_count() != n - 1 {
        return None;
    }
    let roots: Vec<usize> = (0..n).filter(|&v| g.in_degree(v) == 0).collect();
    let [root] = roots[..] else { return None };
    let depth: Vec<usize> = g
        .bfs_from(root, None)
        .into_iter()
        .map(|d| d.value().map(|d| d as usize))
        .collect::<Option<_>>()?;
    Some(depth)
}

/// Rewrites `f` weight by weight. Vertices are visited by depth, ties by
/// index; at the first vertex `v` with weight `w > 1`, with `C` the vertices
/// `v` is crucial for:
///
/// * if `|C| = w + 1` and `C` holds a child of `v`, `v` drops to 0 and every
///   other member of `C` gains 1;
/// * otherwise, if `|C| <= w + 1`, `v` drops to 0 and every member of `C`
///   gains 1.
///
/// The result is re-verified after each rewrite, and the whole run fails if
/// a rewrite breaks resolution, if some `|C|` exceeds `w + 1`, or if the cost
/// goes up. Depths where `C` has more than one vertex are reported.
pub fn tree_broadcast_to_adjacency(
    g: &Graph,
    f: &Broadcast,
) -> Result<TransformOutcome, TransformError> {
    let depth = out_tree_depths(g).ok_or(TransformError::NotOutTree)?;
    if !verify_broadcast(g, f)?.valid {
        return Err(TransformError::InvalidBroadcast);
    }
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (depth[v], v));

    let mut current = f.clone();
    let mut steps = Vec::new();
    let mut layer_violations = Vec::new();
    // every step removes a weight above 1; this bounds well-behaved runs
    let mut budget = f.cost() as usize + n;
    while let Some(&v) = order.iter().find(|&&v| current.weight(v) > 1) {
        if budget == 0 {
            return Err(TransformError::DidNotSettle(steps.len()));
        }
        budget -= 1;
        let w = current.weight(v);
        let crucial = crucial_vertices(g, &current, v)?;

        let mut per_depth: BTreeMap<usize, usize> = BTreeMap::new();
        for &u in &crucial {
            *per_depth.entry(depth[u]).or_default() += 1;
        }
        layer_violations.extend(per_depth.into_iter().filter(|&(_, count)| count > 1).map(
            |(d, count)| LayerViolation {
                vertex: v,
                depth: d,
                count,
            },
        ));

        let size = crucial.len();
        if size > w as usize + 1 {
            return Err(TransformError::CrucialSetTooLarge {
                vertex: v,
                weight: w,
                size,
            });
        }
        let child = crucial.iter().copied().find(|&u| g.has_edge(v, u));
        let excluded_child = if size == w as usize + 1 { child } else { None };

        current.set_weight(v, 0);
        for &u in &crucial {
            if Some(u) != excluded_child {
                current.set_weight(u, current.weight(u) + 1);
            }
        }
        let report = verify_broadcast(g, &current)?;
        if !report.valid {
            return Err(TransformError::RewriteBrokeValidity {
                vertex: v,
                pairs: report.undifferentiated_pairs,
            });
        }
        steps.push(RewriteStep {
            vertex: v,
            weight: w,
            crucial: crucial.into_iter().collect(),
            excluded_child,
        });
    }
    if current.cost() > f.cost() {
        return Err(TransformError::CostIncreased {
            before: f.cost(),
            after: current.cost(),
        });
    }
    Ok(TransformOutcome {
        broadcast: current,
        steps,
        layer_violations,
    })
}
