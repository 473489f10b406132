//! Resolving broadcasts, adjacency resolving sets and locating-dominating
//! sets, and verifiers that report every failure.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Distance, DistanceMatrix, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("certificate has {found} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex {0} is outside the graph")]
    VertexOutOfRange(usize),
    #[error("vertex {0} carries no weight")]
    NotInSupport(usize),
    #[error("a pair must consist of two distinct vertices, got ({0}, {0})")]
    DegeneratePair(usize),
}

/// A weight `f(v) >= 0` on every vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Broadcast(Vec<u32>);

impl Broadcast {
    pub fn new(weights: Vec<u32>) -> Self {
        Broadcast(weights)
    }

    pub fn zeros(n: usize) -> Self {
        Broadcast(vec![0; n])
    }

    /// The 0/1 indicator of `set` on `n` vertices.
    pub fn indicator(n: usize, set: &[usize]) -> Result<Self, CertificateError> {
        let mut w = vec![0; n];
        for &v in set {
            *w.get_mut(v).ok_or(CertificateError::VertexOutOfRange(v))? = 1;
        }
        Ok(Broadcast(w))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn set_weight(&mut self, v: usize, w: u32) {
        self.0[v] = w;
    }

    pub fn weights(&self) -> &[u32] {
        &self.0
    }

    /// `{v : f(v) > 0}`, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v] > 0).collect()
    }

    pub fn cost(&self) -> u64 {
        cost(self)
    }

    /// True when every weight is 0 or 1.
    pub fn is_adjacency(&self) -> bool {
        self.0.iter().all(|&w| w <= 1)
    }

    fn check_order(&self, g: &Graph) -> Result<(), CertificateError> {
        if self.0.len() != g.order() {
            return Err(CertificateError::LengthMismatch {
                expected: g.order(),
                found: self.0.len(),
            });
        }
        Ok(())
    }
}

/// Total weight of a broadcast.
pub fn cost(f: &Broadcast) -> u64 {
    f.0.iter().map(|&w| u64::from(w)).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Broadcast,
    AdjacencySet,
    LocatingDominating,
    /// Exact (untruncated) distances, as used by metric dimension.
    ResolvingSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub mode: Mode,
    pub valid: bool,
    /// Every pair `(x, y)`, `x < y`, that no certificate vertex tells apart;
    /// in lexicographic order.
    pub undifferentiated_pairs: Vec<(usize, usize)>,
    pub unseen: BTreeSet<usize>,
}

impl VerificationReport {
    fn new(mode: Mode, mut pairs: Vec<(usize, usize)>, unseen: BTreeSet<usize>) -> Self {
        pairs.sort_unstable();
        let valid = pairs.is_empty() && (mode != Mode::LocatingDominating || unseen.is_empty());
        VerificationReport {
            mode,
            valid,
            undifferentiated_pairs: pairs,
            unseen,
        }
    }
}

/// Whether support vertex `z` tells `x` and `y` apart under `d_{f(z)}`.
pub fn resolves(
    dm: &DistanceMatrix,
    f: &Broadcast,
    z: usize,
    x: usize,
    y: usize,
) -> Result<bool, CertificateError> {
    let n = dm.order();
    for v in [z, x, y] {
        if v >= n || v >= f.len() {
            return Err(CertificateError::VertexOutOfRange(v));
        }
    }
    if f.weight(z) == 0 {
        return Err(CertificateError::NotInSupport(z));
    }
    if x == y {
        return Err(CertificateError::DegeneratePair(x));
    }
    let k = f.weight(z);
    Ok(dm.get(z, x).truncate(k) != dm.get(z, y).truncate(k))
}

/// Groups vertices by signature and lists every pair inside a group.
fn colliding_pairs<K: std::hash::Hash + Eq>(signatures: Vec<K>) -> Vec<(usize, usize)> {
    let mut classes: HashMap<K, Vec<usize>> = HashMap::new();
    for (v, sig) in signatures.into_iter().enumerate() {
        classes.entry(sig).or_default().push(v);
    }
    let mut pairs = Vec::new();
    for members in classes.values() {
        for (i, &x) in members.iter().enumerate() {
            pairs.extend(members[i + 1..].iter().map(|&y| (x, y)));
        }
    }
    pairs
}

/// Checks a resolving broadcast. Distances are taken out of each support
/// vertex, so in a directed graph a signal only follows edge directions.
pub fn verify_broadcast(g: &Graph, f: &Broadcast) -> Result<VerificationReport, CertificateError> {
    f.check_order(g)?;
    let n = g.order();
    let support = f.support();
    let mut signatures = vec![Vec::with_capacity(support.len()); n];
    let mut seen = vec![false; n];
    for &z in &support {
        let k = f.weight(z);
        for (x, d) in g.bfs_from(z, Some(k)).into_iter().enumerate() {
            signatures[x].push(d.truncate(k));
            seen[x] |= d.is_finite();
        }
    }
    let unseen = (0..n).filter(|&v| !seen[v]).collect();
    Ok(VerificationReport::new(
        Mode::Broadcast,
        colliding_pairs(signatures),
        unseen,
    ))
}

fn check_set(g: &Graph, s: &[usize]) -> Result<(), CertificateError> {
    match s.iter().find(|&&v| v >= g.order()) {
        Some(&v) => Err(CertificateError::VertexOutOfRange(v)),
        None => Ok(()),
    }
}

/// Checks an adjacency resolving set through its 0/1 indicator broadcast.
pub fn verify_adjacency_set(
    g: &Graph,
    s: &[usize],
) -> Result<VerificationReport, CertificateError> {
    check_set(g, s)?;
    let f = Broadcast::indicator(g.order(), s)?;
    let report = verify_broadcast(g, &f)?;
    Ok(VerificationReport {
        mode: Mode::AdjacencySet,
        ..report
    })
}

/// Checks a locating-dominating set: for `v` outside `c`, the traces
/// `I(v) = N[v] ∩ c` must be nonempty and pairwise distinct. Unseen vertices
/// are those outside `c` with an empty trace.
///
/// In a directed graph `N[v]` contains the in-neighbours of `v`, so the trace
/// records which members of `c` can send a signal to `v`.
pub fn verify_locating_dominating(
    g: &Graph,
    c: &[usize],
) -> Result<VerificationReport, CertificateError> {
    check_set(g, c)?;
    let n = g.order();
    let mut in_c = vec![false; n];
    for &v in c {
        in_c[v] = true;
    }
    let mut traces: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for z in (0..n).filter(|&z| in_c[z]) {
        traces[z].insert(z);
        for &v in g.neighbors(z) {
            traces[v].insert(z);
        }
    }
    let outside: Vec<usize> = (0..n).filter(|&v| !in_c[v]).collect();
    let unseen = outside
        .iter()
        .copied()
        .filter(|&v| traces[v].is_empty())
        .collect();
    let pairs = colliding_pairs(outside.iter().map(|&v| &traces[v]).collect())
        .into_iter()
        .map(|(i, j)| (outside[i], outside[j]))
        .collect();
    Ok(VerificationReport::new(
        Mode::LocatingDominating,
        pairs,
        unseen,
    ))
}

/// Checks a resolving set in the metric-dimension sense: exact distances,
/// with "unreachable" a value of its own.
pub fn verify_resolving_set(
    g: &Graph,
    s: &[usize],
) -> Result<VerificationReport, CertificateError> {
    check_set(g, s)?;
    let n = g.order();
    let mut signatures: Vec<Vec<Distance>> = vec![Vec::with_capacity(s.len()); n];
    let mut seen = vec![false; n];
    let members: BTreeSet<usize> = s.iter().copied().collect();
    for &z in &members {
        for (x, d) in g.bfs_from(z, None).into_iter().enumerate() {
            signatures[x].push(d);
            seen[x] |= d.is_finite();
        }
    }
    let unseen = (0..n).filter(|&v| !seen[v]).collect();
    Ok(VerificationReport::new(
        Mode::ResolvingSet,
        colliding_pairs(signatures),
        unseen,
    ))
}
