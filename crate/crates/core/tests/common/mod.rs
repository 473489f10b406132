//! Naive enumeration oracles, written without the library's distance code
//! or search so they can check it.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{HashSet, VecDeque};

use resolvedim::Graph;

pub const FAR: u64 = u64::MAX;

/// Directed-aware BFS distances, `FAR` when unreachable.
pub fn distances(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.order();
    let mut out = vec![vec![FAR; n]; n];
    let edges = g.edges();
    let mut adj = vec![Vec::new(); n];
    for (u, v) in edges {
        adj[u].push(v);
        if !g.is_directed() {
            adj[v].push(u);
        }
    }
    for s in 0..n {
        out[s][s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if out[s][y] == FAR {
                    out[s][y] = out[s][x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    out
}

fn all_distinct<T: Eq + std::hash::Hash>(items: impl IntoIterator<Item = T>, n: usize) -> bool {
    items.into_iter().collect::<HashSet<_>>().len() == n
}

/// Subsets of `0..n` of size `k` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn smallest_set(n: usize, ok: impl Fn(&[usize]) -> bool) -> (u64, Vec<usize>) {
    for k in 0..=n {
        if let Some(s) = combinations(n, k).into_iter().find(|s| ok(s)) {
            return (k as u64, s);
        }
    }
    unreachable!("the whole vertex set always works")
}

pub fn is_resolving(d: &[Vec<u64>], s: &[usize]) -> bool {
    let n = d.len();
    all_distinct(
        (0..n).map(|x| s.iter().map(|&z| d[z][x]).collect::<Vec<_>>()),
        n,
    )
}

pub fn is_adjacency_resolving(d: &[Vec<u64>], s: &[usize]) -> bool {
    let n = d.len();
    all_distinct(
        (0..n).map(|x| s.iter().map(|&z| d[z][x].min(2)).collect::<Vec<_>>()),
        n,
    )
}

/// Traces `N[v] ∩ c` over `v` outside `c`, with `z ∈ N[v]` when `z`
/// reaches `v` in at most one step.
pub fn is_locating_dominating(d: &[Vec<u64>], c: &[usize]) -> bool {
    let n = d.len();
    let outside: Vec<usize> = (0..n).filter(|v| !c.contains(v)).collect();
    let traces: Vec<Vec<usize>> = outside
        .iter()
        .map(|&v| c.iter().copied().filter(|&z| d[z][v] <= 1).collect())
        .collect();
    traces.iter().all(|t| !t.is_empty()) && all_distinct(traces, outside.len())
}

pub fn is_resolving_broadcast(d: &[Vec<u64>], w: &[u64]) -> bool {
    let n = d.len();
    all_distinct(
        (0..n).map(|x| {
            (0..n)
                .filter(|&z| w[z] > 0)
                .map(|z| d[z][x].min(w[z] + 1))
                .collect::<Vec<_>>()
        }),
        n,
    )
}

pub fn dim(g: &Graph) -> (u64, Vec<usize>) {
    let d = distances(g);
    smallest_set(g.order(), |s| is_resolving(&d, s))
}

pub fn adim(g: &Graph) -> (u64, Vec<usize>) {
    let d = distances(g);
    smallest_set(g.order(), |s| is_adjacency_resolving(&d, s))
}

pub fn ld(g: &Graph) -> (u64, Vec<usize>) {
    let d = distances(g);
    smallest_set(g.order(), |s| is_locating_dominating(&d, s))
}

/// Weight vectors of total `cost` over `n` vertices, lexicographic.
fn compositions(n: usize, cost: u64, out: &mut Vec<Vec<u64>>, cur: &mut Vec<u64>) {
    if cur.len() == n {
        if cost == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for a in 0..=cost {
        cur.push(a);
        compositions(n, cost - a, out, cur);
        cur.pop();
    }
}

/// Cheapest resolving broadcast with no cap on individual weights; the
/// lexicographically smallest among those of minimum cost.
pub fn bdim(g: &Graph) -> (u64, Vec<u64>) {
    let d = distances(g);
    let n = g.order();
    for cost in 0..=n as u64 {
        let mut all = Vec::new();
        compositions(n, cost, &mut all, &mut Vec::new());
        if let Some(w) = all.into_iter().find(|w| is_resolving_broadcast(&d, w)) {
            return (cost, w);
        }
    }
    unreachable!("weight 1 everywhere always resolves")
}

/// Number of resolving broadcasts of total `cost`.
pub fn optimal_broadcast_count(g: &Graph, cost: u64) -> usize {
    let d = distances(g);
    let mut all = Vec::new();
    compositions(g.order(), cost, &mut all, &mut Vec::new());
    all.iter().filter(|w| is_resolving_broadcast(&d, w)).count()
}
