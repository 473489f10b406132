//! Adjacency resolving sets of complete out-directed `k`-ary trees.

use super::{Construction, ConstructionError};
use crate::families::{kary_depths, make_kary_out_tree};

fn check(k: usize, layers: usize) -> Result<(), ConstructionError> {
    if k < 2 || layers < 1 {
        return Err(ConstructionError::InvalidParameters(format!(
            "k-ary tree needs k >= 2 and at least one layer, got k={k}, layers={layers}"
        )));
    }
    Ok(())
}

/// `1 + k^2 + ... + k^(n-1)` for odd `n`, `k + k^3 + ... + k^(n-1)` for
/// even `n`: the exponents are the values below `n` with the parity of
/// `n - 1`.
///
/// This is the size of the construction below, so it bounds the adjacency
/// dimension from above. It is not the exact value: from three layers on,
/// one leaf whose parent carries no weight can stay unseen, and the exact
/// adjacency dimension is one less (4 rather than 5 for `k = 2`, three
/// layers). For `n = 1` the formula reads `k^0 = 1` while the true value is
/// 0, since there is no pair to resolve.
pub fn kary_adim_formula(k: usize, layers: usize) -> Result<u64, ConstructionError> {
    check(k, layers)?;
    let k = k as u64;
    Ok((0..layers as u32)
        .filter(|e| (layers as u32 - 1 - e).is_multiple_of(2))
        .map(|e| k.pow(e))
        .sum())
}

/// Adjacency resolving set of the out-directed complete `k`-ary tree with
/// `layers` layers, with `kary_adim_formula(k, layers)` vertices.
///
/// The root is marked. A marked vertex leaves its first child unmarked and
/// marks the others; an unmarked vertex marks all of its children. Each
/// unmarked vertex is then the only unmarked child of a marked parent, which
/// sees it at distance 1 and nothing else does. Layer by layer
/// `marked(i) + marked(i - 1) = k^(i - 1)`, which sums to the formula.
///
/// Marking whole layers of one depth parity instead does not work under
/// distances measured along edge directions: from three layers on, the
/// unmarked siblings below the root are seen only by their common ancestors,
/// all at the same distance.
pub fn kary_tree_certificate(k: usize, layers: usize) -> Result<Construction, ConstructionError> {
    check(k, layers)?;
    let g = make_kary_out_tree(k, layers)
        .map_err(|e| ConstructionError::InvalidParameters(e.to_string()))?;
    let n = g.order();
    let mut marked = vec![false; n];
    marked[0] = true;
    for v in 1..n {
        let parent = (v - 1) / k;
        let first_child = (v - 1) % k == 0;
        marked[v] = !marked[parent] || !first_child;
    }
    Ok(Construction {
        set: (0..n).filter(|&v| marked[v]).collect(),
        recipe: format!(
            "k={k}, layers={layers}: root marked, first child of each marked vertex unmarked"
        ),
    })
}

/// All vertices at depths with the parity of `layers - 1`.
pub fn depth_parity_marking(k: usize, layers: usize) -> Vec<usize> {
    let n = (0..layers).map(|i| k.pow(i as u32)).sum();
    kary_depths(k, n)
        .into_iter()
        .enumerate()
        .filter(|&(_, d)| (layers - 1 - d).is_multiple_of(2))
        .map(|(v, _)| v)
        .collect()
}
