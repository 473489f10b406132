//! Fixed-width bitsets and the depth-first cover search shared by the exact
//! solvers.

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = BitSet::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// `|self ∩ other|`
    pub fn count_and(&self, other: &BitSet) -> u32 {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }
}

/// Minimum-cardinality cover search. `covers[v]` is the set of elements
/// vertex `v` takes care of; every element of the universe must be covered.
pub(crate) struct SetCover<'a> {
    covers: &'a [BitSet],
    suffix_union: Vec<BitSet>,
    suffix_best: Vec<u32>,
    pub nodes: u64,
}

impl<'a> SetCover<'a> {
    pub fn new(covers: &'a [BitSet], universe: usize) -> Self {
        let n = covers.len();
        let mut suffix_union = vec![BitSet::new(universe); n + 1];
        let mut suffix_best = vec![0; n + 1];
        for v in (0..n).rev() {
            let mut u = suffix_union[v + 1].clone();
            u.union_with(&covers[v]);
            suffix_union[v] = u;
            suffix_best[v] = suffix_best[v + 1].max(covers[v].count());
        }
        SetCover {
            covers,
            suffix_union,
            suffix_best,
            nodes: 0,
        }
    }

    pub fn feasible(&self, uncovered: &BitSet) -> bool {
        uncovered.is_subset(&self.suffix_union[0])
    }

    /// The lexicographically least `size`-subset (as an ascending index
    /// list) covering `uncovered`, if any. Only meaningful when no cover with
    /// fewer than `size` members exists: vertices that add nothing to the
    /// current partial cover are skipped.
    pub fn first_of_size(&mut self, uncovered: &BitSet, size: usize) -> Option<Vec<usize>> {
        let mut chosen = Vec::with_capacity(size);
        self.dfs(uncovered, 0, size, &mut chosen).then_some(chosen)
    }

    fn dfs(
        &mut self,
        uncovered: &BitSet,
        start: usize,
        left: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        self.nodes += 1;
        if uncovered.is_empty() {
            return true;
        }
        if left == 0 {
            return false;
        }
        let n = self.covers.len();
        for v in start..n {
            if !uncovered.is_subset(&self.suffix_union[v]) {
                break;
            }
            let remaining = uncovered.count();
            if u64::from(self.suffix_best[v]) * (left as u64) < u64::from(remaining) {
                break;
            }
            if self.covers[v].count_and(uncovered) == 0 {
                continue;
            }
            let mut next = uncovered.clone();
            next.difference_with(&self.covers[v]);
            chosen.push(v);
            if self.dfs(&next, v + 1, left - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}
