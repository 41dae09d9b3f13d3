//! Index-based bitset view of a [`Graph`] for the exponential searches.

use crate::graph::{Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(n: usize) -> Self {
        BitSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn intersection_len(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

/// Graph on indices `0..n`; `ids[i]` is the original vertex id of index `i`.
#[derive(Clone, Debug)]
pub struct DenseGraph {
    pub ids: Vec<VertexId>,
    pub rows: Vec<BitSet>,
}

impl DenseGraph {
    pub fn from_graph(g: &Graph) -> Self {
        let ids: Vec<_> = g.vertices().collect();
        let n = ids.len();
        let mut rows = vec![BitSet::new(n); n];
        for (i, &v) in ids.iter().enumerate() {
            for &w in g.neighbors(v) {
                rows[i].insert(ids.binary_search(&w).unwrap());
            }
        }
        DenseGraph { ids, rows }
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].len()
    }

    pub fn complement(&self) -> DenseGraph {
        let n = self.n();
        let rows = (0..n)
            .map(|i| {
                let mut r = BitSet::full(n);
                r.difference_with(&self.rows[i]);
                r.remove(i);
                r
            })
            .collect();
        DenseGraph {
            ids: self.ids.clone(),
            rows,
        }
    }

    /// Maximum clique size, or `None` if it is below `at_least`. Passing
    /// `stop_at` ends the search once a clique of that size is found.
    pub fn clique_search(&self, at_least: usize, stop_at: Option<usize>) -> Option<usize> {
        let n = self.n();
        if at_least == 0 && n == 0 {
            return Some(0);
        }
        let mut best = at_least.saturating_sub(1);
        let mut found = at_least == 0;
        let mut search = CliqueSearch {
            g: self,
            best: &mut best,
            found: &mut found,
            stop_at: stop_at.unwrap_or(usize::MAX),
        };
        search.expand(0, BitSet::full(n));
        found.then_some(best)
    }

    pub fn clique_number(&self) -> usize {
        self.clique_search(0, None).unwrap_or(0)
    }

    /// Exact `q`-colourability by DSATUR-ordered backtracking.
    pub fn is_colorable(&self, q: usize) -> bool {
        let n = self.n();
        if q >= n {
            return true;
        }
        if q == 0 {
            return false;
        }
        let mut colors = vec![usize::MAX; n];
        self.color_rec(q, &mut colors, 0, n)
    }

    fn color_rec(&self, q: usize, colors: &mut [usize], used: usize, remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let mut pick = usize::MAX;
        let mut pick_key = (0, 0);
        let mut forbidden = vec![false; q];
        for v in 0..self.n() {
            if colors[v] != usize::MAX {
                continue;
            }
            let mut seen = vec![false; q];
            let mut sat = 0;
            let mut free_deg = 0;
            for w in self.rows[v].iter() {
                let c = colors[w];
                if c == usize::MAX {
                    free_deg += 1;
                } else if !seen[c] {
                    seen[c] = true;
                    sat += 1;
                }
            }
            if sat == q {
                return false;
            }
            if pick == usize::MAX || (sat, free_deg) > pick_key {
                pick = v;
                pick_key = (sat, free_deg);
                forbidden = seen;
            }
        }
        let v = pick;
        for (c, &blocked) in forbidden.iter().enumerate().take(q.min(used + 1)) {
            if blocked {
                continue;
            }
            colors[v] = c;
            if self.color_rec(q, colors, used.max(c + 1), remaining - 1) {
                return true;
            }
        }
        colors[v] = usize::MAX;
        false
    }

    /// Number of colours DSATUR uses; an upper bound on χ.
    pub fn dsatur_bound(&self) -> usize {
        let n = self.n();
        let mut colors = vec![usize::MAX; n];
        let mut used = 0;
        for _ in 0..n {
            let mut best = (usize::MAX, 0, 0);
            for v in (0..n).filter(|&v| colors[v] == usize::MAX) {
                let mut cs: Vec<_> = self.rows[v]
                    .iter()
                    .map(|w| colors[w])
                    .filter(|&c| c != usize::MAX)
                    .collect();
                cs.sort_unstable();
                cs.dedup();
                let key = (cs.len(), self.degree(v));
                if best.0 == usize::MAX || key > (best.1, best.2) {
                    best = (v, key.0, key.1);
                }
            }
            let v = best.0;
            let taken: Vec<_> = self.rows[v].iter().map(|w| colors[w]).collect();
            let c = (0..).find(|c| !taken.contains(c)).unwrap();
            colors[v] = c;
            used = used.max(c + 1);
        }
        used
    }

    pub fn chromatic_number(&self) -> usize {
        if self.n() == 0 {
            return 0;
        }
        let lb = self.clique_number();
        let ub = self.dsatur_bound();
        (lb..ub).find(|&q| self.is_colorable(q)).unwrap_or(ub)
    }
}

struct CliqueSearch<'a> {
    g: &'a DenseGraph,
    best: &'a mut usize,
    found: &'a mut bool,
    stop_at: usize,
}

impl CliqueSearch<'_> {
    fn done(&self) -> bool {
        *self.found && *self.best >= self.stop_at
    }

    fn expand(&mut self, size: usize, mut p: BitSet) {
        let (order, bounds) = self.color_sort(&p);
        for idx in (0..order.len()).rev() {
            if size + bounds[idx] <= *self.best || self.done() {
                return;
            }
            let v = order[idx];
            let next = p.intersection(&self.g.rows[v]);
            if next.is_empty() {
                if size + 1 > *self.best {
                    *self.best = size + 1;
                    *self.found = true;
                }
            } else {
                self.expand(size + 1, next);
            }
            p.remove(v);
        }
    }

    /// Greedy colour classes of `p`; `bounds[i]` is the colour of
    /// `order[i]`, nondecreasing.
    fn color_sort(&self, p: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(p.len());
        let mut bounds = Vec::with_capacity(p.len());
        let mut uncolored = p.clone();
        let mut k = 0;
        while !uncolored.is_empty() {
            k += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(&self.g.rows[v]);
                uncolored.remove(v);
                order.push(v);
                bounds.push(k);
            }
        }
        (order, bounds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitset_basics() {
        let mut s = BitSet::new(130);
        s.insert(3);
        s.insert(129);
        s.insert(64);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 64, 129]);
        assert_eq!(s.len(), 3);
        s.remove(3);
        assert_eq!(s.first(), Some(64));
    }

    #[test]
    fn clique_and_color() {
        let c5 = DenseGraph::from_graph(&Graph::cycle(5));
        assert_eq!(c5.clique_number(), 2);
        assert_eq!(c5.chromatic_number(), 3);
        assert!(!c5.is_colorable(2));
        assert_eq!(c5.clique_search(3, None), None);
        let k5 = DenseGraph::from_graph(&Graph::complete(5));
        assert_eq!(k5.clique_search(2, Some(3)).map(|b| b >= 3), Some(true));
    }
}
