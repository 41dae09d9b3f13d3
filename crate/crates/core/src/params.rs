//! Exact α, ω, χ, maximum matchings and bipartite vertex covers.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dense::DenseGraph;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::recognize;

/// Default vertex limit for the exponential computations.
pub const DEFAULT_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameter {
    Alpha,
    Omega,
    Chi,
}

impl Parameter {
    pub const ALL: [Parameter; 3] = [Parameter::Alpha, Parameter::Omega, Parameter::Chi];

    pub fn of(self, g: &Graph) -> Result<usize> {
        match self {
            Parameter::Alpha => alpha(g),
            Parameter::Omega => omega(g),
            Parameter::Chi => chi(g),
        }
    }

    /// Whether `π(g) <= target`, without computing π exactly where a
    /// decision search is cheaper.
    pub fn at_most(self, g: &Graph, target: usize) -> Result<bool> {
        guard(g, DEFAULT_LIMIT)?;
        Ok(self.dense_at_most(&DenseGraph::from_graph(g), target))
    }

    pub(crate) fn dense_at_most(self, g: &DenseGraph, target: usize) -> bool {
        match self {
            Parameter::Alpha => g.complement().clique_search(target + 1, Some(target + 1)).is_none(),
            Parameter::Omega => g.clique_search(target + 1, Some(target + 1)).is_none(),
            Parameter::Chi => g.is_colorable(target),
        }
    }

    pub(crate) fn dense_value(self, g: &DenseGraph) -> usize {
        match self {
            Parameter::Alpha => g.complement().clique_number(),
            Parameter::Omega => g.clique_number(),
            Parameter::Chi => g.chromatic_number(),
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parameter::Alpha => "alpha",
            Parameter::Omega => "omega",
            Parameter::Chi => "chi",
        })
    }
}

impl FromStr for Parameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha" => Ok(Parameter::Alpha),
            "omega" => Ok(Parameter::Omega),
            "chi" => Ok(Parameter::Chi),
            _ => Err(Error::Invalid(format!("unknown parameter '{s}'"))),
        }
    }
}

fn guard(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        Err(Error::TooLarge { n: g.n(), limit })
    } else {
        Ok(())
    }
}

pub fn alpha(g: &Graph) -> Result<usize> {
    alpha_with_limit(g, DEFAULT_LIMIT)
}

pub fn omega(g: &Graph) -> Result<usize> {
    omega_with_limit(g, DEFAULT_LIMIT)
}

pub fn chi(g: &Graph) -> Result<usize> {
    chi_with_limit(g, DEFAULT_LIMIT)
}

pub fn alpha_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    guard(g, limit)?;
    Ok(DenseGraph::from_graph(g).complement().clique_number())
}

pub fn omega_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    guard(g, limit)?;
    Ok(DenseGraph::from_graph(g).clique_number())
}

pub fn chi_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    guard(g, limit)?;
    Ok(DenseGraph::from_graph(g).chromatic_number())
}

pub fn is_k_colorable(g: &Graph, q: usize) -> Result<bool> {
    guard(g, DEFAULT_LIMIT)?;
    Ok(DenseGraph::from_graph(g).is_colorable(q))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(VertexId, VertexId)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn saturated(&self) -> BTreeSet<VertexId> {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    pub fn mate(&self, v: VertexId) -> Option<VertexId> {
        self.edges.iter().find_map(|&(a, b)| match v {
            _ if v == a => Some(b),
            _ if v == b => Some(a),
            _ => None,
        })
    }
}

const NONE: usize = usize::MAX;

/// Edmonds' blossom algorithm.
pub fn maximum_matching(g: &Graph) -> Matching {
    let ids: Vec<_> = g.vertices().collect();
    let idx = |v: VertexId| ids.binary_search(&v).unwrap();
    let adj: Vec<Vec<usize>> = ids
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|&w| idx(w)).collect())
        .collect();
    let mate = Blossom::new(&adj).run();
    let mut edges: Vec<_> = (0..ids.len())
        .filter(|&i| mate[i] != NONE && i < mate[i])
        .map(|i| (ids[i], ids[mate[i]]))
        .collect();
    edges.sort_unstable();
    Matching { edges }
}

pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.adj.len();
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(&w) = self.adj[v].iter().find(|&&w| self.mate[w] == NONE) {
                    self.mate[v] = w;
                    self.mate[w] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            let mut v = self.find_path(root);
            while v != NONE {
                let pv = self.parent[v];
                let ppv = self.mate[pv];
                self.mate[v] = pv;
                self.mate[pv] = v;
                v = ppv;
            }
        }
        self.mate
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> usize {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for k in 0..self.adj[v].len() {
                let to = self.adj[v][k];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        NONE
    }
}

/// Minimum vertex cover of a bipartite graph via König's construction.
pub fn min_vertex_cover_bipartite(g: &Graph) -> Result<BTreeSet<VertexId>> {
    let (left, right) = recognize::bipartition(g).ok_or(Error::NotInClass("bipartite"))?;
    let m = maximum_matching(g);
    let mut reached: BTreeSet<VertexId> = left.iter().copied().filter(|&v| m.mate(v).is_none()).collect();
    let mut stack: Vec<_> = reached.iter().copied().collect();
    while let Some(x) = stack.pop() {
        if left.contains(&x) {
            for &y in g.neighbors(x) {
                if m.mate(x) != Some(y) && reached.insert(y) {
                    stack.push(y);
                }
            }
        } else if let Some(y) = m.mate(x) {
            if reached.insert(y) {
                stack.push(y);
            }
        }
    }
    let cover: BTreeSet<_> = left
        .difference(&reached)
        .chain(right.intersection(&reached))
        .copied()
        .collect();
    debug_assert_eq!(cover.len(), m.len());
    Ok(cover)
}

/// χ of a 3P1-free graph together with ℓ, the number of singleton colour
/// classes in every optimal colouring.
pub fn chi_3p1free(g: &Graph) -> Result<(usize, usize)> {
    let classes = optimal_coloring_3p1free(g)?;
    let singles = classes.iter().filter(|c| c.len() == 1).count();
    Ok((classes.len(), singles))
}

/// Optimal colouring of a 3P1-free graph: matched non-edges become pairs,
/// everything else is a singleton. Pairs come first.
pub fn optimal_coloring_3p1free(g: &Graph) -> Result<Vec<Vec<VertexId>>> {
    if !recognize::is_3p1_free(g) {
        return Err(Error::NotInClass("3P1-free"));
    }
    let m = maximum_matching(&g.complement());
    let sat = m.saturated();
    let mut classes: Vec<Vec<VertexId>> = m.edges.iter().map(|&(u, v)| vec![u, v]).collect();
    classes.extend(g.vertices().filter(|v| !sat.contains(v)).map(|v| vec![v]));
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let c5 = Graph::cycle(5);
        assert_eq!((alpha(&c5), omega(&c5), chi(&c5)), (Ok(2), Ok(2), Ok(3)));
        let k4 = Graph::complete(4);
        assert_eq!((alpha(&k4), omega(&k4), chi(&k4)), (Ok(1), Ok(4), Ok(4)));
        let p4 = Graph::path(4);
        assert_eq!((alpha(&p4), omega(&p4), chi(&p4)), (Ok(2), Ok(2), Ok(2)));
        let e = Graph::new();
        assert_eq!((alpha(&e), omega(&e), chi(&e)), (Ok(0), Ok(0), Ok(0)));
    }

    #[test]
    fn colorability() {
        let c5 = Graph::cycle(5);
        assert_eq!(is_k_colorable(&c5, 2), Ok(false));
        assert_eq!(is_k_colorable(&c5, 3), Ok(true));
        assert_eq!(is_k_colorable(&Graph::new(), 0), Ok(true));
        assert_eq!(is_k_colorable(&Graph::empty(1), 0), Ok(false));
    }

    #[test]
    fn size_guard() {
        let big = Graph::empty(DEFAULT_LIMIT + 1);
        assert!(matches!(alpha(&big), Err(Error::TooLarge { .. })));
        assert_eq!(alpha_with_limit(&big, 100), Ok(DEFAULT_LIMIT + 1));
    }

    #[test]
    fn matchings() {
        assert_eq!(matching_number(&Graph::path(4)), 2);
        assert_eq!(matching_number(&Graph::cycle(5)), 2);
        assert_eq!(matching_number(&Graph::star(3)), 1);
        assert_eq!(matching_number(&Graph::complete(7)), 3);
    }

    #[test]
    fn konig_cover() {
        assert_eq!(min_vertex_cover_bipartite(&Graph::cycle(4)).unwrap().len(), 2);
        assert_eq!(min_vertex_cover_bipartite(&Graph::cycle(6)).unwrap().len(), 3);
        assert_eq!(
            min_vertex_cover_bipartite(&Graph::star(4)).unwrap(),
            BTreeSet::from([0])
        );
        assert_eq!(
            min_vertex_cover_bipartite(&Graph::cycle(5)),
            Err(Error::NotInClass("bipartite"))
        );
    }

    #[test]
    fn three_p1_free_chi() {
        assert_eq!(chi_3p1free(&Graph::cycle(5)), Ok((3, 1)));
        assert_eq!(chi_3p1free(&Graph::complete(4)), Ok((4, 4)));
        assert_eq!(chi_3p1free(&Graph::cycle(4)), Ok((2, 0)));
        assert_eq!(chi_3p1free(&Graph::empty(3)), Err(Error::NotInClass("3P1-free")));
    }
}
