//! Class membership tests, most with certificates.

mod classify;
mod cotree;
mod interval;
mod split;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

pub use classify::{classify, probe_graph, Dichotomy, Verdict, PROBES};
pub use cotree::{cotree, Cotree, CotreeNode, InducedP4, NodeId};
pub use interval::{find_interval_model, IntervalModel};
pub use split::{split_partition, SplitFlavor, SplitPartition};

use crate::dense::DenseGraph;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Largest pattern accepted by [`find_induced`].
pub const PATTERN_LIMIT: usize = 8;

/// Default vertex limit of [`is_perfect_small`].
pub const PERFECT_LIMIT: usize = 12;

/// A proper 2-colouring `(left, right)`; each component's smallest vertex
/// is on the left.
pub fn bipartition(g: &Graph) -> Option<(BTreeSet<VertexId>, BTreeSet<VertexId>)> {
    let mut side: BTreeMap<VertexId, bool> = BTreeMap::new();
    for s in g.vertices() {
        if side.contains_key(&s) {
            continue;
        }
        side.insert(s, false);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let sx = side[&x];
            for &y in g.neighbors(x) {
                match side.get(&y) {
                    Some(&sy) if sy == sx => return None,
                    Some(_) => {}
                    None => {
                        side.insert(y, !sx);
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    let (l, r): (Vec<_>, Vec<_>) = side.into_iter().partition(|&(_, s)| !s);
    Some((
        l.into_iter().map(|p| p.0).collect(),
        r.into_iter().map(|p| p.0).collect(),
    ))
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

pub fn is_cobipartite(g: &Graph) -> bool {
    is_bipartite(&g.complement())
}

pub fn is_forest(g: &Graph) -> bool {
    g.m() + g.connected_components().len() == g.n()
}

pub fn is_tree(g: &Graph) -> bool {
    !g.is_empty() && g.is_connected() && g.m() + 1 == g.n()
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| g.neighbors(u).is_disjoint(g.neighbors(v)))
}

/// α(G) <= 2, i.e. the complement is triangle-free.
pub fn is_3p1_free(g: &Graph) -> bool {
    is_triangle_free(&g.complement())
}

pub fn is_c4_free(g: &Graph) -> bool {
    find_induced(g, &Graph::cycle(4)).map_or(true, |e| e.is_none())
}

/// An induced copy of `h` in `g`, as a map from `h`'s vertices to `g`'s.
pub fn find_induced(g: &Graph, h: &Graph) -> Result<Option<BTreeMap<VertexId, VertexId>>> {
    if h.n() > PATTERN_LIMIT {
        return Err(Error::TooLarge {
            n: h.n(),
            limit: PATTERN_LIMIT,
        });
    }
    if h.n() > g.n() {
        return Ok(None);
    }
    let order = connected_order(h);
    let hd = DenseGraph::from_graph(h);
    let gd = DenseGraph::from_graph(g);
    let mut image = vec![usize::MAX; hd.n()];
    let mut used = vec![false; gd.n()];
    if embed(&hd, &gd, &order, 0, &mut image, &mut used) {
        let map = order.iter().map(|&i| (hd.ids[i], gd.ids[image[i]])).collect();
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

pub fn is_h_free(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_induced(g, h)?.is_none())
}

/// Whether `h` is an induced subgraph of `g`.
pub fn is_induced_subgraph(h: &Graph, g: &Graph) -> bool {
    matches!(find_induced(g, h), Ok(Some(_)))
}

/// Dense indices of `h` ordered so each vertex follows a neighbour
/// whenever its component allows it.
fn connected_order(h: &Graph) -> Vec<usize> {
    let hd = DenseGraph::from_graph(h);
    let n = hd.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&i| !placed[i])
            .max_by_key(|&i| (hd.degree(i), usize::MAX - i))
            .unwrap();
        placed[start] = true;
        order.push(start);
        loop {
            let next = (0..n)
                .filter(|&i| !placed[i] && order.iter().any(|&j| hd.has_edge(i, j)))
                .max_by_key(|&i| (order.iter().filter(|&&j| hd.has_edge(i, j)).count(), usize::MAX - i));
            match next {
                Some(i) => {
                    placed[i] = true;
                    order.push(i);
                }
                None => break,
            }
        }
    }
    order
}

fn embed(h: &DenseGraph, g: &DenseGraph, order: &[usize], pos: usize, image: &mut [usize], used: &mut [bool]) -> bool {
    if pos == order.len() {
        return true;
    }
    let x = order[pos];
    for cand in 0..g.n() {
        if used[cand] || g.degree(cand) < h.degree(x) {
            continue;
        }
        let ok = order[..pos]
            .iter()
            .all(|&y| h.has_edge(x, y) == g.has_edge(cand, image[y]));
        if ok {
            image[x] = cand;
            used[cand] = true;
            if embed(h, g, order, pos + 1, image, used) {
                return true;
            }
            used[cand] = false;
        }
    }
    false
}

/// Maximum cardinality search followed by a perfect-elimination check.
pub fn is_chordal(g: &Graph) -> bool {
    let d = DenseGraph::from_graph(g);
    let n = d.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], usize::MAX - v))
            .unwrap();
        numbered[v] = true;
        order.push(v);
        for w in d.rows[v].iter() {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    // Reverse of the visit order is a perfect elimination ordering iff chordal.
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        let earlier: Vec<_> = d.rows[v].iter().filter(|&w| pos[w] < pos[v]).collect();
        if let Some(&p) = earlier.iter().max_by_key(|&&w| pos[w]) {
            if earlier.iter().any(|&w| w != p && !d.has_edge(w, p)) {
                return false;
            }
        }
    }
    true
}

pub fn is_perfect_small(g: &Graph) -> Result<bool> {
    is_perfect_with_limit(g, PERFECT_LIMIT)
}

/// χ = ω on every induced subgraph, checked over all vertex subsets.
pub fn is_perfect_with_limit(g: &Graph, limit: usize) -> Result<bool> {
    if g.n() > limit {
        return Err(Error::TooLarge { n: g.n(), limit });
    }
    let ids: Vec<_> = g.vertices().collect();
    for mask in 1u64..(1u64 << ids.len()) {
        let keep: BTreeSet<_> = (0..ids.len()).filter(|i| mask >> i & 1 == 1).map(|i| ids[i]).collect();
        let d = DenseGraph::from_graph(&g.induced_subgraph(&keep)?);
        if !d.is_colorable(d.clique_number()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in g.vertices() {
        let mut dist: BTreeMap<VertexId, usize> = BTreeMap::from([(s, 0)]);
        let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                match dist.get(&y) {
                    None => {
                        dist.insert(y, dist[&x] + 1);
                        parent.insert(y, x);
                        queue.push_back(y);
                    }
                    Some(&dy) if parent.get(&x) != Some(&y) && parent.get(&y) != Some(&x) => {
                        let len = dist[&x] + dy + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    best
}

/// All maximal cliques (Bron–Kerbosch with pivoting), each sorted, in
/// lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<BTreeSet<VertexId>> {
    fn bk(
        g: &Graph,
        r: &mut Vec<VertexId>,
        p: BTreeSet<VertexId>,
        mut x: BTreeSet<VertexId>,
        out: &mut Vec<BTreeSet<VertexId>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.iter().copied().collect());
            return;
        }
        let pivot = p
            .union(&x)
            .max_by_key(|&&u| g.neighbors(u).intersection(&p).count())
            .copied()
            .unwrap();
        let cands: Vec<_> = p.difference(g.neighbors(pivot)).copied().collect();
        let mut p = p;
        for v in cands {
            let nv = g.neighbors(v);
            r.push(v);
            bk(
                g,
                r,
                p.intersection(nv).copied().collect(),
                x.intersection(nv).copied().collect(),
                out,
            );
            r.pop();
            p.remove(&v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    if !g.is_empty() {
        bk(g, &mut Vec::new(), g.vertex_set(), BTreeSet::new(), &mut out);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartite_and_trees() {
        assert!(is_bipartite(&Graph::cycle(6)));
        assert!(!is_bipartite(&Graph::cycle(5)));
        assert!(is_tree(&Graph::star(3)));
        assert!(!is_tree(&Graph::empty(2)));
        assert!(is_forest(&Graph::empty(2)));
        assert!(is_cobipartite(&Graph::complete(4)));
    }

    #[test]
    fn induced_search() {
        let emb = find_induced(&Graph::cycle(5), &Graph::path(4)).unwrap().unwrap();
        let image: BTreeSet<_> = emb.values().copied().collect();
        let sub = Graph::cycle(5).induced_subgraph(&image).unwrap();
        assert_eq!(sub.m(), 3);
        assert!(is_h_free(&Graph::cycle(4), &Graph::path(3)).map(|f| !f).unwrap());
        assert!(is_h_free(&Graph::complete(5), &Graph::path(3)).unwrap());
        assert!(is_c4_free(&Graph::cycle(5)));
        assert!(!is_c4_free(&Graph::complete_bipartite(2, 3)));
    }

    #[test]
    fn chordal_and_perfect() {
        assert!(!is_chordal(&Graph::cycle(4)));
        assert!(is_chordal(&Graph::star(3)));
        assert!(is_chordal(&Graph::complete(5)));
        assert_eq!(is_perfect_small(&Graph::cycle(5)), Ok(false));
        assert_eq!(is_perfect_small(&Graph::cycle(6)), Ok(true));
        assert_eq!(is_perfect_small(&Graph::cycle(7).complement()), Ok(false));
    }

    #[test]
    fn girth_values() {
        assert_eq!(girth(&Graph::complete(3)), Some(3));
        assert_eq!(girth(&Graph::cycle(9)), Some(9));
        assert_eq!(girth(&Graph::path(5)), None);
        assert_eq!(girth(&Graph::complete_bipartite(3, 3)), Some(4));
    }

    #[test]
    fn maximal_clique_listing() {
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert_eq!(
            maximal_cliques(&paw),
            vec![BTreeSet::from([0, 1, 2]), BTreeSet::from([2, 3])]
        );
        assert_eq!(maximal_cliques(&Graph::empty(2)).len(), 2);
    }
}
