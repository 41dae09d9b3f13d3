//! Seeded random generators for the graph classes the solvers cover.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::canonical_form;
use crate::dense::DenseGraph;
use crate::graph::{Graph, VertexId};
use crate::recognize::{is_c4_free, IntervalModel};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p).
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("ids in range")
}

/// Uniform labelled tree from a random Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        return Graph::path(n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let rest: Vec<_> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).expect("ids in range")
}

/// Cograph from a random binary cotree over `n` leaves.
pub fn random_cograph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    fn build<R: Rng>(n: usize, rng: &mut R) -> Graph {
        if n <= 1 {
            return Graph::empty(n);
        }
        let a = rng.gen_range(1..n);
        let (left, right) = (build(a, rng), build(n - a, rng));
        if rng.gen_bool(0.5) {
            left.disjoint_union(&right).0
        } else {
            left.join(&right).0
        }
    }
    build(n, rng)
}

/// Split graph: a random clique `K`, the rest independent, and each
/// `K`–`I` pair joined with probability `p`.
pub fn random_split<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let k = rng.gen_range(0..=n);
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
        for v in k..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("ids in range")
}

/// Random integer intervals with left endpoints in `0..span`.
pub fn random_interval_model<R: Rng>(n: usize, span: i64, rng: &mut R) -> IntervalModel {
    let span = span.max(1);
    IntervalModel::new((0..n).map(|v| {
        let l = rng.gen_range(0..span);
        let len = rng.gen_range(0..=(span / 2).max(1));
        (v, (l, l + len))
    }))
    .expect("l <= r by construction")
}

/// Bipartite graph over a random 2-colouring.
pub fn random_bipartite<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("ids in range")
}

pub fn random_cobipartite<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    random_bipartite(n, p, rng).complement()
}

/// Inserts candidate edges in random order, keeping those that do not
/// close a triangle.
pub fn random_triangle_free<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    greedy_edges(n, p, rng, |g, u, v| g.neighbors(u).is_disjoint(g.neighbors(v)))
}

/// Complement of a triangle-free graph, hence free of three pairwise
/// non-adjacent vertices.
pub fn random_3p1free<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    random_triangle_free(n, p, rng).complement()
}

/// Complement of a paw-free graph whose components are each triangle-free
/// or complete multipartite.
pub fn random_p1p3free<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new();
    let mut left = n;
    while left > 0 {
        let size = rng.gen_range(1..=left);
        left -= size;
        let part = if rng.gen_bool(0.5) {
            random_triangle_free(size, p, rng)
        } else {
            let colour: Vec<usize> = (0..size).map(|_| rng.gen_range(0..3)).collect();
            let mut edges = Vec::new();
            for u in 0..size {
                for v in u + 1..size {
                    if colour[u] != colour[v] {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(size, &edges).expect("ids in range")
        };
        g = g.disjoint_union(&part).0;
    }
    g.complement()
}

/// Inserts candidate edges in random order, keeping those that do not
/// create an induced C4.
pub fn random_c4free<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    greedy_edges(n, p, rng, |g, u, v| {
        let mut h = g.clone();
        h.add_edge(u, v).expect("both ends present");
        is_c4_free(&h)
    })
}

fn greedy_edges<R: Rng>(
    n: usize,
    p: f64,
    rng: &mut R,
    mut keep: impl FnMut(&Graph, VertexId, VertexId) -> bool,
) -> Graph {
    let mut pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        if rng.gen_bool(p) && keep(&g, u, v) {
            g.add_edge(u, v).expect("both ends present");
        }
    }
    g
}

/// One representative of every isomorphism class of trees on `n` vertices.
pub fn all_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::new()];
    }
    let mut level = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..size - 1 {
                let mut grown = t.clone();
                grown.add_vertex(size - 1);
                grown.add_edge(v, size - 1).expect("both ends present");
                if seen.insert(canonical_form(&DenseGraph::from_graph(&grown))) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
}
