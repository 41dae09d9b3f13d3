//! Instance transformers from NP-hard source problems to blocker problems,
//! and brute-force deciders for the source problems.

mod cnf;
mod rbds;

use std::collections::{BTreeMap, BTreeSet};

pub use cnf::{CnfFormula, ASSIGNMENT_LIMIT};
pub use rbds::{RbdsInstance, SEARCH_LIMIT};

use crate::error::{Error, Result};
use crate::graph::{Graph, Operation, VertexId, Witness};
use crate::instance::{BlockerInstance, OpKind};
use crate::params::{chi_3p1free, matching_number, Parameter};
use crate::recognize::{bipartition, girth, is_bipartite, is_cobipartite};

/// Largest graph the subset searches below accept.
pub const BRUTE_FORCE_LIMIT: usize = 30;

fn guard(g: &Graph) -> Result<()> {
    if g.n() > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    Ok(())
}

fn clique_edges(vs: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            out.push((u, v));
        }
    }
    out
}

/// Completes `R` to a clique; the blocker asks for an α drop of `|B| - k`
/// with as many contractions.
pub fn reduce_rbds_to_split_alpha(inst: &RbdsInstance) -> Result<BlockerInstance> {
    inst.check_normalized()?;
    let red: Vec<_> = inst.red.iter().copied().collect();
    let mut g = inst.graph();
    for (u, v) in clique_edges(&red) {
        g.add_edge(u, v)?;
    }
    let d = inst.blue.len() - inst.k;
    Ok(BlockerInstance::new(g, Parameter::Alpha, OpKind::Contract, d, d))
}

/// Complements the blue-red adjacency, completes `B` to a clique and adds
/// a universal vertex `x` with the next free id.
pub fn reduce_rbds_to_split_chi(inst: &RbdsInstance) -> Result<BlockerInstance> {
    inst.check_normalized()?;
    let blue: Vec<_> = inst.blue.iter().copied().collect();
    let x = inst.blue.union(&inst.red).max().map_or(0, |v| v + 1);
    let mut edges = clique_edges(&blue);
    for &b in &blue {
        for &r in &inst.red {
            if !inst.edges.contains(&(b, r)) {
                edges.push((b, r));
            }
        }
    }
    edges.extend(inst.blue.union(&inst.red).map(|&v| (v, x)));
    let vertices = inst.blue.union(&inst.red).copied().chain([x]);
    let g = Graph::from_parts(vertices, edges)?;
    let d = inst.blue.len() - inst.k;
    Ok(BlockerInstance::new(g, Parameter::Chi, OpKind::Contract, d, d))
}

/// Vertex ids of the one-in-three gadget. Variable `i` (0-based) owns
/// `5i..5i+5`: apex, positive end, negative end, then the two far square
/// corners. Clause `j` owns `5n + 3j + t` for `t` in `0..3`.
#[derive(Debug, Clone, Copy)]
pub struct SatLayout {
    pub vars: usize,
}

impl SatLayout {
    pub fn apex(self, var: usize) -> VertexId {
        5 * var
    }

    /// The end of the literal's triangle edge other than the apex.
    pub fn literal_end(self, lit: i32) -> VertexId {
        let var = lit.unsigned_abs() as usize - 1;
        5 * var + if lit > 0 { 1 } else { 2 }
    }

    pub fn clause_vertex(self, clause: usize, t: usize) -> VertexId {
        5 * self.vars + 3 * clause + t
    }
}

/// Variable gadgets are a triangle and a square sharing the edge between
/// the two literal ends; literal `t` of a clause is the triangle edge
/// `c_t c_{t+1}`, matched to the variable's literal edge with `c_t` on the
/// apex.
pub fn reduce_1in3sat_to_omega(f: &CnfFormula) -> Result<BlockerInstance> {
    let f = CnfFormula::new(f.vars, f.clauses.clone())?;
    let lay = SatLayout { vars: f.vars };
    let n = 5 * f.vars + 3 * f.clauses.len();
    let mut edges = Vec::new();
    for i in 0..f.vars {
        let b = 5 * i;
        edges.extend([
            (b, b + 1),
            (b, b + 2),
            (b + 1, b + 2),
            (b + 1, b + 3),
            (b + 3, b + 4),
            (b + 4, b + 2),
        ]);
    }
    for (j, clause) in f.clauses.iter().enumerate() {
        let c = |t: usize| lay.clause_vertex(j, t % 3);
        edges.extend([(c(0), c(1)), (c(1), c(2)), (c(2), c(0))]);
        for (t, &lit) in clause.iter().enumerate() {
            let var = lit.unsigned_abs() as usize - 1;
            edges.push((c(t), lay.apex(var)));
            edges.push((c(t + 1), lay.literal_end(lit)));
        }
    }
    let g = Graph::from_edges(n, &edges)?;
    Ok(BlockerInstance::new(
        g,
        Parameter::Omega,
        OpKind::Contract,
        1,
        f.vars + f.clauses.len(),
    ))
}

/// The contraction set a one-in-three assignment induces: the true
/// literal's edge in every variable triangle and in every clause triangle.
pub fn assignment_witness(f: &CnfFormula, assignment: &[bool]) -> Result<Witness> {
    if assignment.len() != f.vars || !f.is_one_in_three(assignment) {
        return Err(Error::Invalid("not a one-in-three assignment".into()));
    }
    let lay = SatLayout { vars: f.vars };
    let mut ops: Vec<_> = (0..f.vars)
        .map(|i| {
            let lit = if assignment[i] { i as i32 + 1 } else { -(i as i32 + 1) };
            Operation::Contract(lay.literal_end(lit), lay.apex(i))
        })
        .collect();
    for (j, clause) in f.clauses.iter().enumerate() {
        let t = clause
            .iter()
            .position(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
            .expect("one literal is true");
        ops.push(Operation::Contract(
            lay.clause_vertex(j, t),
            lay.clause_vertex(j, (t + 1) % 3),
        ));
    }
    Ok(Witness::new(ops))
}

/// Subdivides every edge `e = ab` (`a < b`) into `a s b` and adds two
/// non-adjacent vertices on both ends of `as`. The budget grows by one
/// contraction per original edge.
pub fn lift_to_c4free_perfect(g: &Graph, k: usize) -> Result<BlockerInstance> {
    let mut out = g.clone();
    let mut next = g.next_id();
    for (a, b) in g.edges() {
        let (s, ue, ve) = (next, next + 1, next + 2);
        next += 3;
        let (lifted, _) = out.subdivide_edge(a, b, 1)?;
        out = lifted;
        for w in [ue, ve] {
            out.add_vertex(w);
            out.add_edge(w, a)?;
            out.add_edge(w, s)?;
        }
    }
    Ok(BlockerInstance::new(
        out,
        Parameter::Omega,
        OpKind::Contract,
        1,
        k + g.m(),
    ))
}

/// Original vertices (relabelled `0..n`) form a clique, `y = n` is
/// universal, and each edge `e` gets a private clique of size `n` complete
/// to its two ends, laid out after `y` in edge order.
pub fn reduce_vc_to_chordal(g: &Graph, k: usize) -> Result<BlockerInstance> {
    if g.m() == 0 {
        return Err(Error::Invalid("the vertex cover instance has no edges".into()));
    }
    let (g, _) = g.compact();
    let n = g.n();
    let y = n;
    let base: Vec<_> = (0..n).collect();
    let mut edges = clique_edges(&base);
    edges.extend(base.iter().map(|&v| (v, y)));
    let mut next = y + 1;
    for (a, b) in g.edges() {
        let ke: Vec<_> = (next..next + n).collect();
        next += n;
        edges.extend(clique_edges(&ke));
        for &w in &ke {
            edges.extend([(w, a), (w, b), (w, y)]);
        }
    }
    let out = Graph::from_edges(next, &edges)?;
    Ok(BlockerInstance::new(out, Parameter::Omega, OpKind::Contract, 1, k))
}

/// Adds three dominating vertices, then subdivides every edge once. The
/// target is α = 1 within `k + m` contractions, `m` counted after the
/// augmentation.
pub fn reduce_cobipartite_alpha_to_bipartite(g: &Graph, k: usize) -> Result<BlockerInstance> {
    if !is_cobipartite(g) {
        return Err(Error::NotInClass("cobipartite"));
    }
    if g.m() == 0 {
        return Err(Error::Invalid("the cobipartite instance has no edges".into()));
    }
    let mut aug = g.clone();
    let first = g.next_id();
    let old: Vec<_> = g.vertices().collect();
    for x in first..first + 3 {
        aug.add_vertex(x);
        for &v in &old {
            aug.add_edge(x, v)?;
        }
        for y in first..x {
            aug.add_edge(x, y)?;
        }
    }
    let m = aug.m();
    let mut out = aug.clone();
    for (a, b) in aug.edges() {
        out = out.subdivide_edge(a, b, 1)?.0;
    }
    let alpha = out.n() - matching_number(&out);
    Ok(BlockerInstance::new(
        out,
        Parameter::Alpha,
        OpKind::Contract,
        alpha - 1,
        k + m,
    ))
}

/// Asks whether the complement can be `(n - 6)`-contracted to χ <= 3.
pub fn reduce_biclique_to_cobipartite_chi(g: &Graph) -> Result<BlockerInstance> {
    if g.n() < 6 {
        return Err(Error::Invalid(format!("need at least 6 vertices, got {}", g.n())));
    }
    if !is_bipartite(g) || !g.is_connected() {
        return Err(Error::NotInClass("connected bipartite"));
    }
    let co = g.complement();
    let (chi, _) = chi_3p1free(&co)?;
    Ok(BlockerInstance::new(
        co,
        Parameter::Chi,
        OpKind::Contract,
        chi.saturating_sub(3),
        g.n() - 6,
    ))
}

/// Replaces every edge by a path of length three, at least once and until
/// the girth exceeds `p`.
pub fn girth_lift(g: &Graph, p: usize) -> Graph {
    let mut out = subdivide_twice(g);
    while girth(&out).is_some_and(|c| c <= p) {
        out = subdivide_twice(&out);
    }
    out
}

fn subdivide_twice(g: &Graph) -> Graph {
    let mut out = g.clone();
    for (a, b) in g.edges() {
        out = out.subdivide_edge(a, b, 2).expect("edge of the original graph").0;
    }
    out
}

/// `2G` plus a disjoint `K_{l+1}`, with one contraction to lower ω by one.
pub fn clique_proof_lift(g: &Graph, l: usize) -> Result<BlockerInstance> {
    if l == 0 {
        return Err(Error::Invalid("l must be at least 1".into()));
    }
    let (g, _) = g.compact();
    let (two, _) = g.disjoint_union(&g);
    let (out, _) = two.disjoint_union(&Graph::complete(l + 1));
    Ok(BlockerInstance::new(out, Parameter::Omega, OpKind::Contract, 1, 1))
}

fn bitmask_adjacency(g: &Graph) -> (Vec<VertexId>, Vec<u32>) {
    let ids: Vec<_> = g.vertices().collect();
    let index: BTreeMap<_, _> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj = ids
        .iter()
        .map(|v| g.neighbors(*v).iter().fold(0u32, |m, w| m | 1 << index[w]))
        .collect();
    (ids, adj)
}

/// Exhaustive search for a vertex cover of size at most `k`.
pub fn vertex_cover_at_most(g: &Graph, k: usize) -> Result<bool> {
    guard(g)?;
    let (_, adj) = bitmask_adjacency(g);
    let n = adj.len();
    Ok((0u32..1 << n)
        .filter(|m| m.count_ones() as usize <= k)
        .any(|cover| (0..n).all(|v| cover >> v & 1 == 1 || adj[v] & !cover == 0)))
}

/// Exhaustive search for a partition of a bipartite graph into `parts`
/// bicliques, each with at least one edge.
pub fn has_biclique_partition(g: &Graph, parts: usize) -> Result<bool> {
    guard(g)?;
    let (x, _) = bipartition(g).ok_or(Error::NotInClass("bipartite"))?;
    let ids: Vec<_> = g.vertices().collect();
    let mut label = vec![0usize; ids.len()];
    fn valid(g: &Graph, ids: &[VertexId], x: &BTreeSet<VertexId>, label: &[usize], parts: usize) -> bool {
        (0..parts).all(|p| {
            let members: Vec<_> = (0..ids.len()).filter(|&i| label[i] == p).map(|i| ids[i]).collect();
            let (left, right): (Vec<_>, Vec<_>) = members.iter().partition(|v| x.contains(v));
            !left.is_empty() && !right.is_empty() && left.iter().all(|a| right.iter().all(|b| g.has_edge(*a, *b)))
        })
    }
    loop {
        if valid(g, &ids, &x, &label, parts) {
            return Ok(true);
        }
        let Some(i) = label.iter().position(|&l| l + 1 < parts) else {
            return Ok(false);
        };
        label[i] += 1;
        label[..i].iter_mut().for_each(|l| *l = 0);
    }
}

/// Whether some vertex lies in every maximum independent set.
pub fn has_forced_vertex(g: &Graph) -> Result<bool> {
    guard(g)?;
    let (_, adj) = bitmask_adjacency(g);
    let n = adj.len();
    if n == 0 {
        return Ok(false);
    }
    let mut best = 0u32;
    let mut core = 0u32;
    fn walk(adj: &[u32], v: usize, chosen: u32, allowed: u32, best: &mut u32, core: &mut u32) {
        if v == adj.len() {
            let size = chosen.count_ones();
            if size > *best {
                *best = size;
                *core = chosen;
            } else if size == *best {
                *core &= chosen;
            }
            return;
        }
        let left = (allowed >> v).count_ones();
        if chosen.count_ones() + left < *best {
            return;
        }
        if allowed >> v & 1 == 1 {
            walk(adj, v + 1, chosen | 1 << v, allowed & !adj[v], best, core);
        }
        walk(adj, v + 1, chosen, allowed, best, core);
    }
    walk(&adj, 0, 0, (1u32 << n) - 1, &mut best, &mut core);
    Ok(core != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{alpha, omega};
    use crate::recognize::{is_c4_free, is_chordal, split_partition, SplitFlavor};

    fn two_clause() -> CnfFormula {
        CnfFormula::new(3, vec![[1, 2, -3], [-1, 2, 3]]).unwrap()
    }

    fn small_rbds(k: usize) -> RbdsInstance {
        RbdsInstance::new(
            BTreeSet::from([0, 1]),
            BTreeSet::from([2, 3]),
            [(0, 2), (0, 3), (1, 3)],
            k,
        )
        .unwrap()
    }

    #[test]
    fn rbds_split_shapes() {
        let a = reduce_rbds_to_split_alpha(&small_rbds(1)).unwrap();
        assert_eq!((a.d, a.k), (1, 1));
        assert_eq!(alpha(&a.graph).unwrap(), 2);
        assert!(split_partition(&a.graph, SplitFlavor::Any).is_some());
        let c = reduce_rbds_to_split_chi(&small_rbds(0)).unwrap();
        assert_eq!((c.graph.n(), c.d, c.k), (5, 2, 2));
        assert!(split_partition(&c.graph, SplitFlavor::Any).is_some());
        assert_eq!(reduce_rbds_to_split_alpha(&small_rbds(2)).unwrap().d, 0);
    }

    #[test]
    fn sat_gadget() {
        let inst = reduce_1in3sat_to_omega(&two_clause()).unwrap();
        assert_eq!((inst.graph.n(), inst.graph.m(), inst.k), (21, 36, 5));
        assert_eq!(omega(&inst.graph).unwrap(), 3);
        let w = assignment_witness(&two_clause(), &[true, false, true]).unwrap();
        assert_eq!(w.len(), 5);
        assert_eq!(omega(&inst.graph.apply_witness(&w).unwrap()).unwrap(), 2);
        let single = CnfFormula::new(3, vec![[1, 2, 3]]).unwrap();
        let inst = reduce_1in3sat_to_omega(&single).unwrap();
        assert_eq!((inst.graph.n(), inst.k), (18, 4));
    }

    #[test]
    fn lifts() {
        let k3 = lift_to_c4free_perfect(&Graph::complete(3), 0).unwrap();
        assert_eq!((k3.graph.n(), k3.k), (12, 3));
        assert!(is_c4_free(&k3.graph));
        assert_eq!(omega(&k3.graph).unwrap(), 3);
        let v = reduce_vc_to_chordal(&Graph::path(2), 1).unwrap();
        assert_eq!(v.graph.n(), 5);
        assert_eq!(omega(&v.graph).unwrap(), 5);
        assert!(is_chordal(&v.graph));
        assert!(reduce_vc_to_chordal(&Graph::empty(3), 1).is_err());
        let b = reduce_cobipartite_alpha_to_bipartite(&Graph::complete(3), 1).unwrap();
        assert!(is_bipartite(&b.graph));
        assert_eq!((b.graph.n(), b.k), (21, 16));
    }

    #[test]
    fn biclique() {
        let c6 = reduce_biclique_to_cobipartite_chi(&Graph::cycle(6)).unwrap();
        assert_eq!((c6.d, c6.k), (0, 0));
        assert!(has_biclique_partition(&Graph::cycle(6), 3).unwrap());
        assert!(has_biclique_partition(&Graph::path(6), 3).unwrap());
        assert!(!has_biclique_partition(&Graph::path(5), 3).unwrap());
        assert!(reduce_biclique_to_cobipartite_chi(&Graph::path(5)).is_err());
    }

    #[test]
    fn girth_and_core() {
        let c9 = girth_lift(&Graph::complete(3), 3);
        assert_eq!((c9.n(), girth(&c9)), (9, Some(9)));
        assert_eq!(girth_lift(&Graph::path(2), 5).n(), 4);
        assert!(has_forced_vertex(&Graph::path(3)).unwrap());
        assert!(!has_forced_vertex(&Graph::cycle(4)).unwrap());
        assert!(has_forced_vertex(&Graph::empty(1)).unwrap());
        assert!(!has_forced_vertex(&Graph::complete(3)).unwrap());
        assert!(vertex_cover_at_most(&Graph::path(3), 1).unwrap());
        assert!(!vertex_cover_at_most(&Graph::cycle(4), 1).unwrap());
    }

    #[test]
    fn clique_proof() {
        let yes = clique_proof_lift(&Graph::complete(3), 3).unwrap();
        assert_eq!((yes.graph.n(), omega(&yes.graph).unwrap()), (10, 4));
        assert!(clique_proof_lift(&Graph::complete(3), 0).is_err());
    }
}
