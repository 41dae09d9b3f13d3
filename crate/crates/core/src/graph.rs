//! Simple undirected graphs with stable vertex ids, plus the operations the
//! blocker problems are built from.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// A simple graph. Vertex ids are arbitrary and survive every operation,
/// so witnesses can refer to them unambiguously.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// `n` isolated vertices `0..n`.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|v| (v, BTreeSet::new())).collect(),
        }
    }

    /// Vertices `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        Self::from_parts(0..n, edges.iter().copied())
    }

    pub fn from_parts(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let mut adj: BTreeMap<VertexId, BTreeSet<VertexId>> =
            vertices.into_iter().map(|v| (v, BTreeSet::new())).collect();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if !adj.contains_key(&w) {
                    return Err(Error::MissingVertex(w));
                }
            }
            adj.get_mut(&u).unwrap().insert(v);
            adj.get_mut(&v).unwrap().insert(u);
        }
        Ok(Graph { adj })
    }

    /// Returns false if `v` was already present.
    pub fn add_vertex(&mut self, v: VertexId) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, BTreeSet::new());
        true
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        for w in [u, v] {
            if !self.adj.contains_key(&w) {
                return Err(Error::MissingVertex(w));
            }
        }
        self.adj.get_mut(&u).unwrap().insert(v);
        self.adj.get_mut(&v).unwrap().insert(u);
        Ok(())
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Self::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_edges(n, &edges).unwrap()
    }

    /// Parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Self::from_edges(a + b, &edges).unwrap()
    }

    /// `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Self {
        Self::complete_bipartite(1, k)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.adj.keys().copied().collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, ns)| ns.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|ns| ns.contains(&v))
    }

    /// Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: VertexId) -> &BTreeSet<VertexId> {
        &self.adj[&v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    /// Smallest id strictly above every current id.
    pub fn next_id(&self) -> VertexId {
        self.adj.keys().next_back().map_or(0, |&v| v + 1)
    }

    /// Contracts `u` onto `v`: the merged vertex keeps id `v`.
    pub fn contract_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut adj = self.adj.clone();
        let nu = adj.remove(&u).unwrap();
        for &w in &nu {
            let ns = adj.get_mut(&w).unwrap();
            ns.remove(&u);
            if w != v {
                ns.insert(v);
            }
        }
        let nv = adj.get_mut(&v).unwrap();
        nv.extend(nu.into_iter().filter(|&w| w != v));
        Ok(Graph { adj })
    }

    pub fn delete_vertex(&self, v: VertexId) -> Result<Graph> {
        let mut adj = self.adj.clone();
        let nv = adj.remove(&v).ok_or(Error::MissingVertex(v))?;
        for w in nv {
            adj.get_mut(&w).unwrap().remove(&v);
        }
        Ok(Graph { adj })
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_set();
        let adj = self
            .adj
            .iter()
            .map(|(&v, ns)| {
                let co = all.iter().copied().filter(|&w| w != v && !ns.contains(&w));
                (v, co.collect())
            })
            .collect();
        Graph { adj }
    }

    /// Copy of `other` shifted past every id of `self`.
    fn shifted(&self, other: &Graph) -> (Graph, BTreeMap<VertexId, VertexId>) {
        let offset = self.next_id();
        let map: BTreeMap<_, _> = other.vertices().map(|v| (v, v + offset)).collect();
        (other.relabel(&map).expect("shift map is injective"), map)
    }

    /// Disjoint union. The second operand is relabelled by an offset; the
    /// returned map sends its old ids to the new ones.
    pub fn disjoint_union(&self, other: &Graph) -> (Graph, BTreeMap<VertexId, VertexId>) {
        let (h, map) = self.shifted(other);
        let mut adj = self.adj.clone();
        adj.extend(h.adj);
        (Graph { adj }, map)
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> (Graph, BTreeMap<VertexId, VertexId>) {
        let (mut g, map) = self.disjoint_union(other);
        let left = self.vertex_set();
        let right: BTreeSet<_> = map.values().copied().collect();
        for &u in &left {
            g.adj.get_mut(&u).unwrap().extend(&right);
        }
        for &v in &right {
            g.adj.get_mut(&v).unwrap().extend(&left);
        }
        (g, map)
    }

    pub fn induced_subgraph(&self, keep: &BTreeSet<VertexId>) -> Result<Graph> {
        if let Some(&v) = keep.iter().find(|v| !self.contains(**v)) {
            return Err(Error::MissingVertex(v));
        }
        let adj = keep
            .iter()
            .map(|&v| (v, self.adj[&v].intersection(keep).copied().collect()))
            .collect();
        Ok(Graph { adj })
    }

    /// Replaces edge `uv` by a path with `t >= 1` internal vertices, which
    /// get fresh ids listed from the `u` side.
    pub fn subdivide_edge(&self, u: VertexId, v: VertexId, t: usize) -> Result<(Graph, Vec<VertexId>)> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        if t == 0 {
            return Err(Error::Invalid("subdivision needs at least one new vertex".into()));
        }
        let mut g = self.clone();
        g.adj.get_mut(&u).unwrap().remove(&v);
        g.adj.get_mut(&v).unwrap().remove(&u);
        let start = g.next_id();
        let fresh: Vec<_> = (start..start + t).collect();
        let mut prev = u;
        for &w in fresh.iter().chain(std::iter::once(&v)) {
            g.adj.entry(w).or_default().insert(prev);
            g.adj.get_mut(&prev).unwrap().insert(w);
            prev = w;
        }
        Ok((g, fresh))
    }

    /// Components in order of their smallest vertex.
    pub fn connected_components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for s in self.vertices() {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = BTreeSet::from([s]);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[&x] {
                    if seen.insert(y) {
                        comp.insert(y);
                        queue.push_back(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Renames vertices; `map` must be injective and cover every vertex.
    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> Result<Graph> {
        let mut adj = BTreeMap::new();
        for (v, ns) in &self.adj {
            let nv = *map.get(v).ok_or(Error::MissingVertex(*v))?;
            let set = ns.iter().map(|w| map[w]).collect();
            if adj.insert(nv, set).is_some() {
                return Err(Error::Invalid(format!("relabel map sends two vertices to {nv}")));
            }
        }
        Ok(Graph { adj })
    }

    /// Renames vertices to `0..n` in increasing id order.
    pub fn compact(&self) -> (Graph, BTreeMap<VertexId, VertexId>) {
        let map: BTreeMap<_, _> = self.vertices().enumerate().map(|(i, v)| (v, i)).collect();
        (self.relabel(&map).unwrap(), map)
    }

    pub fn apply(&self, op: &Operation) -> Result<Graph> {
        match *op {
            Operation::Contract(u, v) => self.contract_edge(u, v),
            Operation::Delete(v) => self.delete_vertex(v),
        }
    }

    /// Replays the witness in order; the first failing operation is
    /// reported with its index.
    pub fn apply_witness(&self, w: &Witness) -> Result<Graph> {
        let mut g = self.clone();
        for (index, op) in w.ops.iter().enumerate() {
            g = g.apply(op).map_err(|e| Error::Replay {
                index,
                source: Box::new(e),
            })?;
        }
        Ok(g)
    }

    /// Edge-list text: `n m`, an optional `v ...` id line when the ids are
    /// not `0..n`, then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.m());
        if !self.vertices().eq(0..self.n()) {
            s.push('v');
            for v in self.vertices() {
                s.push_str(&format!(" {v}"));
            }
            s.push('\n');
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .peekable();
        let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing 'n m' header"))?;
        let nums = parse_numbers(hl, header)?;
        let [n, m] = nums[..] else {
            return Err(Error::parse(hl, "header must be 'n m'"));
        };
        let vertices: Vec<VertexId> = match lines.peek() {
            Some((vl, l)) if l.starts_with('v') => {
                let vl = *vl;
                let ids = parse_numbers(vl, &l[1..])?;
                lines.next();
                if ids.len() != n {
                    return Err(Error::parse(
                        vl,
                        format!("expected {n} vertex ids, found {}", ids.len()),
                    ));
                }
                ids
            }
            _ => (0..n).collect(),
        };
        let mut edges = Vec::with_capacity(m);
        for (ln, l) in lines {
            let nums = parse_numbers(ln, l)?;
            let [u, v] = nums[..] else {
                return Err(Error::parse(ln, "edge line must be 'u v'"));
            };
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::parse(
                hl,
                format!("header says {m} edges, found {}", edges.len()),
            ));
        }
        let g = Graph::from_parts(vertices, edges)?;
        if g.n() != n {
            return Err(Error::parse(hl, "duplicate vertex ids"));
        }
        if g.m() != m {
            return Err(Error::parse(hl, "duplicate edges"));
        }
        Ok(g)
    }
}

pub(crate) fn parse_numbers(line: usize, s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::parse(line, format!("bad integer '{t}'"))))
        .collect()
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph {{ V: {:?}, E: {:?} }}",
            self.vertex_set(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operation {
    /// Contract `u` onto `v`.
    Contract(VertexId, VertexId),
    Delete(VertexId),
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operation::Contract(u, v) => write!(f, "c {u} {v}"),
            Operation::Delete(v) => write!(f, "d {v}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Witness {
    pub ops: Vec<Operation>,
}

impl Witness {
    pub fn new(ops: Vec<Operation>) -> Self {
        Witness { ops }
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.ops {
            writeln!(f, "{op}")?;
        }
        Ok(())
    }
}

impl FromStr for Witness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut ops = Vec::new();
        for (i, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (tag, rest) = line.split_at(1);
            let nums = parse_numbers(i + 1, rest)?;
            let op = match (tag, &nums[..]) {
                ("c", &[u, v]) => Operation::Contract(u, v),
                ("d", &[v]) => Operation::Delete(v),
                _ => return Err(Error::parse(i + 1, "expected 'c u v' or 'd v'")),
            };
            ops.push(op);
        }
        Ok(Witness { ops })
    }
}
