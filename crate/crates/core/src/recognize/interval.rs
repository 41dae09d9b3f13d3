use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

use super::maximal_cliques;

/// Closed integer intervals `[l, r]`, one per vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntervalModel {
    pub intervals: BTreeMap<VertexId, (i64, i64)>,
}

impl IntervalModel {
    pub fn new(intervals: impl IntoIterator<Item = (VertexId, (i64, i64))>) -> Result<Self> {
        let intervals: BTreeMap<_, _> = intervals.into_iter().collect();
        if let Some((v, _)) = intervals.iter().find(|(_, &(l, r))| l > r) {
            return Err(Error::Invalid(format!("interval of vertex {v} has l > r")));
        }
        Ok(IntervalModel { intervals })
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    fn meet(a: (i64, i64), b: (i64, i64)) -> bool {
        a.0 <= b.1 && b.0 <= a.1
    }

    /// The intersection graph of the model.
    pub fn to_graph(&self) -> Graph {
        let items: Vec<_> = self.intervals.iter().map(|(&v, &i)| (v, i)).collect();
        let mut edges = Vec::new();
        for (x, &(u, iu)) in items.iter().enumerate() {
            for &(v, iv) in &items[x + 1..] {
                if Self::meet(iu, iv) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_parts(self.intervals.keys().copied(), edges).unwrap()
    }

    /// Whether the model realizes `g`. Errors if the vertex sets differ.
    pub fn validate(&self, g: &Graph) -> Result<bool> {
        let ids: BTreeSet<_> = self.intervals.keys().copied().collect();
        if ids != g.vertex_set() {
            let v = ids.symmetric_difference(&g.vertex_set()).next().copied().unwrap();
            return Err(Error::MissingVertex(v));
        }
        Ok(self.to_graph() == *g)
    }

    /// Maximal cliques from left to right, found by sweeping endpoints: a
    /// clique is emitted at a right endpoint if some interval started since
    /// the previous emission.
    pub fn clique_path(&self) -> Vec<BTreeSet<VertexId>> {
        let mut coords: Vec<i64> = self.intervals.values().flat_map(|&(l, r)| [l, r]).collect();
        coords.sort_unstable();
        coords.dedup();
        let mut active = BTreeSet::new();
        let mut fresh = false;
        let mut out = Vec::new();
        for x in coords {
            for (&v, &(l, _)) in &self.intervals {
                if l == x {
                    active.insert(v);
                    fresh = true;
                }
            }
            let ending: Vec<_> = self
                .intervals
                .iter()
                .filter(|(_, &(_, r))| r == x)
                .map(|(&v, _)| v)
                .collect();
            if !ending.is_empty() {
                if fresh {
                    out.push(active.clone());
                    fresh = false;
                }
                for v in ending {
                    active.remove(&v);
                }
            }
        }
        out
    }

    /// Model after contracting `u` onto `v`: `v` takes the union interval.
    pub fn contract(&self, u: VertexId, v: VertexId) -> Result<IntervalModel> {
        let iu = *self.intervals.get(&u).ok_or(Error::MissingVertex(u))?;
        let iv = *self.intervals.get(&v).ok_or(Error::MissingVertex(v))?;
        if !Self::meet(iu, iv) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut m = self.clone();
        m.intervals.remove(&u);
        m.intervals.insert(v, (iu.0.min(iv.0), iu.1.max(iv.1)));
        Ok(m)
    }

    pub fn delete(&self, v: VertexId) -> Result<IntervalModel> {
        let mut m = self.clone();
        m.intervals.remove(&v).ok_or(Error::MissingVertex(v))?;
        Ok(m)
    }
}

impl fmt::Display for IntervalModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, (l, r)) in &self.intervals {
            writeln!(f, "{v} {l} {r}")?;
        }
        Ok(())
    }
}

impl FromStr for IntervalModel {
    type Err = Error;

    /// One `v l r` line per vertex; blank and `#` lines are skipped.
    fn from_str(s: &str) -> Result<Self> {
        let mut intervals = BTreeMap::new();
        for (i, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [v, l, r] = parts[..] else {
                return Err(Error::parse(i + 1, "expected 'v l r'"));
            };
            let bad = |t: &str| Error::parse(i + 1, format!("bad integer '{t}'"));
            let v: VertexId = v.parse().map_err(|_| bad(v))?;
            let l: i64 = l.parse().map_err(|_| bad(l))?;
            let r: i64 = r.parse().map_err(|_| bad(r))?;
            if intervals.insert(v, (l, r)).is_some() {
                return Err(Error::parse(i + 1, format!("vertex {v} listed twice")));
            }
        }
        IntervalModel::new(intervals)
    }
}

/// Brute-force model search: orders the maximal cliques so each vertex's
/// cliques are consecutive. Meant for small test graphs only.
pub fn find_interval_model(g: &Graph) -> Option<IntervalModel> {
    let cliques = maximal_cliques(g);
    let mut order = Vec::with_capacity(cliques.len());
    let mut used = vec![false; cliques.len()];
    if !order_cliques(&cliques, &mut order, &mut used, &mut BTreeSet::new()) {
        return None;
    }
    let mut intervals: BTreeMap<VertexId, (i64, i64)> = BTreeMap::new();
    for (pos, &c) in order.iter().enumerate() {
        for &v in &cliques[c] {
            let p = pos as i64;
            intervals.entry(v).and_modify(|iv| iv.1 = p).or_insert((p, p));
        }
    }
    Some(IntervalModel { intervals })
}

fn order_cliques(
    cliques: &[BTreeSet<VertexId>],
    order: &mut Vec<usize>,
    used: &mut [bool],
    closed: &mut BTreeSet<VertexId>,
) -> bool {
    if order.len() == cliques.len() {
        return true;
    }
    for c in 0..cliques.len() {
        if used[c] || !cliques[c].is_disjoint(closed) {
            continue;
        }
        let newly_closed: Vec<VertexId> = match order.last() {
            Some(&p) => cliques[p].difference(&cliques[c]).copied().collect(),
            None => Vec::new(),
        };
        used[c] = true;
        order.push(c);
        closed.extend(&newly_closed);
        if order_cliques(cliques, order, used, closed) {
            return true;
        }
        for v in &newly_closed {
            closed.remove(v);
        }
        order.pop();
        used[c] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> IntervalModel {
        IntervalModel::new([(0, (0, 2)), (1, (1, 4)), (2, (3, 6))]).unwrap()
    }

    #[test]
    fn validate_and_path() {
        let m = abc();
        assert_eq!(m.validate(&Graph::path(3)), Ok(true));
        assert_eq!(m.validate(&Graph::complete(3)), Ok(false));
        assert_eq!(m.clique_path(), vec![BTreeSet::from([0, 1]), BTreeSet::from([1, 2])]);
        let single = IntervalModel::new([(7, (0, 0))]).unwrap();
        assert_eq!(single.clique_path(), vec![BTreeSet::from([7])]);
        assert!(m.validate(&Graph::path(2)).is_err());
    }

    #[test]
    fn text_round_trip() {
        let m = abc();
        assert_eq!(m.to_string().parse::<IntervalModel>().unwrap(), m);
    }

    #[test]
    fn brute_force_models() {
        assert!(find_interval_model(&Graph::cycle(4)).is_none());
        let p5 = Graph::path(5);
        assert_eq!(find_interval_model(&p5).unwrap().validate(&p5), Ok(true));
        let claw = Graph::star(3);
        assert_eq!(find_interval_model(&claw).unwrap().validate(&claw), Ok(true));
    }
}
