use std::collections::BTreeSet;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitFlavor {
    /// Every clique vertex has a neighbour in the independent set.
    Minimal,
    /// Every independent vertex misses some clique vertex.
    Maximal,
    Any,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: BTreeSet<VertexId>,
    pub independent: BTreeSet<VertexId>,
}

impl SplitPartition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let covers = self.clique.len() + self.independent.len() == g.n()
            && self.clique.iter().chain(&self.independent).all(|&v| g.contains(v));
        let clique = self
            .clique
            .iter()
            .all(|&u| self.clique.iter().all(|&v| u == v || g.has_edge(u, v)));
        let indep = self
            .independent
            .iter()
            .all(|&u| g.neighbors(u).is_disjoint(&self.independent));
        covers && clique && indep
    }
}

/// Split partition of the requested flavour via the Hammer–Simeone degree
/// test, or `None` if `g` is not split.
pub fn split_partition(g: &Graph, flavor: SplitFlavor) -> Option<SplitPartition> {
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let deg: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (0..deg.len()).take_while(|&i| deg[i] >= i).count();
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let mut p = SplitPartition {
        clique: order[..m].iter().copied().collect(),
        independent: order[m..].iter().copied().collect(),
    };
    debug_assert!(p.is_valid_for(g));
    match flavor {
        SplitFlavor::Any => {}
        SplitFlavor::Minimal => {
            while let Some(v) = p
                .clique
                .iter()
                .copied()
                .find(|&v| g.neighbors(v).is_disjoint(&p.independent))
            {
                p.clique.remove(&v);
                p.independent.insert(v);
            }
        }
        SplitFlavor::Maximal => {
            while let Some(v) = p
                .independent
                .iter()
                .copied()
                .find(|&v| p.clique.is_subset(g.neighbors(v)))
            {
                p.independent.remove(&v);
                p.clique.insert(v);
            }
        }
    }
    Some(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_partition() {
        // K = {a, b}, I = {c, d} with edges ab, ac, bd.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 3)]).unwrap();
        let p = split_partition(&g, SplitFlavor::Minimal).unwrap();
        assert!(p.is_valid_for(&g));
        assert_eq!(p.independent.len(), 2);
    }

    #[test]
    fn c4_not_split() {
        assert_eq!(split_partition(&Graph::cycle(4), SplitFlavor::Any), None);
        assert_eq!(
            split_partition(&Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap(), SplitFlavor::Any),
            None
        );
    }

    #[test]
    fn triangle_flavors() {
        let k3 = Graph::complete(3);
        let min = split_partition(&k3, SplitFlavor::Minimal).unwrap();
        assert_eq!((min.clique.len(), min.independent.len()), (2, 1));
        let max = split_partition(&k3, SplitFlavor::Maximal).unwrap();
        assert_eq!(max.clique.len(), 3);
    }
}
