use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::params::Parameter;
use crate::recognize::{is_h_free, is_triangle_free, probe_graph};

use super::cograph::cograph_blocker;
use super::three_p1::max_deletion_drop;
use super::{MinOps, SolverAnswer};

/// Splits a (P1+P3)-free graph into `A`, the union of the complement's
/// triangle-free components, and `B`, the rest. `G[A]` is 3P1-free, `G[B]`
/// is a cograph, and `A` is complete to `B`.
pub fn decompose_p1p3free(g: &Graph) -> Result<(BTreeSet<VertexId>, BTreeSet<VertexId>)> {
    if !is_h_free(g, &probe_graph("P1+P3").unwrap())? {
        return Err(Error::NotInClass("(P1+P3)-free"));
    }
    let co = g.complement();
    let mut a = BTreeSet::new();
    let mut b = BTreeSet::new();
    for comp in co.connected_components() {
        let part = co.induced_subgraph(&comp)?;
        if is_triangle_free(&part) {
            a.extend(comp);
        } else {
            b.extend(comp);
        }
    }
    Ok((a, b))
}

/// Deletion blocker for χ: χ(G) = χ(G[A]) + χ(G[B]), so the best drop is
/// the best split of the budget between the two sides.
pub fn deletion_blocker_chi_p1p3free(g: &Graph, d: usize, k: usize) -> Result<SolverAnswer> {
    let (a, b) = decompose_p1p3free(g)?;
    let ga = g.induced_subgraph(&a)?;
    let gb = g.induced_subgraph(&b)?;
    let table = cograph_blocker(&gb, Parameter::Chi, 0, k)?;
    let best_with = |budget: usize| -> Result<usize> {
        let mut best = 0;
        for ka in 0..=budget {
            best = best.max(max_deletion_drop(&ga, ka)? + table.max_d(0, budget - ka));
        }
        Ok(best)
    };
    for budget in 0..=k {
        if best_with(budget)? >= d {
            return Ok(SolverAnswer::from_min(MinOps::Exactly(budget), k, None));
        }
    }
    let exhaustive = k >= g.n();
    Ok(SolverAnswer {
        decision: false,
        witness: None,
        min_k: exhaustive.then_some(MinOps::Infeasible),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5_join_k2() -> Graph {
        Graph::cycle(5).join(&Graph::complete(2)).0
    }

    #[test]
    fn decomposition() {
        // The complement is C5 plus two isolated vertices, all triangle-free.
        let (a, b) = decompose_p1p3free(&c5_join_k2()).unwrap();
        assert_eq!(a, (0..7).collect());
        assert!(b.is_empty());
        let k3_join_c5 = Graph::complete(3).complement().join(&Graph::cycle(5)).0;
        let (a, b) = decompose_p1p3free(&k3_join_c5).unwrap();
        assert_eq!((a, b), ((3..8).collect(), BTreeSet::from([0, 1, 2])));
        let (a, b) = decompose_p1p3free(&Graph::empty(3)).unwrap();
        assert!(a.is_empty() && b.len() == 3);
        assert!(decompose_p1p3free(&probe_graph("P1+P3").unwrap()).is_err());
    }

    #[test]
    fn deletion() {
        assert!(deletion_blocker_chi_p1p3free(&c5_join_k2(), 1, 1).unwrap().decision);
        assert!(!deletion_blocker_chi_p1p3free(&c5_join_k2(), 1, 0).unwrap().decision);
    }
}
