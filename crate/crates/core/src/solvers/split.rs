use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Operation, Witness};
use crate::instance::OpKind;
use crate::params::Parameter;
use crate::recognize::{split_partition, SplitFlavor};

use super::search::shortest_sequence;
use super::{collapse_component, MinOps, SolverAnswer};

/// Contraction blocker on split graphs for fixed `d`. The branch with
/// `k <= d` enumerates all sequences of at most `k` contractions, so the
/// running time is exponential in `d` only.
pub fn split_contraction_blocker(g: &Graph, pi: Parameter, d: usize, k: usize) -> Result<SolverAnswer> {
    if split_partition(g, SplitFlavor::Any).is_none() {
        return Err(Error::NotInClass("a split graph"));
    }
    if d == 0 {
        return Ok(SolverAnswer::trivial());
    }
    match pi {
        Parameter::Alpha => alpha(g, d, k),
        Parameter::Omega | Parameter::Chi => chi(g, pi, d, k),
    }
}

fn alpha(g: &Graph, d: usize, k: usize) -> Result<SolverAnswer> {
    let p = split_partition(g, SplitFlavor::Minimal).expect("checked split");
    let attached: Vec<_> = p
        .independent
        .iter()
        .copied()
        .filter(|&v| !g.neighbors(v).is_empty())
        .collect();
    if attached.len() <= d {
        return Ok(SolverAnswer::from_min(MinOps::Infeasible, k, None));
    }
    let alpha = p.independent.len();
    if k > d {
        let ops = attached
            .iter()
            .take(d + 1)
            .map(|&v| Operation::Contract(v, *g.neighbors(v).first().unwrap()))
            .collect();
        return Ok(SolverAnswer::yes(Some(Witness::new(ops))));
    }
    enumerate(g, Parameter::Alpha, alpha - d, k)
}

fn chi(g: &Graph, pi: Parameter, d: usize, k: usize) -> Result<SolverAnswer> {
    let p = split_partition(g, SplitFlavor::Maximal).expect("checked split");
    let chi = p.clique.len();
    if chi <= d {
        return Ok(SolverAnswer::from_min(MinOps::Infeasible, k, None));
    }
    if chi == d + 1 {
        let big: Vec<BTreeSet<_>> = g.connected_components().into_iter().filter(|c| c.len() > 1).collect();
        let ops: Vec<_> = big.iter().flat_map(|c| collapse_component(g, c)).collect();
        let need = ops.len();
        return Ok(SolverAnswer::from_min(
            MinOps::Exactly(need),
            k,
            Some(Witness::new(ops)),
        ));
    }
    if k < d {
        return Ok(SolverAnswer::no());
    }
    if k == d {
        return enumerate(g, pi, chi - d, k);
    }
    let mut clique = p.clique.iter().copied();
    let hub = clique.next().unwrap();
    let ops = clique.take(d + 1).map(|v| Operation::Contract(v, hub)).collect();
    Ok(SolverAnswer::yes(Some(Witness::new(ops))))
}

fn enumerate(g: &Graph, pi: Parameter, target: usize, k: usize) -> Result<SolverAnswer> {
    let found = shortest_sequence(g, OpKind::Contract, k, |h| pi.at_most(h, target))?;
    Ok(match found {
        Some(w) => SolverAnswer::yes(Some(w)),
        None => SolverAnswer::no(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn alpha_examples() {
        assert!(
            !split_contraction_blocker(&example(), Parameter::Alpha, 1, 1)
                .unwrap()
                .decision
        );
        assert!(
            split_contraction_blocker(&example(), Parameter::Alpha, 1, 2)
                .unwrap()
                .decision
        );
    }

    #[test]
    fn chi_examples() {
        assert!(
            !split_contraction_blocker(&example(), Parameter::Chi, 1, 2)
                .unwrap()
                .decision
        );
        assert!(
            split_contraction_blocker(&example(), Parameter::Chi, 1, 3)
                .unwrap()
                .decision
        );
        let k3 = Graph::complete(3);
        for k in 0..4 {
            assert!(!split_contraction_blocker(&k3, Parameter::Chi, 3, k).unwrap().decision);
        }
        assert!(split_contraction_blocker(&Graph::cycle(4), Parameter::Chi, 1, 3).is_err());
    }
}
