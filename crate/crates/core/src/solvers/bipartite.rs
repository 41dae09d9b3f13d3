use crate::error::{Error, Result};
use crate::graph::{Graph, Operation, Witness};
use crate::params::{min_vertex_cover_bipartite, Parameter};
use crate::recognize::{is_bipartite, is_cobipartite};

use super::{MinOps, SolverAnswer};

/// Deletion blocker for ω or χ on bipartite graphs. Lowering ω from 2 to 1
/// means deleting a vertex cover; reaching 0 means deleting everything.
pub fn bipartite_deletion_blocker(g: &Graph, pi: Parameter, d: usize, k: usize) -> Result<SolverAnswer> {
    if pi == Parameter::Alpha {
        return Err(Error::Invalid(
            "the bipartite deletion blocker handles omega and chi only".into(),
        ));
    }
    if !is_bipartite(g) {
        return Err(Error::NotInClass("bipartite"));
    }
    if d == 0 {
        return Ok(SolverAnswer::trivial());
    }
    let omega = match (g.n(), g.m()) {
        (0, _) => 0,
        (_, 0) => 1,
        _ => 2,
    };
    if d > omega {
        return Ok(SolverAnswer::from_min(MinOps::Infeasible, k, None));
    }
    let doomed: Vec<_> = if d == omega {
        g.vertices().collect()
    } else {
        min_vertex_cover_bipartite(g)?.into_iter().collect()
    };
    let ops: Vec<_> = doomed.into_iter().map(Operation::Delete).collect();
    Ok(SolverAnswer::from_min(
        MinOps::Exactly(ops.len()),
        k,
        Some(Witness::new(ops)),
    ))
}

/// Deletion blocker for α on cobipartite graphs: deletions commute with
/// complementation, so this is the ω blocker on the complement.
pub fn cobipartite_deletion_blocker_alpha(g: &Graph, d: usize, k: usize) -> Result<SolverAnswer> {
    if !is_cobipartite(g) {
        return Err(Error::NotInClass("cobipartite"));
    }
    bipartite_deletion_blocker(&g.complement(), Parameter::Omega, d, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn min(a: SolverAnswer) -> Option<usize> {
        a.min_k.unwrap().as_option()
    }

    #[test]
    fn bipartite_examples() {
        assert_eq!(
            min(bipartite_deletion_blocker(&Graph::cycle(6), Parameter::Omega, 1, 9).unwrap()),
            Some(3)
        );
        assert!(
            bipartite_deletion_blocker(&Graph::path(3), Parameter::Omega, 1, 1)
                .unwrap()
                .decision
        );
        assert!(
            !bipartite_deletion_blocker(&Graph::path(2), Parameter::Omega, 2, 1)
                .unwrap()
                .decision
        );
        assert!(
            bipartite_deletion_blocker(&Graph::path(2), Parameter::Omega, 2, 2)
                .unwrap()
                .decision
        );
        assert_eq!(
            min(bipartite_deletion_blocker(&Graph::path(2), Parameter::Chi, 3, 9).unwrap()),
            None
        );
    }

    #[test]
    fn cobipartite_examples() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(min(cobipartite_deletion_blocker_alpha(&two_k2, 1, 9).unwrap()), Some(2));
        assert!(
            cobipartite_deletion_blocker_alpha(&Graph::complete(4), 0, 0)
                .unwrap()
                .decision
        );
        let co_c6 = Graph::cycle(6).complement();
        assert_eq!(min(cobipartite_deletion_blocker_alpha(&co_c6, 1, 9).unwrap()), Some(3));
    }
}
