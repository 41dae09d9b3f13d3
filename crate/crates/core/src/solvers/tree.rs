use crate::error::{Error, Result};
use crate::graph::{Graph, Operation, Witness};
use crate::params::maximum_matching;
use crate::recognize::is_tree;

use super::{MinOps, SolverAnswer};

/// Contraction blocker for α on trees, from `n` and the matching number.
///
/// With `μ` the matching number, `α = n - μ`. A drop of `d <= n - 2μ` costs
/// `d` contractions of edges with an unsaturated end; beyond that each unit
/// costs two more. `d >= α` is infeasible since α stays at least 1.
pub fn tree_contraction_blocker_alpha(t: &Graph, d: usize, k: usize) -> Result<SolverAnswer> {
    if !is_tree(t) {
        return Err(Error::NotInClass("a tree"));
    }
    if d == 0 {
        return Ok(SolverAnswer::trivial());
    }
    let n = t.n();
    let matching = maximum_matching(t);
    let mu = matching.len();
    if d >= n - mu {
        return Ok(SolverAnswer::from_min(MinOps::Infeasible, k, None));
    }
    let free = n - 2 * mu;
    let need = if d <= free { d } else { 2 * (d + mu) - n };
    if need > k {
        return Ok(SolverAnswer::from_min(MinOps::Exactly(need), k, None));
    }

    let saturated = matching.saturated();
    let mut g = t.clone();
    let mut ops = Vec::with_capacity(need);
    let unsaturated: Vec<_> = t.vertices().filter(|v| !saturated.contains(v)).collect();
    for &u in unsaturated.iter().take(d) {
        // Neighbours of an unsaturated vertex are saturated, so the matching survives.
        let v = *g
            .neighbors(u)
            .first()
            .expect("a tree with an edge has no isolated vertex");
        ops.push(Operation::Contract(u, v));
        g = g.contract_edge(u, v)?;
    }
    let mut pairs = matching.edges.iter();
    for _ in 0..d.saturating_sub(free) {
        let &(a, b) = pairs.next().expect("enough matched edges by the drop bound");
        g = g.contract_edge(a, b)?;
        let c = *g.neighbors(b).first().expect("at least four vertices remain");
        g = g.contract_edge(b, c)?;
        ops.extend([Operation::Contract(a, b), Operation::Contract(b, c)]);
    }
    debug_assert_eq!(ops.len(), need);
    Ok(SolverAnswer::from_min(
        MinOps::Exactly(need),
        k,
        Some(Witness::new(ops)),
    ))
}
