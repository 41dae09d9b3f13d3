//! Blockers for χ on 3P1-free graphs, where every colour class has at most
//! two vertices and χ follows from a maximum matching of the complement.

use crate::error::{Error, Result};
use crate::graph::{Graph, Operation, Witness};
use crate::instance::OpKind;
use crate::params::{chi_3p1free, optimal_coloring_3p1free};
use crate::recognize::is_3p1_free;

use super::search::shortest_sequence;
use super::{MinOps, SolverAnswer};

/// Explores contraction sequences in rounds of at most three contractions
/// for at most `d` rounds, never exceeding `k` in total.
pub fn contraction_blocker_chi_3p1free(g: &Graph, d: usize, k: usize) -> Result<SolverAnswer> {
    if !is_3p1_free(g) {
        return Err(Error::NotInClass("3P1-free"));
    }
    if d == 0 {
        return Ok(SolverAnswer::trivial());
    }
    let (chi, _) = chi_3p1free(g)?;
    if chi <= d {
        return Ok(SolverAnswer::from_min(MinOps::Infeasible, k, None));
    }
    let target = chi - d;
    let found = shortest_sequence(g, OpKind::Contract, k.min(3 * d), |h| Ok(chi_3p1free(h)?.0 <= target))?;
    Ok(match found {
        Some(w) => SolverAnswer::from_min(MinOps::Exactly(w.len()), k, Some(w)),
        None => SolverAnswer::no(),
    })
}

/// With `ℓ` singleton colour classes, a drop of `d` needs `max(d, 2d - ℓ)`
/// deletions: singletons go first, then whole pairs.
pub fn deletion_blocker_chi_3p1free(g: &Graph, d: usize, k: usize) -> Result<SolverAnswer> {
    let classes = optimal_coloring_3p1free(g)?;
    if d == 0 {
        return Ok(SolverAnswer::trivial());
    }
    if d > classes.len() {
        return Ok(SolverAnswer::from_min(MinOps::Infeasible, k, None));
    }
    let singles: Vec<_> = classes.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect();
    let pairs = classes.iter().filter(|c| c.len() == 2);
    let from_singles = d.min(singles.len());
    let mut ops: Vec<_> = singles[..from_singles].iter().map(|&v| Operation::Delete(v)).collect();
    ops.extend(pairs.take(d - from_singles).flatten().map(|&v| Operation::Delete(v)));
    Ok(SolverAnswer::from_min(
        MinOps::Exactly(ops.len()),
        k,
        Some(Witness::new(ops)),
    ))
}

/// Largest drop reachable with at most `k` deletions.
pub(crate) fn max_deletion_drop(g: &Graph, k: usize) -> Result<usize> {
    let (chi, singles) = chi_3p1free(g)?;
    Ok((0..=chi)
        .rev()
        .find(|&d| d.max((2 * d).saturating_sub(singles)) <= k)
        .unwrap_or(0))
}
