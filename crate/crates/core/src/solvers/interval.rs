//! Greedy blockers for ω (= χ) on interval graphs, driven by the clique path.

use crate::error::{Error, Result};
use crate::graph::{Operation, VertexId, Witness};
use crate::params::Parameter;
use crate::recognize::IntervalModel;

use super::{MinOps, SolverAnswer};

fn clique_number(m: &IntervalModel) -> usize {
    m.clique_path().iter().map(|c| c.len()).max().unwrap_or(0)
}

fn check_pi(pi: Parameter) -> Result<()> {
    match pi {
        Parameter::Omega | Parameter::Chi => Ok(()),
        Parameter::Alpha => Err(Error::Invalid("interval solvers handle omega and chi only".into())),
    }
}

/// Members of the leftmost clique larger than `target`, sorted by right
/// endpoint from the rightmost, ties by smaller id.
fn leftmost_oversized(m: &IntervalModel, target: usize) -> Option<Vec<VertexId>> {
    let clique = m.clique_path().into_iter().find(|c| c.len() > target)?;
    let mut members: Vec<_> = clique.into_iter().collect();
    members.sort_by_key(|v| (std::cmp::Reverse(m.intervals[v].1), *v));
    Some(members)
}

/// Repeatedly contracts the two intervals reaching furthest right in the
/// leftmost clique that is still too large. The count is the minimum.
pub fn interval_contraction_blocker(model: &IntervalModel, pi: Parameter, d: usize, k: usize) -> Result<SolverAnswer> {
    check_pi(pi)?;
    if d == 0 {
        return Ok(SolverAnswer::trivial());
    }
    let omega = clique_number(model);
    if d >= omega {
        return Ok(SolverAnswer::from_min(MinOps::Infeasible, k, None));
    }
    let target = omega - d;
    let mut m = model.clone();
    let mut ops = Vec::new();
    while let Some(members) = leftmost_oversized(&m, target) {
        let (keep, merge) = (members[0], members[1]);
        m = m.contract(merge, keep)?;
        ops.push(Operation::Contract(merge, keep));
    }
    Ok(SolverAnswer::from_min(
        MinOps::Exactly(ops.len()),
        k,
        Some(Witness::new(ops)),
    ))
}

/// Deletion variant: removes the interval reaching furthest right in the
/// leftmost clique that is still too large.
pub fn interval_deletion_blocker(model: &IntervalModel, pi: Parameter, d: usize, k: usize) -> Result<SolverAnswer> {
    check_pi(pi)?;
    if d == 0 {
        return Ok(SolverAnswer::trivial());
    }
    let omega = clique_number(model);
    if d > omega {
        return Ok(SolverAnswer::from_min(MinOps::Infeasible, k, None));
    }
    let target = omega - d;
    let mut m = model.clone();
    let mut ops = Vec::new();
    while let Some(members) = leftmost_oversized(&m, target) {
        m = m.delete(members[0])?;
        ops.push(Operation::Delete(members[0]));
    }
    Ok(SolverAnswer::from_min(
        MinOps::Exactly(ops.len()),
        k,
        Some(Witness::new(ops)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn min(a: SolverAnswer) -> Option<usize> {
        a.min_k.unwrap().as_option()
    }

    fn path_model() -> IntervalModel {
        IntervalModel::new([(0, (0, 2)), (1, (1, 4)), (2, (3, 6)), (3, (5, 7))]).unwrap()
    }

    #[test]
    fn contraction_examples() {
        let m = IntervalModel::new([(0, (0, 5)), (1, (1, 6)), (2, (2, 3)), (3, (4, 7))]).unwrap();
        assert_eq!(
            min(interval_contraction_blocker(&m, Parameter::Omega, 1, 5).unwrap()),
            Some(1)
        );
        assert_eq!(
            min(interval_contraction_blocker(&path_model(), Parameter::Omega, 1, 5).unwrap()),
            Some(3)
        );
        assert_eq!(
            min(interval_contraction_blocker(&path_model(), Parameter::Omega, 2, 5).unwrap()),
            None
        );
    }

    #[test]
    fn deletion_examples() {
        let k3 = IntervalModel::new([(0, (0, 1)), (1, (0, 1)), (2, (1, 2))]).unwrap();
        assert_eq!(
            min(interval_deletion_blocker(&k3, Parameter::Omega, 1, 5).unwrap()),
            Some(1)
        );
        assert_eq!(
            min(interval_deletion_blocker(&path_model(), Parameter::Omega, 1, 5).unwrap()),
            Some(2)
        );
        assert_eq!(
            min(interval_deletion_blocker(&path_model(), Parameter::Chi, 2, 5).unwrap()),
            Some(4)
        );
    }
}
