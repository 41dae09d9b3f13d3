use crate::error::{Error, Result};
use crate::graph::{Graph, Witness};
use crate::recognize::is_triangle_free;

use super::{collapse_component, MinOps, SolverAnswer};

/// Contraction blocker for ω on triangle-free graphs. Contractions can
/// create triangles, so lowering ω from 2 means every component with an
/// edge must shrink to a single vertex.
pub fn triangle_free_contraction_blocker_omega(g: &Graph, d: usize, k: usize) -> Result<SolverAnswer> {
    if !is_triangle_free(g) {
        return Err(Error::NotInClass("triangle-free"));
    }
    if d == 0 {
        return Ok(SolverAnswer::trivial());
    }
    if d >= 2 || g.m() == 0 {
        return Ok(SolverAnswer::from_min(MinOps::Infeasible, k, None));
    }
    let ops: Vec<_> = g
        .connected_components()
        .iter()
        .filter(|c| c.len() > 1)
        .flat_map(|c| collapse_component(g, c))
        .collect();
    Ok(SolverAnswer::from_min(
        MinOps::Exactly(ops.len()),
        k,
        Some(Witness::new(ops)),
    ))
}
