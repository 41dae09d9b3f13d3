//! Exhaustive ground truth for small blocker instances.

use std::collections::HashMap;

use crate::canon::{canonical_form, CanonForm};
use crate::dense::DenseGraph;
use crate::error::{Error, Result};
use crate::graph::{Graph, Operation, Witness};
use crate::instance::{BlockerInstance, OpKind};
use crate::params::Parameter;

pub const CONTRACTION_GUARD: usize = 10;
pub const DELETION_GUARD: usize = 14;

/// Environment variable that overrides both size guards.
pub const GUARD_ENV: &str = "BLOCKER_SIZE_GUARD";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub contraction_guard: usize,
    pub deletion_guard: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            contraction_guard: CONTRACTION_GUARD,
            deletion_guard: DELETION_GUARD,
        }
    }
}

impl OracleConfig {
    /// Defaults, with both guards replaced by `BLOCKER_SIZE_GUARD` if set.
    pub fn from_env() -> Self {
        match std::env::var(GUARD_ENV).ok().and_then(|s| s.parse().ok()) {
            Some(limit) => OracleConfig {
                contraction_guard: limit,
                deletion_guard: limit,
            },
            None => Self::default(),
        }
    }

    fn check(&self, g: &Graph, kind: OpKind) -> Result<()> {
        let limit = match kind {
            OpKind::Contract => self.contraction_guard,
            OpKind::Delete => self.deletion_guard,
        };
        if g.n() > limit {
            Err(Error::TooLarge { n: g.n(), limit })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// Fewest operations reaching the target, `None` if the budget is not
    /// enough.
    pub min_k: Option<usize>,
    pub witness: Option<Witness>,
}

impl OracleResult {
    pub fn feasible(&self) -> bool {
        self.min_k.is_some()
    }

    fn infeasible() -> Self {
        OracleResult {
            min_k: None,
            witness: None,
        }
    }
}

/// Default budget: enough operations to exhaust the graph.
pub fn full_budget(g: &Graph, kind: OpKind) -> usize {
    match kind {
        OpKind::Contract => g.n().saturating_sub(1),
        OpKind::Delete => g.n(),
    }
}

pub fn oracle_min_k(g: &Graph, pi: Parameter, kind: OpKind, d: usize, budget: Option<usize>) -> Result<OracleResult> {
    oracle_min_k_with(&OracleConfig::from_env(), g, pi, kind, d, budget)
}

/// Breadth-first search over operation sequences, one level per operation,
/// merging isomorphic states.
pub fn oracle_min_k_with(
    cfg: &OracleConfig,
    g: &Graph,
    pi: Parameter,
    kind: OpKind,
    d: usize,
    budget: Option<usize>,
) -> Result<OracleResult> {
    cfg.check(g, kind)?;
    if d == 0 {
        return Ok(OracleResult {
            min_k: Some(0),
            witness: Some(Witness::default()),
        });
    }
    let p0 = pi.dense_value(&DenseGraph::from_graph(g));
    if d > p0 || (kind == OpKind::Contract && d == p0) {
        return Ok(OracleResult::infeasible());
    }
    let target = p0 - d;
    let budget = budget.unwrap_or_else(|| full_budget(g, kind));

    struct State {
        graph: Graph,
        parent: Option<(usize, Operation)>,
    }
    let mut states = vec![State {
        graph: g.clone(),
        parent: None,
    }];
    let mut level: Vec<usize> = vec![0];
    for depth in 1..=budget {
        let mut seen: HashMap<CanonForm, ()> = HashMap::new();
        let mut next = Vec::new();
        for &s in &level {
            let cur = states[s].graph.clone();
            for op in operations(&cur, kind) {
                let child = cur.apply(&op)?;
                let dense = DenseGraph::from_graph(&child);
                if seen.insert(canonical_form(&dense), ()).is_some() {
                    continue;
                }
                let hit = pi.dense_at_most(&dense, target);
                states.push(State {
                    graph: child,
                    parent: Some((s, op)),
                });
                let id = states.len() - 1;
                if hit {
                    let mut ops = Vec::with_capacity(depth);
                    let mut at = id;
                    while let Some((p, op)) = states[at].parent {
                        ops.push(op);
                        at = p;
                    }
                    ops.reverse();
                    return Ok(OracleResult {
                        min_k: Some(depth),
                        witness: Some(Witness::new(ops)),
                    });
                }
                next.push(id);
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    Ok(OracleResult::infeasible())
}

fn operations(g: &Graph, kind: OpKind) -> Vec<Operation> {
    match kind {
        OpKind::Contract => g.edges().map(|(u, v)| Operation::Contract(u, v)).collect(),
        OpKind::Delete => g.vertices().map(Operation::Delete).collect(),
    }
}

/// Decides the instance; the witness is present on yes.
pub fn oracle_decide(inst: &BlockerInstance) -> Result<(bool, Option<Witness>)> {
    oracle_decide_with(&OracleConfig::from_env(), inst)
}

pub fn oracle_decide_with(cfg: &OracleConfig, inst: &BlockerInstance) -> Result<(bool, Option<Witness>)> {
    let r = oracle_min_k_with(cfg, &inst.graph, inst.pi, inst.kind, inst.d, Some(inst.k))?;
    Ok((r.feasible(), r.witness))
}

/// Replays `w` and checks the drop. Witnesses longer than `k` or using the
/// wrong operation kind are rejected; replay failures are errors.
pub fn verify_witness(inst: &BlockerInstance, w: &Witness) -> Result<bool> {
    if w.len() > inst.k {
        return Ok(false);
    }
    let right_kind = w.ops.iter().all(|op| match op {
        Operation::Contract(..) => inst.kind == OpKind::Contract,
        Operation::Delete(_) => inst.kind == OpKind::Delete,
    });
    if !right_kind {
        return Ok(false);
    }
    let end = inst.graph.apply_witness(w)?;
    let p0 = inst.pi.of(&inst.graph)?;
    match p0.checked_sub(inst.d) {
        Some(target) => inst.pi.at_most(&end, target),
        None => Ok(false),
    }
}

/// Largest drop of `pi` reachable with at most `max_contract` contractions
/// and `max_delete` deletions, in any order.
pub fn oracle_max_drop(g: &Graph, pi: Parameter, max_contract: usize, max_delete: usize) -> Result<usize> {
    let cfg = OracleConfig::from_env();
    cfg.check(g, OpKind::Contract)?;
    let p0 = pi.dense_value(&DenseGraph::from_graph(g));
    let mut best = 0;
    let mut seen: HashMap<(CanonForm, usize), ()> = HashMap::new();
    let mut level: Vec<(Graph, usize)> = vec![(g.clone(), 0)];
    for depth in 1..=max_contract + max_delete {
        let mut next = Vec::new();
        for (cur, used_c) in &level {
            let used_d = depth - 1 - used_c;
            let mut children = Vec::new();
            if *used_c < max_contract {
                children.extend(operations(cur, OpKind::Contract).into_iter().map(|op| (op, used_c + 1)));
            }
            if used_d < max_delete {
                children.extend(operations(cur, OpKind::Delete).into_iter().map(|op| (op, *used_c)));
            }
            for (op, c) in children {
                let child = cur.apply(&op)?;
                let dense = DenseGraph::from_graph(&child);
                if seen.insert((canonical_form(&dense), c), ()).is_some() {
                    continue;
                }
                best = best.max(p0.saturating_sub(pi.dense_value(&dense)));
                next.push((child, c));
            }
        }
        if best == p0 || next.is_empty() {
            break;
        }
        level = next;
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn min_k(g: &Graph, pi: Parameter, kind: OpKind, d: usize) -> Option<usize> {
        oracle_min_k(g, pi, kind, d, None).unwrap().min_k
    }

    #[test]
    fn small_examples() {
        assert_eq!(min_k(&Graph::path(4), Parameter::Alpha, OpKind::Contract, 1), Some(2));
        assert_eq!(min_k(&Graph::cycle(4), Parameter::Chi, OpKind::Contract, 1), Some(3));
        assert_eq!(min_k(&Graph::cycle(5), Parameter::Omega, OpKind::Delete, 0), Some(0));
    }

    #[test]
    fn decisions() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let inst = BlockerInstance::new(two_k2, Parameter::Alpha, OpKind::Contract, 1, 4);
        assert!(!oracle_decide(&inst).unwrap().0);
        let k3 = BlockerInstance::new(Graph::complete(3), Parameter::Omega, OpKind::Contract, 1, 1);
        let (yes, w) = oracle_decide(&k3).unwrap();
        assert!(yes && w.as_ref().unwrap().len() == 1);
        assert!(verify_witness(&k3, &w.unwrap()).unwrap());
        let c5 = |k| BlockerInstance::new(Graph::cycle(5), Parameter::Chi, OpKind::Contract, 2, k);
        assert!(!oracle_decide(&c5(3)).unwrap().0);
        assert!(oracle_decide(&c5(4)).unwrap().0);
    }

    #[test]
    fn witness_checks() {
        let k3 = BlockerInstance::new(Graph::complete(3), Parameter::Omega, OpKind::Contract, 1, 1);
        assert!(verify_witness(&k3, &"c 1 2".parse().unwrap()).unwrap());
        assert!(!verify_witness(&k3, &Witness::default()).unwrap());
        assert!(!verify_witness(&k3, &"d 1".parse().unwrap()).unwrap());
        let c4 = BlockerInstance::new(Graph::cycle(4), Parameter::Chi, OpKind::Contract, 1, 3);
        assert!(verify_witness(&c4, &"c 0 1\nc 1 2\nc 2 3".parse().unwrap()).unwrap());
        assert!(verify_witness(&c4, &"c 0 2".parse().unwrap()).is_err());
    }

    #[test]
    fn guard() {
        let big = Graph::path(CONTRACTION_GUARD + 1);
        let cfg = OracleConfig::default();
        assert!(matches!(
            oracle_min_k_with(&cfg, &big, Parameter::Alpha, OpKind::Contract, 1, None),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn max_drop_mixed() {
        let c4 = Graph::cycle(4);
        assert_eq!(oracle_max_drop(&c4, Parameter::Chi, 3, 0).unwrap(), 1);
        assert_eq!(oracle_max_drop(&c4, Parameter::Chi, 2, 0).unwrap(), 0);
        assert_eq!(oracle_max_drop(&c4, Parameter::Chi, 0, 2).unwrap(), 1);
    }
}
