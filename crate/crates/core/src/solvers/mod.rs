//! Polynomial-time blocker algorithms for specific graph classes.
//!
//! Every solver checks its class precondition and returns a
//! [`SolverAnswer`]. Where the algorithm is constructive the answer carries
//! a witness that replays on the input graph.

mod bipartite;
mod cograph;
mod dispatch;
mod interval;
mod p1p3;
mod search;
mod split;
mod three_p1;
mod tree;
mod triangle_free;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

pub use bipartite::{bipartite_deletion_blocker, cobipartite_deletion_blocker_alpha};
pub use cograph::{cograph_blocker, cograph_decide, CographTable};
pub use dispatch::{solve, GraphClass};
pub use interval::{interval_contraction_blocker, interval_deletion_blocker};
pub use p1p3::{decompose_p1p3free, deletion_blocker_chi_p1p3free};
pub use split::split_contraction_blocker;
pub use three_p1::{contraction_blocker_chi_3p1free, deletion_blocker_chi_3p1free};
pub use tree::tree_contraction_blocker_alpha;
pub use triangle_free::triangle_free_contraction_blocker_omega;

use crate::graph::{Graph, Operation, VertexId, Witness};

/// Fewest operations needed, as far as a solver computes it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinOps {
    Exactly(usize),
    Infeasible,
}

impl MinOps {
    pub fn as_option(self) -> Option<usize> {
        match self {
            MinOps::Exactly(k) => Some(k),
            MinOps::Infeasible => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverAnswer {
    pub decision: bool,
    pub witness: Option<Witness>,
    pub min_k: Option<MinOps>,
}

impl SolverAnswer {
    /// Answer for a solver that knows the exact minimum; `witness` must
    /// have exactly that many operations when feasible.
    fn from_min(min: MinOps, k: usize, witness: Option<Witness>) -> Self {
        let decision = matches!(min, MinOps::Exactly(m) if m <= k);
        SolverAnswer {
            decision,
            witness: if decision { witness } else { None },
            min_k: Some(min),
        }
    }

    fn no() -> Self {
        SolverAnswer {
            decision: false,
            witness: None,
            min_k: None,
        }
    }

    fn yes(witness: Option<Witness>) -> Self {
        SolverAnswer {
            decision: true,
            witness,
            min_k: None,
        }
    }

    fn trivial() -> Self {
        SolverAnswer::from_min(MinOps::Exactly(0), 0, Some(Witness::default()))
    }
}

/// Contractions merging the component `comp` into its smallest vertex,
/// leaves of a BFS tree first.
pub(crate) fn collapse_component(g: &Graph, comp: &BTreeSet<VertexId>) -> Vec<Operation> {
    let Some(&root) = comp.first() else {
        return Vec::new();
    };
    let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut order = Vec::new();
    let mut seen = BTreeSet::from([root]);
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if comp.contains(&y) && seen.insert(y) {
                parent.insert(y, x);
                order.push(y);
                queue.push_back(y);
            }
        }
    }
    order
        .iter()
        .rev()
        .map(|&v| Operation::Contract(v, parent[&v]))
        .collect()
}
