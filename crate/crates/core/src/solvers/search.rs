//! Bounded breadth-first enumeration of operation sequences, shared by the
//! solvers whose algorithms enumerate short sequences.

use std::collections::HashSet;

use crate::canon::canonical_form;
use crate::dense::DenseGraph;
use crate::error::Result;
use crate::graph::{Graph, Operation, Witness};
use crate::instance::OpKind;

/// Shortest sequence of at most `max_len` operations whose result satisfies
/// `accept`. Isomorphic intermediate graphs are explored once.
pub(crate) fn shortest_sequence(
    g: &Graph,
    kind: OpKind,
    max_len: usize,
    mut accept: impl FnMut(&Graph) -> Result<bool>,
) -> Result<Option<Witness>> {
    if accept(g)? {
        return Ok(Some(Witness::default()));
    }
    let mut level: Vec<(Graph, Vec<Operation>)> = vec![(g.clone(), Vec::new())];
    for _ in 0..max_len {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for (cur, ops) in &level {
            let moves: Vec<Operation> = match kind {
                OpKind::Contract => cur.edges().map(|(u, v)| Operation::Contract(u, v)).collect(),
                OpKind::Delete => cur.vertices().map(Operation::Delete).collect(),
            };
            for op in moves {
                let child = cur.apply(&op)?;
                if !seen.insert(canonical_form(&DenseGraph::from_graph(&child))) {
                    continue;
                }
                let mut path = ops.clone();
                path.push(op);
                if accept(&child)? {
                    return Ok(Some(Witness::new(path)));
                }
                next.push((child, path));
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    Ok(None)
}
