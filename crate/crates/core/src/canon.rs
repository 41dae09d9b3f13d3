//! Canonical forms by individualization and refinement, used to merge
//! isomorphic states in the oracle's search.

use crate::dense::{BitSet, DenseGraph};

/// Isomorphism-invariant code: equal iff the graphs are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonForm {
    n: usize,
    bits: Vec<u64>,
}

pub fn canonical_form(g: &DenseGraph) -> CanonForm {
    let n = g.n();
    let mut best: Option<Vec<u64>> = None;
    search(g, vec![(0..n).collect()], &mut best);
    CanonForm {
        n,
        bits: best.unwrap_or_default(),
    }
}

fn search(g: &DenseGraph, cells: Vec<Vec<usize>>, best: &mut Option<Vec<u64>>) {
    let cells = refine(g, cells);
    let Some(t) = cells.iter().position(|c| c.len() > 1) else {
        let perm: Vec<usize> = cells.into_iter().flatten().collect();
        let code = encode(g, &perm);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    let target = &cells[t];
    let mut reps: Vec<usize> = Vec::new();
    for &v in target {
        if !reps.iter().any(|&r| twins(g, r, v)) {
            reps.push(v);
        }
    }
    for v in reps {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..t]);
        next.push(vec![v]);
        next.push(target.iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[t + 1..]);
        search(g, next, best);
    }
}

/// Same neighbourhood apart from each other.
fn twins(g: &DenseGraph, u: usize, v: usize) -> bool {
    let mut a = g.rows[u].clone();
    let mut b = g.rows[v].clone();
    a.remove(v);
    b.remove(u);
    a == b
}

/// Splits cells by neighbour counts into every current cell until stable.
/// New sub-cells are ordered by their count vector, which keeps the result
/// independent of vertex names.
fn refine(g: &DenseGraph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.n();
    loop {
        let masks: Vec<BitSet> = cells
            .iter()
            .map(|c| {
                let mut s = BitSet::new(n);
                c.iter().for_each(|&v| s.insert(v));
                s
            })
            .collect();
        let mut changed = false;
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| g.rows[v].intersection_len(m)).collect(), v))
                .collect();
            keyed.sort();
            let before = next.len();
            let mut i = 0;
            while i < keyed.len() {
                let mut j = i;
                while j < keyed.len() && keyed[j].0 == keyed[i].0 {
                    j += 1;
                }
                next.push(keyed[i..j].iter().map(|p| p.1).collect());
                i = j;
            }
            changed |= next.len() - before > 1;
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

fn encode(g: &DenseGraph, perm: &[usize]) -> Vec<u64> {
    let n = perm.len();
    let mut bits = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64)];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(perm[i], perm[j]) {
                bits[k / 64] |= 1 << (k % 64);
            }
            k += 1;
        }
    }
    bits
}
