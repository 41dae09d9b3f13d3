//! Dynamic programming over the binary cotree.
//!
//! `d(i, j, x)` is the largest drop of π on `G_x` reachable with at most `i`
//! contractions and `j` deletions.

#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::OpKind;
use crate::params::Parameter;
use crate::recognize::{cotree, Cotree, CotreeNode, NodeId};

use super::{MinOps, SolverAnswer};

#[derive(Debug, Clone)]
pub struct CographTable {
    pub tree: Cotree,
    pub pi: Parameter,
    pub contractions: usize,
    pub deletions: usize,
    values: Vec<usize>,
    tables: Vec<Vec<Vec<usize>>>,
}

impl CographTable {
    /// Sum of the two budgets; entries exist for every `i + j <= span`.
    pub fn span(&self) -> usize {
        self.contractions + self.deletions
    }

    pub fn d(&self, x: NodeId, i: usize, j: usize) -> usize {
        assert!(i + j <= self.span(), "entry ({i}, {j}) outside the table");
        self.tables[x][i][j]
    }

    /// π of the subgraph below `x`.
    pub fn value(&self, x: NodeId) -> usize {
        self.values[x]
    }

    /// Largest drop at the root with `i` contractions and `j` deletions.
    pub fn max_d(&self, i: usize, j: usize) -> usize {
        self.tree.root().map_or(0, |r| self.d(r, i, j))
    }

    /// Largest drop at the root within the full budgets.
    pub fn root_max_d(&self) -> usize {
        self.max_d(self.contractions, self.deletions)
    }
}

/// Builds the table for `pi` with `k` contractions and `l` deletions. ω is
/// answered by the χ table.
pub fn cograph_blocker(g: &Graph, pi: Parameter, k: usize, l: usize) -> Result<CographTable> {
    let tree = cotree(g).map_err(|_| Error::NotInClass("a cograph"))?;
    let span = k + l;
    let nodes = tree.nodes().to_vec();
    let mut values = Vec::with_capacity(nodes.len());
    let mut tables: Vec<Vec<Vec<usize>>> = Vec::with_capacity(nodes.len());
    for (x, node) in nodes.iter().enumerate() {
        let (value, table) = match *node {
            CotreeNode::Leaf(_) => (1, leaf_table(span)),
            CotreeNode::Union(y, z) | CotreeNode::Join(y, z) => {
                let kids = Side::pair(&tree, &values, &tables, y, z);
                let join = matches!(node, CotreeNode::Join(..));
                match (pi, join) {
                    (Parameter::Alpha, false) => alpha_union(kids, span),
                    (Parameter::Alpha, true) => alpha_join(kids, span, tree.size(x)),
                    (_, false) => chi_union(kids, span),
                    (_, true) => chi_join(kids, span),
                }
            }
        };
        values.push(value);
        tables.push(table);
    }
    Ok(CographTable {
        tree,
        pi,
        contractions: k,
        deletions: l,
        values,
        tables,
    })
}

/// Decision and smallest sufficient budget for a single operation kind.
pub fn cograph_decide(g: &Graph, pi: Parameter, kind: OpKind, d: usize, k: usize) -> Result<SolverAnswer> {
    let table = match kind {
        OpKind::Contract => cograph_blocker(g, pi, k, 0)?,
        OpKind::Delete => cograph_blocker(g, pi, 0, k)?,
    };
    let drop_at = |b: usize| match kind {
        OpKind::Contract => table.max_d(b, 0),
        OpKind::Delete => table.max_d(0, b),
    };
    let exhaustive = match kind {
        OpKind::Contract => g.n().saturating_sub(1),
        OpKind::Delete => g.n(),
    };
    let min = (0..=k).find(|&b| drop_at(b) >= d);
    Ok(match min {
        Some(m) => SolverAnswer {
            decision: true,
            witness: None,
            min_k: Some(MinOps::Exactly(m)),
        },
        None => SolverAnswer {
            decision: false,
            witness: None,
            min_k: (k >= exhaustive).then_some(MinOps::Infeasible),
        },
    })
}

#[derive(Clone, Copy)]
struct Side<'a> {
    value: usize,
    size: usize,
    table: &'a [Vec<usize>],
}

impl<'a> Side<'a> {
    fn pair(
        tree: &Cotree,
        values: &[usize],
        tables: &'a [Vec<Vec<usize>>],
        y: NodeId,
        z: NodeId,
    ) -> (Side<'a>, Side<'a>) {
        let side = |x: NodeId| Side {
            value: values[x],
            size: tree.size(x),
            table: &tables[x],
        };
        (side(y), side(z))
    }

    /// Smallest π reachable on this side.
    fn rest(&self, i: usize, j: usize) -> usize {
        self.value - self.table[i][j]
    }
}

fn empty_table(span: usize) -> Vec<Vec<usize>> {
    vec![vec![0; span + 1]; span + 1]
}

fn leaf_table(span: usize) -> Vec<Vec<usize>> {
    let mut t = empty_table(span);
    for (i, row) in t.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate().take(span + 1 - i) {
            *cell = usize::from(j >= 1);
        }
    }
    t
}

/// Fills every entry with `value - best(i, j)`.
fn fill(value: usize, span: usize, mut best: impl FnMut(usize, usize) -> usize) -> (usize, Vec<Vec<usize>>) {
    let mut t = empty_table(span);
    for i in 0..=span {
        for j in 0..=span - i {
            t[i][j] = value - best(i, j).min(value);
        }
    }
    (value, t)
}

fn alpha_union((y, z): (Side, Side), span: usize) -> (usize, Vec<Vec<usize>>) {
    fill(y.value + z.value, span, |i, j| {
        let mut best = usize::MAX;
        for a in 0..=i {
            for b in 0..=j {
                best = best.min(y.rest(a, b) + z.rest(i - a, j - b));
            }
        }
        best
    })
}

fn alpha_join((y, z): (Side, Side), span: usize, size: usize) -> (usize, Vec<Vec<usize>>) {
    fill(y.value.max(z.value), span, |i, j| {
        if i + j >= size && j >= 1 {
            return 0;
        }
        let mut no_cross = usize::MAX;
        for a in 0..=i {
            for b in 0..=j {
                no_cross = no_cross.min(y.rest(a, b).max(z.rest(i - a, j - b)));
            }
        }
        let mut cross = usize::MAX;
        for ay in 0..=i {
            for az in 0..=i - ay {
                let c = i - ay - az;
                for b in 0..=j {
                    let v = 1.max(y.rest(ay, b + c)).max(z.rest(az, j - b + c));
                    cross = cross.min(v);
                }
            }
        }
        no_cross.min(cross)
    })
}

fn chi_union((y, z): (Side, Side), span: usize) -> (usize, Vec<Vec<usize>>) {
    fill(y.value.max(z.value), span, |i, j| {
        let mut best = usize::MAX;
        for a in 0..=i {
            for b in 0..=j {
                best = best.min(y.rest(a, b).max(z.rest(i - a, j - b)));
            }
        }
        best
    })
}

/// Join node for χ. Besides contractions inside each side, a final graph
/// may contain mixed vertices, each merged from `r_y >= 1` vertices of one
/// side and `r_z >= 1` of the other. With `m` mixed vertices of which `e`
/// are deleted, they cost `r_y + r_z - m` contractions and `e` deletions,
/// act on each side like deleting the absorbed vertices, and add a clique
/// of size `m - e` joined to everything else.
fn chi_join((y, z): (Side, Side), span: usize) -> (usize, Vec<Vec<usize>>) {
    // absorb[c][b][m]: least χ on a side that spends `c` contraction units
    // (inner contractions plus absorbed vertices), `b` deletions, and
    // absorbs at least `m` vertices.
    let absorb = |s: &Side| {
        let mut t = vec![vec![vec![usize::MAX; span + 1]; span + 1]; span + 1];
        for c in 0..=span {
            for b in 0..=span - c {
                for m in 0..=c {
                    for r in m..=c.min(s.size) {
                        let v = s.rest(c - r, b + r);
                        t[c][b][m] = t[c][b][m].min(v);
                    }
                }
            }
        }
        t
    };
    let (ay, az) = (absorb(&y), absorb(&z));
    fill(y.value + z.value, span, |i, j| {
        let mut best = usize::MAX;
        for a in 0..=i {
            for b in 0..=j {
                best = best.min(y.rest(a, b) + z.rest(i - a, j - b));
            }
        }
        for m in 1..=i.min(y.size).min(z.size) {
            for cy in m..=i {
                let cz = i + m - cy;
                if cz < m || cz > span {
                    continue;
                }
                for by in 0..=j {
                    for e in 0..=m.min(j - by) {
                        let bz = j - by - e;
                        let (vy, vz) = (ay[cy][by][m], az[cz][bz][m]);
                        if vy == usize::MAX || vz == usize::MAX {
                            continue;
                        }
                        best = best.min(vy + vz + m - e);
                    }
                }
            }
        }
        best
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_k2() -> Graph {
        Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            cograph_blocker(&two_k2(), Parameter::Alpha, 2, 0).unwrap().root_max_d(),
            0
        );
        let c4 = Graph::cycle(4);
        assert_eq!(cograph_blocker(&c4, Parameter::Chi, 3, 0).unwrap().root_max_d(), 1);
        assert_eq!(cograph_blocker(&c4, Parameter::Chi, 2, 0).unwrap().root_max_d(), 0);
        assert_eq!(
            cograph_blocker(&Graph::complete(3), Parameter::Omega, 1, 0)
                .unwrap()
                .root_max_d(),
            1
        );
    }

    #[test]
    fn decide_reports_min() {
        let a = cograph_decide(&Graph::cycle(4), Parameter::Chi, OpKind::Contract, 1, 3).unwrap();
        assert_eq!((a.decision, a.min_k), (true, Some(MinOps::Exactly(3))));
        let b = cograph_decide(&Graph::cycle(4), Parameter::Chi, OpKind::Contract, 1, 2).unwrap();
        assert!(!b.decision);
        assert!(cograph_decide(&Graph::path(4), Parameter::Chi, OpKind::Contract, 1, 2).is_err());
    }
}
