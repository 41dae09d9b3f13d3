use std::collections::BTreeSet;
use std::fmt;

use crate::graph::{Graph, VertexId};

pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CotreeNode {
    Leaf(VertexId),
    Union(NodeId, NodeId),
    Join(NodeId, NodeId),
}

/// Binary cotree stored as an arena; children always precede their parent,
/// so a forward pass over [`Cotree::nodes`] is a post-order traversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cotree {
    nodes: Vec<CotreeNode>,
    sizes: Vec<usize>,
}

/// Vertices `a, b, c, d` inducing the path `a-b-c-d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InducedP4(pub [VertexId; 4]);

impl Cotree {
    pub fn nodes(&self) -> &[CotreeNode] {
        &self.nodes
    }

    pub fn root(&self) -> Option<NodeId> {
        self.nodes.len().checked_sub(1)
    }

    pub fn node(&self, x: NodeId) -> CotreeNode {
        self.nodes[x]
    }

    /// Number of leaves below `x`.
    pub fn size(&self, x: NodeId) -> usize {
        self.sizes[x]
    }

    pub fn leaves(&self, x: NodeId) -> BTreeSet<VertexId> {
        let mut out = BTreeSet::new();
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            match self.nodes[y] {
                CotreeNode::Leaf(v) => {
                    out.insert(v);
                }
                CotreeNode::Union(a, b) | CotreeNode::Join(a, b) => stack.extend([a, b]),
            }
        }
        out
    }

    /// Rebuilds the graph the tree describes.
    pub fn evaluate(&self) -> Graph {
        let mut edges = Vec::new();
        for node in &self.nodes {
            if let CotreeNode::Join(a, b) = *node {
                let (la, lb) = (self.leaves(a), self.leaves(b));
                for &u in &la {
                    edges.extend(lb.iter().map(|&v| (u, v)));
                }
            }
        }
        let vertices = self.root().map(|r| self.leaves(r)).unwrap_or_default();
        Graph::from_parts(vertices, edges).expect("cotree leaves are distinct")
    }

    fn push(&mut self, node: CotreeNode) -> NodeId {
        let size = match node {
            CotreeNode::Leaf(_) => 1,
            CotreeNode::Union(a, b) | CotreeNode::Join(a, b) => self.sizes[a] + self.sizes[b],
        };
        self.nodes.push(node);
        self.sizes.push(size);
        self.nodes.len() - 1
    }

    fn fmt_node(&self, x: NodeId, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.nodes[x] {
            CotreeNode::Leaf(v) => write!(f, "{v}"),
            CotreeNode::Union(a, b) | CotreeNode::Join(a, b) => {
                let tag = if matches!(self.nodes[x], CotreeNode::Union(..)) {
                    'u'
                } else {
                    'j'
                };
                write!(f, "({tag} ")?;
                self.fmt_node(a, f)?;
                f.write_str(" ")?;
                self.fmt_node(b, f)?;
                f.write_str(")")
            }
        }
    }
}

/// Parenthesised dump, e.g. `(u (j 0 1) (j 2 3))` for 2K2.
impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.root() {
            Some(r) => self.fmt_node(r, f),
            None => f.write_str("()"),
        }
    }
}

/// Builds the binary cotree, or returns an induced P4.
pub fn cotree(g: &Graph) -> Result<Cotree, InducedP4> {
    let mut tree = Cotree {
        nodes: Vec::new(),
        sizes: Vec::new(),
    };
    if !g.is_empty() {
        build(g, &g.vertex_set(), &mut tree)?;
    }
    Ok(tree)
}

fn build(g: &Graph, set: &BTreeSet<VertexId>, tree: &mut Cotree) -> Result<NodeId, InducedP4> {
    if set.len() == 1 {
        return Ok(tree.push(CotreeNode::Leaf(*set.first().unwrap())));
    }
    let sub = g.induced_subgraph(set).expect("subset of the vertex set");
    let comps = sub.connected_components();
    let (parts, join) = if comps.len() > 1 {
        (comps, false)
    } else {
        let co = sub.complement().connected_components();
        if co.len() == 1 {
            return Err(find_p4(&sub).expect("connected graph with connected complement has an induced P4"));
        }
        (co, true)
    };
    // Components come sorted by smallest vertex, so folding left to right
    // combines the first two children each time.
    let mut acc: Option<NodeId> = None;
    for part in &parts {
        let child = build(g, part, tree)?;
        acc = Some(match acc {
            None => child,
            Some(prev) if join => tree.push(CotreeNode::Join(prev, child)),
            Some(prev) => tree.push(CotreeNode::Union(prev, child)),
        });
    }
    Ok(acc.unwrap())
}

fn find_p4(g: &Graph) -> Option<InducedP4> {
    for (x, y) in g.edges() {
        for (b, c) in [(x, y), (y, x)] {
            let nb = g.neighbors(b);
            let nc = g.neighbors(c);
            for &a in nb.iter().filter(|&&a| a != c && !nc.contains(&a)) {
                for &d in nc.iter().filter(|&&d| d != b && !nb.contains(&d)) {
                    if !g.has_edge(a, d) {
                        return Some(InducedP4([a, b, c, d]));
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cotrees() {
        let k2 = cotree(&Graph::complete(2)).unwrap();
        assert_eq!(k2.to_string(), "(j 0 1)");
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let t = cotree(&two_k2).unwrap();
        assert_eq!(t.to_string(), "(u (j 0 1) (j 2 3))");
        assert_eq!(t.evaluate(), two_k2);
        assert_eq!(t.size(t.root().unwrap()), 4);
    }

    #[test]
    fn p4_is_refused() {
        let InducedP4(p) = cotree(&Graph::path(4)).unwrap_err();
        let g = Graph::path(4);
        assert!(g.has_edge(p[0], p[1]) && g.has_edge(p[1], p[2]) && g.has_edge(p[2], p[3]));
        assert!(!g.has_edge(p[0], p[2]) && !g.has_edge(p[1], p[3]) && !g.has_edge(p[0], p[3]));
    }

    #[test]
    fn binarized_star() {
        let t = cotree(&Graph::empty(3)).unwrap();
        assert_eq!(t.to_string(), "(u (u 0 1) 2)");
        assert_eq!(cotree(&Graph::new()).unwrap().root(), None);
    }
}
