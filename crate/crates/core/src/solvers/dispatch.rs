use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::instance::{BlockerInstance, OpKind};
use crate::params::Parameter;
use crate::recognize::{
    cotree, is_3p1_free, is_bipartite, is_cobipartite, is_h_free, is_tree, is_triangle_free, probe_graph,
    split_partition, IntervalModel, SplitFlavor,
};

use super::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    Tree,
    Cograph,
    Split,
    Interval,
    Bipartite,
    Cobipartite,
    ThreeP1Free,
    P1P3Free,
    TriangleFree,
}

impl GraphClass {
    /// Order tried by automatic dispatch.
    pub const AUTO_ORDER: [GraphClass; 9] = [
        GraphClass::Tree,
        GraphClass::Cograph,
        GraphClass::Split,
        GraphClass::Interval,
        GraphClass::Bipartite,
        GraphClass::Cobipartite,
        GraphClass::ThreeP1Free,
        GraphClass::P1P3Free,
        GraphClass::TriangleFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Tree => "tree",
            GraphClass::Cograph => "cograph",
            GraphClass::Split => "split",
            GraphClass::Interval => "interval",
            GraphClass::Bipartite => "bipartite",
            GraphClass::Cobipartite => "cobipartite",
            GraphClass::ThreeP1Free => "3p1free",
            GraphClass::P1P3Free => "p1p3free",
            GraphClass::TriangleFree => "trianglefree",
        }
    }

    /// Whether the instance graph is in the class. Interval membership is
    /// only decided against a supplied model.
    pub fn contains(self, inst: &BlockerInstance, model: Option<&IntervalModel>) -> Result<bool> {
        let g = &inst.graph;
        Ok(match self {
            GraphClass::Tree => is_tree(g),
            GraphClass::Cograph => cotree(g).is_ok(),
            GraphClass::Split => split_partition(g, SplitFlavor::Any).is_some(),
            GraphClass::Interval => match model {
                Some(m) => m.validate(g).unwrap_or(false),
                None => false,
            },
            GraphClass::Bipartite => is_bipartite(g),
            GraphClass::Cobipartite => is_cobipartite(g),
            GraphClass::ThreeP1Free => is_3p1_free(g),
            GraphClass::P1P3Free => is_h_free(g, &probe_graph("P1+P3").unwrap())?,
            GraphClass::TriangleFree => is_triangle_free(g),
        })
    }

    pub fn supports(self, pi: Parameter, kind: OpKind) -> bool {
        use OpKind::*;
        use Parameter::*;
        match self {
            GraphClass::Tree => !(pi == Alpha && kind == Delete),
            GraphClass::Cograph => true,
            GraphClass::Split => kind == Contract,
            GraphClass::Interval => pi != Alpha,
            GraphClass::Bipartite => pi != Alpha,
            GraphClass::Cobipartite => !(pi == Alpha && kind == Contract),
            GraphClass::ThreeP1Free => pi == Chi,
            GraphClass::P1P3Free => pi == Chi && kind == Delete,
            GraphClass::TriangleFree => pi == Omega && kind == Contract,
        }
    }

    /// Why there is no solver for the combination, in words.
    pub fn unsupported_reason(self, pi: Parameter, kind: OpKind) -> String {
        use OpKind::*;
        use Parameter::*;
        let what = match (self, pi, kind) {
            (GraphClass::Bipartite, Alpha, Contract) => "NP-hard",
            (GraphClass::Cobipartite, Alpha, Contract) => "NP-complete already for d = 1",
            (GraphClass::Split, _, Delete) => {
                "NP-complete; polynomial for fixed d by a known algorithm, not implemented"
            }
            (GraphClass::Tree | GraphClass::Bipartite, Alpha, Delete) => {
                "polynomial by a known algorithm, not implemented"
            }
            (GraphClass::Interval, Alpha, _) => "complexity open",
            _ => "no polynomial-time solver implemented for this combination",
        };
        format!("{} + {kind} + {pi}: {what}", self.name())
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphClass::AUTO_ORDER
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown class '{s}'")))
    }
}

/// Runs the solver for `class` on the instance.
pub fn solve(class: GraphClass, inst: &BlockerInstance, model: Option<&IntervalModel>) -> Result<SolverAnswer> {
    use OpKind::*;
    use Parameter::*;
    let (g, pi, kind, d, k) = (&inst.graph, inst.pi, inst.kind, inst.d, inst.k);
    if !class.supports(pi, kind) {
        return Err(Error::Invalid(class.unsupported_reason(pi, kind)));
    }
    match (class, pi, kind) {
        (GraphClass::Tree, Alpha, Contract) => tree_contraction_blocker_alpha(g, d, k),
        (GraphClass::Tree, _, Contract) => {
            if !is_tree(g) {
                return Err(Error::NotInClass("a tree"));
            }
            triangle_free_blocker(g, pi, d, k)
        }
        (GraphClass::Tree, _, Delete) => {
            if !is_tree(g) {
                return Err(Error::NotInClass("a tree"));
            }
            bipartite_deletion_blocker(g, pi, d, k)
        }
        (GraphClass::Cograph, _, _) => cograph_decide(g, pi, kind, d, k),
        (GraphClass::Split, _, _) => split_contraction_blocker(g, pi, d, k),
        (GraphClass::Interval, _, _) => {
            let m = model.ok_or_else(|| Error::Invalid("the interval solvers need an interval model".into()))?;
            if !m.validate(g)? {
                return Err(Error::Invalid("the interval model does not realize the graph".into()));
            }
            match kind {
                Contract => interval_contraction_blocker(m, pi, d, k),
                Delete => interval_deletion_blocker(m, pi, d, k),
            }
        }
        (GraphClass::Bipartite, _, Delete) => bipartite_deletion_blocker(g, pi, d, k),
        (GraphClass::Bipartite, _, Contract) => {
            if !is_bipartite(g) {
                return Err(Error::NotInClass("bipartite"));
            }
            triangle_free_blocker(g, pi, d, k)
        }
        (GraphClass::Cobipartite, Alpha, Delete) => cobipartite_deletion_blocker_alpha(g, d, k),
        (GraphClass::Cobipartite, _, _) | (GraphClass::ThreeP1Free, _, _) => {
            if class == GraphClass::Cobipartite && !is_cobipartite(g) {
                return Err(Error::NotInClass("cobipartite"));
            }
            match kind {
                Contract => contraction_blocker_chi_3p1free(g, d, k),
                Delete => deletion_blocker_chi_3p1free(g, d, k),
            }
        }
        (GraphClass::P1P3Free, _, _) => deletion_blocker_chi_p1p3free(g, d, k),
        (GraphClass::TriangleFree, _, _) => triangle_free_contraction_blocker_omega(g, d, k),
    }
}

/// On bipartite graphs χ = ω, and both fall to 1 exactly when no edge is left.
fn triangle_free_blocker(g: &crate::graph::Graph, _pi: Parameter, d: usize, k: usize) -> Result<SolverAnswer> {
    triangle_free_contraction_blocker_omega(g, d, k)
}
