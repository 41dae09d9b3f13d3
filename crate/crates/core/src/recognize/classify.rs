use std::fmt;

use serde::Serialize;

use crate::graph::Graph;
use crate::instance::OpKind;
use crate::params::Parameter;

use super::is_induced_subgraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Polynomial,
    /// NP-hard or co-NP-hard; the two are not distinguished.
    Hard,
    Open,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Polynomial => "polynomial",
            Verdict::Hard => "hard",
            Verdict::Open => "open",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dichotomy {
    pub verdict: Verdict,
    /// Which rule of the classification fired.
    pub rule: String,
}

impl fmt::Display for Dichotomy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.verdict, self.rule)
    }
}

/// Probe names accepted by [`probe_graph`].
pub const PROBES: [&str; 14] = [
    "P1", "P2", "P3", "P4", "P5", "3P1", "2P2", "P1+P3", "paw", "C3", "C4", "C5", "K13", "C3+P1",
];

pub fn probe_graph(name: &str) -> Option<Graph> {
    let g = match name {
        "P1" => Graph::empty(1),
        "P2" => Graph::path(2),
        "P3" => Graph::path(3),
        "P4" => Graph::path(4),
        "P5" => Graph::path(5),
        "3P1" => Graph::empty(3),
        "2P2" => Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap(),
        "P1+P3" => Graph::from_edges(4, &[(1, 2), (2, 3)]).unwrap(),
        "paw" => Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap(),
        "C3" => Graph::complete(3),
        "C4" => Graph::cycle(4),
        "C5" => Graph::cycle(5),
        "K13" => Graph::star(3),
        "C3+P1" => Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
        _ => return None,
    };
    Some(g)
}

fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && is_induced_subgraph(a, b)
}

/// Complexity of the blocker problem for `(pi, kind)` on H-free graphs.
pub fn classify(h: &Graph, pi: Parameter, kind: OpKind) -> Dichotomy {
    let within = |name: &str| is_induced_subgraph(h, &probe_graph(name).unwrap());
    let tag = format!("{pi}/{kind}");
    let poly = |why: &str| Dichotomy {
        verdict: Verdict::Polynomial,
        rule: format!("{tag}: H induced subgraph of {why}"),
    };
    let hard = |why: &str| Dichotomy {
        verdict: Verdict::Hard,
        rule: format!("{tag}: H not an induced subgraph of {why}"),
    };
    match (pi, kind) {
        (Parameter::Alpha, _) | (Parameter::Omega, OpKind::Delete) | (Parameter::Chi, OpKind::Contract) => {
            if within("P4") {
                poly("P4")
            } else {
                hard("P4")
            }
        }
        (Parameter::Omega, OpKind::Contract) => {
            if within("P4") {
                poly("P4")
            } else if within("paw") {
                poly("paw")
            } else if isomorphic(h, &probe_graph("C3+P1").unwrap()) {
                Dichotomy {
                    verdict: Verdict::Open,
                    rule: format!("{tag}: H is C3+P1"),
                }
            } else {
                hard("P4 or paw")
            }
        }
        (Parameter::Chi, OpKind::Delete) => {
            if within("P4") {
                poly("P4")
            } else if within("P1+P3") {
                poly("P1+P3")
            } else {
                hard("P4 or P1+P3")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn headline_cases() {
        let p4 = probe_graph("P4").unwrap();
        assert_eq!(
            classify(&p4, Parameter::Alpha, OpKind::Delete).verdict,
            Verdict::Polynomial
        );
        let p1p3 = probe_graph("P1+P3").unwrap();
        assert_eq!(
            classify(&p1p3, Parameter::Chi, OpKind::Delete).verdict,
            Verdict::Polynomial
        );
        assert_eq!(classify(&p1p3, Parameter::Chi, OpKind::Contract).verdict, Verdict::Hard);
        let c3p1 = probe_graph("C3+P1").unwrap();
        assert_eq!(
            classify(&c3p1, Parameter::Omega, OpKind::Contract).verdict,
            Verdict::Open
        );
        assert_eq!(
            classify(&p4, Parameter::Alpha, OpKind::Delete).to_string(),
            "polynomial [alpha/delete: H induced subgraph of P4]"
        );
    }
}
