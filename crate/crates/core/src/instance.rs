use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::Parameter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OpKind {
    Contract,
    Delete,
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OpKind::Contract => "contract",
            OpKind::Delete => "delete",
        })
    }
}

impl FromStr for OpKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "contract" => Ok(OpKind::Contract),
            "delete" => Ok(OpKind::Delete),
            _ => Err(Error::Invalid(format!("unknown operation kind '{s}'"))),
        }
    }
}

/// Can `graph` be turned into a graph with `pi <= pi(graph) - d` by at most
/// `k` operations of the given kind?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockerInstance {
    pub graph: Graph,
    pub pi: Parameter,
    pub kind: OpKind,
    pub d: usize,
    pub k: usize,
}

#[derive(Serialize, Deserialize)]
struct InstanceJson {
    graph: String,
    pi: Parameter,
    kind: OpKind,
    d: usize,
    k: usize,
}

impl BlockerInstance {
    pub fn new(graph: Graph, pi: Parameter, kind: OpKind, d: usize, k: usize) -> Self {
        BlockerInstance { graph, pi, kind, d, k }
    }

    pub fn to_json(&self) -> String {
        let j = InstanceJson {
            graph: self.graph.to_edge_list(),
            pi: self.pi,
            kind: self.kind,
            d: self.d,
            k: self.k,
        };
        serde_json::to_string_pretty(&j).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: InstanceJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        Ok(BlockerInstance {
            graph: Graph::parse_edge_list(&j.graph)?,
            pi: j.pi,
            kind: j.kind,
            d: j.d,
            k: j.k,
        })
    }
}
