use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{parse_numbers, Graph, VertexId};

/// Largest blue side the subset search accepts.
pub const SEARCH_LIMIT: usize = 20;

/// Red-blue dominating set: is there `D ⊆ B` with `|D| <= k` such that
/// every red vertex has a neighbour in `D`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbdsInstance {
    pub blue: BTreeSet<VertexId>,
    pub red: BTreeSet<VertexId>,
    /// Blue-red pairs.
    pub edges: BTreeSet<(VertexId, VertexId)>,
    pub k: usize,
}

impl RbdsInstance {
    /// Edges may be given in either orientation.
    pub fn new(
        blue: BTreeSet<VertexId>,
        red: BTreeSet<VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
        k: usize,
    ) -> Result<Self> {
        if let Some(v) = blue.intersection(&red).next() {
            return Err(Error::Invalid(format!("vertex {v} is both blue and red")));
        }
        let mut oriented = BTreeSet::new();
        for (u, v) in edges {
            let e = match (blue.contains(&u), red.contains(&v), blue.contains(&v), red.contains(&u)) {
                (true, true, _, _) => (u, v),
                (_, _, true, true) => (v, u),
                _ => return Err(Error::Invalid(format!("edge {u} {v} does not join blue to red"))),
            };
            oriented.insert(e);
        }
        Ok(RbdsInstance {
            blue,
            red,
            edges: oriented,
            k,
        })
    }

    /// Checks the preconditions of the split reductions: `R` is non-empty,
    /// every vertex has a neighbour on the other side and `k <= |B|`.
    pub fn check_normalized(&self) -> Result<()> {
        if self.red.is_empty() {
            return Err(Error::Invalid("the red side is empty".into()));
        }
        if let Some(r) = self.red.iter().find(|&&r| !self.edges.iter().any(|&(_, x)| x == r)) {
            return Err(Error::Invalid(format!("red vertex {r} has no blue neighbour")));
        }
        if let Some(b) = self.blue.iter().find(|&&b| !self.edges.iter().any(|&(x, _)| x == b)) {
            return Err(Error::Invalid(format!("blue vertex {b} has no red neighbour")));
        }
        if self.k > self.blue.len() {
            return Err(Error::Invalid(format!(
                "k = {} exceeds |B| = {}",
                self.k,
                self.blue.len()
            )));
        }
        Ok(())
    }

    pub fn graph(&self) -> Graph {
        Graph::from_parts(self.blue.union(&self.red).copied(), self.edges.iter().copied()).expect("validated")
    }

    pub fn dominates(&self, d: &BTreeSet<VertexId>) -> bool {
        self.red
            .iter()
            .all(|r| self.edges.iter().any(|(b, x)| x == r && d.contains(b)))
    }

    /// A smallest dominating subset of size at most `k`, by exhaustive search.
    pub fn solve(&self) -> Result<Option<BTreeSet<VertexId>>> {
        if self.blue.len() > SEARCH_LIMIT {
            return Err(Error::TooLarge {
                n: self.blue.len(),
                limit: SEARCH_LIMIT,
            });
        }
        let blue: Vec<_> = self.blue.iter().copied().collect();
        let mut masks: Vec<u32> = (0u32..1 << blue.len()).collect();
        masks.sort_by_key(|m| m.count_ones());
        Ok(masks
            .into_iter()
            .take_while(|m| m.count_ones() as usize <= self.k)
            .map(|m| (0..blue.len()).filter(|i| m >> i & 1 == 1).map(|i| blue[i]).collect())
            .find(|d| self.dominates(d)))
    }
}

/// Text form: `B:`, `R:` and `k:` header lines, then one `b r` edge per line.
impl fmt::Display for RbdsInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: &BTreeSet<VertexId>| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        writeln!(f, "B: {}", list(&self.blue))?;
        writeln!(f, "R: {}", list(&self.red))?;
        writeln!(f, "k: {}", self.k)?;
        for (b, r) in &self.edges {
            writeln!(f, "{b} {r}")?;
        }
        Ok(())
    }
}

impl FromStr for RbdsInstance {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (mut blue, mut red, mut k) = (None, None, None);
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let header = |rest: &str| -> Result<Vec<usize>> { parse_numbers(i + 1, rest) };
            if let Some(rest) = line.strip_prefix("B:") {
                blue = Some(header(rest)?.into_iter().collect::<BTreeSet<_>>());
            } else if let Some(rest) = line.strip_prefix("R:") {
                red = Some(header(rest)?.into_iter().collect::<BTreeSet<_>>());
            } else if let Some(rest) = line.strip_prefix("k:") {
                match header(rest)?.as_slice() {
                    [x] => k = Some(*x),
                    _ => return Err(Error::parse(i + 1, "expected a single budget")),
                }
            } else {
                match parse_numbers(i + 1, line)?.as_slice() {
                    [u, v] => edges.push((*u, *v)),
                    _ => return Err(Error::parse(i + 1, "expected an edge 'b r'")),
                }
            }
        }
        let missing = |what: &str| Error::Invalid(format!("missing '{what}' line"));
        RbdsInstance::new(
            blue.ok_or_else(|| missing("B:"))?,
            red.ok_or_else(|| missing("R:"))?,
            edges,
            k.ok_or_else(|| missing("k:"))?,
        )
    }
}
