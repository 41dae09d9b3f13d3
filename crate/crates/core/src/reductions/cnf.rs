use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest formula the assignment search accepts.
pub const ASSIGNMENT_LIMIT: usize = 20;

/// A 3-CNF formula. Literals are DIMACS style: `v` or `-v` for variables
/// `1..=vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    pub vars: usize,
    pub clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    /// Every clause must mention three distinct variables.
    pub fn new(vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self> {
        for (j, c) in clauses.iter().enumerate() {
            for &lit in c {
                if lit == 0 || lit.unsigned_abs() as usize > vars {
                    return Err(Error::Invalid(format!("clause {}: literal {lit} out of range", j + 1)));
                }
            }
            let v = c.map(|l| l.unsigned_abs());
            if v[0] == v[1] || v[0] == v[2] || v[1] == v[2] {
                return Err(Error::Invalid(format!("clause {}: repeated variable", j + 1)));
            }
        }
        Ok(CnfFormula { vars, clauses })
    }

    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut vars = None;
        let mut declared = 0;
        let mut lits = Vec::new();
        let mut clauses = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let f: Vec<_> = rest.split_whitespace().collect();
                if f.len() != 3 || f[0] != "cnf" {
                    return Err(Error::parse(i + 1, "expected 'p cnf <vars> <clauses>'"));
                }
                vars = Some(f[1].parse().map_err(|_| Error::parse(i + 1, "bad variable count"))?);
                declared = f[2].parse().map_err(|_| Error::parse(i + 1, "bad clause count"))?;
                continue;
            }
            for tok in line.split_whitespace() {
                let lit: i32 = tok
                    .parse()
                    .map_err(|_| Error::parse(i + 1, format!("bad literal '{tok}'")))?;
                if lit != 0 {
                    lits.push(lit);
                    continue;
                }
                let clause: [i32; 3] = lits
                    .as_slice()
                    .try_into()
                    .map_err(|_| Error::parse(i + 1, format!("clause has {} literals, expected 3", lits.len())))?;
                clauses.push(clause);
                lits.clear();
            }
        }
        if !lits.is_empty() {
            return Err(Error::Invalid("last clause is not terminated by 0".into()));
        }
        let vars = vars.ok_or_else(|| Error::Invalid("missing 'p cnf' header".into()))?;
        if clauses.len() != declared {
            return Err(Error::Invalid(format!(
                "header declares {declared} clauses, found {}",
                clauses.len()
            )));
        }
        Self::new(vars, clauses)
    }

    /// Value of a literal under `assignment`, indexed by variable - 1.
    fn holds(lit: i32, assignment: &[bool]) -> bool {
        assignment[lit.unsigned_abs() as usize - 1] == (lit > 0)
    }

    pub fn is_one_in_three(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().filter(|&&l| Self::holds(l, assignment)).count() == 1)
    }

    /// First assignment, in binary counting order, that makes exactly one
    /// literal per clause true.
    pub fn one_in_three_assignment(&self) -> Result<Option<Vec<bool>>> {
        if self.vars > ASSIGNMENT_LIMIT {
            return Err(Error::TooLarge {
                n: self.vars,
                limit: ASSIGNMENT_LIMIT,
            });
        }
        Ok((0u32..1 << self.vars)
            .map(|mask| (0..self.vars).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
            .find(|a| self.is_one_in_three(a)))
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p cnf {} {}", self.vars, self.clauses.len())?;
        for c in &self.clauses {
            writeln!(f, "{} {} {} 0", c[0], c[1], c[2])?;
        }
        Ok(())
    }
}

impl FromStr for CnfFormula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_dimacs(s)
    }
}
