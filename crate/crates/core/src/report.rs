//! Check results with explicit counterexamples.

use std::fmt;

/// One coordinate of a witness tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arg {
    /// An element of the structure under test (or a frame point).
    Elem(usize),
    /// A dimension index.
    Dim(usize),
}

impl Arg {
    pub fn index(self) -> usize {
        match self {
            Arg::Elem(i) | Arg::Dim(i) => i,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<Arg>,
}

impl Violation {
    /// Witness rendered with element labels (falling back to indices).
    pub fn render(&self, labels: Option<&[String]>) -> Vec<String> {
        self.witness
            .iter()
            .map(|a| match (a, labels) {
                (Arg::Elem(x), Some(l)) if *x < l.len() => l[*x].clone(),
                (a, _) => a.index().to_string(),
            })
            .collect()
    }
}

/// Outcome of an exhaustive check: at most one violation per axiom, the
/// lexicographically first failing tuple.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: impl Into<String>, witness: Vec<Arg>) {
        self.violations.push(Violation { axiom: axiom.into(), witness });
    }

    pub fn violation(&self, axiom: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    /// Witness of the named axiom as raw indices.
    pub fn witness(&self, axiom: &str) -> Option<Vec<usize>> {
        self.violation(axiom)
            .map(|v| v.witness.iter().map(|a| a.index()).collect())
    }

    pub fn axioms(&self) -> impl Iterator<Item = &str> {
        self.violations.iter().map(|v| v.axiom.as_str())
    }

    /// Appends the violations of `other`, prefixing each axiom id.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for v in other.violations {
            let axiom = if prefix.is_empty() {
                v.axiom
            } else {
                format!("{prefix}.{}", v.axiom)
            };
            self.violations.push(Violation { axiom, witness: v.witness });
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "passed");
        }
        write!(f, "{} violation(s)", self.violations.len())?;
        for v in &self.violations {
            let w: Vec<String> = v.witness.iter().map(|a| a.index().to_string()).collect();
            write!(f, "\n  {}: ({})", v.axiom, w.join(", "))?;
        }
        Ok(())
    }
}
