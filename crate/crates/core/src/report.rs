//! Pass/fail reports produced by the axiom checkers.

use std::fmt;

use crate::group::Elem;

/// Outcome of a single named check; `witness` holds the offending element
/// tuple when the check fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub witness: Option<Vec<Elem>>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, name: &'static str, witness: Option<Vec<Elem>>) {
        self.checks.push(Check { name, witness });
    }

    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// First failing check with the given name prefix.
    pub fn failure(&self, prefix: &str) -> Option<&Check> {
        self.failures().find(|c| c.name.starts_with(prefix))
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "{}: pass", c.name)?,
                Some(w) => {
                    let w: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                    writeln!(f, "{}: FAIL witness ({})", c.name, w.join(", "))?
                }
            }
        }
        Ok(())
    }
}
