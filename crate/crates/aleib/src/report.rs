//! Structured pass/fail reports produced by every identity checker.

use serde::Serialize;

/// One named law instance: holds or not, with an optional human-readable
/// witness (typically the first failing basis tuple).
#[derive(Debug, Clone, Serialize)]
pub struct Clause {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Clause {
    pub fn pass(name: impl Into<String>) -> Clause {
        Clause {
            name: name.into(),
            holds: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Clause {
        Clause {
            name: name.into(),
            holds: false,
            witness: Some(witness.into()),
        }
    }

    pub fn of(name: impl Into<String>, holds: bool, witness: Option<String>) -> Clause {
        Clause {
            name: name.into(),
            holds,
            witness,
        }
    }
}

/// A checker verdict: passes iff every clause holds.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub name: String,
    pub clauses: Vec<Clause>,
    /// Free-form notes surfaced alongside the verdict (conventions, caveats).
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Report {
        Report {
            name: name.into(),
            clauses: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, clause: Clause) {
        self.clauses.push(clause);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn holds(&self) -> bool {
        self.clauses.iter().all(|c| c.holds)
    }

    /// First failing clause, if any.
    pub fn first_failure(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| !c.holds)
    }
}
