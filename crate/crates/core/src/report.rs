//! Pass/fail reports produced by the instance checkers.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Witnesses kept per report; the failure count is always exact.
pub const MAX_WITNESSES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub checks: usize,
    pub failed: usize,
    pub witnesses: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), checks: 0, failed: 0, witnesses: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// Records one check; `witness` is only rendered on failure.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.checks += 1;
        if !ok {
            self.fail(witness());
        }
        ok
    }

    pub fn fail(&mut self, witness: String) {
        self.failed += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Folds another report's counts and witnesses into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        self.failed += other.failed;
        for w in other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
        self.notes.extend(other.notes);
    }

    pub fn first_witness(&self) -> Option<&str> {
        self.witnesses.first().map(String::as_str)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{}: {} ({} checks", self.name, verdict, self.checks)?;
        if self.failed > 0 {
            write!(f, ", {} failed", self.failed)?;
        }
        f.write_str(")")?;
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        for w in &self.witnesses {
            write!(f, "\n  witness: {w}")?;
        }
        if self.failed > self.witnesses.len() {
            write!(f, "\n  ... {} more", self.failed - self.witnesses.len())?;
        }
        Ok(())
    }
}
