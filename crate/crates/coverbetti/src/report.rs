//! Pass/fail reports produced by the verification sweeps.

use serde::Serialize;

/// One named comparison inside a verification sweep.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    /// Comparison of a computed value against an expected one.
    pub fn value<T: PartialEq + std::fmt::Display>(
        name: impl Into<String>,
        got: T,
        expected: T,
    ) -> Check {
        let passed = got == expected;
        Check::new(name, passed, format!("got {got}, expected {expected}"))
    }
}

/// A titled list of checks; the sweep passes only if every check does.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>, checks: Vec<Check>) -> Report {
        Report { title: title.into(), checks }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn summary_line(&self) -> String {
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        if failed == 0 {
            format!("{}: all {} checks passed", self.title, self.checks.len())
        } else {
            format!("{}: {failed} of {} checks FAILED", self.title, self.checks.len())
        }
    }

    /// Multi-line rendering, one check per line.
    pub fn text(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.summary_line());
        out.push('\n');
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            out.push_str(&format!("  [{mark}] {}: {}\n", c.name, c.detail));
        }
        out
    }
}
