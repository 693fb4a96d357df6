use std::fmt::Write as _;
use std::time::Duration;

use detring::identities::{CheckKind, IdentityReport};

#[derive(Clone, Debug)]
pub enum Entry {
    Heading(String),
    Line(String),
    Check(IdentityReport),
}

/// Output of one command: the echoed command line, text and checks in
/// order, and the wall time.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: String,
    pub entries: Vec<Entry>,
    pub elapsed: Duration,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> RunReport {
        RunReport {
            command: command.into(),
            entries: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn heading(&mut self, title: impl Into<String>) {
        self.entries.push(Entry::Heading(title.into()));
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.entries.push(Entry::Line(text.into()));
    }

    pub fn check(&mut self, r: IdentityReport) {
        self.entries.push(Entry::Check(r));
    }

    pub fn checks(&self) -> impl Iterator<Item = &IdentityReport> {
        self.entries.iter().filter_map(|e| match e {
            Entry::Check(r) => Some(r),
            _ => None,
        })
    }

    /// Every theorem holds and every counterexample fails.
    pub fn passed(&self) -> bool {
        self.checks().all(IdentityReport::as_expected)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, timing: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "$ detring {}", self.command);
        for e in &self.entries {
            match e {
                Entry::Heading(t) => {
                    let _ = writeln!(out, "\n== {t} ==");
                }
                Entry::Line(t) => {
                    let _ = writeln!(out, "{t}");
                }
                Entry::Check(r) => out.push_str(&r.render(timing)),
            }
        }
        let total = self.checks().filter(|r| r.kind != CheckKind::Observation).count();
        let failed = self.checks().filter(|r| !r.as_expected()).count();
        let _ = writeln!(
            out,
            "\noverall: {} ({total} checks, {failed} failed)",
            if failed == 0 { "PASS" } else { "FAIL" }
        );
        if timing {
            let _ = writeln!(out, "elapsed: {:.3?}", self.elapsed);
        }
        out
    }
}
