//! Verification reports: a JSON document and a plain-text summary.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::Serialize;

use super::{CheckKind, Conclusion, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupEntry {
    pub name: String,
    pub degree: usize,
    pub order: u64,
    pub subgroups: usize,
}

/// A group, or a group under one partition, left out of the sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<String>,
    pub reason: String,
}

impl fmt::Display for Skip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.partition {
            Some(p) => write!(f, "skipped {} under {p} ({})", self.group, self.reason),
            None => write!(f, "skipped {} ({})", self.group, self.reason),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub holds: usize,
    pub fails: usize,
    pub not_applicable: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub verdicts: usize,
    pub violations: usize,
    pub by_check: BTreeMap<String, CheckSummary>,
}

impl Summary {
    pub fn of(verdicts: &[Verdict]) -> Self {
        let mut s = Summary {
            verdicts: verdicts.len(),
            ..Summary::default()
        };
        for v in verdicts {
            let c = s.by_check.entry(v.check.clone()).or_default();
            match v.conclusion {
                Conclusion::Holds => c.holds += 1,
                Conclusion::Fails => c.fails += 1,
                Conclusion::NotApplicable => c.not_applicable += 1,
            }
            if v.is_violation() {
                c.violations += 1;
                s.violations += 1;
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub partitions: Vec<String>,
    pub groups: Vec<GroupEntry>,
    pub skipped: Vec<Skip>,
    pub verdicts: Vec<Verdict>,
    pub summary: Summary,
}

impl Report {
    pub fn new(
        partitions: Vec<String>,
        groups: Vec<GroupEntry>,
        skipped: Vec<Skip>,
        verdicts: Vec<Verdict>,
    ) -> Self {
        let summary = Summary::of(&verdicts);
        Report {
            partitions,
            groups,
            skipped,
            verdicts,
            summary,
        }
    }

    pub fn violations(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.is_violation())
    }

    pub fn has_violation(&self) -> bool {
        self.summary.violations > 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "partitions: {}", self.partitions.join("  "));
        let _ = writeln!(
            out,
            "groups: {} checked, {} skipped",
            self.groups.len(),
            self.skipped
                .iter()
                .filter(|s| s.partition.is_none())
                .count()
        );
        for s in &self.skipped {
            let _ = writeln!(out, "{s}");
        }
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "{:<22} {:>7} {:>7} {:>7} {:>10}",
            "check", "holds", "fails", "n/a", "violations"
        );
        for (name, c) in &self.summary.by_check {
            let _ = writeln!(
                out,
                "{:<22} {:>7} {:>7} {:>7} {:>10}",
                name, c.holds, c.fails, c.not_applicable, c.violations
            );
        }
        for v in self
            .verdicts
            .iter()
            .filter(|v| v.kind == CheckKind::Counterexample)
        {
            let _ = writeln!(out);
            let _ = writeln!(
                out,
                "{} on {} under {}:",
                v.check,
                v.group,
                v.partition.as_deref().unwrap_or("-")
            );
            for s in &v.steps {
                let mark = if s.passed() { "ok" } else { "MISMATCH" };
                let _ = writeln!(
                    out,
                    "  {:<42} expected {:<6} observed {:<6} {mark}",
                    s.name, s.expected, s.observed
                );
            }
        }
        let _ = writeln!(out);
        if self.has_violation() {
            let _ = writeln!(out, "violations:");
            for v in self.violations() {
                let _ = writeln!(out, "  {}", describe(v));
            }
        }
        let _ = writeln!(
            out,
            "{} verdicts, {} violations",
            self.summary.verdicts, self.summary.violations
        );
        out
    }
}

fn describe(v: &Verdict) -> String {
    let mut s = format!(
        "{} on {} under {}",
        v.check,
        v.group,
        v.partition.as_deref().unwrap_or("-")
    );
    for (k, w) in &v.witnesses {
        let _ = write!(s, "; {k} = {w}");
    }
    for n in &v.notes {
        let _ = write!(s, "; {n}");
    }
    s
}
