//! The `verify` report and its text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::identities::{EntryStatus, Identity, SuiteConfig, SuiteEntry};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

impl Summary {
    fn count(&mut self, status: EntryStatus) {
        match status {
            EntryStatus::Pass => self.pass += 1,
            EntryStatus::Fail => self.fail += 1,
            EntryStatus::Skip => self.skip += 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config: SuiteConfig,
    pub results: Vec<SuiteEntry>,
    pub summary: Summary,
    /// Elapsed time; the only field that varies between identical runs.
    pub wall_time_ms: u64,
}

impl Report {
    pub fn new(config: SuiteConfig, results: Vec<SuiteEntry>, wall_time_ms: u64) -> Self {
        let mut summary = Summary::default();
        for r in &results {
            summary.count(r.status);
        }
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            results,
            summary,
            wall_time_ms,
        }
    }

    /// Process exit code: 0 without failures, 1 otherwise. Skips do not count.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.fail > 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Per-identity counts followed by every failure and skip.
    pub fn to_text(&self) -> String {
        let mut per_id: BTreeMap<Identity, Summary> = BTreeMap::new();
        for r in &self.results {
            per_id.entry(r.identity).or_default().count(r.status);
        }
        let mut out = String::new();
        for (id, s) in &per_id {
            let _ = writeln!(
                out,
                "{:<13} pass {:>5}  fail {:>5}  skip {:>5}",
                id.name(),
                s.pass,
                s.fail,
                s.skip
            );
        }
        for r in &self.results {
            match r.status {
                EntryStatus::Pass => {}
                EntryStatus::Fail => {
                    let spec = serde_json::to_string(&r.spec).expect("spec serializes");
                    let _ = writeln!(out, "FAIL {} {spec}", r.identity);
                    if let Some(w) = &r.witness {
                        let _ = writeln!(out, "  relation: {}", w.relation);
                        for t in &w.terms {
                            let _ = writeln!(out, "  [{}] num {:?} den {:?}", t.index, t.num, t.den);
                        }
                    }
                }
                EntryStatus::Skip => {
                    let spec = serde_json::to_string(&r.spec).expect("spec serializes");
                    let reason = r.reason.as_deref().unwrap_or("");
                    let _ = writeln!(out, "SKIP {} {spec}: {reason}", r.identity);
                }
            }
        }
        let s = self.summary;
        let _ = writeln!(
            out,
            "total: {} pass, {} fail, {} skip ({} ms)",
            s.pass, s.fail, s.skip, self.wall_time_ms
        );
        out
    }
}
