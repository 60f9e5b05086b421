//! Verification reports.
//!
//! The structured form is JSON lines: one `header` record, one `check`
//! record per check in execution order, and one `summary` record. No field
//! depends on wall-clock time, so equal inputs give byte-identical output.

pub use crate::catalog::{CheckRecord, Status};
use serde::Serialize;
use std::fmt::Write as _;

pub const TOOL_NAME: &str = env!("CARGO_PKG_NAME");
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub suite: String,
    pub catalog_sha256: String,
    pub seed: u64,
    pub samples: usize,
    pub records: Vec<CheckRecord>,
    pub warnings: Vec<String>,
}

#[derive(Serialize)]
#[serde(tag = "record", rename_all = "lowercase")]
enum Line<'a> {
    Header {
        tool: &'a str,
        version: &'a str,
        suite: &'a str,
        catalog_sha256: &'a str,
        seed: u64,
        samples: usize,
    },
    Warning {
        message: &'a str,
    },
    Check(&'a CheckRecord),
    Summary {
        total: usize,
        passed: usize,
        failed: usize,
    },
}

impl Report {
    pub fn passed(&self) -> bool {
        self.records.iter().all(CheckRecord::passed)
    }

    /// `(total, passed, failed)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        let passed = self.records.iter().filter(|r| r.passed()).count();
        (self.records.len(), passed, self.records.len() - passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed())
    }

    pub fn to_json_lines(&self) -> String {
        let (total, passed, failed) = self.counts();
        let mut lines = vec![Line::Header {
            tool: TOOL_NAME,
            version: TOOL_VERSION,
            suite: &self.suite,
            catalog_sha256: &self.catalog_sha256,
            seed: self.seed,
            samples: self.samples,
        }];
        lines.extend(self.warnings.iter().map(|m| Line::Warning { message: m }));
        lines.extend(self.records.iter().map(Line::Check));
        lines.push(Line::Summary { total, passed, failed });
        let mut out = String::new();
        for l in &lines {
            out.push_str(&serde_json::to_string(l).expect("report records serialize"));
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{TOOL_NAME} {TOOL_VERSION}  suite={}  seed={}  samples={}  catalog={}",
            self.suite,
            self.seed,
            self.samples,
            &self.catalog_sha256[..self.catalog_sha256.len().min(12)]
        );
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        for r in &self.records {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let residual = r.residual.map(|v| format!("  residual={v:.3e}")).unwrap_or_default();
            let _ = writeln!(out, "{status}  {:<40} [{}]{residual}", r.id, r.anchor);
            if !r.passed() {
                let _ = writeln!(out, "      {}", r.detail);
            }
        }
        let (total, passed, failed) = self.counts();
        let _ = writeln!(out, "{passed}/{total} checks passed, {failed} failed");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report() -> Report {
        Report {
            suite: "algebra".into(),
            catalog_sha256: "ab".repeat(32),
            seed: 7,
            samples: 3,
            records: vec![
                CheckRecord::new("jacobi/sl2", "algebra", "sl(2,R) brackets", Ok(None)),
                CheckRecord::new("x", "algebra", "y", Ok(Some("bad".into()))),
            ],
            warnings: vec![],
        }
    }

    #[test]
    fn json_lines_shape() {
        let r = report();
        let text = r.to_json_lines();
        let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0]["record"], "header");
        assert_eq!(lines[1]["status"], "pass");
        assert_eq!(lines[2]["status"], "fail");
        assert_eq!(lines[3]["failed"], 1);
        assert!(!r.passed());
        assert_eq!(text, report().to_json_lines());
    }

    #[test]
    fn text_lists_failures() {
        let t = report().to_text();
        assert!(t.contains("FAIL  x"));
        assert!(t.contains("1/2 checks passed"));
    }
}
