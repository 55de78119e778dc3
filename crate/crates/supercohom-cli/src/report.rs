//! Deterministic run reports: a commented header, CSV tables and a check list.

use sha2::{Digest, Sha256};
use std::fmt::Write as _;

/// Version tag of the CSV layout, printed in every report header.
pub const CSV_SCHEMA: &str = "supercohom-csv/1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: &str, header: &[&str]) -> Self {
        Table { name: name.to_string(), header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push<I, S>(&mut self, row: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        let row: Vec<String> = row.into_iter().map(|s| s.to_string()).collect();
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RunReport {
    pub command: String,
    pub algebra: String,
    pub fingerprint: String,
    pub notes: Vec<String>,
    pub tables: Vec<Table>,
    pub checks: Vec<Check>,
}

/// First 16 hex digits of the SHA-256 of `text`.
pub fn fingerprint(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl RunReport {
    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail(detail.into()) };
        self.checks.push(Check { name: name.into(), status });
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: Status::Skipped(reason.into()) });
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| matches!(c.status, Status::Fail(_)))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# supercohom report").unwrap();
        writeln!(out, "# schema: {CSV_SCHEMA}").unwrap();
        writeln!(out, "# command: {}", self.command).unwrap();
        writeln!(out, "# algebra: {}", self.algebra).unwrap();
        writeln!(out, "# fingerprint: {}", self.fingerprint).unwrap();
        for n in &self.notes {
            writeln!(out, "# note: {n}").unwrap();
        }
        for t in &self.tables {
            writeln!(out, "\n## table: {}", t.name).unwrap();
            writeln!(out, "{}", t.header.iter().map(|h| csv_field(h)).collect::<Vec<_>>().join(",")).unwrap();
            for r in &t.rows {
                writeln!(out, "{}", r.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(",")).unwrap();
            }
        }
        if !self.checks.is_empty() {
            writeln!(out, "\n## checks").unwrap();
            writeln!(out, "check,status,detail").unwrap();
            for c in &self.checks {
                let (status, detail) = match &c.status {
                    Status::Pass => ("pass", String::new()),
                    Status::Fail(d) => ("fail", d.clone()),
                    Status::Skipped(d) => ("skipped", d.clone()),
                };
                writeln!(out, "{},{status},{}", csv_field(&c.name), csv_field(&detail)).unwrap();
            }
        }
        out
    }
}
