//! Aggregated sweep reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// One aggregate check inside a sweep: what was checked, whether it
/// held everywhere, and a short detail (counts, first violation, or a
/// representative witness).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

/// A deterministic summary of one exhaustive sweep: the bounds it ran
/// at, its checks in a fixed order, and free-form notes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub title: String,
    pub bounds: BTreeMap<String, u64>,
    pub records: Vec<CheckRecord>,
    pub notes: Vec<String>,
}

impl SweepReport {
    pub fn new(title: impl Into<String>) -> SweepReport {
        SweepReport {
            title: title.into(),
            bounds: BTreeMap::new(),
            records: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn bound(&mut self, name: &str, value: u64) -> &mut Self {
        self.bounds.insert(name.to_string(), value);
        self
    }

    pub fn record(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.records.push(CheckRecord {
            name: name.to_string(),
            ok,
            detail: detail.into(),
        });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn all_ok(&self) -> bool {
        self.records.iter().all(|r| r.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.ok)
    }
}
