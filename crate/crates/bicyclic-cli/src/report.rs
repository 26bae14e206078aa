//! Claim reports and their serialized form.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::config::RunConfig;

pub const REPORT_SCHEMA: u64 = 1;

/// One named check inside a claim, with a deterministic detail line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

/// The outcome of verifying one claim. `passed` means every check
/// matched its predicted outcome; witnesses are canonical, so two runs
/// at the same config differ only in `duration_ms`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: String,
    pub statement: String,
    pub passed: bool,
    pub bounds: BTreeMap<String, u64>,
    pub checks: Vec<CheckLine>,
    pub notes: Vec<String>,
    #[serde(default)]
    pub witnesses: serde_json::Value,
    pub duration_ms: u64,
}

impl ClaimReport {
    pub fn new(claim: &str, statement: &str) -> ClaimReport {
        ClaimReport {
            claim: claim.to_string(),
            statement: statement.to_string(),
            passed: true,
            bounds: BTreeMap::new(),
            checks: Vec::new(),
            notes: Vec::new(),
            witnesses: serde_json::Value::Null,
            duration_ms: 0,
        }
    }

    pub fn bound(&mut self, name: &str, value: u64) {
        self.bounds.insert(name.to_string(), value);
    }

    pub fn check(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.passed &= ok;
        self.checks.push(CheckLine { name: name.to_string(), ok, detail: detail.into() });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Fold a sweep report in as checks plus notes.
    pub fn absorb_sweep(&mut self, sweep: &bicyclic_continuity::SweepReport) {
        for record in &sweep.records {
            self.check(
                &format!("{}: {}", sweep.title, record.name),
                record.ok,
                record.detail.clone(),
            );
        }
        for note in &sweep.notes {
            self.note(note.clone());
        }
    }
}

/// The whole report file: schema tag, the config it ran at, and one
/// entry per claim ordered by claim id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub schema: u64,
    pub config: RunConfig,
    pub claims: Vec<ClaimReport>,
}

impl ReportFile {
    pub fn new(config: RunConfig, mut claims: Vec<ClaimReport>) -> ReportFile {
        claims.sort_by(|a, b| a.claim.cmp(&b.claim));
        ReportFile { schema: REPORT_SCHEMA, config, claims }
    }

    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for claim in &self.claims {
            out.push_str(&format!(
                "claim {}: {} ({} ms)\n",
                claim.claim,
                if claim.passed { "PASS" } else { "FAIL" },
                claim.duration_ms
            ));
            out.push_str(&format!("  {}\n", claim.statement));
            if !claim.bounds.is_empty() {
                let bounds: Vec<String> =
                    claim.bounds.iter().map(|(k, v)| format!("{k}={v}")).collect();
                out.push_str(&format!("  bounds: {}\n", bounds.join(", ")));
            }
            for check in &claim.checks {
                out.push_str(&format!(
                    "  [{}] {} — {}\n",
                    if check.ok { "ok" } else { "FAIL" },
                    check.name,
                    check.detail
                ));
            }
            for note in &claim.notes {
                out.push_str(&format!("  note: {note}\n"));
            }
        }
        let verdict = if self.all_passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("overall: {verdict} ({} claims)\n", self.claims.len()));
        out
    }
}

/// Measure a runner, stamping the duration into its report.
pub fn timed(mut run: impl FnMut() -> anyhow::Result<ClaimReport>) -> anyhow::Result<ClaimReport> {
    let start = Instant::now();
    let mut report = run()?;
    report.duration_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
