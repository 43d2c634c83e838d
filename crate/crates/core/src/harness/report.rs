use std::collections::BTreeMap;
use std::io::{self, Write};

use crate::verdict::Status;

use super::claims::{claim_info, ClaimReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Jsonl,
    SummaryTable,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "jsonl" => Ok(ReportFormat::Jsonl),
            "summary-table" | "summary" => Ok(ReportFormat::SummaryTable),
            other => Err(format!("unknown report format {other:?} (expected jsonl or summary-table)")),
        }
    }
}

/// Counts for one claim id.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClaimSummary {
    pub holds: usize,
    pub fails: usize,
    pub not_applicable: usize,
    pub evaluation_errors: usize,
    /// Fails recorded on reports flagged informative.
    pub informative_fails: usize,
}

impl ClaimSummary {
    /// Fails that count against the run.
    pub fn blocking_fails(&self) -> usize {
        self.fails - self.informative_fails
    }
}

pub fn summarize(reports: &[ClaimReport]) -> BTreeMap<&'static str, ClaimSummary> {
    let mut map: BTreeMap<&'static str, ClaimSummary> = BTreeMap::new();
    for r in reports {
        let e = map.entry(r.claim_id).or_default();
        match r.status {
            Status::Holds => e.holds += 1,
            Status::Fails => {
                e.fails += 1;
                if r.informative {
                    e.informative_fails += 1;
                }
            }
            Status::NotApplicable => e.not_applicable += 1,
            Status::EvaluationError => e.evaluation_errors += 1,
        }
    }
    map
}

/// Writes the reports in the given format. JSON lines are one object per
/// report with keys `claim_id`, `instance`, `status`, `informative`,
/// `witness`, `elapsed_ms`.
pub fn emit_report(reports: &[ClaimReport], format: ReportFormat, out: &mut dyn Write) -> io::Result<()> {
    match format {
        ReportFormat::Jsonl => {
            for r in reports {
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
        }
        ReportFormat::SummaryTable => {
            let summary = summarize(reports);
            let width = summary.keys().map(|k| k.len()).max().unwrap_or(5).max(5);
            writeln!(
                out,
                "{:<width$}  {:>7}  {:>7}  {:>7}  {:>7}  note",
                "claim", "holds", "fails", "n/a", "errors"
            )?;
            for (id, c) in &summary {
                let mut note = String::new();
                if c.informative_fails > 0 {
                    note = format!("{} informative", c.informative_fails);
                }
                if claim_info(id).is_some_and(|i| i.informative) {
                    note = "informative claim".to_string();
                }
                writeln!(
                    out,
                    "{:<width$}  {:>7}  {:>7}  {:>7}  {:>7}  {note}",
                    id, c.holds, c.fails, c.not_applicable, c.evaluation_errors
                )?;
            }
            let total = reports.len();
            let blocking: usize = summary.values().map(|c| c.blocking_fails() + c.evaluation_errors).sum();
            writeln!(out, "{total} reports, {blocking} blocking failures or errors")?;
        }
    }
    Ok(())
}
