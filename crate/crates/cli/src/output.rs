//! Artifact rendering. Everything is built in memory first so a failed run
//! leaves nothing behind.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::config::{Scenario, SCHEMA_VERSION};
use crate::error::{CliError, Result};
use crate::run::{CaseRecord, SummaryRow};

/// Shortest round-trip decimal; empty for non-finite values.
pub fn num(x: f64) -> String {
    if !x.is_finite() {
        String::new()
    } else if x == 0.0 || (1e-4..1e15).contains(&x.abs()) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

pub fn csv(header: &str, rows: &[Vec<String>]) -> String {
    let mut s = String::with_capacity(64 * (rows.len() + 1));
    s.push_str(header);
    s.push('\n');
    for r in rows {
        s.push_str(&r.join(","));
        s.push('\n');
    }
    s
}

#[derive(Serialize)]
struct ReportsFile<'a> {
    schema_version: u32,
    scenario: &'a str,
    seed: u64,
    hbar: f64,
    model: &'static str,
    cases: usize,
    reports: &'a [CaseRecord],
}

pub struct Artifacts {
    files: Vec<(String, String)>,
}

pub const SUMMARY_HEADER: &str =
    "relation_id,cases,pass,fail,inapplicable,degenerate,min_slack,worst_case,min_lhs_over_rhs,max_lhs_over_rhs,wall_ms";

pub fn summary_csv(summary: &[SummaryRow]) -> String {
    let rows: Vec<Vec<String>> = summary
        .iter()
        .map(|r| {
            vec![
                r.relation_id.clone(),
                r.cases.to_string(),
                r.pass.to_string(),
                r.fail.to_string(),
                r.inapplicable.to_string(),
                r.degenerate.to_string(),
                opt(r.min_slack),
                r.worst_case.map(|c| c.to_string()).unwrap_or_default(),
                opt(r.min_ratio),
                opt(r.max_ratio),
                format!("{:.3}", r.wall_ms),
            ]
        })
        .collect();
    csv(SUMMARY_HEADER, &rows)
}

fn cases_csv(records: &[CaseRecord]) -> String {
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|c| {
            let r = &c.report;
            let ratio = if r.rhs.is_finite() && r.rhs != 0.0 { r.lhs / r.rhs } else { f64::NAN };
            vec![
                c.case.to_string(),
                c.state.clone(),
                opt(c.parameter),
                r.relation_id.clone(),
                format!("{:?}", r.status).to_lowercase(),
                num(r.lhs),
                num(r.rhs),
                num(r.slack),
                num(ratio),
            ]
        })
        .collect();
    csv("case,state,parameter,relation_id,status,lhs,rhs,slack,lhs_over_rhs", &rows)
}

impl Artifacts {
    pub fn assemble(
        scenario: &Scenario,
        records: &[CaseRecord],
        summary: &[SummaryRow],
        curves: Vec<(String, String)>,
    ) -> Result<Self> {
        let reports = ReportsFile {
            schema_version: SCHEMA_VERSION,
            scenario: &scenario.id,
            seed: scenario.seed,
            hbar: scenario.hbar,
            model: scenario.model.kind(),
            cases: records.len(),
            reports: records,
        };
        let mut json = serde_json::to_string_pretty(&reports)
            .map_err(|e| CliError::Pool(format!("serializing reports: {e}")))?;
        json.push('\n');
        let mut files = vec![
            ("reports.json".to_owned(), json),
            ("summary.csv".to_owned(), summary_csv(summary)),
            ("curves/cases.csv".to_owned(), cases_csv(records)),
        ];
        files.extend(curves.into_iter().map(|(name, body)| (format!("curves/{name}"), body)));
        Ok(Self { files })
    }

    pub fn write(&self, dir: &Path) -> Result<()> {
        for (name, body) in &self.files {
            let path = dir.join(name);
            if let Some(parent) = path.parent() {
                fs::create_dir_all(parent).map_err(|source| CliError::Write {
                    path: parent.to_path_buf(),
                    source,
                })?;
            }
            fs::write(&path, body).map_err(|source| CliError::Write { path, source })?;
        }
        Ok(())
    }
}
