use std::fmt::Display;

use serde::Serialize;

/// One line of an experiment report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub experiment: String,
    pub parameters: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

/// Rows of `(experiment, parameters, lhs, rhs, pass)`, printable as TSV or
/// as a JSON summary.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    rows: Vec<ReportRow>,
}

#[derive(Serialize)]
struct Summary<'a> {
    passed: usize,
    failed: usize,
    details: &'a [ReportRow],
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(
        &mut self,
        experiment: impl Into<String>,
        parameters: impl Into<String>,
        lhs: impl Display,
        rhs: impl Display,
        pass: bool,
    ) {
        self.rows.push(ReportRow {
            experiment: experiment.into(),
            parameters: parameters.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass,
        });
    }

    pub fn rows(&self) -> &[ReportRow] {
        &self.rows
    }

    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.rows.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn first_failure(&self) -> Option<&ReportRow> {
        self.rows.iter().find(|r| !r.pass)
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("experiment\tparameters\tlhs\trhs\tstatus\n");
        for r in &self.rows {
            let status = if r.pass { "pass" } else { "FAIL" };
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                r.experiment, r.parameters, r.lhs, r.rhs, status
            ));
        }
        out
    }

    /// `{"passed": .., "failed": .., "details": [..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&Summary {
            passed: self.passed(),
            failed: self.failed(),
            details: &self.rows,
        })
        .expect("plain data serializes")
    }
}
