//! Enumeration of isomorphism classes and classification tables.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::criteria::{classify_action, Verdict};
use crate::residue::{residue, ResidueValue};
use crate::singularity::{canonical_form, is_small, ActionError, CyclicAction};

#[derive(Debug, Error)]
pub enum TableError {
    #[error("unsupported format {0:?} (expected csv, json or pretty)")]
    UnsupportedFormat(String),
    #[error("malformed table: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown verdict {0:?}")]
    UnknownVerdict(String),
    #[error("invalid action in table: {0}")]
    Action(#[from] ActionError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    /// Always in canonical form.
    pub action: CyclicAction,
    pub verdict: Verdict,
    pub residue: Option<ResidueValue>,
}

/// Which isomorphism classes a table lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ClassFilter {
    #[default]
    All,
    /// Only classes with some weight invertible modulo `n`, i.e. those
    /// whose canonical form starts with 1.
    UnitWeight,
}

impl ClassFilter {
    fn keeps(self, canonical: &CyclicAction) -> bool {
        match self {
            ClassFilter::All => true,
            ClassFilter::UnitWeight => canonical.weights()[0] == 1,
        }
    }
}

/// Calls `visit` on every non-decreasing vector in `{1..n-1}^d`.
fn for_each_sorted_weights(n: u32, d: usize, mut visit: impl FnMut(&[u32])) {
    if n < 2 || d == 0 {
        return;
    }
    let mut t = vec![1u32; d];
    loop {
        visit(&t);
        let Some(i) = (0..d).rev().find(|&i| t[i] < n - 1) else {
            return;
        };
        let v = t[i] + 1;
        t[i..].iter_mut().for_each(|x| *x = v);
    }
}

/// Canonical forms of all small actions of order `n` in dimension `d`
/// without zero weights, one per isomorphism class, sorted.
///
/// Smallness and canonical forms ignore coordinate order, so only sorted
/// weight vectors are generated.
pub fn enumerate_classes(n: u32, d: usize) -> Vec<CyclicAction> {
    let mut classes = BTreeSet::new();
    for_each_sorted_weights(n, d, |t| {
        if is_small(n, t) {
            classes.insert(canonical_form(&CyclicAction::from_reduced(n, t.to_vec())));
        }
    });
    classes.into_iter().collect()
}

pub fn classify_row(action: &CyclicAction, with_residue: bool) -> TableRow {
    let action = canonical_form(action);
    let verdict = classify_action(&action).verdict;
    let residue = with_residue.then(|| residue(&action).value);
    TableRow { action, verdict, residue }
}

pub fn build_table(n_lo: u32, n_hi: u32, d: usize, with_residue: bool) -> Vec<TableRow> {
    build_table_filtered(n_lo, n_hi, d, with_residue, ClassFilter::All)
}

/// Rows ordered by `n`, then by canonical weights.
pub fn build_table_filtered(
    n_lo: u32,
    n_hi: u32,
    d: usize,
    with_residue: bool,
    filter: ClassFilter,
) -> Vec<TableRow> {
    let actions: Vec<CyclicAction> = (n_lo.max(2)..=n_hi)
        .flat_map(|n| enumerate_classes(n, d))
        .filter(|a| filter.keeps(a))
        .collect();
    actions.par_iter().map(|a| classify_row(a, with_residue)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

impl FromStr for Format {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "pretty" => Ok(Format::Pretty),
            other => Err(TableError::UnsupportedFormat(other.to_owned())),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RowRecord {
    n: u32,
    t: Vec<u32>,
    verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    residue: Option<ResidueValue>,
}

impl From<&TableRow> for RowRecord {
    fn from(row: &TableRow) -> Self {
        RowRecord {
            n: row.action.order(),
            t: row.action.weights().to_vec(),
            verdict: row.verdict.label().to_owned(),
            residue: row.residue,
        }
    }
}

/// JSON object for a single row, shared with the command line front end.
pub fn row_json(row: &TableRow) -> serde_json::Value {
    serde_json::to_value(RowRecord::from(row)).expect("row records always serialize")
}

/// A row-shaped JSON object for weights that need not form a valid table
/// action, such as inputs with zero weights.
pub fn record_json(n: u32, t: &[u32], verdict: Verdict, residue: Option<ResidueValue>) -> serde_json::Value {
    let record = RowRecord { n, t: t.to_vec(), verdict: verdict.label().to_owned(), residue };
    serde_json::to_value(record).expect("row records always serialize")
}

fn joined(weights: &[u32], sep: &str) -> String {
    weights.iter().map(u32::to_string).collect::<Vec<_>>().join(sep)
}

/// Renders rows. The residue column appears iff some row carries a residue.
/// Output always ends with a newline.
pub fn emit(rows: &[TableRow], format: Format) -> String {
    let with_residue = rows.iter().any(|r| r.residue.is_some());
    let residue_cell = |r: &TableRow| r.residue.map(|v| v.to_string()).unwrap_or_default();
    match format {
        Format::Csv => {
            let mut out = String::from(if with_residue { "n,t,verdict,residue\n" } else { "n,t,verdict\n" });
            for r in rows {
                let _ = write!(out, "{},{},{}", r.action.order(), joined(r.action.weights(), "-"), r.verdict.label());
                if with_residue {
                    let _ = write!(out, ",{}", residue_cell(r));
                }
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let records: Vec<RowRecord> = rows.iter().map(RowRecord::from).collect();
            let mut out = serde_json::to_string_pretty(&records).expect("row records always serialize");
            out.push('\n');
            out
        }
        Format::Pretty => {
            let mut cells: Vec<Vec<String>> = vec![["ring", "verdict", "residue"].map(String::from).to_vec()];
            for r in rows {
                cells.push(vec![r.action.to_string(), r.verdict.label().to_owned(), residue_cell(r)]);
            }
            let columns = if with_residue { 3 } else { 2 };
            let widths: Vec<usize> =
                (0..columns).map(|c| cells.iter().map(|row| row[c].chars().count()).max().unwrap_or(0)).collect();
            let mut out = String::new();
            for row in &cells {
                let line: Vec<String> = (0..columns).map(|c| format!("{:<w$}", row[c], w = widths[c])).collect();
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            }
            out
        }
    }
}

/// Parses the JSON produced by [`emit`].
pub fn parse_json(text: &str) -> Result<Vec<TableRow>, TableError> {
    let records: Vec<RowRecord> = serde_json::from_str(text)?;
    records
        .into_iter()
        .map(|rec| {
            let weights: Vec<i64> = rec.t.iter().map(|&w| w as i64).collect();
            let action = CyclicAction::new(rec.n as i64, &weights)?;
            let verdict = Verdict::from_label(&rec.verdict).ok_or(TableError::UnknownVerdict(rec.verdict))?;
            Ok(TableRow { action, verdict, residue: rec.residue })
        })
        .collect()
}
