//! Sequence files: CSV (one row per sequence, one scalar literal per cell,
//! with a `# pucodes kind=...` header line) or JSON (an array of arrays of
//! scalar objects). Integer payloads round-trip bit-exactly in both forms.

use std::path::Path;

use pucodes::generator::SequenceSet;
use pucodes::{Scalar, ScalarKind};

use crate::scalar_text::{implied_kind, parse_kind, parse_scalar};
use crate::CliError;

pub fn is_json_path(path: &Path) -> bool {
    path.extension().map(|e| e == "json").unwrap_or(false)
}

/// Render a set as CSV text.
pub fn to_csv(set: &SequenceSet) -> String {
    let mut out = format!("# pucodes kind={}\n", set.kind());
    for seq in set.sequences() {
        let cells: Vec<String> = seq.iter().map(Scalar::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Render rows of samples (one row per time step) as CSV text.
pub fn columns_to_csv(kind: ScalarKind, columns: &[Vec<Scalar>]) -> String {
    let mut out = format!("# pucodes kind={kind}\n");
    let steps = columns.first().map(Vec::len).unwrap_or(0);
    for t in 0..steps {
        let cells: Vec<String> = columns.iter().map(|c| c[t].to_string()).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn write_set(path: &Path, set: &SequenceSet) -> Result<(), CliError> {
    let text = if is_json_path(path) {
        serde_json::to_string_pretty(set.sequences()).map_err(CliError::from_io_like)?
    } else {
        to_csv(set)
    };
    std::fs::write(path, text)
        .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))
}

pub fn read_set(path: &Path) -> Result<SequenceSet, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let rows = if is_json_path(path) {
        serde_json::from_str::<Vec<Vec<Scalar>>>(&text)
            .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?
    } else {
        parse_csv(&text).map_err(|e| e.with_path(path))?
    };
    SequenceSet::new(rows).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn parse_csv(text: &str) -> Result<Vec<Vec<Scalar>>, CliError> {
    let mut header_kind: Option<ScalarKind> = None;
    let mut cell_rows: Vec<Vec<&str>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            for token in comment.split_whitespace() {
                if let Some(k) = token.strip_prefix("kind=") {
                    header_kind = Some(parse_kind(k)?);
                }
            }
            continue;
        }
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        if cells.iter().any(|c| c.is_empty()) {
            return Err(CliError::usage(format!("line {}: empty cell", lineno + 1)));
        }
        cell_rows.push(cells);
    }
    if cell_rows.is_empty() {
        return Err(CliError::usage("no sequence rows found"));
    }
    // file kind: header wins; otherwise the first cell that implies one;
    // all-bare-integer files default to Gaussian.
    let kind = header_kind
        .or_else(|| {
            cell_rows
                .iter()
                .flatten()
                .find_map(|cell| implied_kind(cell))
        })
        .unwrap_or(ScalarKind::Gauss);
    cell_rows
        .into_iter()
        .map(|row| row.into_iter().map(|cell| parse_scalar(cell, kind)).collect())
        .collect()
}
