//! Command implementations behind the `nekbounds` binary.
//!
//! Each command returns an [`OutputRecord`]; the binary only prints it and
//! exits with its code. Exit codes: 0 success, 1 usage/IO/parse error,
//! 2 mathematically inapplicable input.

use std::path::{Path, PathBuf};

use nekrasov_core::{
    classify, exact_inverse_inf_norm, Error as CoreError, MuGrid, NekrasovBounds, SquareMatrix,
    Verdict,
};
use thiserror::Error;

use crate::format::{read_matrix, ReadError};
use crate::output::{
    render_bounds, render_classify, render_sweep, render_table, OutputFormat, TableColumn,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_INAPPLICABLE: u8 = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub format: OutputFormat,
    pub payload: String,
    /// Diagnostics for standard error.
    pub warnings: Vec<String>,
    pub exit_code: u8,
}

impl OutputRecord {
    fn ok(format: OutputFormat, payload: String) -> Self {
        OutputRecord {
            format,
            payload,
            warnings: Vec::new(),
            exit_code: EXIT_OK,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Read(#[from] ReadError),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: not a Nekrasov matrix: row {row} has |a_{row}{row}| <= h_{row}")]
    NotNekrasov { path: String, row: usize },
    #[error("{path}: {source}")]
    Inapplicable { path: String, source: CoreError },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Read(_) | CliError::Usage(_) => EXIT_USAGE,
            CliError::NotNekrasov { .. } | CliError::Inapplicable { .. } => EXIT_INAPPLICABLE,
        }
    }
}

fn display(path: &Path) -> String {
    path.display().to_string()
}

/// Bounds for a Nekrasov matrix, or the row that breaks the condition.
fn nekrasov_bounds(a: &SquareMatrix, path: &Path) -> Result<(Verdict, NekrasovBounds), CliError> {
    let profile = classify(a);
    if !profile.verdict.is_nekrasov() {
        let row = profile.witness.map_or(1, |w| w + 1);
        return Err(CliError::NotNekrasov {
            path: display(path),
            row,
        });
    }
    let bounds =
        NekrasovBounds::from_profile(&profile).map_err(|source| CliError::Inapplicable {
            path: display(path),
            source,
        })?;
    Ok((profile.verdict, bounds))
}

pub fn cmd_classify(path: &Path, format: OutputFormat) -> Result<OutputRecord, CliError> {
    let a = read_matrix(path)?;
    let profile = classify(&a);
    let mut record = OutputRecord::ok(format, render_classify(&profile, format));
    if !profile.verdict.is_nekrasov() {
        record.exit_code = EXIT_INAPPLICABLE;
    }
    Ok(record)
}

pub fn cmd_bounds(
    path: &Path,
    mu: Option<f64>,
    oracle: bool,
    format: OutputFormat,
) -> Result<OutputRecord, CliError> {
    let a = read_matrix(path)?;
    let (verdict, bounds) = nekrasov_bounds(&a, path)?;
    if let Some(mu) = mu {
        // reject explicitly rather than silently dropping the parametrized rows
        bounds
            .param_ratio(mu)
            .map_err(|source| CliError::Inapplicable {
                path: display(path),
                source,
            })?;
    }
    let report = bounds.report(mu);
    let mut warnings = Vec::new();
    let exact = if oracle {
        let exact = exact_inverse_inf_norm(&a).map_err(|source| CliError::Inapplicable {
            path: display(path),
            source,
        })?;
        if exact.is_near_singular() {
            warnings.push(format!(
                "warning: {}: pivot growth {:e} exceeds {:e}; exact norm may be inaccurate",
                display(path),
                exact.pivot_growth,
                nekrasov_core::NEAR_SINGULAR_GROWTH
            ));
        }
        Some(exact)
    } else {
        None
    };
    let payload = render_bounds(verdict, &report, exact.as_ref(), format);
    Ok(OutputRecord {
        format,
        payload,
        warnings,
        exit_code: EXIT_OK,
    })
}

/// One table column. Bound cells of a non-Nekrasov matrix stay empty.
pub fn table_column(name: &str, a: &SquareMatrix) -> (TableColumn, Vec<String>) {
    let mut warnings = Vec::new();
    let exact = match exact_inverse_inf_norm(a) {
        Ok(e) => {
            if e.is_near_singular() {
                warnings.push(format!(
                    "warning: {name}: pivot growth {:e}; exact norm may be inaccurate",
                    e.pivot_growth
                ));
            }
            Some(e.value)
        }
        Err(e) => {
            warnings.push(format!("warning: {name}: {e}"));
            None
        }
    };
    let profile = classify(a);
    let mut column = TableColumn {
        name: name.to_string(),
        verdict: profile.verdict,
        exact,
        varah: None,
        baseline_ratio: None,
        optimal_ratio: None,
        baseline_diff: None,
        optimal_diff: None,
    };
    if let Ok(b) = NekrasovBounds::from_profile(&profile) {
        column.varah = b.varah();
        column.baseline_ratio = Some(b.baseline_ratio());
        column.baseline_diff = Some(b.baseline_diff());
        column.optimal_ratio = b.optimal_ratio().ok().map(|o| o.value);
        column.optimal_diff = b.optimal_diff().ok().map(|o| o.value);
    }
    (column, warnings)
}

/// Column name: the file stem, or the full path if it has none.
fn column_name(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| display(path), |s| s.to_string_lossy().into_owned())
}

pub fn cmd_table(paths: &[PathBuf], format: OutputFormat) -> Result<OutputRecord, CliError> {
    if paths.is_empty() {
        return Err(CliError::Usage("table needs at least one file".into()));
    }
    let mut columns = Vec::with_capacity(paths.len());
    let mut warnings = Vec::new();
    for path in paths {
        let a = read_matrix(path)?;
        let (column, w) = table_column(&column_name(path), &a);
        columns.push(column);
        warnings.extend(w);
    }
    let payload = render_table(&columns, format);
    Ok(OutputRecord {
        format,
        payload,
        warnings,
        exit_code: EXIT_OK,
    })
}

pub fn cmd_sweep(
    path: &Path,
    mu_min: f64,
    mu_max: f64,
    step: f64,
    format: OutputFormat,
) -> Result<OutputRecord, CliError> {
    let grid = MuGrid::new(mu_min, mu_max, step)
        .map_err(|e| CliError::Usage(format!("invalid grid: {e}")))?;
    let a = read_matrix(path)?;
    let (_, bounds) = nekrasov_bounds(&a, path)?;
    let sweep = bounds
        .sweep(&grid)
        .map_err(|source| CliError::Inapplicable {
            path: display(path),
            source,
        })?;
    Ok(OutputRecord::ok(format, render_sweep(&sweep, format)))
}
