//! Rendering of reports as TEXT, JSON and CSV.
//!
//! TEXT rounds every value to 4 decimals; exact binary ties round half to
//! even. JSON and CSV carry full precision (shortest round-trip form).

use std::fmt::Write as _;

use nekrasov_core::{BoundReport, ExactNorm, MuSweep, NekrasovProfile, OptimalMu, Verdict};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Placeholder for a cell whose quantity is undefined for the input.
pub const MISSING: &str = "--";

pub fn fixed4(x: f64) -> String {
    format!("{x:.4}")
}

fn fixed4_or_missing(x: Option<f64>) -> String {
    x.map_or_else(|| MISSING.to_string(), fixed4)
}

fn vector4(v: &[f64]) -> String {
    v.iter().map(|&x| fixed4(x)).collect::<Vec<_>>().join(" ")
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ClassifyView<'a> {
    verdict: Verdict,
    n: usize,
    diag: &'a [f64],
    r: &'a [f64],
    h: Option<&'a [f64]>,
    z: Option<&'a [f64]>,
    h_ratio: Option<&'a [f64]>,
    margin: Option<f64>,
    /// 1-based
    witness_row: Option<usize>,
}

pub fn render_classify(p: &NekrasovProfile, format: OutputFormat) -> String {
    let q = p.quantities.as_ref();
    let view = ClassifyView {
        verdict: p.verdict,
        n: p.n,
        diag: &p.diag,
        r: &p.r,
        h: q.map(|q| q.h.as_slice()),
        z: q.map(|q| q.z.as_slice()),
        h_ratio: q.map(|q| q.h_ratio.as_slice()),
        margin: p.margin(),
        witness_row: p.witness.map(|w| w + 1),
    };
    if format == OutputFormat::Json {
        return to_json(&view);
    }
    let opt_vec = |v: Option<&[f64]>| v.map_or_else(|| MISSING.to_string(), vector4);
    let mut out = String::new();
    let _ = writeln!(out, "verdict: {}", p.verdict.as_str());
    let _ = writeln!(out, "n: {}", p.n);
    let _ = writeln!(out, "|a_ii|: {}", vector4(view.diag));
    let _ = writeln!(out, "r: {}", vector4(view.r));
    let _ = writeln!(out, "h: {}", opt_vec(view.h));
    let _ = writeln!(out, "z: {}", opt_vec(view.z));
    let _ = writeln!(out, "hRatio: {}", opt_vec(view.h_ratio));
    let _ = writeln!(out, "margin: {}", fixed4_or_missing(view.margin));
    if let Some(row) = view.witness_row {
        let _ = writeln!(out, "witness: row {row} (|a_{row}{row}| <= h_{row})");
    }
    out
}

#[derive(Serialize)]
struct ExactView {
    value: f64,
    pivot_growth: f64,
    near_singular: bool,
}

#[derive(Serialize)]
struct BoundsView<'a> {
    verdict: Verdict,
    #[serde(flatten)]
    report: &'a BoundReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<ExactView>,
}

pub fn render_bounds(
    verdict: Verdict,
    report: &BoundReport,
    exact: Option<&ExactNorm>,
    format: OutputFormat,
) -> String {
    if format == OutputFormat::Json {
        let exact = exact.map(|e| ExactView {
            value: e.value,
            pivot_growth: e.pivot_growth,
            near_singular: e.is_near_singular(),
        });
        return to_json(&BoundsView {
            verdict,
            report,
            exact,
        });
    }
    let optimal = |o: Option<OptimalMu>| match o {
        Some(o) => format!(
            "{} @ mu={} ({})",
            fixed4(o.value),
            fixed4(o.mu_star),
            case_name(o)
        ),
        None => format!("{MISSING} (needs n >= 2)"),
    };
    let mut out = String::new();
    let _ = writeln!(out, "verdict: {}", verdict.as_str());
    if let Some(e) = exact {
        let _ = writeln!(out, "exact: {}", fixed4(e.value));
    }
    let _ = writeln!(out, "varah: {}", fixed4_or_missing(report.varah));
    let _ = writeln!(out, "baseline_ratio: {}", fixed4(report.baseline_ratio));
    let _ = writeln!(out, "optimal_ratio: {}", optimal(report.optimal_ratio));
    let _ = writeln!(out, "baseline_diff: {}", fixed4(report.baseline_diff));
    let _ = writeln!(out, "optimal_diff: {}", optimal(report.optimal_diff));
    if let Some(p) = report.param_ratio {
        let _ = writeln!(
            out,
            "param_ratio: {} @ mu={}",
            fixed4(p.value),
            fixed4(p.mu)
        );
    }
    if let Some(p) = report.param_diff {
        let _ = writeln!(out, "param_diff: {} @ mu={}", fixed4(p.value), fixed4(p.mu));
    }
    let _ = writeln!(out, "mu_threshold: {}", fixed4(report.mu_threshold));
    let _ = writeln!(out, "margin: {}", fixed4(report.margin));
    out
}

fn case_name(o: OptimalMu) -> &'static str {
    match o.case {
        nekrasov_core::CaseTag::StrictImprovement => "STRICT_IMPROVEMENT",
        nekrasov_core::CaseTag::EqualsBaseline => "EQUALS_BASELINE",
    }
}

/// One matrix's column of the comparison table; bound cells are `None`
/// when the quantity does not apply.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableColumn {
    pub name: String,
    pub verdict: Verdict,
    pub exact: Option<f64>,
    pub varah: Option<f64>,
    pub baseline_ratio: Option<f64>,
    pub optimal_ratio: Option<f64>,
    pub baseline_diff: Option<f64>,
    pub optimal_diff: Option<f64>,
}

impl TableColumn {
    fn values(&self) -> [Option<f64>; 6] {
        [
            self.exact,
            self.varah,
            self.baseline_ratio,
            self.optimal_ratio,
            self.baseline_diff,
            self.optimal_diff,
        ]
    }
}

/// (JSON/CSV key, TEXT label) for each table row, in display order.
const ROWS: [(&str, &str); 6] = [
    ("exact", "Exact ||A^-1||_inf"),
    ("varah", "Varah"),
    ("baseline_ratio", "Baseline ratio"),
    ("optimal_ratio", "Optimal ratio"),
    ("baseline_diff", "Baseline diff"),
    ("optimal_diff", "Optimal diff"),
];

#[derive(Serialize)]
struct TableRowView {
    row: &'static str,
    values: Vec<Option<f64>>,
}

#[derive(Serialize)]
struct TableView<'a> {
    columns: Vec<&'a str>,
    verdicts: Vec<Verdict>,
    rows: Vec<TableRowView>,
}

pub fn render_table(columns: &[TableColumn], format: OutputFormat) -> String {
    let row_values = |k: usize| columns.iter().map(|c| c.values()[k]).collect::<Vec<_>>();
    match format {
        OutputFormat::Json => to_json(&TableView {
            columns: columns.iter().map(|c| c.name.as_str()).collect(),
            verdicts: columns.iter().map(|c| c.verdict).collect(),
            rows: ROWS
                .iter()
                .enumerate()
                .map(|(k, (key, _))| TableRowView {
                    row: key,
                    values: row_values(k),
                })
                .collect(),
        }),
        OutputFormat::Csv => {
            let mut out = String::from("row");
            for c in columns {
                out.push(',');
                out.push_str(&csv_field(&c.name));
            }
            out.push('\n');
            for (k, (key, _)) in ROWS.iter().enumerate() {
                out.push_str(key);
                for v in row_values(k) {
                    out.push(',');
                    match v {
                        Some(v) => {
                            let _ = write!(out, "{v}");
                        }
                        None => out.push_str(MISSING),
                    }
                }
                out.push('\n');
            }
            out
        }
        OutputFormat::Text => {
            let mut grid: Vec<Vec<String>> = vec![std::iter::once("Matrix".to_string())
                .chain(columns.iter().map(|c| c.name.clone()))
                .collect()];
            for (k, (_, label)) in ROWS.iter().enumerate() {
                grid.push(
                    std::iter::once(label.to_string())
                        .chain(row_values(k).into_iter().map(fixed4_or_missing))
                        .collect(),
                );
            }
            let widths: Vec<usize> = (0..grid[0].len())
                .map(|j| {
                    grid.iter()
                        .map(|row| row[j].chars().count())
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let mut out = String::new();
            for row in &grid {
                let mut line = format!("{:<w$}", row[0], w = widths[0]);
                for (cell, w) in row.iter().zip(&widths).skip(1) {
                    let _ = write!(line, "  {cell:>w$}");
                }
                out.push_str(line.trim_end());
                out.push('\n');
            }
            out
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub const SWEEP_HEADER: &str = "mu,bound_ratio,bound_diff,baseline_ratio,baseline_diff";

pub fn render_sweep(sweep: &MuSweep, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(sweep),
        OutputFormat::Csv => {
            let mut out = format!("{SWEEP_HEADER}\n");
            for r in &sweep.rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.mu, r.bound_ratio, r.bound_diff, sweep.baseline_ratio, sweep.baseline_diff
                );
            }
            out
        }
        OutputFormat::Text => {
            let mut out =
                String::from("mu  bound_ratio  bound_diff  baseline_ratio  baseline_diff\n");
            for r in &sweep.rows {
                let _ = writeln!(
                    out,
                    "{}  {}  {}  {}  {}",
                    fixed4(r.mu),
                    fixed4(r.bound_ratio),
                    fixed4(r.bound_diff),
                    fixed4(sweep.baseline_ratio),
                    fixed4(sweep.baseline_diff)
                );
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_is_half_even_on_exact_ties() {
        assert_eq!(fixed4(0.03125), "0.0312");
        assert_eq!(fixed4(0.09375), "0.0938");
        assert_eq!(fixed4(1.0), "1.0000");
        assert_eq!(fixed4(0.38047), "0.3805");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a2"), "a2");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
    }

    #[test]
    fn table_text_marks_missing_cells() {
        let col = TableColumn {
            name: "m".into(),
            verdict: Verdict::NekrasovNotSdd,
            exact: Some(1.0),
            varah: None,
            baseline_ratio: Some(2.0),
            optimal_ratio: Some(1.5),
            baseline_diff: Some(3.0),
            optimal_diff: Some(3.0),
        };
        let text = render_table(&[col], OutputFormat::Text);
        let varah = text.lines().find(|l| l.starts_with("Varah")).unwrap();
        assert!(varah.ends_with(" --"), "{varah}");
        let csv = render_table(&[], OutputFormat::Csv);
        assert!(csv.starts_with("row\nexact\n"));
    }
}
