//! Deterministic CSV/JSON emission: fixed 17-significant-digit float
//! formatting, `\n` line endings, metadata as `#` header lines (CSV) or
//! a `meta` object (JSON), and write-temp-then-rename so output files
//! appear atomically.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use dipolar::sweep::{BoundaryTable, LinearFit, SweepTable, TableMeta};

use crate::CliError;

/// 17 significant digits, enough to round-trip any f64.
pub fn fmt_float(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else {
        format!("{:.16e}", x)
    }
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_float).unwrap_or_default()
}

/// CSV-quote a free-text field (error messages may contain commas).
fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format '{other}', expected csv or json")),
        }
    }
}

fn meta_lines(meta: &TableMeta, out: &mut String) {
    let _ = writeln!(out, "# tool_version: {}", meta.tool_version);
    let _ = writeln!(out, "# grid: {}", meta.grid);
    let _ = writeln!(out, "# method: {}", meta.method);
    let _ = writeln!(
        out,
        "# magnetization_variant: {}",
        meta.magnetization_variant
    );
    let _ = writeln!(out, "# closed_form_note: {}", meta.closed_form_note);
    if let Some(d) = meta.max_concurrence_diff {
        let _ = writeln!(out, "# max_concurrence_diff: {}", fmt_float(d));
    }
    if let Some(d) = meta.max_magnetization_diff {
        let _ = writeln!(out, "# max_magnetization_diff: {}", fmt_float(d));
    }
    let _ = writeln!(out, "# error_rows: {}", meta.error_rows);
}

pub fn sweep_csv(table: &SweepTable) -> String {
    let mut out = String::new();
    meta_lines(&table.meta, &mut out);
    let paired = table.meta.method == "both";
    if paired {
        out.push_str(
            "beta,d,theta,phi,concurrence,magnetization,method,error,\
             concurrence_analytic,magnetization_analytic,concurrence_abs_diff,magnetization_abs_diff\n",
        );
    } else {
        out.push_str("beta,d,theta,phi,concurrence,magnetization,method,error\n");
    }
    for row in &table.rows {
        let _ = write!(
            out,
            "{},{},{},{},{},{},{},{}",
            fmt_float(row.beta),
            fmt_float(row.d),
            fmt_float(row.theta),
            fmt_float(row.phi),
            fmt_opt(row.concurrence),
            fmt_opt(row.magnetization),
            row.method,
            row.error.as_deref().map(quote).unwrap_or_default(),
        );
        if paired {
            let c_diff = match (row.concurrence, row.concurrence_analytic) {
                (Some(a), Some(b)) => Some((a - b).abs()),
                _ => None,
            };
            let m_diff = match (row.magnetization, row.magnetization_analytic) {
                (Some(a), Some(b)) => Some((a - b).abs()),
                _ => None,
            };
            let _ = write!(
                out,
                ",{},{},{},{}",
                fmt_opt(row.concurrence_analytic),
                fmt_opt(row.magnetization_analytic),
                fmt_opt(c_diff),
                fmt_opt(m_diff),
            );
        }
        out.push('\n');
    }
    out
}

pub fn boundary_csv(table: &BoundaryTable) -> String {
    let mut out = String::new();
    meta_lines(&table.meta, &mut out);
    out.push_str("d,beta_c,residual\n");
    for row in &table.rows {
        let _ = writeln!(
            out,
            "{},{},{}",
            fmt_float(row.d),
            fmt_opt(row.beta_c),
            fmt_opt(row.residual),
        );
    }
    out
}

pub fn fit_csv(fit: &LinearFit) -> String {
    let mut out = String::from("a,b,residual_rms,beta_min,beta_max,n_points\n");
    let _ = writeln!(
        out,
        "{},{},{},{},{},{}",
        fmt_float(fit.a),
        fmt_float(fit.b),
        fmt_float(fit.residual_rms),
        fmt_float(fit.beta_min),
        fmt_float(fit.beta_max),
        fit.n_points,
    );
    out
}

pub fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Output(format!("json serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

/// Write through a sibling temp file and rename, so partial output never
/// lands under the final name.
pub fn atomic_write(path: &Path, contents: &str) -> Result<(), CliError> {
    let tmp = path.with_file_name(format!(
        "{}.tmp",
        path.file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_else(|| "out".to_string())
    ));
    fs::write(&tmp, contents)
        .map_err(|e| CliError::Output(format!("cannot write {}: {e}", tmp.display())))?;
    fs::rename(&tmp, path).map_err(|e| {
        CliError::Output(format!(
            "cannot move output into place at {}: {e}",
            path.display()
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting_is_fixed_width_scientific() {
        assert_eq!(fmt_float(1.0), "1.0000000000000000e0");
        assert_eq!(fmt_float(-0.25), "-2.5000000000000000e-1");
        assert_eq!(fmt_float(f64::NAN), "nan");
    }

    #[test]
    fn quoting_escapes_embedded_quotes() {
        assert_eq!(quote("a,b"), "\"a,b\"");
        assert_eq!(quote("say \"hi\""), "\"say \"\"hi\"\"\"");
    }
}
