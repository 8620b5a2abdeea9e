//! Record types and CSV/JSON serialization for the sweep and chsh commands.
//!
//! CSV uses '.' decimals, LF line endings and UTF-8 regardless of locale;
//! floats are printed with Rust's shortest round-trip formatting, so output
//! is byte-stable across runs.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::Path;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodTag {
    Closed,
    Oracle,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRecord {
    pub x: f64,
    pub alpha: f64,
    pub theta: f64,
    pub theta_tilde: f64,
    pub value: f64,
    pub method: MethodTag,
    pub residual: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChshRecord {
    pub x: f64,
    pub left_side: f64,
    pub violated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

fn method_label(tag: MethodTag) -> &'static str {
    match tag {
        MethodTag::Closed => "closed",
        MethodTag::Oracle => "oracle",
    }
}

pub fn render_sweep(records: &[SweepRecord], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut out = String::from("x,alpha,theta,theta_tilde,value,method,residual\n");
            for r in records {
                let residual = r.residual.map(|v| v.to_string()).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.x,
                    r.alpha,
                    r.theta,
                    r.theta_tilde,
                    r.value,
                    method_label(r.method),
                    residual
                );
            }
            out
        }
        OutputFormat::Json => {
            let mut out = serde_json::to_string_pretty(records).expect("serializable records");
            out.push('\n');
            out
        }
    }
}

pub fn render_chsh(records: &[ChshRecord], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut out = String::from("x,left_side,violated\n");
            for r in records {
                let _ = writeln!(out, "{},{},{}", r.x, r.left_side, r.violated);
            }
            out
        }
        OutputFormat::Json => {
            let mut out = serde_json::to_string_pretty(records).expect("serializable records");
            out.push('\n');
            out
        }
    }
}

/// Writes to the path when given, otherwise to stdout.
pub fn emit(path: Option<&Path>, content: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, content),
        None => io::stdout().write_all(content.as_bytes()),
    }
}

/// Inclusive linear grid with `steps >= 1` points.
pub fn linspace(min: f64, max: f64, steps: usize) -> Vec<f64> {
    if steps <= 1 {
        return vec![min];
    }
    (0..steps)
        .map(|i| min + (max - min) * (i as f64) / ((steps - 1) as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_has_header_and_lf_endings() {
        let records = vec![SweepRecord {
            x: 0.5,
            alpha: std::f64::consts::PI,
            theta: 0.0,
            theta_tilde: 0.25,
            value: -0.125,
            method: MethodTag::Closed,
            residual: None,
        }];
        let text = render_sweep(&records, OutputFormat::Csv);
        assert!(text.starts_with("x,alpha,theta,theta_tilde,value,method,residual\n"));
        assert!(!text.contains('\r'));
        assert!(text.lines().count() == 2);
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn json_round_trips() {
        let records = vec![ChshRecord {
            x: 0.049,
            left_side: 2.0,
            violated: false,
        }];
        let text = render_chsh(&records, OutputFormat::Json);
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed[0]["x"], 0.049);
        assert_eq!(parsed[0]["violated"], false);
    }

    #[test]
    fn linspace_endpoints() {
        let grid = linspace(0.0, 10.0, 101);
        assert_eq!(grid.len(), 101);
        assert_eq!(grid[0], 0.0);
        assert_eq!(grid[100], 10.0);
        assert_eq!(linspace(1.0, 2.0, 2), vec![1.0, 2.0]);
    }
}
