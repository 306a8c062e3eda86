use std::fs;
use std::path::{Path, PathBuf};

use super::config::OutputFormat;
use super::run::{ExperimentReport, HarnessError};

pub const SUMMARY_FILE: &str = "summary.csv";
pub const REPORT_FILE: &str = "report.json";

pub const CSV_HEADER: [&str; 19] = [
    "point",
    "T",
    "error_scale",
    "steps",
    "v",
    "distance",
    "bound",
    "overlap",
    "overlap_lower",
    "epsilon",
    "m",
    "amplitude",
    "amplitude_lower",
    "pointwise_threshold",
    "budget_threshold",
    "condition_ok",
    "integrator_error",
    "quadrature_error",
    "verdict",
];

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EmittedFiles {
    pub summary: Option<PathBuf>,
    pub report: Option<PathBuf>,
}

/// One row per sweep point. Floats use the shortest round-trip representation.
pub fn summary_csv(report: &ExperimentReport) -> Result<String, HarnessError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| HarnessError::Output {
        path: SUMMARY_FILE.into(),
        message: e.to_string(),
    };
    w.write_record(CSV_HEADER).map_err(fail)?;
    for p in &report.points {
        let b = &p.bounds;
        let row = [
            p.index.to_string(),
            p.total_time.to_string(),
            p.error_scale.to_string(),
            p.steps.to_string(),
            b.v.to_string(),
            b.distance_measured.to_string(),
            b.distance_bound.to_string(),
            b.overlap_measured.to_string(),
            b.overlap_lower.to_string(),
            b.epsilon.to_string(),
            b.m.to_string(),
            b.amplitude_measured.to_string(),
            b.amplitude_lower.map(|x| x.to_string()).unwrap_or_default(),
            b.threshold.pointwise.to_string(),
            b.threshold.budget.to_string(),
            b.condition_ok.to_string(),
            b.integrator_error_estimate.to_string(),
            b.quadrature_error_estimate.to_string(),
            b.verdict.as_str().to_string(),
        ];
        w.write_record(&row).map_err(fail)?;
    }
    let bytes = w.into_inner().map_err(|e| HarnessError::Output {
        path: SUMMARY_FILE.into(),
        message: e.to_string(),
    })?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// Writes `summary.csv` and/or `report.json` into `dir`, creating it if needed.
pub fn emit(
    report: &ExperimentReport,
    dir: &Path,
    format: OutputFormat,
) -> Result<EmittedFiles, HarnessError> {
    let io_err = |path: &Path, e: std::io::Error| HarnessError::Output {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    let mut out = EmittedFiles::default();
    if format.csv() {
        let path = dir.join(SUMMARY_FILE);
        fs::write(&path, summary_csv(report)?).map_err(|e| io_err(&path, e))?;
        out.summary = Some(path);
    }
    if format.report() {
        let path = dir.join(REPORT_FILE);
        let mut json = serde_json::to_string_pretty(report).map_err(|e| HarnessError::Output {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        json.push('\n');
        fs::write(&path, json).map_err(|e| io_err(&path, e))?;
        out.report = Some(path);
    }
    Ok(out)
}
