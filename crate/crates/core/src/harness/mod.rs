//! Config-driven experiments: load a JSON config, sweep `(T, scale)` points,
//! certify each one and write the results.

mod config;
mod emit;
mod run;

pub use config::{
    load_config, parse_config, validate, ConfigError, DriverConfig, ErrorModelConfig,
    ExperimentConfig, InitialState, IntegratorConfig, LoadedConfig, MeasurementConfig,
    OutputConfig, OutputFormat, PanelCount, ProblemConfig, ScheduleConfig, SweepConfig,
    SystemConfig, SCHEMA_VERSION,
};
pub use emit::{emit, summary_csv, EmittedFiles, CSV_HEADER, REPORT_FILE, SUMMARY_FILE};
pub use run::{
    point_seed, run, ExperimentReport, GridDiagnostics, HarnessError, Overrides, PointResult,
    RunOverrides, VerdictCounts,
};

/// Environment variable consulted for the output directory when neither the
/// command line nor the config names one.
pub const OUT_DIR_ENV: &str = "ANNEAL_THRESHOLD_OUT_DIR";

/// Output directory used when nothing else is specified.
pub const DEFAULT_OUT_DIR: &str = "anneal-out";
