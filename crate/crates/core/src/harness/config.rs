//! Experiment configuration: a versioned JSON document, strictly validated.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bounds::DEFAULT_PANELS;
use crate::dynamics::{
    check_alignment, ising_operator, transverse_field, AnnealSpec, Coupling, Envelope, ErrorKind,
    ErrorModel, Schedule, ScheduleKind,
};
use crate::error::Error;
use crate::operators::{pauli_sum, PauliTerm, QuantumState, DEFAULT_MAX_QUBITS};

pub const SCHEMA_VERSION: u32 = 1;

/// Distinct, machine-readable configuration failures.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("invalid value at {path}: {message}")]
    Semantic { path: String, message: String },
}

impl ConfigError {
    /// Stable identifier for the error class.
    pub fn code(&self) -> &'static str {
        match self {
            ConfigError::Io { .. } => "io",
            ConfigError::Parse { .. } => "parse",
            ConfigError::Schema { .. } => "schema",
            ConfigError::Semantic { .. } => "semantic",
        }
    }

    /// Field path for schema and semantic errors.
    pub fn path(&self) -> Option<&str> {
        match self {
            ConfigError::Schema { path, .. } | ConfigError::Semantic { path, .. } => Some(path),
            _ => None,
        }
    }

    /// Description without the field path.
    pub fn message(&self) -> &str {
        match self {
            ConfigError::Io { message, .. }
            | ConfigError::Parse { message, .. }
            | ConfigError::Schema { message, .. }
            | ConfigError::Semantic { message, .. } => message,
        }
    }

    fn semantic(path: impl Into<String>, message: impl fmt::Display) -> Self {
        ConfigError::Semantic {
            path: path.into(),
            message: message.to_string(),
        }
    }
}

/// Composite-Simpson panel count: even and at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct PanelCount(usize);

impl PanelCount {
    pub fn get(self) -> usize {
        self.0
    }
}

impl TryFrom<usize> for PanelCount {
    type Error = String;

    fn try_from(n: usize) -> Result<Self, String> {
        if n >= 2 && n.is_multiple_of(2) {
            Ok(PanelCount(n))
        } else {
            Err(format!(
                "Simpson panel count must be even and at least 2, got {n}"
            ))
        }
    }
}

impl From<PanelCount> for usize {
    fn from(p: PanelCount) -> usize {
        p.0
    }
}

impl Default for PanelCount {
    fn default() -> Self {
        PanelCount(DEFAULT_PANELS)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub schema_version: u32,
    pub system: SystemConfig,
    pub schedule: ScheduleConfig,
    #[serde(default)]
    pub error_model: ErrorModelConfig,
    #[serde(default)]
    pub integrator: IntegratorConfig,
    #[serde(default)]
    pub measurement: MeasurementConfig,
    #[serde(default)]
    pub sweep: SweepConfig,
    #[serde(default)]
    pub output: OutputConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemConfig {
    pub n_qubits: usize,
    #[serde(default)]
    pub problem: ProblemConfig,
    #[serde(default)]
    pub driver: DriverConfig,
    #[serde(default)]
    pub initial_state: InitialState,
}

/// Ising problem `Σ hᵢZᵢ + Σ Jᵢⱼ ZᵢZⱼ`; missing fields are zero.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemConfig {
    #[serde(default)]
    pub fields: Vec<f64>,
    #[serde(default)]
    pub couplings: Vec<Coupling>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DriverConfig {
    /// `-strength · Σ Xᵢ`.
    TransverseField {
        strength: f64,
    },
    PauliTerms {
        terms: Vec<PauliTerm>,
    },
}

impl Default for DriverConfig {
    fn default() -> Self {
        DriverConfig::TransverseField { strength: 1.0 }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum InitialState {
    #[default]
    Uniform,
    Basis(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleConfig {
    pub total_time: f64,
    #[serde(default = "linear")]
    pub shape: ScheduleKind,
}

fn linear() -> ScheduleKind {
    ScheduleKind::Linear
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorModelConfig {
    #[serde(default = "no_error")]
    pub family: ErrorKind,
    #[serde(default)]
    pub envelope: Envelope,
}

fn no_error() -> ErrorKind {
    ErrorKind::None
}

impl Default for ErrorModelConfig {
    fn default() -> Self {
        Self {
            family: ErrorKind::None,
            envelope: Envelope::default(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntegratorConfig {
    /// `None` selects the default step count for each sweep point.
    #[serde(default)]
    pub steps: Option<usize>,
    #[serde(default)]
    pub panels: PanelCount,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasurementConfig {
    #[serde(default = "default_shots")]
    pub shots: u64,
    #[serde(default)]
    pub seed: u64,
    /// Overrides the argmax target.
    #[serde(default)]
    pub target: Option<usize>,
    /// Overrides the measured `ε`.
    #[serde(default)]
    pub epsilon: Option<f64>,
    /// Repetition-to-first-hit trials per point; 0 disables them.
    #[serde(default)]
    pub trials: u64,
}

fn default_shots() -> u64 {
    1000
}

impl Default for MeasurementConfig {
    fn default() -> Self {
        Self {
            shots: default_shots(),
            seed: 0,
            target: None,
            epsilon: None,
            trials: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    /// Horizons to run; empty means just `schedule.total_time`.
    #[serde(default)]
    pub total_time: Vec<f64>,
    /// Multipliers on the error envelope.
    #[serde(default = "unit_scale")]
    pub error_scale: Vec<f64>,
    /// Scale the error by `schedule.total_time / T` so every horizon has the same budget.
    #[serde(default)]
    pub hold_budget: bool,
}

fn unit_scale() -> Vec<f64> {
    vec![1.0]
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            total_time: Vec::new(),
            error_scale: unit_scale(),
            hold_budget: false,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Csv,
    Report,
    #[default]
    Both,
}

impl OutputFormat {
    pub fn csv(self) -> bool {
        matches!(self, OutputFormat::Csv | OutputFormat::Both)
    }

    pub fn report(self) -> bool {
        matches!(self, OutputFormat::Report | OutputFormat::Both)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default)]
    pub dir: Option<String>,
    #[serde(default)]
    pub format: OutputFormat,
}

/// Config as loaded, with the list of fields that fell back to defaults.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LoadedConfig {
    pub config: ExperimentConfig,
    pub defaults_applied: Vec<String>,
}

const DEFAULTABLE: &[&str] = &[
    "/system/problem",
    "/system/problem/fields",
    "/system/problem/couplings",
    "/system/driver",
    "/system/initial_state",
    "/schedule/shape",
    "/error_model",
    "/error_model/family",
    "/error_model/envelope",
    "/integrator",
    "/integrator/steps",
    "/integrator/panels",
    "/measurement",
    "/measurement/shots",
    "/measurement/seed",
    "/measurement/target",
    "/measurement/epsilon",
    "/measurement/trials",
    "/sweep",
    "/sweep/total_time",
    "/sweep/error_scale",
    "/sweep/hold_budget",
    "/output",
    "/output/dir",
    "/output/format",
];

/// Reads, parses and validates a config file.
pub fn load_config(path: impl AsRef<Path>) -> Result<LoadedConfig, ConfigError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_config(&text)
}

/// Parses and validates config text.
pub fn parse_config(text: &str) -> Result<LoadedConfig, ConfigError> {
    let value: Value = serde_json::from_str(text).map_err(|e| ConfigError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let config: ExperimentConfig =
        serde_path_to_error::deserialize(&value).map_err(|e| ConfigError::Schema {
            path: dotted(&e.path().to_string()),
            message: e.inner().to_string(),
        })?;
    if config.schema_version != SCHEMA_VERSION {
        return Err(ConfigError::Schema {
            path: "schema_version".into(),
            message: format!(
                "unsupported schema version {}, expected {SCHEMA_VERSION}",
                config.schema_version
            ),
        });
    }
    validate(&config)?;
    // A parent object that is absent implies all of its fields are defaulted;
    // only report the outermost one.
    let mut defaults_applied: Vec<String> = Vec::new();
    for p in DEFAULTABLE {
        if value.pointer(p).is_none()
            && !defaults_applied
                .iter()
                .any(|d| p.starts_with(&format!("{}/", pointer_of(d))))
        {
            defaults_applied.push(dotted(p.trim_start_matches('/').replace('/', ".").as_str()));
        }
    }
    Ok(LoadedConfig {
        config,
        defaults_applied,
    })
}

fn pointer_of(dotted: &str) -> String {
    format!("/{}", dotted.replace('.', "/"))
}

fn dotted(path: &str) -> String {
    if path.is_empty() || path == "." {
        "(root)".into()
    } else {
        path.to_string()
    }
}

fn finite_positive(x: f64) -> bool {
    x.is_finite() && x > 0.0
}

/// Semantic checks that the schema cannot express.
pub fn validate(config: &ExperimentConfig) -> Result<(), ConfigError> {
    let n = config.system.n_qubits;
    if n == 0 || n > DEFAULT_MAX_QUBITS {
        return Err(ConfigError::semantic(
            "system.n_qubits",
            format!("must be between 1 and {DEFAULT_MAX_QUBITS}, got {n}"),
        ));
    }
    let problem = &config.system.problem;
    if problem.fields.len() > n {
        return Err(ConfigError::semantic(
            "system.problem.fields",
            format!("{} fields for {n} qubits", problem.fields.len()),
        ));
    }
    if let Some((k, _)) = problem
        .fields
        .iter()
        .enumerate()
        .find(|(_, h)| !h.is_finite())
    {
        return Err(ConfigError::semantic(
            format!("system.problem.fields[{k}]"),
            "not finite",
        ));
    }
    check_couplings(&problem.couplings, n, "system.problem.couplings")?;
    match &config.system.driver {
        DriverConfig::TransverseField { strength } if !strength.is_finite() => {
            return Err(ConfigError::semantic(
                "system.driver.strength",
                "not finite",
            ));
        }
        DriverConfig::PauliTerms { terms } => check_terms(terms, n, "system.driver.terms")?,
        _ => {}
    }
    if let InitialState::Basis(k) = config.system.initial_state {
        if k >= 1 << n {
            return Err(ConfigError::semantic(
                "system.initial_state.basis",
                format!("index {k} out of range for {n} qubits"),
            ));
        }
    }

    let t_ref = config.schedule.total_time;
    if !finite_positive(t_ref) {
        return Err(ConfigError::semantic(
            "schedule.total_time",
            format!("must be positive, got {t_ref}"),
        ));
    }
    Schedule::new(config.schedule.shape.clone(), t_ref)
        .map_err(|e| ConfigError::semantic("schedule.shape", e))?;

    match &config.error_model.family {
        ErrorKind::StaticFieldBias { strengths, .. } => {
            if strengths.len() != n {
                return Err(ConfigError::semantic(
                    "error_model.family.strengths",
                    format!("expected {n} strengths, got {}", strengths.len()),
                ));
            }
            if strengths.iter().any(|s| !s.is_finite()) {
                return Err(ConfigError::semantic(
                    "error_model.family.strengths",
                    "not finite",
                ));
            }
        }
        ErrorKind::CouplingDeviation { couplings } => {
            check_couplings(couplings, n, "error_model.family.couplings")?
        }
        ErrorKind::CustomTerms { terms } => check_terms(terms, n, "error_model.family.terms")?,
        ErrorKind::None | ErrorKind::SchedulePerturbation => {}
    }
    config
        .error_model
        .envelope
        .validate()
        .map_err(|e| ConfigError::semantic("error_model.envelope", e))?;

    if let Some(steps) = config.integrator.steps {
        if steps == 0 {
            return Err(ConfigError::semantic(
                "integrator.steps",
                "must be at least 1",
            ));
        }
        for &u in config.error_model.envelope.discontinuities() {
            let x = u * steps as f64;
            if (x - x.round()).abs() > 1e-9 * steps as f64 {
                return Err(ConfigError::semantic(
                    "integrator.steps",
                    format!("{steps} steps do not place a grid point at envelope break u = {u}"),
                ));
            }
        }
    }

    let m = &config.measurement;
    if m.shots == 0 {
        return Err(ConfigError::semantic(
            "measurement.shots",
            "must be at least 1",
        ));
    }
    if let Some(target) = m.target {
        if target >= 1 << n {
            return Err(ConfigError::semantic(
                "measurement.target",
                format!("index {target} out of range for {n} qubits"),
            ));
        }
    }
    if let Some(eps) = m.epsilon {
        if !(0.0..1.0).contains(&eps) {
            return Err(ConfigError::semantic(
                "measurement.epsilon",
                format!("must lie in [0, 1), got {eps}"),
            ));
        }
    }

    for (k, &t) in config.sweep.total_time.iter().enumerate() {
        if !finite_positive(t) {
            return Err(ConfigError::semantic(
                format!("sweep.total_time[{k}]"),
                format!("must be positive, got {t}"),
            ));
        }
    }
    if config.sweep.error_scale.is_empty() {
        return Err(ConfigError::semantic(
            "sweep.error_scale",
            "needs at least one entry",
        ));
    }
    for (k, &s) in config.sweep.error_scale.iter().enumerate() {
        if !(s.is_finite() && s >= 0.0) {
            return Err(ConfigError::semantic(
                format!("sweep.error_scale[{k}]"),
                format!("must be finite and non-negative, got {s}"),
            ));
        }
    }
    Ok(())
}

fn check_couplings(couplings: &[Coupling], n: usize, path: &str) -> Result<(), ConfigError> {
    for (k, c) in couplings.iter().enumerate() {
        for (name, q) in [("i", c.i), ("j", c.j)] {
            if q >= n {
                return Err(ConfigError::semantic(
                    format!("{path}[{k}].{name}"),
                    format!("qubit {q} out of range for {n} qubits"),
                ));
            }
        }
        if c.i == c.j {
            return Err(ConfigError::semantic(
                format!("{path}[{k}]"),
                "coupling needs two distinct qubits",
            ));
        }
        if !c.value.is_finite() {
            return Err(ConfigError::semantic(
                format!("{path}[{k}].value"),
                "not finite",
            ));
        }
    }
    Ok(())
}

fn check_terms(terms: &[PauliTerm], n: usize, path: &str) -> Result<(), ConfigError> {
    for (k, t) in terms.iter().enumerate() {
        if t.word.len() != n {
            return Err(ConfigError::semantic(
                format!("{path}[{k}].word"),
                format!(
                    "word {:?} has length {}, expected {n}",
                    t.word_string(),
                    t.word.len()
                ),
            ));
        }
    }
    Ok(())
}

impl ExperimentConfig {
    /// Sweep horizons in ascending order.
    pub fn horizons(&self) -> Vec<f64> {
        let mut times = if self.sweep.total_time.is_empty() {
            vec![self.schedule.total_time]
        } else {
            self.sweep.total_time.clone()
        };
        times.sort_by(f64::total_cmp);
        times.dedup();
        times
    }

    /// Error scales in ascending order.
    pub fn scales(&self) -> Vec<f64> {
        let mut scales = self.sweep.error_scale.clone();
        scales.sort_by(f64::total_cmp);
        scales.dedup();
        scales
    }

    /// Anneal spec at the given horizon.
    pub fn anneal_spec(&self, total_time: f64) -> Result<AnnealSpec, Error> {
        let n = self.system.n_qubits;
        let driver = match &self.system.driver {
            DriverConfig::TransverseField { strength } => transverse_field(n, *strength)?,
            DriverConfig::PauliTerms { terms } => pauli_sum(terms, n)?,
        };
        let problem = ising_operator(
            &self.system.problem.fields,
            &self.system.problem.couplings,
            n,
        )?;
        let initial = match self.system.initial_state {
            InitialState::Uniform => QuantumState::uniform(n),
            InitialState::Basis(k) => QuantumState::basis(n, k)?,
        };
        AnnealSpec::new(
            driver,
            problem,
            Schedule::new(self.schedule.shape.clone(), total_time)?,
            initial,
        )
    }

    /// Error model at the given horizon with the envelope multiplied by `scale`.
    pub fn error_model(&self, spec: &AnnealSpec, scale: f64) -> Result<ErrorModel, Error> {
        let model = ErrorModel::new(
            self.error_model.family.clone(),
            self.error_model.envelope.clone(),
            spec.problem(),
            self.system.n_qubits,
            spec.total_time(),
        )?;
        Ok(model.scaled(scale))
    }

    /// Checks an explicit step count against the envelope breaks.
    pub fn check_steps(&self, model: &ErrorModel, steps: usize) -> Result<(), ConfigError> {
        check_alignment(model, steps).map_err(|e| ConfigError::semantic("integrator.steps", e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{
        "schema_version": 1,
        "system": {"n_qubits": 1, "problem": {"fields": [0.5]}},
        "schedule": {"total_time": 2.0}
    }"#;

    #[test]
    fn minimal_config_gets_defaults() {
        let loaded = parse_config(MINIMAL).unwrap();
        let c = &loaded.config;
        assert_eq!(c.error_model.family, ErrorKind::None);
        assert_eq!(c.integrator.panels.get(), DEFAULT_PANELS);
        assert_eq!(c.measurement.shots, 1000);
        assert_eq!(c.horizons(), vec![2.0]);
        assert!(loaded.defaults_applied.contains(&"integrator".to_string()));
        assert!(loaded
            .defaults_applied
            .contains(&"system.driver".to_string()));
        assert!(loaded
            .defaults_applied
            .contains(&"schedule.shape".to_string()));
        // children of an absent parent are not listed separately
        assert!(!loaded
            .defaults_applied
            .contains(&"integrator.steps".to_string()));
        assert!(!loaded
            .defaults_applied
            .contains(&"system.problem".to_string()));
    }

    #[test]
    fn coupling_out_of_range_is_semantic() {
        let text = r#"{
            "schema_version": 1,
            "system": {"n_qubits": 2, "problem": {"couplings": [{"i": 0, "j": 5, "value": 1.0}]}},
            "schedule": {"total_time": 1.0}
        }"#;
        let err = parse_config(text).unwrap_err();
        assert_eq!(err.code(), "semantic");
        assert_eq!(err.path(), Some("system.problem.couplings[0].j"));
    }

    #[test]
    fn odd_panels_is_schema_violation() {
        let text = r#"{
            "schema_version": 1,
            "system": {"n_qubits": 1},
            "schedule": {"total_time": 1.0},
            "integrator": {"panels": 7}
        }"#;
        let err = parse_config(text).unwrap_err();
        assert_eq!(err.code(), "schema");
        assert_eq!(err.path(), Some("integrator.panels"));
    }

    #[test]
    fn syntax_error_reports_position() {
        let err = parse_config("{\n  \"schema_version\": 1,\n  oops\n}").unwrap_err();
        match err {
            ConfigError::Parse { line, column, .. } => {
                assert_eq!(line, 3);
                assert!(column > 0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_field_and_version_are_schema_errors() {
        let text = MINIMAL.replace("\"schedule\"", "\"schedul\"");
        assert_eq!(parse_config(&text).unwrap_err().code(), "schema");
        let text = MINIMAL.replace("\"schema_version\": 1", "\"schema_version\": 2");
        let err = parse_config(&text).unwrap_err();
        assert_eq!(err.path(), Some("schema_version"));
    }

    #[test]
    fn semantic_checks() {
        let with = |patch: &str| {
            let mut v: Value = serde_json::from_str(MINIMAL).unwrap();
            let p: Value = serde_json::from_str(patch).unwrap();
            for (k, val) in p.as_object().unwrap() {
                v[k] = val.clone();
            }
            parse_config(&v.to_string())
        };
        let err = with(r#"{"measurement": {"shots": 0}}"#).unwrap_err();
        assert_eq!(err.path(), Some("measurement.shots"));
        let err = with(r#"{"error_model": {"family": {"kind": "static_field_bias", "axis": "x", "strengths": [0.1, 0.2]}}}"#)
            .unwrap_err();
        assert_eq!(err.path(), Some("error_model.family.strengths"));
        let err = with(r#"{"schedule": {"total_time": -1}}"#).unwrap_err();
        assert_eq!(err.path(), Some("schedule.total_time"));
        let err = with(
            r#"{"error_model": {"envelope": {"kind": "step", "breaks": [0.3], "values": [1, 0]}},
                "integrator": {"steps": 15}}"#,
        )
        .unwrap_err();
        assert_eq!(err.path(), Some("integrator.steps"));
        assert!(with(
            r#"{"error_model": {"envelope": {"kind": "step", "breaks": [0.3], "values": [1, 0]}},
                "integrator": {"steps": 20}}"#,
        )
        .is_ok());
        let err = with(r#"{"sweep": {"total_time": [1, 0]}}"#).unwrap_err();
        assert_eq!(err.path(), Some("sweep.total_time[1]"));
        let err = with(r#"{"system": {"n_qubits": 13}}"#).unwrap_err();
        assert_eq!(err.path(), Some("system.n_qubits"));
    }

    #[test]
    fn builds_spec_and_model() {
        let text = r#"{
            "schema_version": 1,
            "system": {"n_qubits": 2, "problem": {"fields": [0.2, -0.1], "couplings": [{"i": 0, "j": 1, "value": 0.5}]},
                       "initial_state": {"basis": 1}},
            "schedule": {"total_time": 3.0, "shape": {"kind": "polynomial", "power": 2}},
            "error_model": {"family": {"kind": "custom_terms", "terms": [{"coefficient": 0.1, "word": "XY"}]},
                            "envelope": {"kind": "half_sine", "amplitude": 1.0}}
        }"#;
        let c = parse_config(text).unwrap().config;
        let spec = c.anneal_spec(5.0).unwrap();
        assert_eq!(spec.total_time(), 5.0);
        assert_eq!(spec.initial_state(), &QuantumState::basis(2, 1).unwrap());
        let model = c.error_model(&spec, 2.0).unwrap();
        assert!((model.sup_norm() - 0.2).abs() < 1e-14);
    }
}
