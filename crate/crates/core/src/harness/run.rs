use std::time::Instant;

use serde::Serialize;

use super::config::{ConfigError, ExperimentConfig, LoadedConfig};
use crate::bounds::{certify, error_budget, BoundReport, BudgetMethod, Verdict};
use crate::dynamics::{default_steps, evolve_pair};
use crate::error::Error;
use crate::measurement::{
    epsilon_for, expected_repetitions, repetitions_to_first_hit, sample_for_target, target_index,
    RepetitionStats, SampleRecord,
};

/// Command-line overrides applied on top of the config.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOverrides {
    pub steps: Option<usize>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HarnessError {
    #[error(transparent)]
    Config(#[from] ConfigError),

    #[error("sweep point {index} (T = {total_time}, error_scale = {error_scale}): {source}")]
    Point {
        index: usize,
        total_time: f64,
        error_scale: f64,
        source: Error,
    },

    #[error("cannot write {path}: {message}")]
    Output { path: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointResult {
    pub index: usize,
    pub total_time: f64,
    pub error_scale: f64,
    pub steps: usize,
    pub budget_method: BudgetMethod,
    pub panels: usize,
    pub bounds: BoundReport,
    pub sample_seed: u64,
    pub samples: SampleRecord,
    /// Observed frequency of the target over `samples`.
    pub target_frequency: f64,
    /// `1/amplitude_lower²` when the amplitude bound applies.
    pub repetition_bound: Option<f64>,
    pub repetitions: Option<RepetitionStats>,
    pub grid: GridDiagnostics,
    /// Not part of the tabular summary, which must be reproducible.
    pub wall_clock_seconds: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridDiagnostics {
    pub steps: usize,
    pub dt: f64,
    /// Largest `| ‖state‖ − 1 |` over both trajectories.
    pub max_norm_deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub defaults_applied: Vec<String>,
    pub overrides: Overrides,
    pub points: Vec<PointResult>,
    pub verdict_counts: VerdictCounts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Overrides {
    pub steps: Option<usize>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct VerdictCounts {
    pub verified: usize,
    pub inconclusive: usize,
    pub fail: usize,
    pub condition_violated: usize,
}

impl ExperimentReport {
    pub fn has_failures(&self) -> bool {
        self.verdict_counts.fail > 0
    }
}

/// Runs every sweep point in `(T, scale)` order.
pub fn run(
    loaded: &LoadedConfig,
    overrides: RunOverrides,
) -> Result<ExperimentReport, HarnessError> {
    let config = &loaded.config;
    let base_seed = overrides.seed.unwrap_or(config.measurement.seed);
    let steps_override = overrides.steps.or(config.integrator.steps);
    if steps_override == Some(0) {
        return Err(ConfigError::Semantic {
            path: "integrator.steps".into(),
            message: "must be at least 1".into(),
        }
        .into());
    }

    let mut points = Vec::new();
    let mut counts = VerdictCounts::default();
    for t in config.horizons() {
        for scale in config.scales() {
            let index = points.len();
            let wrap = |source: Error| HarnessError::Point {
                index,
                total_time: t,
                error_scale: scale,
                source,
            };
            let effective_scale = if config.sweep.hold_budget {
                scale * config.schedule.total_time / t
            } else {
                scale
            };
            let spec = config.anneal_spec(t).map_err(wrap)?;
            let model = config.error_model(&spec, effective_scale).map_err(wrap)?;
            let steps = match steps_override {
                Some(n) => {
                    config.check_steps(&model, n)?;
                    n
                }
                None => default_steps(&spec, &model).map_err(wrap)?,
            };
            let point = run_point(config, base_seed, index, t, scale, steps, &spec, &model)
                .map_err(wrap)?;
            match point.bounds.verdict {
                Verdict::Verified => counts.verified += 1,
                Verdict::Inconclusive => counts.inconclusive += 1,
                Verdict::Fail => counts.fail += 1,
                Verdict::ConditionViolated => counts.condition_violated += 1,
            }
            points.push(point);
        }
    }

    Ok(ExperimentReport {
        config: config.clone(),
        defaults_applied: loaded.defaults_applied.clone(),
        overrides: Overrides {
            steps: overrides.steps,
            seed: overrides.seed,
        },
        points,
        verdict_counts: counts,
    })
}

/// Seed for a sweep point, derived from its coordinates rather than its
/// position so that a point gives the same samples inside or outside a sweep.
/// The repetition trials use the next seed.
pub fn point_seed(base_seed: u64, total_time: f64, error_scale: f64) -> u64 {
    let mut z =
        base_seed ^ total_time.to_bits().rotate_left(21) ^ error_scale.to_bits().rotate_left(42);
    // splitmix64 finalizer
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[allow(clippy::too_many_arguments)]
fn run_point(
    config: &ExperimentConfig,
    base_seed: u64,
    index: usize,
    total_time: f64,
    error_scale: f64,
    steps: usize,
    spec: &crate::dynamics::AnnealSpec,
    model: &crate::dynamics::ErrorModel,
) -> Result<PointResult, Error> {
    let started = Instant::now();
    let pair = evolve_pair(spec, model, steps)?;
    let max_norm_deviation = pair
        .ideal
        .states()
        .iter()
        .chain(pair.perturbed.states())
        .map(|s| (s.norm() - 1.0).abs())
        .fold(0.0, f64::max);
    let panels = config.integrator.panels.get();
    let budget = error_budget(model, total_time, panels)?;

    let ideal = pair.ideal.final_state();
    let (m, measured_eps) = match config.measurement.target {
        Some(m) => (m, epsilon_for(ideal, m)),
        None => target_index(ideal),
    };
    let epsilon = config.measurement.epsilon.unwrap_or(measured_eps);
    let bounds = certify(&pair, &budget, epsilon, m)?;

    let sample_seed = point_seed(base_seed, total_time, error_scale);
    let phi = pair.perturbed.final_state();
    let samples = sample_for_target(phi, config.measurement.shots, sample_seed, Some(m))?;
    let target_frequency = samples.frequency(m);

    let repetition_bound = match bounds.amplitude_lower {
        Some(lower) if lower > 0.0 => Some(expected_repetitions(lower * lower)?),
        _ => None,
    };
    let repetitions = if config.measurement.trials > 0 {
        Some(repetitions_to_first_hit(
            phi,
            m,
            config.measurement.trials,
            sample_seed.wrapping_add(1),
        )?)
    } else {
        None
    };

    Ok(PointResult {
        index,
        total_time,
        error_scale,
        steps,
        budget_method: budget.method,
        panels,
        bounds,
        sample_seed,
        samples,
        target_frequency,
        repetition_bound,
        repetitions,
        grid: GridDiagnostics {
            steps,
            dt: total_time / steps as f64,
            max_norm_deviation,
        },
        wall_clock_seconds: started.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::parse_config;

    const CONFIG: &str = r#"{
        "schema_version": 1,
        "system": {"n_qubits": 2, "problem": {"fields": [0.5, -0.3], "couplings": [{"i": 0, "j": 1, "value": 0.7}]}},
        "schedule": {"total_time": 4.0},
        "error_model": {"family": {"kind": "static_field_bias", "axis": "x", "strengths": [0.05, 0.02]}},
        "measurement": {"shots": 200, "seed": 11, "trials": 50},
        "sweep": {"total_time": [4.0, 2.0], "error_scale": [1.0, 0.5], "hold_budget": true}
    }"#;

    #[test]
    fn sweep_order_and_verdicts() {
        let loaded = parse_config(CONFIG).unwrap();
        let report = run(&loaded, RunOverrides::default()).unwrap();
        let coords: Vec<_> = report
            .points
            .iter()
            .map(|p| (p.total_time, p.error_scale))
            .collect();
        assert_eq!(coords, vec![(2.0, 0.5), (2.0, 1.0), (4.0, 0.5), (4.0, 1.0)]);
        assert!(!report.has_failures());
        // hold_budget keeps v fixed across horizons
        assert_close!(report.points[1].bounds.v, report.points[3].bounds.v, 1e-12);
        assert_close!(report.points[3].bounds.v, 4.0 * 0.07, 1e-12);
        for p in &report.points {
            assert!(p.repetitions.is_some());
            assert_eq!(p.samples.shots, 200);
        }
    }

    #[test]
    fn commuting_config_is_nearly_tight() {
        let loaded = parse_config(
            r#"{"schema_version": 1,
                "system": {"n_qubits": 1, "driver": {"kind": "transverse_field", "strength": 0.0},
                           "initial_state": {"basis": 0}},
                "schedule": {"total_time": 1.0},
                "error_model": {"family": {"kind": "static_field_bias", "axis": "z", "strengths": [0.2]}}}"#,
        )
        .unwrap();
        let report = run(&loaded, RunOverrides::default()).unwrap();
        let b = &report.points[0].bounds;
        assert_eq!(b.verdict, Verdict::Verified);
        assert_close!(b.distance_measured / b.v, (0.1f64).sin() / 0.1, 1e-10);
        assert_close!(b.distance_measured / b.v, 0.9983, 1e-4);
    }

    #[test]
    fn zero_error_is_verified_with_zero_distance() {
        let loaded = parse_config(
            r#"{"schema_version": 1,
                "system": {"n_qubits": 2, "problem": {"fields": [0.3, 0.1], "couplings": [{"i": 0, "j": 1, "value": -1}]}},
                "schedule": {"total_time": 3.0}}"#,
        )
        .unwrap();
        let report = run(&loaded, RunOverrides::default()).unwrap();
        let p = &report.points[0];
        assert_eq!(p.bounds.verdict, Verdict::Verified);
        assert_eq!(p.bounds.distance_measured, 0.0);
        assert!(p.grid.max_norm_deviation < 1e-9);
    }

    #[test]
    fn overrides_apply() {
        let loaded = parse_config(CONFIG).unwrap();
        let report = run(
            &loaded,
            RunOverrides {
                steps: Some(400),
                seed: Some(3),
            },
        )
        .unwrap();
        assert!(report.points.iter().all(|p| p.steps == 400));
        assert_eq!(report.points[0].sample_seed, point_seed(3, 2.0, 0.5));
        assert_ne!(report.points[0].sample_seed, report.points[1].sample_seed);
    }
}
