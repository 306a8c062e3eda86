//! Computational-basis readout: target identification, seeded sampling and
//! the repetition-count check.

use std::collections::BTreeMap;

use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{amplitude_lower_bound, error_budget, DEFAULT_PANELS};
use crate::dynamics::{default_steps, evolve_pair, AnnealSpec, ErrorModel};
use crate::error::{Error, Result};
use crate::operators::QuantumState;

/// Recorded in every [`SampleRecord`] so runs can be reproduced elsewhere.
pub const RNG_ALGORITHM: &str =
    "ChaCha8Rng (rand_chacha 0.3, seed_from_u64) + WeightedIndex<f64> (rand 0.8)";

/// Upper limit on draws in a single repetition trial.
pub const MAX_REPETITIONS_PER_TRIAL: u64 = 10_000_000;

/// `|C_n|²` over the computational basis, with the amplitudes kept.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisDistribution {
    probabilities: Vec<f64>,
    state: QuantumState,
}

impl BasisDistribution {
    pub fn new(state: &QuantumState) -> Result<Self> {
        let probabilities = state.probabilities();
        let total: f64 = probabilities.iter().sum();
        if (total - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized { norm: total.sqrt() });
        }
        Ok(Self {
            probabilities,
            state: state.clone(),
        })
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn amplitude(&self, n: usize) -> num_complex::Complex64 {
        self.state.amplitude(n)
    }
}

/// `m = argmax |C_n|²` (lowest index on ties) and `ε = √(1 − |C_m|²)`.
pub fn target_index(error_free: &QuantumState) -> (usize, f64) {
    let probs = error_free.probabilities();
    let mut m = 0;
    for (n, &p) in probs.iter().enumerate() {
        if p > probs[m] {
            m = n;
        }
    }
    (m, epsilon_for(error_free, m))
}

/// `ε = √(1 − |C_m|²)` for an explicitly chosen target.
pub fn epsilon_for(error_free: &QuantumState, m: usize) -> f64 {
    let p = error_free.amplitude(m).norm_sqr();
    (1.0 - p).max(0.0).sqrt()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleRecord {
    pub seed: u64,
    pub shots: u64,
    /// Basis index → occurrences; only observed indices appear.
    pub counts: BTreeMap<usize, u64>,
    pub target: Option<usize>,
    /// Zero-based shot index at which `target` first appeared.
    pub first_hit: Option<u64>,
    pub rng: &'static str,
}

impl SampleRecord {
    pub fn count(&self, n: usize) -> u64 {
        self.counts.get(&n).copied().unwrap_or(0)
    }

    pub fn frequency(&self, n: usize) -> f64 {
        self.count(n) as f64 / self.shots as f64
    }
}

fn sampler(state: &QuantumState) -> Result<WeightedIndex<f64>> {
    WeightedIndex::new(state.probabilities())
        .map_err(|e| Error::InvalidArgument(format!("cannot sample from state: {e}")))
}

/// Draws `shots` i.i.d. basis indices from `|amplitudes|²`.
pub fn sample(state: &QuantumState, shots: u64, seed: u64) -> Result<SampleRecord> {
    sample_for_target(state, shots, seed, None)
}

/// [`sample`], also recording the first occurrence of `target`.
pub fn sample_for_target(
    state: &QuantumState,
    shots: u64,
    seed: u64,
    target: Option<usize>,
) -> Result<SampleRecord> {
    if shots == 0 {
        return Err(Error::InvalidArgument("shots must be at least 1".into()));
    }
    let dist = sampler(state)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = BTreeMap::new();
    let mut first_hit = None;
    for shot in 0..shots {
        let n = dist.sample(&mut rng);
        *counts.entry(n).or_insert(0) += 1;
        if first_hit.is_none() && Some(n) == target {
            first_hit = Some(shot);
        }
    }
    Ok(SampleRecord {
        seed,
        shots,
        counts,
        target,
        first_hit,
        rng: RNG_ALGORITHM,
    })
}

/// `1/p`: the expected number of measurements until the first success when
/// each succeeds with probability at least `p`.
pub fn expected_repetitions(p_lower: f64) -> Result<f64> {
    if !(p_lower > 0.0 && p_lower <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "success probability must lie in (0, 1], got {p_lower}"
        )));
    }
    Ok(1.0 / p_lower)
}

/// Empirical distribution of the number of measurements to first observe `m`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RepetitionStats {
    pub trials: u64,
    pub mean: f64,
    /// Sample standard deviation of the repetition count.
    pub std_dev: f64,
    pub max: u64,
    /// Trials that hit [`MAX_REPETITIONS_PER_TRIAL`] without success.
    pub censored: u64,
}

/// Repeats "measure until `m` shows up" `trials` times from one seeded stream.
pub fn repetitions_to_first_hit(
    state: &QuantumState,
    m: usize,
    trials: u64,
    seed: u64,
) -> Result<RepetitionStats> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if m >= state.dim() {
        return Err(Error::InvalidArgument(format!("target {m} out of range")));
    }
    let dist = sampler(state)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = Vec::with_capacity(trials as usize);
    let mut censored = 0;
    for _ in 0..trials {
        let mut k = 0u64;
        loop {
            k += 1;
            if dist.sample(&mut rng) == m {
                break;
            }
            if k == MAX_REPETITIONS_PER_TRIAL {
                censored += 1;
                break;
            }
        }
        counts.push(k as f64);
    }
    let n = counts.len() as f64;
    let mean = counts.iter().sum::<f64>() / n;
    let var = if counts.len() > 1 {
        counts.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / (n - 1.0)
    } else {
        0.0
    };
    Ok(RepetitionStats {
        trials,
        mean,
        std_dev: var.sqrt(),
        max: counts.iter().fold(0.0f64, |a, &b| a.max(b)) as u64,
        censored,
    })
}

/// How the error strength follows `T` across a constant-order sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StrengthScaling {
    /// The model is used unchanged (envelope shape in `t/T`, fixed amplitude).
    Fixed,
    /// Envelope multiplied by `reference_time / T`, which keeps `v` fixed.
    InverseTime { reference_time: f64 },
}

/// One `T` of [`verify_constant_order`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstantOrderRow {
    pub total_time: f64,
    pub v: f64,
    pub m: usize,
    pub epsilon: f64,
    /// `|D_m|²`.
    pub success_probability: f64,
    pub amplitude_lower: Option<f64>,
    /// `1 / amplitude_lower²`.
    pub repetition_bound: Option<f64>,
    pub empirical_mean: f64,
    /// `3σ` of the empirical mean under the bounding success probability.
    pub tolerance: Option<f64>,
    pub within_bound: bool,
    /// Set when the amplitude condition fails at this `T`.
    pub condition_error: Option<String>,
}

/// Checks that the expected repetitions to observe the target stay below the
/// `T`-independent bound `1/amplitude_lower²` for every horizon in `times`.
#[allow(clippy::too_many_arguments)]
pub fn verify_constant_order(
    spec: &AnnealSpec,
    model: &ErrorModel,
    times: &[f64],
    scaling: StrengthScaling,
    trials: u64,
    seed: u64,
    steps: Option<usize>,
) -> Result<Vec<ConstantOrderRow>> {
    times
        .iter()
        .map(|&t| {
            let spec_t = spec.with_total_time(t)?;
            let model_t = match scaling {
                StrengthScaling::Fixed => model.with_total_time(t)?,
                StrengthScaling::InverseTime { reference_time } => {
                    model.with_total_time(t)?.scaled(reference_time / t)
                }
            };
            let n_steps = match steps {
                Some(n) => n,
                None => default_steps(&spec_t, &model_t)?,
            };
            let pair = evolve_pair(&spec_t, &model_t, n_steps)?;
            let budget = error_budget(&model_t, t, DEFAULT_PANELS)?;
            let (m, epsilon) = target_index(pair.ideal.final_state());
            let phi = pair.perturbed.final_state();
            let success_probability = phi.amplitude(m).norm_sqr();
            let stats = repetitions_to_first_hit(phi, m, trials, seed)?;
            let row = match amplitude_lower_bound(budget.v, epsilon) {
                Ok(lower) => {
                    let p = lower * lower;
                    let bound = expected_repetitions(p)?;
                    let sigma = (1.0 - p).sqrt() / p / (trials as f64).sqrt();
                    let tolerance = 3.0 * sigma;
                    ConstantOrderRow {
                        total_time: t,
                        v: budget.v,
                        m,
                        epsilon,
                        success_probability,
                        amplitude_lower: Some(lower),
                        repetition_bound: Some(bound),
                        empirical_mean: stats.mean,
                        tolerance: Some(tolerance),
                        within_bound: stats.mean <= bound + tolerance,
                        condition_error: None,
                    }
                }
                Err(e @ Error::ConditionViolated { .. }) => ConstantOrderRow {
                    total_time: t,
                    v: budget.v,
                    m,
                    epsilon,
                    success_probability,
                    amplitude_lower: None,
                    repetition_bound: None,
                    empirical_mean: stats.mean,
                    tolerance: None,
                    within_bound: false,
                    condition_error: Some(e.to_string()),
                },
                Err(e) => return Err(e),
            };
            Ok(row)
        })
        .collect()
}
