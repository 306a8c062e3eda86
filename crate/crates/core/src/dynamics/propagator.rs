//! Exponential-midpoint propagation on a uniform grid.
//!
//! One step is `ψ(t + Δt) = exp(−iΔt·H(t + Δt/2))·ψ(t)` with the exponential
//! taken from a Hermitian eigendecomposition, so each step is unitary up to
//! round-off and the scheme is second order in `Δt`.

use nalgebra::DVector;
use num_complex::Complex64;

use super::anneal::AnnealSpec;
use super::error_model::ErrorModel;
use crate::error::{Error, Result};
use crate::operators::{
    distance, spectral_norm, Eigh, HermitianOperator, QuantumState, EVOLVED_NORM_TOLERANCE,
};

/// Lower limit of the default step count.
pub const MIN_DEFAULT_STEPS: usize = 1000;

/// Default steps per unit of `T·max‖H + V‖`.
pub const STEPS_PER_PHASE: f64 = 100.0;

/// Round-off allowance added to the integrator error estimate, per step.
pub const ROUNDOFF_PER_STEP: f64 = 1e-14;

const NORM_SAMPLES: usize = 64;
const ALIGNMENT_TOLERANCE: f64 = 1e-9;

/// States on a uniform grid `0 = t₀ < … < t_K = T`.
#[derive(Debug, Clone)]
pub struct Trajectory {
    grid: Vec<f64>,
    states: Vec<QuantumState>,
}

impl Trajectory {
    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn states(&self) -> &[QuantumState] {
        &self.states
    }

    pub fn step_count(&self) -> usize {
        self.grid.len() - 1
    }

    pub fn total_time(&self) -> f64 {
        self.grid[self.grid.len() - 1]
    }

    pub fn initial_state(&self) -> &QuantumState {
        &self.states[0]
    }

    pub fn final_state(&self) -> &QuantumState {
        &self.states[self.states.len() - 1]
    }
}

pub(crate) fn uniform_grid(total_time: f64, steps: usize) -> Vec<f64> {
    let mut grid: Vec<f64> = (0..=steps)
        .map(|k| total_time * (k as f64) / (steps as f64))
        .collect();
    grid[steps] = total_time;
    grid
}

/// Caches the last eigendecomposition. While the generator stays the same,
/// the state is propagated from where that generator took over by the whole
/// elapsed time, so constant stretches cost one eigensolve and accumulate no
/// per-step round-off.
#[derive(Default)]
struct Stepper {
    cached: Option<Segment>,
}

struct Segment {
    generator: HermitianOperator,
    eig: Eigh,
    anchor: DVector<Complex64>,
    elapsed: f64,
}

impl Stepper {
    fn step(
        &mut self,
        generator: HermitianOperator,
        dt: f64,
        v: &DVector<Complex64>,
    ) -> Result<DVector<Complex64>> {
        if generator.is_zero() {
            self.cached = None;
            return Ok(v.clone());
        }
        match &mut self.cached {
            Some(seg) if seg.generator == generator => {
                seg.elapsed += dt;
                Ok(seg.eig.apply_exp(seg.elapsed, &seg.anchor))
            }
            _ => {
                let eig = generator.eigh()?;
                let next = eig.apply_exp(dt, v);
                self.cached = Some(Segment {
                    generator,
                    eig,
                    anchor: v.clone(),
                    elapsed: dt,
                });
                Ok(next)
            }
        }
    }
}

fn check_args(psi0: &QuantumState, total_time: f64, steps: usize) -> Result<()> {
    if steps == 0 {
        return Err(Error::InvalidArgument("steps must be at least 1".into()));
    }
    if !(total_time.is_finite() && total_time >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "invalid total time {total_time}"
        )));
    }
    if psi0.dim() == 0 {
        return Err(Error::InvalidArgument("empty initial state".into()));
    }
    Ok(())
}

fn check_generator(h: &HermitianOperator, dim: usize) -> Result<()> {
    if h.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            actual: h.dim(),
        });
    }
    Ok(())
}

fn to_state(v: DVector<Complex64>) -> Result<QuantumState> {
    QuantumState::with_tolerance(v, EVOLVED_NORM_TOLERANCE)
}

/// Integrates `i dψ/dt = h(t) ψ` over `[0, T]` in `steps` uniform steps.
pub fn evolve<F>(mut h: F, psi0: &QuantumState, total_time: f64, steps: usize) -> Result<Trajectory>
where
    F: FnMut(f64) -> Result<HermitianOperator>,
{
    check_args(psi0, total_time, steps)?;
    let grid = uniform_grid(total_time, steps);
    let mut states = Vec::with_capacity(steps + 1);
    states.push(psi0.clone());
    let mut stepper = Stepper::default();
    let mut v = psi0.amplitudes().clone();
    for w in grid.windows(2) {
        let gen = h(0.5 * (w[0] + w[1]))?;
        check_generator(&gen, psi0.dim())?;
        v = stepper.step(gen, w[1] - w[0], &v)?;
        states.push(to_state(v.clone())?);
    }
    Ok(Trajectory { grid, states })
}

/// Like [`evolve`] but keeps only the final state.
pub fn evolve_final<F>(
    mut h: F,
    psi0: &QuantumState,
    total_time: f64,
    steps: usize,
) -> Result<QuantumState>
where
    F: FnMut(f64) -> Result<HermitianOperator>,
{
    check_args(psi0, total_time, steps)?;
    let grid = uniform_grid(total_time, steps);
    let mut stepper = Stepper::default();
    let mut v = psi0.amplitudes().clone();
    for w in grid.windows(2) {
        let gen = h(0.5 * (w[0] + w[1]))?;
        check_generator(&gen, psi0.dim())?;
        v = stepper.step(gen, w[1] - w[0], &v)?;
        if v.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite("propagated amplitude".into()));
        }
    }
    to_state(v)
}

/// Ideal and perturbed trajectories on a shared grid.
#[derive(Debug, Clone)]
pub struct EvolvedPair {
    pub ideal: Trajectory,
    pub perturbed: Trajectory,
    /// Estimated `‖ψ_num(T) − ψ(T)‖`.
    pub ideal_error_estimate: f64,
    /// Estimated `‖φ_num(T) − φ(T)‖`.
    pub perturbed_error_estimate: f64,
}

impl EvolvedPair {
    pub fn steps(&self) -> usize {
        self.ideal.step_count()
    }

    /// Combined bound on the numerical error of `‖ψ(T) − φ(T)‖`.
    pub fn integrator_error_estimate(&self) -> f64 {
        self.ideal_error_estimate + self.perturbed_error_estimate
    }
}

fn check_pair_inputs(spec: &AnnealSpec, model: &ErrorModel, steps: usize) -> Result<()> {
    if model.dim() != spec.initial_state().dim() {
        return Err(Error::DimensionMismatch {
            expected: spec.initial_state().dim(),
            actual: model.dim(),
        });
    }
    let (t_spec, t_model) = (spec.total_time(), model.total_time());
    if (t_spec - t_model).abs() > 1e-12 * t_spec.max(1.0) {
        return Err(Error::InvalidArgument(format!(
            "anneal horizon {t_spec} differs from error-model horizon {t_model}"
        )));
    }
    check_alignment(model, steps)
}

/// Envelope discontinuities must fall on grid points.
pub fn check_alignment(model: &ErrorModel, steps: usize) -> Result<()> {
    for &u in model.envelope().discontinuities() {
        if !is_aligned(u, steps) {
            return Err(Error::InvalidArgument(format!(
                "envelope discontinuity at u = {u} does not fall on the {steps}-step grid"
            )));
        }
    }
    Ok(())
}

fn is_aligned(u: f64, steps: usize) -> bool {
    let x = u * steps as f64;
    (x - x.round()).abs() <= ALIGNMENT_TOLERANCE * steps as f64
}

fn run_pair(
    spec: &AnnealSpec,
    model: &ErrorModel,
    steps: usize,
    record: bool,
) -> Result<(Vec<f64>, Vec<QuantumState>, Vec<QuantumState>)> {
    let grid = uniform_grid(spec.total_time(), steps);
    let psi0 = spec.initial_state();
    let capacity = if record { steps + 1 } else { 1 };
    let mut ideal = Vec::with_capacity(capacity);
    let mut perturbed = Vec::with_capacity(capacity);
    ideal.push(psi0.clone());
    perturbed.push(psi0.clone());
    let (mut psi, mut phi) = (psi0.amplitudes().clone(), psi0.amplitudes().clone());
    let (mut ideal_stepper, mut perturbed_stepper) = (Stepper::default(), Stepper::default());
    for w in grid.windows(2) {
        let (mid, dt) = (0.5 * (w[0] + w[1]), w[1] - w[0]);
        let h = spec.hamiltonian_at(mid)?;
        let hv = if model.is_zero() {
            h.clone()
        } else {
            (&h + &model.error_at(mid)?)?
        };
        psi = ideal_stepper.step(h, dt, &psi)?;
        phi = perturbed_stepper.step(hv, dt, &phi)?;
        if record {
            ideal.push(to_state(psi.clone())?);
            perturbed.push(to_state(phi.clone())?);
        }
    }
    if !record {
        ideal = vec![to_state(psi)?];
        perturbed = vec![to_state(phi)?];
    }
    Ok((grid, ideal, perturbed))
}

/// Evolves `ψ` under `H(t)` and `φ` under `H(t) + V(t)` from the same initial
/// state on the same grid.
///
/// The integrator error of each final state is estimated from a companion
/// run at half the step count: for a second-order scheme the difference
/// between the two runs is about three times the error of the finer one.
pub fn evolve_pair(spec: &AnnealSpec, model: &ErrorModel, steps: usize) -> Result<EvolvedPair> {
    if steps == 0 {
        return Err(Error::InvalidArgument("steps must be at least 1".into()));
    }
    check_pair_inputs(spec, model, steps)?;
    let (grid, ideal, perturbed) = run_pair(spec, model, steps, true)?;
    let psi_t = &ideal[steps];
    let phi_t = &perturbed[steps];

    let (ideal_err, perturbed_err) = if steps >= 2 {
        let (_, coarse_psi, coarse_phi) = run_pair(spec, model, steps / 2, false)?;
        (
            distance(psi_t, &coarse_psi[0])?,
            distance(phi_t, &coarse_phi[0])?,
        )
    } else {
        let (_, fine_psi, fine_phi) = run_pair(spec, model, 2, false)?;
        (
            2.0 * distance(psi_t, &fine_psi[0])?,
            2.0 * distance(phi_t, &fine_phi[0])?,
        )
    };
    let roundoff = ROUNDOFF_PER_STEP * steps as f64;
    let (ideal_kinks, perturbed_kinks) = kink_allowance(spec, model, steps)?;
    Ok(EvolvedPair {
        ideal: Trajectory {
            grid: grid.clone(),
            states: ideal,
        },
        perturbed: Trajectory {
            grid,
            states: perturbed,
        },
        ideal_error_estimate: ideal_err + ideal_kinks + roundoff,
        perturbed_error_estimate: perturbed_err + perturbed_kinks + roundoff,
    })
}

/// Extra error allowance for kinks in `H(t)` or `V(t)` that fall inside a step.
///
/// A kink with slope jump `J` inside a step moves the midpoint sample away
/// from the step average by at most `J·Δt/8`, so that step errs by at most
/// `J·Δt²/8`. Such errors do not halve cleanly with the step, which blinds
/// the two-grid comparison: three times the fine-grid allowance covers the
/// worst case where they cancel against the smooth error.
fn kink_allowance(spec: &AnnealSpec, model: &ErrorModel, steps: usize) -> Result<(f64, f64)> {
    let dt = spec.total_time() / steps as f64;
    let per_kink = |jump: f64| 3.0 * jump * dt * dt / 8.0;
    let schedule_jumps = spec.schedule().slope_jumps();
    let schedule = if schedule_jumps.is_empty() {
        0.0
    } else {
        let span = spectral_norm(&spec.problem().combine(1.0, spec.driver(), -1.0)?)?;
        schedule_jumps
            .iter()
            .map(|&(_, j)| per_kink(j * span))
            .sum()
    };
    let envelope: f64 = model
        .envelope()
        .slope_jumps()
        .iter()
        .map(|&(_, j)| per_kink(j / model.total_time() * model.base_norm()))
        .sum();
    Ok((schedule, schedule + envelope))
}

/// `max(1000, ⌈100·T·max_t ‖H(t) + V(t)‖⌉)`, raised if needed so that every
/// envelope discontinuity lands on a grid point.
pub fn default_steps(spec: &AnnealSpec, model: &ErrorModel) -> Result<usize> {
    let total_time = spec.total_time();
    let mut times: Vec<f64> = (0..=NORM_SAMPLES)
        .map(|k| total_time * k as f64 / NORM_SAMPLES as f64)
        .collect();
    times.extend(model.breakpoint_times());
    let mut max_norm = 0.0f64;
    for t in times {
        let t = t.clamp(0.0, total_time);
        let h = spec.hamiltonian_at(t)?;
        let hv = (&h + &model.error_at(t)?)?;
        max_norm = max_norm.max(crate::operators::spectral_norm(&hv)?);
    }
    let base = steps_for_norm(total_time, max_norm);
    align_steps(model, base)
}

pub(crate) fn steps_for_norm(total_time: f64, max_norm: f64) -> usize {
    let scaled = (STEPS_PER_PHASE * total_time * max_norm).ceil();
    if scaled.is_finite() && scaled > MIN_DEFAULT_STEPS as f64 {
        scaled as usize
    } else {
        MIN_DEFAULT_STEPS
    }
}

fn align_steps(model: &ErrorModel, base: usize) -> Result<usize> {
    let breaks = model.envelope().discontinuities();
    if breaks.is_empty() {
        return Ok(base);
    }
    (base..base + 100_000)
        .find(|&n| breaks.iter().all(|&u| is_aligned(u, n)))
        .ok_or_else(|| {
            Error::InvalidArgument(format!(
                "no step count near {base} aligns with envelope discontinuities {breaks:?}"
            ))
        })
}

/// Per-step growth of `‖ψ − φ‖` next to `∫‖V(t)‖dt` over the same step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepIncrement {
    pub t_start: f64,
    pub t_end: f64,
    /// `‖Δ(t_{k+1})‖ − ‖Δ(t_k)‖` with `Δ = ψ − φ`.
    pub growth: f64,
    /// `∫_{t_k}^{t_{k+1}} ‖V(t)‖ dt`, Simpson on each smooth piece of the step.
    pub norm_integral: f64,
    /// Bound on `|Δt·‖V(t_mid)‖ − norm_integral|`, the gap between what one
    /// midpoint step can add to the distance and the exact integral.
    pub midpoint_allowance: f64,
}

/// Stepwise form of `d/dt‖ψ − φ‖ ≤ ‖V(t)‖`.
pub fn distance_increments(pair: &EvolvedPair, model: &ErrorModel) -> Result<Vec<StepIncrement>> {
    let grid = pair.ideal.grid();
    if grid != pair.perturbed.grid() {
        return Err(Error::GridMismatch(
            "ideal and perturbed grids differ".into(),
        ));
    }
    let dist = pair
        .ideal
        .states()
        .iter()
        .zip(pair.perturbed.states())
        .map(|(a, b)| distance(a, b))
        .collect::<Result<Vec<_>>>()?;
    let horizon = model.total_time();
    let scale = model.base_norm();
    let breaks = model.breakpoint_times();
    let kinks: Vec<(f64, f64)> = model
        .envelope()
        .abs_slope_jumps()
        .into_iter()
        .map(|(u, j)| (u * horizon, j * scale / horizon))
        .collect();
    let curvature = model.envelope().curvature_bound() * scale / (horizon * horizon);
    grid.windows(2)
        .zip(dist.windows(2))
        .map(|(t, d)| {
            let dt = t[1] - t[0];
            let mut cuts = vec![t[0]];
            cuts.extend(breaks.iter().copied().filter(|&b| b > t[0] && b < t[1]));
            cuts.push(t[1]);
            let mut norm_integral = 0.0;
            for c in cuts.windows(2) {
                let h = c[1] - c[0];
                // one-sided limits keep jumps out of each piece
                let left = model.norm_at((c[0] + 1e-9 * h).min(c[1]))?;
                let right = model.norm_at((c[1] - 1e-9 * h).max(c[0]))?;
                let centre = model.norm_at(0.5 * (c[0] + c[1]))?;
                norm_integral += h / 6.0 * (left + 4.0 * centre + right);
            }
            let kink: f64 = kinks
                .iter()
                .filter(|&&(k, _)| k > t[0] && k < t[1])
                .map(|&(_, j)| j * dt * dt / 8.0)
                .sum();
            Ok(StepIncrement {
                t_start: t[0],
                t_end: t[1],
                growth: d[1] - d[0],
                norm_integral,
                midpoint_allowance: kink + curvature * dt.powi(3) / 24.0,
            })
        })
        .collect()
}
