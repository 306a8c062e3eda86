//! Error budget and the certificates derived from it.
//!
//! With `v = ∫₀ᵀ ‖V(t)‖ dt`:
//!
//! - distance: `‖ψ(T) − φ(T)‖ ≤ v`, informative only while `v < 2`;
//! - overlap: `Re⟨ψ(T)|φ(T)⟩ ≥ 1 − v²/2`;
//! - amplitude: if `1 − v²/2 > ε` with `|C_m|² = 1 − ε²`, then
//!   `|D_m| ≥ (1 − v²/2 − ε)/√(1 − ε²)`;
//! - thresholds: `sup‖V‖ < √2/T` (pointwise) and `v < √(2(1 − ε))` (budget).

use std::f64::consts::SQRT_2;

use serde::Serialize;

use crate::dynamics::{ErrorModel, EvolvedPair};
use crate::error::{Error, Result};
use crate::operators::{distance, overlap};

/// Default composite-Simpson panel count for the budget integral.
pub const DEFAULT_PANELS: usize = 512;

/// Slack under which an inequality counts as holding outright (round-off only).
pub const HOLD_TOLERANCE: f64 = 1e-12;

/// Tolerance on the Cauchy–Schwarz chain `|⟨ψ|φ⟩| ≤ √(1−ε²)|D_m| + ε`.
pub const CHAIN_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BudgetMethod {
    Analytic,
    Simpson,
}

/// `v = ∫ ‖V(t)‖ dt` with its quadrature error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ErrorBudget {
    pub v: f64,
    /// `max_t ‖V(t)‖`.
    pub sup_norm: f64,
    pub quadrature_error_estimate: f64,
    pub panels: usize,
    pub method: BudgetMethod,
}

/// `v` over the model's whole horizon `[0, T]`.
pub fn error_budget(model: &ErrorModel, total_time: f64, panels: usize) -> Result<ErrorBudget> {
    let horizon = model.total_time();
    if (horizon - total_time).abs() > 1e-12 * horizon.max(1.0) {
        return Err(Error::InvalidArgument(format!(
            "budget horizon {total_time} differs from error-model horizon {horizon}"
        )));
    }
    error_budget_between(model, 0.0, horizon, panels)
}

/// `∫_a^b ‖V(t)‖ dt` for `0 ≤ a ≤ b ≤ T`.
pub fn error_budget_between(
    model: &ErrorModel,
    a: f64,
    b: f64,
    panels: usize,
) -> Result<ErrorBudget> {
    if panels < 2 || !panels.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "Simpson panel count must be even and at least 2, got {panels}"
        )));
    }
    let horizon = model.total_time();
    if !(0.0 <= a && a <= b && b <= horizon) {
        return Err(Error::InvalidArgument(format!(
            "integration range [{a}, {b}] not inside [0, {horizon}]"
        )));
    }
    let sup_norm = model.sup_norm();
    if b == a || model.is_zero() {
        return Ok(ErrorBudget {
            v: 0.0,
            sup_norm,
            quadrature_error_estimate: 0.0,
            panels,
            method: BudgetMethod::Analytic,
        });
    }

    if let Some(integral) = model
        .envelope()
        .integral_abs_exact(a / horizon, b / horizon)
    {
        return Ok(ErrorBudget {
            v: integral * horizon * model.base_norm(),
            sup_norm,
            quadrature_error_estimate: 0.0,
            panels,
            method: BudgetMethod::Analytic,
        });
    }

    // Integrate piece by piece between envelope breakpoints so that kinks and
    // jumps sit on panel boundaries.
    let mut cuts = vec![a];
    cuts.extend(
        model
            .breakpoint_times()
            .into_iter()
            .filter(|&t| t > a && t < b),
    );
    cuts.push(b);
    let span = b - a;
    let mut v = 0.0;
    let mut err = 0.0;
    for w in cuts.windows(2) {
        let share = (panels as f64 * (w[1] - w[0]) / span).round() as usize;
        let n = (share + share % 2).max(2);
        let (s, e) = simpson_with_estimate(|t| model.norm_at(t), w[0], w[1], n)?;
        v += s;
        err += e;
    }
    Ok(ErrorBudget {
        v,
        sup_norm,
        quadrature_error_estimate: err,
        panels,
        method: BudgetMethod::Simpson,
    })
}

/// Composite Simpson on `n` panels plus a Richardson estimate of its error
/// from the `n/2`-panel rule (or the `2n`-panel rule when `n/2` is odd).
fn simpson_with_estimate<F>(f: F, a: f64, b: f64, n: usize) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let finer = !n.is_multiple_of(4);
    let fine_n = if finer { 2 * n } else { n };
    // Endpoints are pulled inside by a hair to take one-sided limits at jumps.
    let eta = 1e-12 * (b - a);
    let h = (b - a) / fine_n as f64;
    let samples = (0..=fine_n)
        .map(|k| {
            let t = match k {
                0 => a + eta,
                k if k == fine_n => b - eta,
                k => a + h * k as f64,
            };
            let y = f(t)?;
            if !y.is_finite() {
                return Err(Error::NonFinite(format!("‖V(t)‖ at t = {t}")));
            }
            Ok(y)
        })
        .collect::<Result<Vec<_>>>()?;
    let rule = |stride: usize| {
        let m = fine_n / stride;
        let hs = h * stride as f64;
        let mut acc = samples[0] + samples[fine_n];
        for k in 1..m {
            acc += if k % 2 == 1 { 4.0 } else { 2.0 } * samples[k * stride];
        }
        acc * hs / 3.0
    };
    let s_fine = rule(1);
    let s_coarse = rule(2);
    let diff = (s_fine - s_coarse).abs() / 15.0;
    if finer {
        // report the n-panel value; its error is about 16x that of the 2n rule
        Ok((s_coarse, 16.0 * diff))
    } else {
        Ok((s_fine, diff))
    }
}

/// Distance certificate `‖ψ(T) − φ(T)‖ ≤ v`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DistanceBound {
    pub bound: f64,
    /// `v < 2`; otherwise the bound says nothing since distances never exceed 2.
    pub meaningful: bool,
}

fn check_v(v: f64) -> Result<()> {
    if !(v.is_finite() && v >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "error budget must be finite and ≥ 0, got {v}"
        )));
    }
    Ok(())
}

pub fn distance_bound(v: f64) -> Result<DistanceBound> {
    check_v(v)?;
    Ok(DistanceBound {
        bound: v,
        meaningful: v < 2.0,
    })
}

/// `1 − v²/2`; negative values are returned as-is.
pub fn overlap_lower_bound(v: f64) -> Result<f64> {
    check_v(v)?;
    Ok(1.0 - 0.5 * v * v)
}

/// `(1 − v²/2 − ε)/√(1 − ε²)`, refusing when `1 − v²/2 ≤ ε`.
pub fn amplitude_lower_bound(v: f64, epsilon: f64) -> Result<f64> {
    check_v(v)?;
    check_epsilon(epsilon)?;
    let margin = 1.0 - 0.5 * v * v - epsilon;
    if margin <= 0.0 {
        return Err(Error::ConditionViolated { v, epsilon });
    }
    Ok(margin / (1.0 - epsilon * epsilon).sqrt())
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if !(0.0..1.0).contains(&epsilon) {
        return Err(Error::InvalidArgument(format!(
            "epsilon must lie in [0, 1), got {epsilon}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ThresholdFlags {
    /// `sup_t ‖V(t)‖ < √2/T`.
    pub pointwise: bool,
    /// `v < √(2(1 − ε))`.
    pub budget: bool,
}

/// Both threshold flags from precomputed `sup‖V‖` and `v`.
pub fn threshold_flags(
    sup_norm: f64,
    v: f64,
    total_time: f64,
    epsilon: f64,
) -> Result<ThresholdFlags> {
    if !(total_time.is_finite() && total_time > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "T must be positive, got {total_time}"
        )));
    }
    check_v(v)?;
    check_epsilon(epsilon)?;
    Ok(ThresholdFlags {
        pointwise: sup_norm < SQRT_2 / total_time,
        budget: v < (2.0 * (1.0 - epsilon)).sqrt(),
    })
}

pub fn threshold_check(
    model: &ErrorModel,
    total_time: f64,
    epsilon: f64,
) -> Result<ThresholdFlags> {
    let budget = error_budget(model, total_time, DEFAULT_PANELS)?;
    threshold_flags(budget.sup_norm, budget.v, total_time, epsilon)
}

/// Outcome of one inequality check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Holds,
    /// Violated, but by less than the numerical-error envelope.
    WithinEnvelope,
    Violated,
    NotApplicable,
}

impl CheckStatus {
    /// `lhs ≤ rhs` with round-off slack and a numerical envelope.
    fn of(lhs: f64, rhs: f64, envelope: f64) -> Self {
        if lhs <= rhs + HOLD_TOLERANCE {
            CheckStatus::Holds
        } else if lhs <= rhs + HOLD_TOLERANCE + envelope {
            CheckStatus::WithinEnvelope
        } else {
            CheckStatus::Violated
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Verified,
    Inconclusive,
    Fail,
    ConditionViolated,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Verified => "VERIFIED",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::Fail => "FAIL",
            Verdict::ConditionViolated => "CONDITION_VIOLATED",
        }
    }
}

/// Measured quantities next to every bound for one ideal/perturbed pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub total_time: f64,
    pub v: f64,
    pub sup_norm: f64,
    pub distance_measured: f64,
    pub distance_bound: f64,
    pub distance_meaningful: bool,
    /// `Re⟨ψ(T)|φ(T)⟩`.
    pub overlap_measured: f64,
    /// `|⟨ψ(T)|φ(T)⟩|`, for reference only.
    pub overlap_abs: f64,
    pub overlap_lower: f64,
    pub epsilon: f64,
    pub m: usize,
    /// `|D_m|`.
    pub amplitude_measured: f64,
    pub amplitude_lower: Option<f64>,
    pub threshold: ThresholdFlags,
    /// `1 − v²/2 > ε`.
    pub condition_ok: bool,
    pub integrator_error_estimate: f64,
    pub quadrature_error_estimate: f64,
    pub distance_check: CheckStatus,
    pub overlap_check: CheckStatus,
    pub amplitude_check: CheckStatus,
    /// `|⟨ψ|φ⟩| ≤ √(1−ε²)|D_m| + ε` within [`CHAIN_TOLERANCE`].
    pub chain_ok: bool,
    pub verdict: Verdict,
}

impl BoundReport {
    pub fn threshold_ok(&self) -> bool {
        self.threshold.pointwise
    }
}

/// Compares the final states of `pair` against every bound implied by `budget`.
///
/// `m` and `epsilon` identify the target basis state and the ideal state's
/// leakage from it (`|C_m|² = 1 − ε²`).
pub fn certify(
    pair: &EvolvedPair,
    budget: &ErrorBudget,
    epsilon: f64,
    m: usize,
) -> Result<BoundReport> {
    let (ideal, perturbed) = (&pair.ideal, &pair.perturbed);
    if ideal.grid() != perturbed.grid() {
        return Err(Error::GridMismatch(format!(
            "ideal grid has {} steps, perturbed grid has {}",
            ideal.step_count(),
            perturbed.step_count()
        )));
    }
    let (psi, phi) = (ideal.final_state(), perturbed.final_state());
    if m >= phi.dim() {
        return Err(Error::InvalidArgument(format!(
            "target index {m} out of range for dimension {}",
            phi.dim()
        )));
    }
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::InvalidArgument(format!(
            "epsilon must lie in [0, 1], got {epsilon}"
        )));
    }
    let v = budget.v;
    let total_time = ideal.total_time();
    let d = distance(psi, phi)?;
    let ov = overlap(psi, phi)?;
    let amp = phi.amplitude(m).norm();

    let integ = pair.integrator_error_estimate();
    let quad = budget.quadrature_error_estimate;
    // A numerical error of δ in the measured distance acts like a budget of v + δ.
    let slack = integ + quad;
    let v_eff = v + slack;

    let dist = distance_bound(v)?;
    let distance_check = CheckStatus::of(d, v, slack);

    let overlap_lower = overlap_lower_bound(v)?;
    let overlap_check = if v < SQRT_2 {
        CheckStatus::of(-ov.re, -overlap_lower, 0.5 * (v_eff * v_eff - v * v))
    } else {
        CheckStatus::NotApplicable
    };

    let condition_ok = epsilon < 1.0 && 1.0 - 0.5 * v * v > epsilon;
    let amplitude_lower = if condition_ok {
        Some(amplitude_lower_bound(v, epsilon)?)
    } else {
        None
    };
    let amplitude_check = match amplitude_lower {
        Some(lower) => {
            let env = 0.5 * (v_eff * v_eff - v * v) / (1.0 - epsilon * epsilon).sqrt();
            CheckStatus::of(-amp, -lower, env)
        }
        None => CheckStatus::NotApplicable,
    };

    let chain_ok = ov.norm() <= (1.0 - epsilon * epsilon).sqrt() * amp + epsilon + CHAIN_TOLERANCE;

    let threshold = threshold_flags(
        budget.sup_norm,
        v,
        total_time,
        epsilon.min(1.0 - f64::EPSILON),
    )?;

    let checks = [distance_check, overlap_check, amplitude_check];
    let verdict = if !chain_ok || checks.contains(&CheckStatus::Violated) {
        Verdict::Fail
    } else if checks.contains(&CheckStatus::WithinEnvelope) {
        Verdict::Inconclusive
    } else if !condition_ok {
        Verdict::ConditionViolated
    } else {
        Verdict::Verified
    };

    Ok(BoundReport {
        total_time,
        v,
        sup_norm: budget.sup_norm,
        distance_measured: d,
        distance_bound: dist.bound,
        distance_meaningful: dist.meaningful,
        overlap_measured: ov.re,
        overlap_abs: ov.norm(),
        overlap_lower,
        epsilon,
        m,
        amplitude_measured: amp,
        amplitude_lower,
        threshold,
        condition_ok,
        integrator_error_estimate: integ,
        quadrature_error_estimate: quad,
        distance_check,
        overlap_check,
        amplitude_check,
        chain_ok,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{evolve_pair, AnnealSpec, Envelope, ErrorKind};
    use crate::operators::{pauli_string, HermitianOperator, Pauli, PauliTerm, QuantumState};

    fn op(coef: f64, word: &str) -> HermitianOperator {
        pauli_string(&PauliTerm::parse(coef, word).unwrap(), word.len()).unwrap()
    }

    fn bias(envelope: Envelope, total_time: f64) -> ErrorModel {
        ErrorModel::new(
            ErrorKind::StaticFieldBias {
                axis: Pauli::X,
                strengths: vec![1.0],
            },
            envelope,
            &op(1.0, "Z"),
            1,
            total_time,
        )
        .unwrap()
    }

    #[test]
    fn constant_norm_budget_is_exact() {
        let m = bias(Envelope::Constant { value: 0.3 }, 4.0);
        let b = error_budget(&m, 4.0, 64).unwrap();
        assert_eq!(b.method, BudgetMethod::Analytic);
        assert_close!(b.v, 1.2, 1e-15);
        assert_eq!(b.quadrature_error_estimate, 0.0);
    }

    #[test]
    fn triangle_budget() {
        let (delta, t) = (0.6, 5.0);
        let m = bias(
            Envelope::Linear {
                start: delta,
                end: 0.0,
            },
            t,
        );
        assert_close!(error_budget(&m, t, 2).unwrap().v, delta * t / 2.0, 1e-14);
    }

    #[test]
    fn half_sine_budget_via_simpson() {
        let (a, t) = (0.25, 3.0);
        let model = ErrorModel::new(
            ErrorKind::StaticFieldBias {
                axis: Pauli::Z,
                strengths: vec![1.0],
            },
            Envelope::HalfSine { amplitude: a },
            &op(1.0, "Z"),
            1,
            t,
        )
        .unwrap();
        let b = error_budget(&model, t, 128).unwrap();
        let exact = 2.0 * a * t / std::f64::consts::PI;
        assert_eq!(b.method, BudgetMethod::Simpson);
        assert!((b.v - exact).abs() <= 2.0 * b.quadrature_error_estimate.max(1e-15));
        assert!(b.quadrature_error_estimate < 1e-7);
        assert!(b.v <= b.sup_norm * t + b.quadrature_error_estimate);
    }

    #[test]
    fn piecewise_budget_splits_at_knots() {
        let m = bias(
            Envelope::PiecewiseLinear {
                knots: vec![(0.0, 0.0), (0.5, 1.0), (1.0, 0.0)],
            },
            2.0,
        );
        let b = error_budget(&m, 2.0, 16).unwrap();
        assert_close!(b.v, 1.0, 1e-13);
        let step = bias(
            Envelope::Step {
                breaks: vec![0.25],
                values: vec![2.0, -1.0],
            },
            4.0,
        );
        assert_close!(error_budget(&step, 4.0, 16).unwrap().v, 2.0 + 3.0, 1e-10);
    }

    #[test]
    fn budget_rejects_odd_panels() {
        let m = bias(Envelope::HalfSine { amplitude: 1.0 }, 1.0);
        assert!(error_budget(&m, 1.0, 7).is_err());
        assert!(error_budget(&m, 1.0, 0).is_err());
        assert!(error_budget(&m, 2.0, 8).is_err());
    }

    #[test]
    fn distance_bound_examples() {
        assert_eq!(
            distance_bound(0.0).unwrap(),
            DistanceBound {
                bound: 0.0,
                meaningful: true
            }
        );
        assert_eq!(
            distance_bound(1.0).unwrap(),
            DistanceBound {
                bound: 1.0,
                meaningful: true
            }
        );
        assert_eq!(
            distance_bound(3.0).unwrap(),
            DistanceBound {
                bound: 3.0,
                meaningful: false
            }
        );
        assert!(!distance_bound(2.0).unwrap().meaningful);
        assert!(distance_bound(-0.1).is_err());
    }

    #[test]
    fn overlap_lower_bound_examples() {
        assert_eq!(overlap_lower_bound(0.0).unwrap(), 1.0);
        assert_eq!(overlap_lower_bound(1.0).unwrap(), 0.5);
        assert_close!(overlap_lower_bound(SQRT_2).unwrap(), 0.0, 1e-15);
        assert!(overlap_lower_bound(f64::NAN).is_err());
    }

    #[test]
    fn amplitude_lower_bound_examples() {
        assert_eq!(amplitude_lower_bound(0.0, 0.0).unwrap(), 1.0);
        // independent evaluation: 0.25 / sqrt(15/16) = 1/sqrt(15)
        let expected = 1.0 / 15f64.sqrt();
        assert_close!(amplitude_lower_bound(1.0, 0.25).unwrap(), expected, 1e-15);
        assert_close!(expected, 0.258199, 1e-6);
        // 1 - v²/2 computes to 0 (or a hair below) at v = √2
        assert!(matches!(
            amplitude_lower_bound(SQRT_2, 0.0),
            Err(Error::ConditionViolated { .. })
        ));
        assert!(amplitude_lower_bound(0.5, 1.0).is_err());
        assert!(amplitude_lower_bound(0.5, -0.1).is_err());
    }

    #[test]
    fn threshold_examples() {
        let unit = bias(Envelope::Constant { value: 1.0 }, 1.0);
        let f = threshold_check(&unit, 1.0, 0.0).unwrap();
        assert!(f.pointwise && f.budget);
        let weak = bias(Envelope::Constant { value: 0.2 }, 10.0);
        assert!(!threshold_check(&weak, 10.0, 0.0).unwrap().pointwise);
        for (t, eps) in [(0.5, 0.0), (100.0, 0.9)] {
            let f = threshold_check(&ErrorModel::zero(1, t).unwrap(), t, eps).unwrap();
            assert!(f.pointwise && f.budget);
        }
    }

    #[test]
    fn certify_zero_error() {
        let psi0 = QuantumState::uniform(1);
        let spec = AnnealSpec::constant(op(0.7, "X"), 2.0, psi0).unwrap();
        let model = ErrorModel::zero(1, 2.0).unwrap();
        let pair = evolve_pair(&spec, &model, 100).unwrap();
        let budget = error_budget(&model, 2.0, DEFAULT_PANELS).unwrap();
        let r = certify(&pair, &budget, 1.0 / 2f64.sqrt(), 0).unwrap();
        assert!(r.distance_measured <= 1e-12);
        assert_eq!(r.verdict, Verdict::Verified);
    }

    #[test]
    fn certify_commuting_case() {
        let (lambda, t) = (0.1, 2.0);
        let psi0 = QuantumState::basis(1, 0).unwrap();
        let spec = AnnealSpec::constant(HermitianOperator::zeros(2), t, psi0).unwrap();
        let model = ErrorModel::constant(op(lambda, "Z"), t).unwrap();
        let pair = evolve_pair(&spec, &model, 1000).unwrap();
        let budget = error_budget(&model, t, DEFAULT_PANELS).unwrap();
        let r = certify(&pair, &budget, 0.0, 0).unwrap();
        assert_close!(r.v, 0.2, 1e-15);
        assert_close!(r.distance_measured, 2.0 * 0.1f64.sin(), 1e-12);
        assert_eq!(r.verdict, Verdict::Verified);
    }

    #[test]
    fn certify_flags_condition_violation() {
        let t = 1.0;
        let psi0 = QuantumState::basis(1, 0).unwrap();
        let spec = AnnealSpec::constant(HermitianOperator::zeros(2), t, psi0).unwrap();
        let model = ErrorModel::constant(op(1.6, "X"), t).unwrap();
        let pair = evolve_pair(&spec, &model, 1000).unwrap();
        let budget = error_budget(&model, t, DEFAULT_PANELS).unwrap();
        let r = certify(&pair, &budget, 0.0, 0).unwrap();
        assert!(!r.condition_ok);
        assert_eq!(r.amplitude_lower, None);
        assert_eq!(r.overlap_check, CheckStatus::NotApplicable);
        assert_eq!(r.verdict, Verdict::ConditionViolated);
        assert!(certify(&pair, &budget, 0.0, 5).is_err());
    }

    #[test]
    fn check_status_classification() {
        assert_eq!(CheckStatus::of(1.0, 1.0, 0.0), CheckStatus::Holds);
        assert_eq!(
            CheckStatus::of(1.0 + 1e-9, 1.0, 1e-8),
            CheckStatus::WithinEnvelope
        );
        assert_eq!(CheckStatus::of(1.1, 1.0, 1e-8), CheckStatus::Violated);
    }
}
