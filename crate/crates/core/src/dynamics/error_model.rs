//! Deterministic control errors `V(t) = g(t/T)·V₀`.
//!
//! Every supported family is a fixed Hermitian operator `V₀` modulated by a
//! real envelope `g`, so `‖V(t)‖ = |g(t/T)|·‖V₀‖` and only one eigensolve is
//! needed per model.

use serde::{Deserialize, Serialize};

use super::anneal::{ising_operator, Coupling};
use super::schedule::interpolate;
use crate::error::{Error, Result};
use crate::operators::{pauli_sum, spectral_norm, HermitianOperator, Pauli, PauliTerm};

/// Real envelope `g(u)` on fractional time `u = t/T ∈ [0, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Envelope {
    Constant {
        value: f64,
    },
    /// `start + (end - start)·u`.
    Linear {
        start: f64,
        end: f64,
    },
    /// `amplitude·sin(πu)`.
    HalfSine {
        amplitude: f64,
    },
    /// Continuous, through knots `(u, g)` spanning `[0, 1]`.
    PiecewiseLinear {
        knots: Vec<(f64, f64)>,
    },
    /// `values[k]` on `[breaks[k-1], breaks[k])`; `values.len() == breaks.len() + 1`.
    Step {
        breaks: Vec<f64>,
        values: Vec<f64>,
    },
}

impl Envelope {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(format!("envelope: {msg}")));
        fn finite(mut xs: impl Iterator<Item = f64>) -> bool {
            xs.all(f64::is_finite)
        }
        match self {
            Envelope::Constant { value } if !value.is_finite() => {
                bad(format!("non-finite value {value}"))
            }
            Envelope::Linear { start, end } if !(start.is_finite() && end.is_finite()) => {
                bad("non-finite endpoint".into())
            }
            Envelope::HalfSine { amplitude } if !amplitude.is_finite() => {
                bad("non-finite amplitude".into())
            }
            Envelope::PiecewiseLinear { knots } => {
                if knots.len() < 2 || knots[0].0 != 0.0 || knots[knots.len() - 1].0 != 1.0 {
                    return bad("piecewise-linear knots must span u = 0 to u = 1".into());
                }
                if !finite(knots.iter().flat_map(|k| [k.0, k.1])) {
                    return bad("non-finite knot".into());
                }
                if knots.windows(2).any(|w| w[1].0 <= w[0].0) {
                    return bad("knot times must be strictly increasing".into());
                }
                Ok(())
            }
            Envelope::Step { breaks, values } => {
                if values.len() != breaks.len() + 1 {
                    return bad(format!(
                        "step envelope needs {} values for {} breaks, got {}",
                        breaks.len() + 1,
                        breaks.len(),
                        values.len()
                    ));
                }
                if !finite(breaks.iter().chain(values).copied()) {
                    return bad("non-finite step entry".into());
                }
                if breaks.iter().any(|&b| b <= 0.0 || b >= 1.0)
                    || breaks.windows(2).any(|w| w[1] <= w[0])
                {
                    return bad("breaks must be strictly increasing inside (0, 1)".into());
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    pub fn value(&self, u: f64) -> f64 {
        match self {
            Envelope::Constant { value } => *value,
            Envelope::Linear { start, end } => start + (end - start) * u,
            Envelope::HalfSine { amplitude } => amplitude * (std::f64::consts::PI * u).sin(),
            Envelope::PiecewiseLinear { knots } => interpolate(knots, u),
            Envelope::Step { breaks, values } => values[breaks.partition_point(|&b| b <= u)],
        }
    }

    /// `sup_u |g(u)|`, exact for every variant.
    pub fn sup_abs(&self) -> f64 {
        match self {
            Envelope::Constant { value } => value.abs(),
            Envelope::Linear { start, end } => start.abs().max(end.abs()),
            Envelope::HalfSine { amplitude } => amplitude.abs(),
            Envelope::PiecewiseLinear { knots } => knots.iter().fold(0.0, |m, k| m.max(k.1.abs())),
            Envelope::Step { values, .. } => values.iter().fold(0.0, |m, v| m.max(v.abs())),
        }
    }

    /// Interior points, in increasing order, where `|g|` is discontinuous or
    /// has a kink: knots, jumps and sign changes between knots.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self {
            Envelope::PiecewiseLinear { knots } => {
                let mut out = Vec::new();
                for (k, w) in knots.windows(2).enumerate() {
                    let ((u0, g0), (u1, g1)) = (w[0], w[1]);
                    if k > 0 {
                        out.push(u0);
                    }
                    if g0 * g1 < 0.0 {
                        out.push(u0 + (u1 - u0) * g0.abs() / (g0.abs() + g1.abs()));
                    }
                }
                out
            }
            Envelope::Step { breaks, .. } => breaks.clone(),
            _ => Vec::new(),
        }
    }

    /// Kinks of `|g|` as `(u, |Δ d|g|/du|)`, including sign changes of a
    /// linear piece; jumps are not included.
    pub fn abs_slope_jumps(&self) -> Vec<(f64, f64)> {
        let knots = match self {
            Envelope::Linear { start, end } => vec![(0.0, *start), (1.0, *end)],
            Envelope::PiecewiseLinear { knots } => knots.clone(),
            _ => return Vec::new(),
        };
        // pieces of |g| as (end, slope)
        let mut pieces: Vec<(f64, f64)> = Vec::new();
        for w in knots.windows(2) {
            let ((u0, g0), (u1, g1)) = (w[0], w[1]);
            let slope = (g1 - g0) / (u1 - u0);
            if g0 * g1 < 0.0 {
                let root = u0 + (u1 - u0) * g0.abs() / (g0.abs() + g1.abs());
                pieces.push((root, g0.signum() * slope));
                pieces.push((u1, g1.signum() * slope));
            } else {
                pieces.push((u1, (g0 + g1).signum() * slope));
            }
        }
        pieces
            .windows(2)
            .map(|w| (w[0].0, (w[1].1 - w[0].1).abs()))
            .filter(|&(_, j)| j > 0.0)
            .collect()
    }

    /// `sup |d²g/du²|` away from breakpoints.
    pub fn curvature_bound(&self) -> f64 {
        match self {
            Envelope::HalfSine { amplitude } => amplitude.abs() * std::f64::consts::PI.powi(2),
            _ => 0.0,
        }
    }

    /// Kinks of `g` itself as `(u, |Δ dg/du|)`; jumps are not included.
    pub fn slope_jumps(&self) -> Vec<(f64, f64)> {
        match self {
            Envelope::PiecewiseLinear { knots } => super::schedule::slope_jumps(knots),
            _ => Vec::new(),
        }
    }

    /// Points where `g` jumps; these must coincide with propagation grid points.
    pub fn discontinuities(&self) -> &[f64] {
        match self {
            Envelope::Step { breaks, .. } => breaks,
            _ => &[],
        }
    }

    /// Exact `∫_a^b |g(u)| du` for constant and linear envelopes.
    pub fn integral_abs_exact(&self, a: f64, b: f64) -> Option<f64> {
        match self {
            Envelope::Constant { value } => Some(value.abs() * (b - a)),
            Envelope::Linear { .. } => {
                let (ga, gb) = (self.value(a), self.value(b));
                if ga * gb >= 0.0 {
                    Some(0.5 * (ga.abs() + gb.abs()) * (b - a))
                } else {
                    // sign change: two triangles meeting at the root
                    let root = a + (b - a) * ga.abs() / (ga.abs() + gb.abs());
                    Some(0.5 * (ga.abs() * (root - a) + gb.abs() * (b - root)))
                }
            }
            _ => None,
        }
    }

    pub fn scaled(&self, c: f64) -> Self {
        match self {
            Envelope::Constant { value } => Envelope::Constant { value: c * value },
            Envelope::Linear { start, end } => Envelope::Linear {
                start: c * start,
                end: c * end,
            },
            Envelope::HalfSine { amplitude } => Envelope::HalfSine {
                amplitude: c * amplitude,
            },
            Envelope::PiecewiseLinear { knots } => Envelope::PiecewiseLinear {
                knots: knots.iter().map(|&(u, g)| (u, c * g)).collect(),
            },
            Envelope::Step { breaks, values } => Envelope::Step {
                breaks: breaks.clone(),
                values: values.iter().map(|v| c * v).collect(),
            },
        }
    }
}

impl Default for Envelope {
    fn default() -> Self {
        Envelope::Constant { value: 1.0 }
    }
}

/// Family of the static operator `V₀`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ErrorKind {
    None,
    /// `Σᵢ δᵢ σᵢ^axis`, one strength per qubit.
    StaticFieldBias {
        axis: Pauli,
        strengths: Vec<f64>,
    },
    /// `Σ ΔJᵢⱼ ZᵢZⱼ`.
    CouplingDeviation {
        couplings: Vec<Coupling>,
    },
    /// The envelope multiplies the problem Hamiltonian itself.
    SchedulePerturbation,
    CustomTerms {
        terms: Vec<PauliTerm>,
    },
}

/// A time-dependent Hermitian perturbation on `[0, T]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorModel {
    kind: ErrorKind,
    envelope: Envelope,
    total_time: f64,
    base: HermitianOperator,
    base_norm: f64,
}

impl ErrorModel {
    /// `problem` is only consulted for [`ErrorKind::SchedulePerturbation`].
    pub fn new(
        kind: ErrorKind,
        envelope: Envelope,
        problem: &HermitianOperator,
        n_qubits: usize,
        total_time: f64,
    ) -> Result<Self> {
        envelope.validate()?;
        if !(total_time.is_finite() && total_time > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "total time must be positive and finite, got {total_time}"
            )));
        }
        let dim = 1usize << n_qubits;
        if problem.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: problem.dim(),
            });
        }
        let base = match &kind {
            ErrorKind::None => HermitianOperator::zeros(dim),
            ErrorKind::StaticFieldBias { axis, strengths } => {
                if strengths.len() != n_qubits {
                    return Err(Error::DimensionMismatch {
                        expected: n_qubits,
                        actual: strengths.len(),
                    });
                }
                let terms = strengths
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d != 0.0)
                    .map(|(q, &d)| PauliTerm::single(d, *axis, q, n_qubits))
                    .collect::<Result<Vec<_>>>()?;
                pauli_sum(&terms, n_qubits)?
            }
            ErrorKind::CouplingDeviation { couplings } => ising_operator(&[], couplings, n_qubits)?,
            ErrorKind::SchedulePerturbation => problem.clone(),
            ErrorKind::CustomTerms { terms } => pauli_sum(terms, n_qubits)?,
        };
        let base_norm = spectral_norm(&base)?;
        Ok(Self {
            kind,
            envelope,
            total_time,
            base,
            base_norm,
        })
    }

    /// The zero perturbation.
    pub fn zero(n_qubits: usize, total_time: f64) -> Result<Self> {
        let dim = 1usize << n_qubits;
        Self::new(
            ErrorKind::None,
            Envelope::default(),
            &HermitianOperator::zeros(dim),
            n_qubits,
            total_time,
        )
    }

    /// A constant operator `V(t) = v`, independent of any named family.
    pub fn constant(operator: HermitianOperator, total_time: f64) -> Result<Self> {
        Self::modulated(operator, Envelope::default(), total_time)
    }

    /// `V(t) = g(t/T)·operator` for an arbitrary Hermitian operator.
    pub fn modulated(
        operator: HermitianOperator,
        envelope: Envelope,
        total_time: f64,
    ) -> Result<Self> {
        envelope.validate()?;
        let base_norm = spectral_norm(&operator)?;
        Ok(Self {
            kind: ErrorKind::CustomTerms { terms: Vec::new() },
            envelope,
            total_time,
            base: operator,
            base_norm,
        })
    }

    pub fn kind(&self) -> &ErrorKind {
        &self.kind
    }

    pub fn envelope(&self) -> &Envelope {
        &self.envelope
    }

    pub fn total_time(&self) -> f64 {
        self.total_time
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// `V₀`, the operator the envelope modulates.
    pub fn base_operator(&self) -> &HermitianOperator {
        &self.base
    }

    pub fn base_norm(&self) -> f64 {
        self.base_norm
    }

    pub fn is_zero(&self) -> bool {
        self.base_norm == 0.0 || self.envelope.sup_abs() == 0.0
    }

    /// Same family and envelope shape on a different horizon.
    pub fn with_total_time(&self, total_time: f64) -> Result<Self> {
        if !(total_time.is_finite() && total_time > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "total time must be positive and finite, got {total_time}"
            )));
        }
        Ok(Self {
            total_time,
            ..self.clone()
        })
    }

    /// Multiplies the envelope by `c`.
    pub fn scaled(&self, c: f64) -> Self {
        Self {
            envelope: self.envelope.scaled(c),
            ..self.clone()
        }
    }

    fn check_time(&self, t: f64) -> Result<()> {
        if !(0.0..=self.total_time).contains(&t) {
            return Err(Error::TimeOutOfRange {
                t,
                total_time: self.total_time,
            });
        }
        Ok(())
    }

    pub fn envelope_at(&self, t: f64) -> Result<f64> {
        self.check_time(t)?;
        Ok(self.envelope.value(t / self.total_time))
    }

    /// `V(t)`.
    pub fn error_at(&self, t: f64) -> Result<HermitianOperator> {
        let g = self.envelope_at(t)?;
        Ok(self.base.scaled(g))
    }

    /// `‖V(t)‖` from the cached `‖V₀‖`.
    pub fn norm_at(&self, t: f64) -> Result<f64> {
        Ok(self.envelope_at(t)?.abs() * self.base_norm)
    }

    /// `max_t ‖V(t)‖`.
    pub fn sup_norm(&self) -> f64 {
        self.envelope.sup_abs() * self.base_norm
    }

    /// Interior times where `‖V(t)‖` may be non-smooth, in absolute time.
    pub fn breakpoint_times(&self) -> Vec<f64> {
        self.envelope
            .breakpoints()
            .into_iter()
            .map(|u| u * self.total_time)
            .collect()
    }
}

/// `error_at` in free-function form.
pub fn error_at(model: &ErrorModel, t: f64) -> Result<HermitianOperator> {
    model.error_at(t)
}
