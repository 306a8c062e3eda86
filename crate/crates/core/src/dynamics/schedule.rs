use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shape of the annealing fraction `s(t)` as a function of `u = t/T`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ScheduleKind {
    Linear,
    /// `s = u^power`.
    Polynomial {
        power: f64,
    },
    /// Knots `(u, s)` from `(0, 0)` to `(1, 1)`, linearly interpolated.
    PiecewiseLinear {
        knots: Vec<(f64, f64)>,
    },
}

/// `s(t)` on `[0, T]` with `s(0) = 0`, `s(T) = 1`, nondecreasing.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Schedule {
    kind: ScheduleKind,
    total_time: f64,
}

impl Schedule {
    pub fn new(kind: ScheduleKind, total_time: f64) -> Result<Self> {
        if !(total_time.is_finite() && total_time > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "total time must be positive and finite, got {total_time}"
            )));
        }
        match &kind {
            ScheduleKind::Linear => {}
            ScheduleKind::Polynomial { power } => {
                if !(power.is_finite() && *power > 0.0) {
                    return Err(Error::InvalidArgument(format!(
                        "polynomial schedule power must be positive, got {power}"
                    )));
                }
            }
            ScheduleKind::PiecewiseLinear { knots } => validate_knots(knots)?,
        }
        Ok(Self { kind, total_time })
    }

    pub fn linear(total_time: f64) -> Result<Self> {
        Self::new(ScheduleKind::Linear, total_time)
    }

    pub fn kind(&self) -> &ScheduleKind {
        &self.kind
    }

    pub fn total_time(&self) -> f64 {
        self.total_time
    }

    pub fn with_total_time(&self, total_time: f64) -> Result<Self> {
        Self::new(self.kind.clone(), total_time)
    }

    /// `s(t)`; callers are expected to have range-checked `t`.
    pub fn value(&self, t: f64) -> f64 {
        let u = (t / self.total_time).clamp(0.0, 1.0);
        match &self.kind {
            ScheduleKind::Linear => u,
            ScheduleKind::Polynomial { power } => u.powf(*power),
            ScheduleKind::PiecewiseLinear { knots } => interpolate(knots, u),
        }
    }
}

impl Schedule {
    /// Interior kinks of `s(t)` as `(t, |Δ ds/dt|)`.
    pub fn slope_jumps(&self) -> Vec<(f64, f64)> {
        match &self.kind {
            ScheduleKind::PiecewiseLinear { knots } => slope_jumps(knots)
                .into_iter()
                .map(|(u, j)| (u * self.total_time, j / self.total_time))
                .collect(),
            _ => Vec::new(),
        }
    }
}

/// `(x, |Δ dy/dx|)` at the interior knots of a piecewise-linear function.
pub(crate) fn slope_jumps(knots: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let slope = |a: (f64, f64), b: (f64, f64)| (b.1 - a.1) / (b.0 - a.0);
    knots
        .windows(3)
        .map(|w| (w[1].0, (slope(w[1], w[2]) - slope(w[0], w[1])).abs()))
        .filter(|&(_, j)| j > 0.0)
        .collect()
}

fn validate_knots(knots: &[(f64, f64)]) -> Result<()> {
    let bad = |msg: &str| {
        Err(Error::InvalidArgument(format!(
            "piecewise-linear schedule: {msg}"
        )))
    };
    if knots.len() < 2 {
        return bad("needs at least two knots");
    }
    if knots.iter().any(|(u, s)| !u.is_finite() || !s.is_finite()) {
        return bad("non-finite knot");
    }
    if knots[0] != (0.0, 0.0) || knots[knots.len() - 1] != (1.0, 1.0) {
        return bad("must start at (0, 0) and end at (1, 1)");
    }
    for w in knots.windows(2) {
        if w[1].0 <= w[0].0 {
            return bad("knot times must be strictly increasing");
        }
        if w[1].1 < w[0].1 {
            return bad("schedule values must be nondecreasing");
        }
    }
    Ok(())
}

/// Linear interpolation through sorted `(x, y)` knots, clamped at the ends.
pub(crate) fn interpolate(knots: &[(f64, f64)], x: f64) -> f64 {
    let first = knots[0];
    let last = knots[knots.len() - 1];
    if x <= first.0 {
        return first.1;
    }
    if x >= last.0 {
        return last.1;
    }
    let i = knots.partition_point(|k| k.0 <= x);
    let (x0, y0) = knots[i - 1];
    let (x1, y1) = knots[i];
    y0 + (y1 - y0) * (x - x0) / (x1 - x0)
}
