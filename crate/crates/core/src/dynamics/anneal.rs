use serde::{Deserialize, Serialize};

use super::schedule::Schedule;
use crate::error::{Error, Result};
use crate::operators::{
    pauli_sum, HermitianOperator, Pauli, PauliTerm, QuantumState, DEFAULT_MAX_QUBITS,
};

/// A two-body `ZᵢZⱼ` coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Coupling {
    pub i: usize,
    pub j: usize,
    pub value: f64,
}

/// Diagonal operator `Σ hᵢZᵢ + Σ Jᵢⱼ ZᵢZⱼ`.
pub fn ising_operator(
    fields: &[f64],
    couplings: &[Coupling],
    n_qubits: usize,
) -> Result<HermitianOperator> {
    if n_qubits > DEFAULT_MAX_QUBITS {
        return Err(Error::TooManyQubits {
            n_qubits,
            max: DEFAULT_MAX_QUBITS,
        });
    }
    if fields.len() > n_qubits {
        return Err(Error::DimensionMismatch {
            expected: n_qubits,
            actual: fields.len(),
        });
    }
    for c in couplings {
        if c.i >= n_qubits || c.j >= n_qubits || c.i == c.j {
            return Err(Error::InvalidArgument(format!(
                "coupling ({}, {}) invalid for {n_qubits} qubits",
                c.i, c.j
            )));
        }
    }
    if fields
        .iter()
        .chain(couplings.iter().map(|c| &c.value))
        .any(|x| !x.is_finite())
    {
        return Err(Error::NonFinite("Ising coefficient".into()));
    }
    let spin = |b: usize, q: usize| {
        if b >> (n_qubits - 1 - q) & 1 == 0 {
            1.0
        } else {
            -1.0
        }
    };
    let diag: Vec<f64> = (0..1usize << n_qubits)
        .map(|b| {
            let one_body: f64 = fields.iter().enumerate().map(|(q, h)| h * spin(b, q)).sum();
            let two_body: f64 = couplings
                .iter()
                .map(|c| c.value * spin(b, c.i) * spin(b, c.j))
                .sum();
            one_body + two_body
        })
        .collect();
    Ok(HermitianOperator::diagonal(&diag))
}

/// Transverse-field driver `-Γ Σᵢ Xᵢ`.
pub fn transverse_field(n_qubits: usize, strength: f64) -> Result<HermitianOperator> {
    let terms = (0..n_qubits)
        .map(|q| PauliTerm::single(-strength, Pauli::X, q, n_qubits))
        .collect::<Result<Vec<_>>>()?;
    pauli_sum(&terms, n_qubits)
}

/// `H(t) = (1 − s(t))·driver + s(t)·problem` started from `initial_state`.
#[derive(Debug, Clone)]
pub struct AnnealSpec {
    driver: HermitianOperator,
    problem: HermitianOperator,
    schedule: Schedule,
    initial_state: QuantumState,
}

impl AnnealSpec {
    pub fn new(
        driver: HermitianOperator,
        problem: HermitianOperator,
        schedule: Schedule,
        initial_state: QuantumState,
    ) -> Result<Self> {
        let dim = initial_state.dim();
        for op in [&driver, &problem] {
            if op.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: op.dim(),
                });
            }
        }
        Ok(Self {
            driver,
            problem,
            schedule,
            initial_state,
        })
    }

    /// Transverse-field driver with unit strength, uniform initial state.
    pub fn transverse_ising(
        n_qubits: usize,
        fields: &[f64],
        couplings: &[Coupling],
        schedule: Schedule,
    ) -> Result<Self> {
        Self::new(
            transverse_field(n_qubits, 1.0)?,
            ising_operator(fields, couplings, n_qubits)?,
            schedule,
            QuantumState::uniform(n_qubits),
        )
    }

    /// A time-independent Hamiltonian: driver and problem both equal `h`.
    pub fn constant(
        h: HermitianOperator,
        total_time: f64,
        initial_state: QuantumState,
    ) -> Result<Self> {
        Self::new(h.clone(), h, Schedule::linear(total_time)?, initial_state)
    }

    pub fn driver(&self) -> &HermitianOperator {
        &self.driver
    }

    pub fn problem(&self) -> &HermitianOperator {
        &self.problem
    }

    pub fn schedule(&self) -> &Schedule {
        &self.schedule
    }

    pub fn initial_state(&self) -> &QuantumState {
        &self.initial_state
    }

    pub fn total_time(&self) -> f64 {
        self.schedule.total_time()
    }

    pub fn n_qubits(&self) -> usize {
        self.initial_state.n_qubits()
    }

    pub fn with_total_time(&self, total_time: f64) -> Result<Self> {
        Ok(Self {
            schedule: self.schedule.with_total_time(total_time)?,
            ..self.clone()
        })
    }

    pub fn hamiltonian_at(&self, t: f64) -> Result<HermitianOperator> {
        let total_time = self.total_time();
        if !(0.0..=total_time).contains(&t) {
            return Err(Error::TimeOutOfRange { t, total_time });
        }
        let s = self.schedule.value(t);
        self.driver.combine(1.0 - s, &self.problem, s)
    }
}

/// `hamiltonian_at` in free-function form.
pub fn hamiltonian_at(spec: &AnnealSpec, t: f64) -> Result<HermitianOperator> {
    spec.hamiltonian_at(t)
}
