//! Ideal versus perturbed Schrödinger evolution for annealing Hamiltonians,
//! with certified bounds on how far deterministic control errors can push
//! the final state.
//!
//! The crate is organized bottom-up:
//!
//! - [`operators`]: states, Hermitian operators, Pauli strings, norms.
//! - [`dynamics`]: schedules, error models and the midpoint-exponential propagator.
//! - [`bounds`]: error budget `v = ∫‖V(t)‖dt` and the distance, overlap and
//!   amplitude certificates built from it.
//! - [`measurement`]: target identification, seeded sampling and the
//!   repetition-count check.
//! - [`oracle`]: closed-form and extrapolated references for the propagator.
//! - [`harness`]: config loading, sweeps and report emission.

#[cfg(test)]
macro_rules! assert_close {
    ($a:expr, $b:expr, $tol:expr) => {{
        let (a, b, tol): (f64, f64, f64) = ($a, $b, $tol);
        assert!((a - b).abs() <= tol, "{} vs {} (tol {:e})", a, b, tol);
    }};
}

pub mod bounds;
pub mod dynamics;
pub mod error;
pub mod harness;
pub mod measurement;
pub mod operators;
pub mod oracle;

pub use error::{Error, Result};
pub use operators::{HermitianOperator, Pauli, PauliTerm, QuantumState};
