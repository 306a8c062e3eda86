//! Annealing Hamiltonians, control-error models and time propagation.

mod anneal;
mod error_model;
mod propagator;
mod schedule;

pub use anneal::{hamiltonian_at, ising_operator, transverse_field, AnnealSpec, Coupling};
pub use error_model::{error_at, Envelope, ErrorKind, ErrorModel};
pub use propagator::{
    check_alignment, default_steps, distance_increments, evolve, evolve_final, evolve_pair,
    EvolvedPair, StepIncrement, Trajectory, MIN_DEFAULT_STEPS, ROUNDOFF_PER_STEP, STEPS_PER_PHASE,
};
pub use schedule::{Schedule, ScheduleKind};

pub(crate) use propagator::steps_for_norm;
