//! Independent references for the propagator: closed-form single-qubit
//! solutions and a Richardson-extrapolated high-resolution run.

use nalgebra::DVector;
use num_complex::Complex64;
use serde::Serialize;

use crate::dynamics::{evolve, evolve_final, steps_for_norm, AnnealSpec, ErrorModel};
use crate::error::Result;
use crate::operators::{
    distance, overlap, pauli_string, spectral_norm, HermitianOperator, PauliTerm, QuantumState,
};

/// Exact final states of an ideal/perturbed pair.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormPair {
    pub psi_t: QuantumState,
    pub phi_t: QuantumState,
    pub exact_distance: f64,
    pub exact_overlap: Complex64,
    /// `∫‖V‖dt` for the instance.
    pub v: f64,
}

impl ClosedFormPair {
    fn from_amplitudes(psi: [Complex64; 2], phi: [Complex64; 2], v: f64) -> Result<Self> {
        // |ψ − φ|² summed per component avoids the cancellation in 2 − 2Re⟨ψ|φ⟩.
        let exact_distance = ((psi[0] - phi[0]).norm_sqr() + (psi[1] - phi[1]).norm_sqr()).sqrt();
        let exact_overlap = psi[0].conj() * phi[0] + psi[1].conj() * phi[1];
        Ok(Self {
            psi_t: QuantumState::new(psi.to_vec())?,
            phi_t: QuantumState::new(phi.to_vec())?,
            exact_distance,
            exact_overlap,
            v,
        })
    }
}

fn sinc_t(omega: f64, t: f64) -> f64 {
    // sin(Ωt)/Ω, continuous at Ω = 0
    if omega * t == 0.0 {
        t
    } else {
        (omega * t).sin() / omega
    }
}

/// `H = (ω/2)Z`, `V = δX`, `ψ₀ = |0⟩`.
///
/// `ψ(T) = e^{−iωT/2}|0⟩` and, with `Ω = √((ω/2)² + δ²)`,
/// `φ(T) = [cos ΩT − i(ω/2)·sin(ΩT)/Ω]|0⟩ − iδ·sin(ΩT)/Ω |1⟩`.
pub fn rabi_exact(omega: f64, delta: f64, total_time: f64) -> Result<ClosedFormPair> {
    let half = omega / 2.0;
    let big_omega = half.hypot(delta);
    let c = (big_omega * total_time).cos();
    let s = sinc_t(big_omega, total_time);
    let psi = [
        Complex64::from_polar(1.0, -half * total_time),
        Complex64::new(0.0, 0.0),
    ];
    let phi = [
        Complex64::new(c, -half * s),
        Complex64::new(0.0, -delta * s),
    ];
    ClosedFormPair::from_amplitudes(psi, phi, delta.abs() * total_time)
}

/// `H = 0`, `V = λZ`, `ψ₀ = |0⟩`: `φ(T) = e^{−iλT}|0⟩`, distance `2|sin(λT/2)|`, `v = λT`.
pub fn commuting_exact(lambda: f64, total_time: f64) -> Result<ClosedFormPair> {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let mut pair = ClosedFormPair::from_amplitudes(
        [one, zero],
        [Complex64::from_polar(1.0, -lambda * total_time), zero],
        lambda.abs() * total_time,
    )?;
    pair.exact_distance = 2.0 * (lambda * total_time / 2.0).sin().abs();
    Ok(pair)
}

/// Anneal spec and error model realizing the Rabi instance.
pub fn rabi_instance(omega: f64, delta: f64, total_time: f64) -> Result<(AnnealSpec, ErrorModel)> {
    let h = pauli_string(&PauliTerm::parse(omega / 2.0, "Z")?, 1)?;
    let v = pauli_string(&PauliTerm::parse(delta, "X")?, 1)?;
    Ok((
        AnnealSpec::constant(h, total_time, QuantumState::basis(1, 0)?)?,
        ErrorModel::constant(v, total_time)?,
    ))
}

/// Anneal spec and error model realizing the commuting instance.
pub fn commuting_instance(lambda: f64, total_time: f64) -> Result<(AnnealSpec, ErrorModel)> {
    let v = pauli_string(&PauliTerm::parse(lambda, "Z")?, 1)?;
    Ok((
        AnnealSpec::constant(
            HermitianOperator::zeros(2),
            total_time,
            QuantumState::basis(1, 0)?,
        )?,
        ErrorModel::constant(v, total_time)?,
    ))
}

/// High-accuracy final state with its error estimate.
#[derive(Debug, Clone)]
pub struct ReferenceState {
    pub state: QuantumState,
    /// Estimated error of the finer of the two runs, which also bounds the
    /// extrapolated state's error asymptotically.
    pub error_estimate: f64,
    /// Step count of the coarser run.
    pub steps: usize,
}

/// Oversampling factor over the default step count.
pub const REFERENCE_OVERSAMPLING: usize = 8;

const REFERENCE_NORM_SAMPLES: usize = 64;

/// Runs at `N = 8 × default` and `2N` steps and extrapolates
/// `(4ψ_{2N} − ψ_N)/3`, cancelling the leading `Δt²` error term.
pub fn richardson_reference<F>(
    mut h: F,
    psi0: &QuantumState,
    total_time: f64,
) -> Result<ReferenceState>
where
    F: FnMut(f64) -> Result<HermitianOperator>,
{
    let mut max_norm = 0.0f64;
    for k in 0..=REFERENCE_NORM_SAMPLES {
        let t = total_time * k as f64 / REFERENCE_NORM_SAMPLES as f64;
        max_norm = max_norm.max(spectral_norm(&h(t)?)?);
    }
    let steps = REFERENCE_OVERSAMPLING * steps_for_norm(total_time, max_norm);
    richardson_with_steps(h, psi0, total_time, steps)
}

/// [`richardson_reference`] with an explicit coarse step count.
pub fn richardson_with_steps<F>(
    mut h: F,
    psi0: &QuantumState,
    total_time: f64,
    steps: usize,
) -> Result<ReferenceState>
where
    F: FnMut(f64) -> Result<HermitianOperator>,
{
    let coarse = evolve_final(&mut h, psi0, total_time, steps)?;
    let fine = evolve_final(&mut h, psi0, total_time, 2 * steps)?;
    if coarse == fine {
        return Ok(ReferenceState {
            state: fine,
            error_estimate: 0.0,
            steps,
        });
    }
    let extrapolated: DVector<Complex64> =
        (fine.amplitudes().scale(4.0) - coarse.amplitudes()).unscale(3.0);
    let error_estimate = distance(&fine, &coarse)? / 3.0;
    Ok(ReferenceState {
        state: QuantumState::normalized(extrapolated.iter().copied().collect())?,
        error_estimate,
        steps,
    })
}

/// One line of the oracle self-test.
#[derive(Debug, Clone, Serialize)]
pub struct SelfTestCheck {
    pub name: String,
    pub passed: bool,
    pub worst: f64,
    pub tolerance: f64,
}

fn check(name: &str, worst: f64, tolerance: f64) -> SelfTestCheck {
    SelfTestCheck {
        name: name.to_string(),
        passed: worst <= tolerance,
        worst,
        tolerance,
    }
}

/// Cross-checks the propagator against the closed forms above.
pub fn selftest() -> Result<Vec<SelfTestCheck>> {
    let mut checks = Vec::new();

    let mut worst_norm = 0.0f64;
    let mut worst_rabi = 0.0f64;
    for &omega in &[0.0, 0.5, 1.0, 2.0] {
        for &delta in &[0.0, 0.3, 1.0] {
            for &t in &[0.5, 2.0, 10.0] {
                let exact = rabi_exact(omega, delta, t)?;
                worst_norm = worst_norm
                    .max((exact.psi_t.norm() - 1.0).abs())
                    .max((exact.phi_t.norm() - 1.0).abs());
                let (spec, model) = rabi_instance(omega, delta, t)?;
                let steps = crate::dynamics::default_steps(&spec, &model)?;
                let pair = crate::dynamics::evolve_pair(&spec, &model, steps)?;
                worst_rabi = worst_rabi
                    .max(distance(pair.ideal.final_state(), &exact.psi_t)?)
                    .max(distance(pair.perturbed.final_state(), &exact.phi_t)?);
            }
        }
    }
    checks.push(check("rabi_exact normalized", worst_norm, 1e-14));
    checks.push(check("evolve vs rabi_exact", worst_rabi, 1e-8));

    let mut worst_comm = 0.0f64;
    for &(lambda, t) in &[(0.05, 2.0), (0.3, 1.0), (1.0, std::f64::consts::PI)] {
        let exact = commuting_exact(lambda, t)?;
        let (spec, model) = commuting_instance(lambda, t)?;
        let pair = crate::dynamics::evolve_pair(
            &spec,
            &model,
            crate::dynamics::default_steps(&spec, &model)?,
        )?;
        worst_comm = worst_comm
            .max(distance(pair.perturbed.final_state(), &exact.phi_t)?)
            .max(
                (distance(pair.ideal.final_state(), pair.perturbed.final_state())?
                    - exact.exact_distance)
                    .abs(),
            );
    }
    checks.push(check("evolve vs commuting_exact", worst_comm, 1e-10));

    let exact = rabi_exact(1.0, 0.3, 2.0)?;
    let h = pauli_string(&PauliTerm::parse(0.5, "Z")?, 1)?;
    let hv = (&h + &pauli_string(&PauliTerm::parse(0.3, "X")?, 1)?)?;
    let reference = richardson_reference(|_| Ok(hv.clone()), &QuantumState::basis(1, 0)?, 2.0)?;
    checks.push(check(
        "richardson_reference vs rabi_exact",
        distance(&reference.state, &exact.phi_t)?,
        1e-10,
    ));

    let mut worst_identity = 0.0f64;
    for &(omega, delta, t) in &[(1.0, 0.3, 2.0), (0.0, 0.7, 5.0), (2.0, 1.0, 0.1)] {
        let e = rabi_exact(omega, delta, t)?;
        let ov = overlap(&e.psi_t, &e.phi_t)?;
        worst_identity = worst_identity.max((e.exact_distance.powi(2) + 2.0 * ov.re - 2.0).abs());
        worst_identity = worst_identity.max((ov - e.exact_overlap).norm());
    }
    checks.push(check(
        "closed-form distance/overlap identity",
        worst_identity,
        1e-14,
    ));

    let trajectory = evolve(|_| Ok(hv.clone()), &QuantumState::basis(1, 0)?, 10.0, 1000)?;
    let worst_traj = trajectory
        .states()
        .iter()
        .map(|s| (s.norm() - 1.0).abs())
        .fold(0.0, f64::max);
    checks.push(check("trajectory normalization", worst_traj, 1e-9));

    Ok(checks)
}
