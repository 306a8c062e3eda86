//! Random anneal instances shared by the integration tests.

#![allow(dead_code)]

use anneal_threshold::bounds::{error_budget, DEFAULT_PANELS};
use anneal_threshold::dynamics::{
    AnnealSpec, Coupling, Envelope, ErrorKind, ErrorModel, Schedule, ScheduleKind,
};
use anneal_threshold::Pauli;
use rand::Rng;

pub struct Instance {
    pub spec: AnnealSpec,
    pub model: ErrorModel,
    pub family: &'static str,
    pub target_v: f64,
}

pub fn random_couplings<R: Rng>(rng: &mut R, n: usize, p: f64, max: f64) -> Vec<Coupling> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                out.push(Coupling {
                    i,
                    j,
                    value: rng.gen_range(-max..=max),
                });
            }
        }
    }
    out
}

pub fn random_envelope<R: Rng>(rng: &mut R) -> Envelope {
    match rng.gen_range(0..5) {
        0 => Envelope::Constant { value: 1.0 },
        1 => Envelope::Linear {
            start: rng.gen_range(-1.0..=1.0),
            end: rng.gen_range(-1.0..=1.0),
        },
        2 => Envelope::HalfSine { amplitude: 1.0 },
        3 => {
            let mid = rng.gen_range(0.2..0.8);
            Envelope::PiecewiseLinear {
                knots: vec![
                    (0.0, rng.gen_range(-1.0..=1.0)),
                    (mid, rng.gen_range(-1.0..=1.0)),
                    (1.0, rng.gen_range(-1.0..=1.0)),
                ],
            }
        }
        _ => Envelope::Step {
            breaks: vec![0.25, 0.5, 0.75],
            values: (0..4).map(|_| rng.gen_range(-1.0..=1.0)).collect(),
        },
    }
}

pub fn random_schedule<R: Rng>(rng: &mut R) -> ScheduleKind {
    match rng.gen_range(0..3) {
        0 => ScheduleKind::Linear,
        1 => ScheduleKind::Polynomial {
            power: rng.gen_range(0.5..3.0),
        },
        _ => {
            let u = rng.gen_range(0.2..0.8);
            ScheduleKind::PiecewiseLinear {
                knots: vec![(0.0, 0.0), (u, rng.gen_range(0.0..1.0)), (1.0, 1.0)],
            }
        }
    }
}

/// Transverse-field Ising anneal with `|h|, |J| ≤ 1` and one of the three
/// standard error families, scaled so that `v` equals a uniform draw from
/// `[0, v_max]`.
pub fn random_instance<R: Rng>(
    rng: &mut R,
    max_qubits: usize,
    time_range: (f64, f64),
    v_max: f64,
) -> Instance {
    loop {
        let n = rng.gen_range(1..=max_qubits);
        let fields: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        let couplings = random_couplings(rng, n, 0.6, 1.0);
        let t = rng.gen_range(time_range.0..=time_range.1);
        let schedule = Schedule::new(random_schedule(rng), t).unwrap();
        let spec = AnnealSpec::transverse_ising(n, &fields, &couplings, schedule).unwrap();

        let (family, kind) = match rng.gen_range(0..3) {
            0 => {
                let axis = [Pauli::X, Pauli::Y, Pauli::Z][rng.gen_range(0..3)];
                let strengths = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
                (
                    "static_field_bias",
                    ErrorKind::StaticFieldBias { axis, strengths },
                )
            }
            1 if n >= 2 => {
                let mut c = random_couplings(rng, n, 0.5, 1.0);
                if c.is_empty() {
                    c.push(Coupling {
                        i: 0,
                        j: 1,
                        value: rng.gen_range(-1.0..=1.0),
                    });
                }
                (
                    "coupling_deviation",
                    ErrorKind::CouplingDeviation { couplings: c },
                )
            }
            1 => continue,
            _ => ("schedule_perturbation", ErrorKind::SchedulePerturbation),
        };
        let unit = ErrorModel::new(kind, random_envelope(rng), spec.problem(), n, t).unwrap();
        let v1 = error_budget(&unit, t, DEFAULT_PANELS).unwrap().v;
        if v1 < 1e-9 {
            continue;
        }
        let target_v = rng.gen_range(0.0..=v_max);
        return Instance {
            model: unit.scaled(target_v / v1),
            spec,
            family,
            target_v,
        };
    }
}
