//! Constant identities and oracle cross-checks run at startup of a
//! deployment.

use std::f64::consts::PI;

use certainty_core::models::{make_lattice, make_rotor};
use certainty_core::random::{random_hermitian, seeded_rng};
use certainty_core::relations::constants::{
    gaussian_quantile, ratio_bound, tail_angle, tail_angle_closed_form, tail_probability, uniform_angle_second_moment,
};
use certainty_core::{HermitianOperator, Matrix, PlanckScale};

use crate::error::Result;

pub const REF_TAIL_PROBABILITY: f64 = 0.079_264_507_596_05;
pub const REF_RATIO_BOUND: f64 = 0.398_157_023_286_17;
pub const REF_GAUSSIAN_QUANTILE: f64 = 1.410_036_128_740_5;

pub const DEFAULT_LATTICE: (usize, f64) = (64, 32.0);
pub const DEFAULT_ROTOR: usize = 16;
const EIGEN_DIM: usize = 24;

/// Names accepted by the fault-injection hook.
pub const CHECK_NAMES: [&str; 8] = [
    "tail_angle_identity",
    "tail_probability",
    "ratio_bound",
    "gaussian_quantile",
    "uniform_angle_moment",
    "eigensolver_round_trip",
    "lattice_covariance_gate",
    "rotor_covariance_gate",
];

/// Applied to the measured value of the perturbed check.
const PERTURBATION: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub measured: f64,
    pub reference: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn ok(&self) -> bool {
        (self.measured - self.reference).abs() <= self.tolerance
    }
}

fn eigen_residual() -> Result<f64> {
    let a: HermitianOperator = random_hermitian(&mut seeded_rng(0x5e1f), EIGEN_DIM)?;
    let es = a.eigensystem()?;
    let v = es.vectors();
    let rebuilt = es.reconstruct();
    let orth = v.adjoint().matmul(v)?.sub(&Matrix::identity(EIGEN_DIM))?.max_abs();
    let recon = rebuilt.sub(a.matrix())?.max_abs() / a.matrix().max_abs();
    Ok(orth.max(recon))
}

pub fn checks(perturb: Option<&str>) -> Result<Vec<Check>> {
    let scale = PlanckScale::default();
    let (sites, length) = DEFAULT_LATTICE;
    let lattice = make_lattice(sites, length, scale)?.covariance_gate()?;
    let rotor = make_rotor(DEFAULT_ROTOR, scale)?.covariance_gate()?;
    let mut out = vec![
        Check {
            name: "tail_angle_identity",
            measured: tail_angle(),
            reference: tail_angle_closed_form(),
            tolerance: 1e-12,
        },
        Check {
            name: "tail_probability",
            measured: tail_probability(),
            reference: REF_TAIL_PROBABILITY,
            tolerance: 5e-13,
        },
        Check {
            name: "ratio_bound",
            measured: ratio_bound(),
            reference: REF_RATIO_BOUND,
            tolerance: 5e-13,
        },
        Check {
            name: "gaussian_quantile",
            measured: gaussian_quantile(),
            reference: REF_GAUSSIAN_QUANTILE,
            tolerance: 1e-11,
        },
        Check {
            name: "uniform_angle_moment",
            measured: uniform_angle_second_moment(),
            reference: PI * PI / 3.0,
            tolerance: 1e-14,
        },
        Check {
            name: "eigensolver_round_trip",
            measured: eigen_residual()?,
            reference: 0.0,
            tolerance: 1e-10,
        },
        Check {
            name: "lattice_covariance_gate",
            measured: lattice.deviation,
            reference: 0.0,
            tolerance: certainty_core::spectral::COVARIANCE_TOLERANCE,
        },
        Check {
            name: "rotor_covariance_gate",
            measured: rotor.deviation,
            reference: 0.0,
            tolerance: certainty_core::spectral::COVARIANCE_TOLERANCE,
        },
    ];
    if let Some(name) = perturb {
        for c in out.iter_mut().filter(|c| c.name == name) {
            c.measured += PERTURBATION;
        }
    }
    Ok(out)
}
