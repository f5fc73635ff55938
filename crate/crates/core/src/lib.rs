//! Quantum-angle geometry on finite-dimensional Hilbert spaces and numerical
//! evaluators for the certainty principle and the uncertainty relations it
//! implies.
//!
//! Everything numerical is generic over the real scalar ([`Real`], implemented
//! for `f32` and `f64`); the aliases at the crate root fix it to `f64`, and
//! the `*32` aliases to `f32`.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0)` deliberately rejects NaN

mod error;
mod num;

pub mod geometry;
pub mod hilbert;
pub mod models;
pub mod random;
pub mod relations;
pub mod spectral;
pub mod unitary;

pub use error::{Error, Result};
pub use num::{Real, C};

pub type Complex64 = C<f64>;
pub type StateVector = hilbert::StateVector<f64>;
pub type HermitianOperator = hilbert::HermitianOperator<f64>;
pub type Matrix = hilbert::Matrix<f64>;
pub type EigenSystem = hilbert::EigenSystem<f64>;
pub type PlanckScale = hilbert::PlanckScale<f64>;
pub type SpectralMeasure = spectral::SpectralMeasure<f64>;
pub type IntervalUncertainty = spectral::IntervalUncertainty<f64>;
pub type CovarianceGate = spectral::CovarianceGate<f64>;
pub type GeneratorSet = unitary::GeneratorSet<f64>;
pub type LogCoordinates = unitary::LogCoordinates<f64>;
pub type DrivenHamiltonian = unitary::DrivenHamiltonian<f64>;
pub type LatticeSystem = models::LatticeSystem<f64>;
pub type RotorSystem = models::RotorSystem<f64>;
pub type SpinSystem = models::SpinSystem<f64>;
pub type RabiDrive = models::RabiDrive<f64>;

pub type StateVector32 = hilbert::StateVector<f32>;
pub type HermitianOperator32 = hilbert::HermitianOperator<f32>;
pub type Matrix32 = hilbert::Matrix<f32>;
pub type PlanckScale32 = hilbert::PlanckScale<f32>;
pub type SpectralMeasure32 = spectral::SpectralMeasure<f32>;
