//! Quantum angle (Fubini–Study distance between rays), velocity
//! decomposition and quantum angular speed.

use crate::error::{check_dim, Result};
use crate::hilbert::{evolve, std_dev, HermitianOperator, PlanckScale, StateVector};
use crate::num::{dot, norm, Real, C};
use crate::relations::report::RelationReport;

/// Tolerance of the path bound `∠(U(δs)ψ, ψ) ≤ |δs|·Δ_ψA/ħ`.
pub const PATH_BOUND_TOLERANCE: f64 = 1e-10;

/// Orthogonal split of a velocity against the state it is attached to.
#[derive(Clone, Debug, PartialEq)]
pub struct VelocitySplit<T: Real = f64> {
    pub parallel: Vec<C<T>>,
    pub orthogonal: Vec<C<T>>,
}

/// A point on an angle trace along a one-parameter path.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AngleSample<T: Real = f64> {
    pub t: T,
    pub angle: T,
}

/// `(|⟨a|b⟩|, ‖b − a⟨a|b⟩‖)`.
fn overlap_and_residual<T: Real>(a: &StateVector<T>, b: &StateVector<T>) -> Result<(T, T)> {
    check_dim(a.dim(), b.dim())?;
    let ab = dot(a.amplitudes(), b.amplitudes());
    let residual: Vec<C<T>> = b
        .amplitudes()
        .iter()
        .zip(a.amplitudes())
        .map(|(bi, ai)| bi - ai * ab)
        .collect();
    Ok((ab.norm(), norm(&residual)))
}

/// `∠(a, b) = arccos |⟨a|b⟩|`, in `[0, π/2]`.
///
/// Above `|⟨a|b⟩| = 1/√2` the equivalent `arcsin ‖b − a⟨a|b⟩‖` is used, since
/// `arccos` is ill-conditioned near 1.
pub fn quantum_angle<T: Real>(a: &StateVector<T>, b: &StateVector<T>) -> Result<T> {
    check_dim(a.dim(), b.dim())?;
    if a.amplitudes() == b.amplitudes() {
        return Ok(T::zero());
    }
    let (overlap, residual) = overlap_and_residual(a, b)?;
    if overlap <= T::FRAC_1_SQRT_2() {
        Ok(overlap.min(T::one()).acos())
    } else {
        Ok(residual.min(T::one()).asin())
    }
}

/// Angle from the orthogonal residual `b − a⟨a|b⟩`, evaluated as
/// `atan2(‖b − a⟨a|b⟩‖, |⟨a|b⟩|)` which equals `arcsin ‖b − a⟨a|b⟩‖` for unit
/// vectors and keeps full relative accuracy for tiny angles.
pub fn stable_angle<T: Real>(a: &StateVector<T>, b: &StateVector<T>) -> Result<T> {
    check_dim(a.dim(), b.dim())?;
    if a.amplitudes() == b.amplitudes() {
        return Ok(T::zero());
    }
    let (overlap, residual) = overlap_and_residual(a, b)?;
    Ok(residual.atan2(overlap))
}

/// Splits `v` into `v∥ = r⟨r|v⟩` and `v⊥ = v − v∥`.
pub fn velocity_decompose<T: Real>(r: &StateVector<T>, v: &[C<T>]) -> Result<VelocitySplit<T>> {
    check_dim(r.dim(), v.len())?;
    let rv = dot(r.amplitudes(), v);
    let parallel: Vec<C<T>> = r.amplitudes().iter().map(|ri| ri * rv).collect();
    let orthogonal = v.iter().zip(&parallel).map(|(vi, pi)| vi - pi).collect();
    Ok(VelocitySplit { parallel, orthogonal })
}

/// Quantum angular speed of the orbit `e^{−isA/ħ}ψ`, i.e. `Δ_ψA/ħ`.
pub fn angular_speed_from_generator<T: Real>(
    op: &HermitianOperator<T>,
    psi: &StateVector<T>,
    scale: PlanckScale<T>,
) -> Result<T> {
    Ok(std_dev(op, psi)? / scale.hbar())
}

/// Central-difference estimate `∠(path(t+h), path(t−h)) / 2h`.
pub fn angular_speed_finite_difference<T, F>(path: F, t: T, h: T) -> Result<T>
where
    T: Real,
    F: Fn(T) -> Result<StateVector<T>>,
{
    if !(h > T::zero()) {
        return Err(crate::Error::InvalidParameter(format!("step must be positive, got {h}")));
    }
    let fwd = path(t + h)?;
    let bwd = path(t - h)?;
    Ok(stable_angle(&fwd, &bwd)? / (T::lit(2.0) * h))
}

/// Richardson extrapolation of two central differences, cancelling the `h²` term.
pub fn richardson_angular_speed<T, F>(path: F, t: T, h_coarse: T, h_fine: T) -> Result<T>
where
    T: Real,
    F: Fn(T) -> Result<StateVector<T>>,
{
    let coarse = angular_speed_finite_difference(&path, t, h_coarse)?;
    let fine = angular_speed_finite_difference(&path, t, h_fine)?;
    let (hc2, hf2) = (h_coarse * h_coarse, h_fine * h_fine);
    Ok((fine * hc2 - coarse * hf2) / (hc2 - hf2))
}

/// `∠(a,b) + ∠(b,c) − ∠(a,c)`; nonnegative by the triangle inequality.
pub fn triangle_check<T: Real>(a: &StateVector<T>, b: &StateVector<T>, c: &StateVector<T>) -> Result<T> {
    Ok(quantum_angle(a, b)? + quantum_angle(b, c)? - quantum_angle(a, c)?)
}

/// Path bound: the angle swept by `e^{−iδsA/ħ}` never exceeds `|δs|·Δ_ψA/ħ`.
pub fn path_angle_bound<T: Real>(
    psi: &StateVector<T>,
    op: &HermitianOperator<T>,
    delta: T,
    scale: PlanckScale<T>,
) -> Result<RelationReport> {
    let moved = evolve(op, delta, psi, scale)?;
    let angle = quantum_angle(&moved, psi)?;
    let speed = angular_speed_from_generator(op, psi, scale)?;
    let bound = delta.abs() * speed;
    Ok(
        RelationReport::at_most("path_angle_bound", angle.as_f64(), bound.as_f64(), PATH_BOUND_TOLERANCE)
            .with("delta", delta.as_f64())
            .with("angular_speed", speed.as_f64()),
    )
}

/// Angle to the start point along `e^{−isA/ħ}ψ` at each parameter in `params`.
pub fn orbit_trace<T: Real>(
    op: &HermitianOperator<T>,
    psi: &StateVector<T>,
    scale: PlanckScale<T>,
    params: &[T],
) -> Result<Vec<AngleSample<T>>> {
    params
        .iter()
        .map(|&t| {
            let moved = evolve(op, t, psi, scale)?;
            Ok(AngleSample {
                t,
                angle: quantum_angle(psi, &moved)?,
            })
        })
        .collect()
}
