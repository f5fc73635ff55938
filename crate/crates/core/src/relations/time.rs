//! Time–energy relations: `|δt|·Δ_ψH ≥ ħ` for time-independent `H`, and its
//! time-averaged form along a driven trajectory.

use super::report::{relative_tolerance, RelationReport, Status};
use crate::error::{Error, Result};
use crate::geometry::quantum_angle;
use crate::hilbert::{std_dev, HermitianOperator, PlanckScale, StateVector};
use crate::num::Real;
use crate::unitary::{
    certainty_core, min_substantial_parameter_with, CertaintyConfig, DrivenHamiltonian, Propagator, SUBSTANTIAL_ANGLE,
};

/// Relative change of the driven `lhs` under grid halving above which the
/// quadrature counts as unconverged.
pub const GRID_HALVING_TOLERANCE: f64 = 1e-4;
/// Default search horizon, in units of `ħ/Δ_ψH`.
pub const DEFAULT_CAP_FACTOR: f64 = 10.0;

/// Time shifts are generated by `−H`; the first substantial `δt` is searched
/// up to `cap` (default `10ħ/Δ_ψH`).
pub fn mandelshtam_tamm_closed<T: Real>(
    psi: &StateVector<T>,
    h: &HermitianOperator<T>,
    scale: PlanckScale<T>,
    cap: Option<T>,
) -> Result<RelationReport> {
    mandelshtam_tamm_closed_with(psi, h, scale, cap, &CertaintyConfig::default())
}

/// [`mandelshtam_tamm_closed`] with a non-default substantial-change
/// threshold or tolerance.
pub fn mandelshtam_tamm_closed_with<T: Real>(
    psi: &StateVector<T>,
    h: &HermitianOperator<T>,
    scale: PlanckScale<T>,
    cap: Option<T>,
    config: &CertaintyConfig,
) -> Result<RelationReport> {
    let id = "mandelshtam_tamm_closed";
    let dh = std_dev(h, psi)?;
    let floor = T::tolerance(1e-14) * T::one().max(h.matrix().max_abs());
    if dh <= floor {
        return Ok(RelationReport::inapplicable(id, "stationary state").with("std_dev_h", dh.as_f64()));
    }
    let cap = cap.unwrap_or_else(|| T::lit(DEFAULT_CAP_FACTOR) * scale.hbar() / dh);
    let generator = h.negated();
    match min_substantial_parameter_with(psi, &generator, scale, cap, T::lit(config.threshold))? {
        None => Ok(RelationReport::inapplicable(id, "no substantial change within the time cap")
            .with("std_dev_h", dh.as_f64())
            .with("cap", cap.as_f64())),
        Some(t) => Ok(certainty_core(id, psi, &generator, t, scale, config)?
            .with("delta_t", t.as_f64())
            .with("cap", cap.as_f64())),
    }
}

/// First substantial crossing along a driven trajectory.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DrivenCrossing<T: Real = f64> {
    pub tau: T,
    /// `∫₀^τ Δ_{ψ(t)}H(t) dt` by the trapezoid rule on the step grid.
    pub integral: T,
    pub steps: usize,
    pub max_norm_drift: T,
}

impl<T: Real> DrivenCrossing<T> {
    pub fn average(&self) -> T {
        self.integral / self.tau
    }
}

/// Integrates from `t = 0` with step `dt` until the angle to `ψ0` first
/// reaches 1, refining the final partial step by bisection.
pub fn first_driven_crossing<T: Real>(
    h: &DrivenHamiltonian<T>,
    psi0: &StateVector<T>,
    scale: PlanckScale<T>,
    dt: T,
    cap: T,
) -> Result<Option<DrivenCrossing<T>>> {
    if !(dt > T::zero()) || !(cap > T::zero()) {
        return Err(Error::InvalidParameter(format!("need dt > 0 and cap > 0 (dt = {dt}, cap = {cap})")));
    }
    let threshold = T::lit(SUBSTANTIAL_ANGLE);
    let mut prop = Propagator::new(h.clone(), psi0.clone(), T::zero(), scale)?;
    let mut prev = std_dev(&h.at(T::zero())?, psi0)?;
    let mut integral = T::zero();
    let mut steps = 0;
    let half = T::lit(0.5);
    while prop.time() < cap {
        let t = prop.time();
        let step = dt.min(cap - t);
        let angle_after = |s: T| -> Result<(T, StateVector<T>)> {
            let state = StateVector::new(prop.trial_step(s)?)?;
            Ok((quantum_angle(&state, psi0)?, state))
        };
        let (angle, _) = angle_after(step)?;
        if angle >= threshold {
            let (mut lo, mut hi) = (T::zero(), step);
            while hi - lo > T::tolerance(1e-13) * (t + step) {
                let mid = (lo + hi) * half;
                if mid <= lo || mid >= hi {
                    break;
                }
                if angle_after(mid)?.0 >= threshold {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let (_, state) = angle_after(hi)?;
            let end = std_dev(&h.at(t + hi)?, &state)?;
            integral = integral + (prev + end) * half * hi;
            return Ok(Some(DrivenCrossing {
                tau: t + hi,
                integral,
                steps: steps + 1,
                max_norm_drift: prop.max_norm_drift(),
            }));
        }
        prop.step(step)?;
        steps += 1;
        let next = std_dev(&h.at(prop.time())?, prop.state())?;
        integral = integral + (prev + next) * half * step;
        prev = next;
    }
    Ok(None)
}

/// `τ·avg_{[0,τ]} Δ_ψH(t) ≥ ħ` at the first substantial time `τ`.
///
/// The run is repeated at `dt/2`; the finer run is reported, and a relative
/// change above [`GRID_HALVING_TOLERANCE`] marks it unconverged.
pub fn mandelshtam_tamm_driven<T: Real>(
    h: &DrivenHamiltonian<T>,
    psi0: &StateVector<T>,
    scale: PlanckScale<T>,
    dt: T,
    cap: T,
) -> Result<RelationReport> {
    let id = "mandelshtam_tamm_driven";
    let coarse = first_driven_crossing(h, psi0, scale, dt, cap)?;
    let fine = first_driven_crossing(h, psi0, scale, dt * T::lit(0.5), cap)?;
    let (coarse, fine) = match (coarse, fine) {
        (Some(c), Some(f)) => (c, f),
        (None, None) => {
            return Ok(RelationReport::inapplicable(id, "no substantial change within the time cap")
                .with("cap", cap.as_f64())
                .with("dt", dt.as_f64()))
        }
        _ => {
            return Ok(RelationReport::inapplicable(id, "unconverged: crossing depends on the grid")
                .with("cap", cap.as_f64())
                .with("dt", dt.as_f64()))
        }
    };
    let hbar = scale.hbar().as_f64();
    let lhs = fine.integral.as_f64();
    let change = (lhs - coarse.integral.as_f64()).abs() / lhs.abs().max(f64::MIN_POSITIVE);
    let converged = change < GRID_HALVING_TOLERANCE;
    let r = RelationReport::at_least(id, lhs, hbar, relative_tolerance(hbar))
        .with("tau", fine.tau.as_f64())
        .with("average_std_dev_h", fine.average().as_f64())
        .with("dt", dt.as_f64() / 2.0)
        .with("steps", fine.steps)
        .with("norm_drift", fine.max_norm_drift.as_f64())
        .with("grid_change", change)
        .with("converged", converged);
    Ok(if converged {
        r
    } else {
        r.mark(Status::Inapplicable, "unconverged under grid halving")
    })
}
