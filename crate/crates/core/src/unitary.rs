//! One- and multi-parameter unitary groups, the certainty-principle
//! evaluator and Schrödinger propagation under time-dependent Hamiltonians.

use std::fmt;
use std::sync::Arc;

use crate::error::{check_dim, Error, Result};
use crate::geometry::quantum_angle;
use crate::hilbert::{evolve, std_dev, HermitianOperator, PlanckScale, StateVector};
use crate::num::{norm, Real, C};
use crate::relations::report::RelationReport;

/// Angle (radians) at which two states count as substantially different.
pub const SUBSTANTIAL_ANGLE: f64 = 1.0;
pub const CERTAINTY_TOLERANCE: f64 = 1e-9;
/// Coarse grid used to bracket the first substantial crossing.
pub const SEARCH_GRID_POINTS: usize = 1024;

/// Generators `A_j` of a multi-parameter group, with display labels.
#[derive(Clone, Debug)]
pub struct GeneratorSet<T: Real = f64> {
    generators: Vec<HermitianOperator<T>>,
    labels: Vec<String>,
}

impl<T: Real> GeneratorSet<T> {
    pub fn new(entries: Vec<(String, HermitianOperator<T>)>) -> Result<Self> {
        let dim = entries
            .first()
            .map(|(_, g)| g.dim())
            .ok_or_else(|| Error::InvalidParameter("empty generator set".into()))?;
        for (_, g) in &entries {
            check_dim(dim, g.dim())?;
        }
        let (labels, generators) = entries.into_iter().unzip();
        Ok(Self { generators, labels })
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.generators[0].dim()
    }

    pub fn generators(&self) -> &[HermitianOperator<T>] {
        &self.generators
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// Logarithmic coordinates `δs_j` of a group element.
#[derive(Clone, Debug, PartialEq)]
pub struct LogCoordinates<T: Real = f64>(Vec<T>);

impl<T: Real> LogCoordinates<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter("log coordinates must be finite".into()));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[T] {
        &self.0
    }

    pub fn scaled(&self, c: T) -> Self {
        Self(self.0.iter().map(|&v| v * c).collect())
    }
}

/// `Σ_j δs_j·A_j`.
pub fn combined_generator<T: Real>(gs: &GeneratorSet<T>, coords: &LogCoordinates<T>) -> Result<HermitianOperator<T>> {
    check_dim(gs.len(), coords.values().len())?;
    let mut acc = HermitianOperator::zero(gs.dim());
    for (g, &d) in gs.generators().iter().zip(coords.values()) {
        if d != T::zero() {
            acc = acc.add(&g.scaled(d))?;
        }
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CertaintyConfig {
    /// Substantial-change threshold in radians.
    pub threshold: f64,
    pub tolerance: f64,
}

impl Default for CertaintyConfig {
    fn default() -> Self {
        Self {
            threshold: SUBSTANTIAL_ANGLE,
            tolerance: CERTAINTY_TOLERANCE,
        }
    }
}

/// Certainty relation for `U(δs) = e^{−iδsA/ħ}`: a substantial change
/// (angle ≥ 1) requires `|δs|·Δ_ψA ≥ ħ`.
///
/// Non-substantial cases carry no claim and are reported `Inapplicable`.
pub fn certainty_report<T: Real>(
    psi: &StateVector<T>,
    op: &HermitianOperator<T>,
    delta: T,
    scale: PlanckScale<T>,
) -> Result<RelationReport> {
    certainty_report_with(psi, op, delta, scale, &CertaintyConfig::default())
}

pub fn certainty_report_with<T: Real>(
    psi: &StateVector<T>,
    op: &HermitianOperator<T>,
    delta: T,
    scale: PlanckScale<T>,
    config: &CertaintyConfig,
) -> Result<RelationReport> {
    certainty_core("certainty", psi, op, delta, scale, config)
}

pub(crate) fn certainty_core<T: Real>(
    id: &str,
    psi: &StateVector<T>,
    op: &HermitianOperator<T>,
    delta: T,
    scale: PlanckScale<T>,
    config: &CertaintyConfig,
) -> Result<RelationReport> {
    let moved = evolve(op, delta, psi, scale)?;
    let angle = quantum_angle(&moved, psi)?.as_f64();
    let spread = std_dev(op, psi)?.as_f64();
    let lhs = delta.abs().as_f64() * spread;
    let hbar = scale.hbar().as_f64();
    let substantial = angle >= config.threshold;
    let tol = config.tolerance * hbar.max(1.0);
    let report = RelationReport::at_least(id, lhs, hbar, tol)
        .with("angle", angle)
        .with("substantial", substantial)
        .with("delta", delta.as_f64())
        .with("std_dev", spread)
        .with("threshold", config.threshold);
    Ok(if substantial {
        report
    } else {
        report.mark(crate::relations::Status::Inapplicable, "change not substantial; no claim")
    })
}

/// Certainty relation for the group element `e^{−i(δ·A)/ħ}` of a
/// multi-parameter group.
pub fn multi_certainty_report<T: Real>(
    psi: &StateVector<T>,
    gs: &GeneratorSet<T>,
    coords: &LogCoordinates<T>,
    scale: PlanckScale<T>,
) -> Result<RelationReport> {
    let contracted = combined_generator(gs, coords)?;
    let mut r = certainty_core("multi_certainty", psi, &contracted, T::one(), scale, &CertaintyConfig::default())?;
    for (label, v) in gs.labels().iter().zip(coords.values()) {
        r.set(&format!("delta_{label}"), v.as_f64());
    }
    Ok(r)
}

/// Smallest `δs ∈ (0, cap]` at which the orbit angle reaches `threshold`,
/// bracketed on a 1024-point grid and refined by bisection.
pub fn min_substantial_parameter<T: Real>(
    psi: &StateVector<T>,
    op: &HermitianOperator<T>,
    scale: PlanckScale<T>,
    cap: T,
) -> Result<Option<T>> {
    min_substantial_parameter_with(psi, op, scale, cap, T::lit(SUBSTANTIAL_ANGLE))
}

pub fn min_substantial_parameter_with<T: Real>(
    psi: &StateVector<T>,
    op: &HermitianOperator<T>,
    scale: PlanckScale<T>,
    cap: T,
    threshold: T,
) -> Result<Option<T>> {
    if !(cap > T::zero()) {
        return Err(Error::InvalidParameter(format!("search cap must be positive, got {cap}")));
    }
    let angle_at = |s: T| -> Result<T> { quantum_angle(&evolve(op, s, psi, scale)?, psi) };
    let n = T::lit(SEARCH_GRID_POINTS as f64);
    let mut lo = T::zero();
    let mut hi = None;
    for i in 1..=SEARCH_GRID_POINTS {
        let s = cap * T::lit(i as f64) / n;
        if angle_at(s)? >= threshold {
            hi = Some(s);
            break;
        }
        lo = s;
    }
    let Some(mut hi) = hi else {
        return Ok(None);
    };
    let rel = T::tolerance(1e-13);
    while hi - lo > rel * hi {
        let mid = lo + (hi - lo) / T::lit(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        if angle_at(mid)? >= threshold {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Some(hi))
}

type Evaluator<T> = dyn Fn(T) -> Result<HermitianOperator<T>> + Send + Sync;

/// Time-dependent Hamiltonian `t ↦ H^full(t)`.
#[derive(Clone)]
pub struct DrivenHamiltonian<T: Real = f64> {
    dim: usize,
    evaluator: Arc<Evaluator<T>>,
}

impl<T: Real> fmt::Debug for DrivenHamiltonian<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DrivenHamiltonian").field("dim", &self.dim).finish_non_exhaustive()
    }
}

impl<T: Real> DrivenHamiltonian<T> {
    pub fn new(dim: usize, evaluator: impl Fn(T) -> Result<HermitianOperator<T>> + Send + Sync + 'static) -> Self {
        Self {
            dim,
            evaluator: Arc::new(evaluator),
        }
    }

    pub fn constant(h: HermitianOperator<T>) -> Self {
        let dim = h.dim();
        Self::new(dim, move |_| Ok(h.clone()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, t: T) -> Result<HermitianOperator<T>> {
        let h = (self.evaluator)(t)?;
        check_dim(self.dim, h.dim())?;
        Ok(h)
    }
}

/// States sampled on the integration grid.
#[derive(Clone, Debug)]
pub struct Trajectory<T: Real = f64> {
    pub times: Vec<T>,
    pub states: Vec<StateVector<T>>,
    /// Largest `|‖ψ‖ − 1|` observed after a raw step, before renormalisation.
    pub max_norm_drift: T,
}

/// Fixed-step classical RK4 integrator for `iħ·dψ/dt = H(t)ψ`, renormalising
/// after every step.
#[derive(Clone, Debug)]
pub struct Propagator<T: Real = f64> {
    hamiltonian: DrivenHamiltonian<T>,
    hbar: T,
    t: T,
    psi: StateVector<T>,
    max_norm_drift: T,
}

impl<T: Real> Propagator<T> {
    pub fn new(hamiltonian: DrivenHamiltonian<T>, psi0: StateVector<T>, t0: T, scale: PlanckScale<T>) -> Result<Self> {
        check_dim(hamiltonian.dim(), psi0.dim())?;
        Ok(Self {
            hamiltonian,
            hbar: scale.hbar(),
            t: t0,
            psi: psi0,
            max_norm_drift: T::zero(),
        })
    }

    pub fn time(&self) -> T {
        self.t
    }

    pub fn state(&self) -> &StateVector<T> {
        &self.psi
    }

    pub fn max_norm_drift(&self) -> T {
        self.max_norm_drift
    }

    pub fn hamiltonian(&self) -> &DrivenHamiltonian<T> {
        &self.hamiltonian
    }

    fn derivative(&self, t: T, psi: &[C<T>]) -> Result<Vec<C<T>>> {
        let h = self.hamiltonian.at(t)?;
        let factor = C::new(T::zero(), -T::one() / self.hbar);
        Ok(h.apply(psi)?.into_iter().map(|z| z * factor).collect())
    }

    /// One RK4 step of size `h` from the current state, without committing it.
    /// Returns the raw (unnormalised) result.
    pub fn trial_step(&self, h: T) -> Result<Vec<C<T>>> {
        let y = self.psi.amplitudes();
        let half = h / T::lit(2.0);
        let axpy = |a: &[C<T>], k: &[C<T>], s: T| -> Vec<C<T>> { a.iter().zip(k).map(|(x, d)| x + d * s).collect() };
        let k1 = self.derivative(self.t, y)?;
        let k2 = self.derivative(self.t + half, &axpy(y, &k1, half))?;
        let k3 = self.derivative(self.t + half, &axpy(y, &k2, half))?;
        let k4 = self.derivative(self.t + h, &axpy(y, &k3, h))?;
        let sixth = h / T::lit(6.0);
        let two = T::lit(2.0);
        Ok((0..y.len())
            .map(|i| y[i] + (k1[i] + k2[i] * two + k3[i] * two + k4[i]) * sixth)
            .collect())
    }

    pub fn step(&mut self, h: T) -> Result<()> {
        let raw = self.trial_step(h)?;
        let drift = (norm(&raw) - T::one()).abs();
        self.max_norm_drift = self.max_norm_drift.max(drift);
        self.psi = StateVector::new(raw)?;
        self.t = self.t + h;
        Ok(())
    }
}

/// Integrates from `t0` to `t1` with a uniform step no larger than `dt`.
pub fn propagate_driven<T: Real>(
    hamiltonian: &DrivenHamiltonian<T>,
    psi0: &StateVector<T>,
    t0: T,
    t1: T,
    dt: T,
    scale: PlanckScale<T>,
) -> Result<Trajectory<T>> {
    if !(dt > T::zero()) || !(t1 > t0) {
        return Err(Error::InvalidParameter(format!(
            "need dt > 0 and t1 > t0 (dt = {dt}, t0 = {t0}, t1 = {t1})"
        )));
    }
    let steps = ((t1 - t0) / dt * (T::one() - T::tolerance(1e-12))).ceil().to_usize().unwrap_or(1).max(1);
    let h = (t1 - t0) / T::lit(steps as f64);
    let mut prop = Propagator::new(hamiltonian.clone(), psi0.clone(), t0, scale)?;
    let mut times = Vec::with_capacity(steps + 1);
    let mut states = Vec::with_capacity(steps + 1);
    times.push(t0);
    states.push(psi0.clone());
    for k in 1..=steps {
        prop.step(h)?;
        times.push(t0 + h * T::lit(k as f64));
        states.push(prop.state().clone());
    }
    Ok(Trajectory {
        times,
        states,
        max_norm_drift: prop.max_norm_drift(),
    })
}
