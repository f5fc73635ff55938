//! Spectral measures of observables on the line and on the circle, interval
//! projectors `Ω_(a,b)` and the quantile-based interval uncertainties.
//!
//! Intervals are half-open: `(a, b]` holds the atoms with `a < value ≤ b`.
//! On the circle `(a, b)` is the arc from `a` counterclockwise to `b` and is
//! read modulo 2π. Interval uncertainties use open tails, `⟨Ω_(−∞,l)⟩` and
//! `⟨Ω_(r,+∞)⟩`, so the atoms at `l` and `r` belong to the central interval.

use crate::error::{check_dim, Error, Result};
use crate::hilbert::{HermitianOperator, Matrix, PlanckScale, StateVector};
use crate::num::{dot, Real, C};

/// Eigenvalues closer than this (relative to the spectral radius, floor 1)
/// are merged into a single atom.
pub const CLUSTER_TOLERANCE: f64 = 1e-9;
/// Endpoint tolerance used when deciding atom membership.
pub const MEMBERSHIP_TOLERANCE: f64 = 1e-12;
/// Largest covariance defect for which a model counts as shift-covariant.
pub const COVARIANCE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Topology {
    Line,
    /// Values are angles, taken modulo 2π.
    Circle,
}

/// One spectral value with an orthonormal basis of its eigenspace.
#[derive(Clone, Debug, PartialEq)]
pub struct Atom<T: Real = f64> {
    pub value: T,
    pub basis: Vec<Vec<C<T>>>,
}

impl<T: Real> Atom<T> {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// `‖Ω_atom ψ‖²`.
    pub fn probability(&self, psi: &[C<T>]) -> T {
        self.basis.iter().map(|b| dot(b, psi).norm_sqr()).sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralMeasure<T: Real = f64> {
    topology: Topology,
    dim: usize,
    atoms: Vec<Atom<T>>,
}

/// Interval `(l, r)` with the probabilities left outside it.
///
/// On the circle there is a single complementary arc `(r, l + 2π)`; its
/// probability is stored in both tail fields.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntervalUncertainty<T: Real = f64> {
    pub l: T,
    pub r: T,
    pub width: T,
    pub left_tail: T,
    pub right_tail: T,
    pub l_index: usize,
    pub r_index: usize,
    /// Width is zero: a single atom carries more than `1 − 2q` (line) or
    /// `1 − q` (circle) of the probability.
    pub degenerate: bool,
}

/// The tail probability `(1 − sin 1)/2` at which the interval uncertainty is read.
pub fn default_tail<T: Real>() -> T {
    (T::one() - T::one().sin()) / T::lit(2.0)
}

fn check_tail<T: Real>(q: T) -> Result<()> {
    if q > T::zero() && q < T::lit(0.5) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("tail probability must lie in (0, 1/2), got {q}")))
    }
}

impl<T: Real> SpectralMeasure<T> {
    /// Spectral measure of a Hermitian operator, grouping eigenvalues that
    /// agree within [`CLUSTER_TOLERANCE`].
    pub fn from_operator(op: &HermitianOperator<T>, topology: Topology) -> Result<Self> {
        let es = op.eigensystem()?;
        Self::from_eigenpairs(topology, es.values(), es.vectors())
    }

    /// Measure from known eigenpairs (`vectors` holds them as columns).
    pub fn from_eigenpairs(topology: Topology, values: &[T], vectors: &Matrix<T>) -> Result<Self> {
        check_dim(vectors.dim(), values.len())?;
        let two_pi = T::PI() + T::PI();
        let mut pairs: Vec<(T, Vec<C<T>>)> = values
            .iter()
            .enumerate()
            .map(|(k, &v)| {
                let v = match topology {
                    Topology::Line => v,
                    Topology::Circle => wrap_angle(v),
                };
                (v, vectors.column(k))
            })
            .collect();
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal));

        let radius = values.iter().fold(T::one(), |m, v| m.max(v.abs()));
        let tol = T::tolerance(CLUSTER_TOLERANCE) * radius;
        let mut atoms: Vec<Atom<T>> = Vec::new();
        for (v, vec) in pairs {
            match atoms.last_mut() {
                Some(last) if v - last.value <= tol => last.basis.push(vec),
                _ => atoms.push(Atom { value: v, basis: vec![vec] }),
            }
        }
        if topology == Topology::Circle && atoms.len() > 1 {
            let first = atoms[0].value;
            let last = atoms[atoms.len() - 1].value;
            if first + two_pi - last <= tol {
                let tail = atoms.pop().expect("nonempty");
                atoms[0].basis.extend(tail.basis);
            }
        }
        Ok(Self {
            topology,
            dim: values.len(),
            atoms,
        })
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn atoms(&self) -> &[Atom<T>] {
        &self.atoms
    }

    pub fn values(&self) -> Vec<T> {
        self.atoms.iter().map(|a| a.value).collect()
    }

    /// Probability carried by each atom in state `psi`.
    pub fn atom_probabilities(&self, psi: &StateVector<T>) -> Result<Vec<T>> {
        check_dim(self.dim, psi.dim())?;
        Ok(self.atoms.iter().map(|a| a.probability(psi.amplitudes())).collect())
    }

    /// Indices of the atoms in the interval `(a, b]` (arc on the circle).
    pub fn atoms_in(&self, a: T, b: T) -> Result<Vec<usize>> {
        if a.is_nan() || b.is_nan() || b < a {
            return Err(Error::MalformedInterval(a.as_f64(), b.as_f64()));
        }
        let two_pi = T::PI() + T::PI();
        let out = match self.topology {
            Topology::Line => {
                let tol = T::tolerance(MEMBERSHIP_TOLERANCE) * T::one().max(a.abs().min(b.abs()));
                let tol = if tol.is_finite() { tol } else { T::zero() };
                (0..self.atoms.len())
                    .filter(|&k| {
                        let v = self.atoms[k].value;
                        v > a + tol && v <= b + tol
                    })
                    .collect()
            }
            Topology::Circle => {
                let len = b - a;
                if len >= two_pi {
                    return Ok((0..self.atoms.len()).collect());
                }
                let tol = T::tolerance(MEMBERSHIP_TOLERANCE);
                (0..self.atoms.len())
                    .filter(|&k| {
                        let mut d = (self.atoms[k].value - a).rem_euclid(two_pi);
                        if d >= two_pi - tol {
                            d = T::zero();
                        }
                        d > tol && d <= len + tol
                    })
                    .collect()
            }
        };
        Ok(out)
    }

    /// `⟨ψ|Ω_(a,b)|ψ⟩`.
    pub fn interval_probability(&self, psi: &StateVector<T>, a: T, b: T) -> Result<T> {
        check_dim(self.dim, psi.dim())?;
        Ok(self
            .atoms_in(a, b)?
            .into_iter()
            .map(|k| self.atoms[k].probability(psi.amplitudes()))
            .sum())
    }

    /// `Σ_k Ω_k ψ` over the given atom indices (unnormalised).
    pub fn project(&self, psi: &[C<T>], atoms: &[usize]) -> Vec<C<T>> {
        let mut out = vec![C::new(T::zero(), T::zero()); psi.len()];
        for &k in atoms {
            for b in &self.atoms[k].basis {
                let c = dot(b, psi);
                for (o, bi) in out.iter_mut().zip(b) {
                    *o = *o + bi * c;
                }
            }
        }
        out
    }

    /// Dense projector `Ω_(a,b)`.
    pub fn projector(&self, a: T, b: T) -> Result<Matrix<T>> {
        let idx = self.atoms_in(a, b)?;
        Ok(self.projector_of(&idx, |v| v.clone()))
    }

    fn projector_of(&self, atoms: &[usize], mut map: impl FnMut(&Vec<C<T>>) -> Vec<C<T>>) -> Matrix<T> {
        let mut m = Matrix::zeros(self.dim);
        for &k in atoms {
            for b in &self.atoms[k].basis {
                let w = map(b);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m[(i, j)] = m[(i, j)] + w[i] * w[j].conj();
                    }
                }
            }
        }
        m
    }

    /// `max |Σ_k Ω_k − I|`.
    pub fn completeness_defect(&self) -> T {
        let all: Vec<usize> = (0..self.atoms.len()).collect();
        self.projector_of(&all, |v| v.clone())
            .sub(&Matrix::identity(self.dim))
            .map(|m| m.max_abs())
            .unwrap_or_else(|_| T::infinity())
    }

    /// Mean and standard deviation of the atom values (line topology).
    pub fn moments(&self, psi: &StateVector<T>) -> Result<(T, T)> {
        let probs = self.atom_probabilities(psi)?;
        Ok(distribution_moments(&self.values(), &probs))
    }
}

/// Maps an angle into `[0, 2π)`.
pub fn wrap_angle<T: Real>(v: T) -> T {
    let two_pi = T::PI() + T::PI();
    let w = v.rem_euclid(two_pi);
    if w >= two_pi {
        T::zero()
    } else {
        w
    }
}

pub fn distribution_moments<T: Real>(values: &[T], probs: &[T]) -> (T, T) {
    let total: T = probs.iter().copied().sum();
    let mean = values.iter().zip(probs).map(|(&v, &p)| v * p).sum::<T>() / total;
    let var = values
        .iter()
        .zip(probs)
        .map(|(&v, &p)| (v - mean) * (v - mean) * p)
        .sum::<T>()
        / total;
    (mean, var.sqrt())
}

/// Interval uncertainty on the line: `l` is the largest point with
/// `P(X < l) ≤ q`, `r` the smallest with `P(X > r) ≤ q`.
pub fn line_uncertainty<T: Real>(m: &SpectralMeasure<T>, psi: &StateVector<T>, q: T) -> Result<IntervalUncertainty<T>> {
    if m.topology() != Topology::Line {
        return Err(Error::InvalidParameter("line uncertainty needs a line measure".into()));
    }
    line_uncertainty_from_distribution(&m.values(), &m.atom_probabilities(psi)?, q)
}

/// [`line_uncertainty`] on an explicit discrete distribution with strictly
/// increasing `values`.
pub fn line_uncertainty_from_distribution<T: Real>(values: &[T], probs: &[T], q: T) -> Result<IntervalUncertainty<T>> {
    check_tail(q)?;
    check_dim(values.len(), probs.len())?;
    if values.is_empty() {
        return Err(Error::InvalidParameter("empty distribution".into()));
    }
    let n = values.len();
    let mut below = T::zero();
    let mut l_index = n - 1;
    for (k, &p) in probs.iter().enumerate() {
        if below + p > q {
            l_index = k;
            break;
        }
        below = below + p;
    }
    let mut above = T::zero();
    let mut r_index = 0;
    for (k, &p) in probs.iter().enumerate().rev() {
        if above + p > q {
            r_index = k;
            break;
        }
        above = above + p;
    }
    let (l, r) = (values[l_index], values[r_index]);
    let width = (r - l).max(T::zero());
    Ok(IntervalUncertainty {
        l,
        r,
        width,
        left_tail: below,
        right_tail: above,
        l_index,
        r_index,
        degenerate: width == T::zero(),
    })
}

/// Interval uncertainty on the circle: the shortest arc `(l, r)` whose
/// complement carries probability at most `q`; ties go to the smallest `l`.
pub fn circle_uncertainty<T: Real>(m: &SpectralMeasure<T>, psi: &StateVector<T>, q: T) -> Result<IntervalUncertainty<T>> {
    if m.topology() != Topology::Circle {
        return Err(Error::InvalidParameter("circle uncertainty needs a circle measure".into()));
    }
    circle_uncertainty_from_distribution(&m.values(), &m.atom_probabilities(psi)?, q)
}

/// [`circle_uncertainty`] on explicit angles in `[0, 2π)`, strictly increasing.
pub fn circle_uncertainty_from_distribution<T: Real>(values: &[T], probs: &[T], q: T) -> Result<IntervalUncertainty<T>> {
    check_tail(q)?;
    check_dim(values.len(), probs.len())?;
    let n = values.len();
    if n == 0 {
        return Err(Error::InvalidParameter("empty distribution".into()));
    }
    let two_pi = T::PI() + T::PI();
    let total: T = probs.iter().copied().sum();
    let tie = T::tolerance(MEMBERSHIP_TOLERANCE);
    let mut best: Option<IntervalUncertainty<T>> = None;
    for i in 0..n {
        let mut covered = T::zero();
        for len in 0..n {
            let j = (i + len) % n;
            covered = covered + probs[j];
            let outside = (total - covered).max(T::zero());
            if outside <= q {
                let mut width = values[j] - values[i];
                if len > 0 && j <= i {
                    width = width + two_pi;
                }
                let better = match &best {
                    None => true,
                    Some(b) => width < b.width - tie,
                };
                if better {
                    best = Some(IntervalUncertainty {
                        l: values[i],
                        r: values[i] + width,
                        width,
                        left_tail: outside,
                        right_tail: outside,
                        l_index: i,
                        r_index: j,
                        degenerate: width == T::zero(),
                    });
                }
                break;
            }
        }
    }
    best.ok_or_else(|| Error::InvalidParameter("distribution carries no probability".into()))
}

/// Test family of atom index ranges used by [`shift_covariance_check`].
fn covariance_family(n: usize, topology: Topology) -> Vec<(usize, usize)> {
    let lengths: Vec<usize> = {
        let mut l = vec![1, 2, 3, (n / 8).max(1)];
        l.sort_unstable();
        l.dedup();
        l.into_iter().filter(|&x| x < n).collect()
    };
    let starts: Vec<usize> = match topology {
        Topology::Line => {
            let lo = (n / 4).max(1);
            let hi = (n / 2).max(lo + 1).min(n);
            let span = hi - lo;
            (0..4).map(|k| lo + k * span / 4).collect()
        }
        Topology::Circle => (0..4).map(|k| k * n / 4).collect(),
    };
    let mut out = Vec::new();
    for &s in &starts {
        for &len in &lengths {
            if topology == Topology::Line && s + len >= n {
                continue;
            }
            out.push((s, len));
        }
    }
    out.dedup();
    out
}

/// `max ‖e^{+iδP/ħ}·Ω_(a+δ,b+δ)·e^{−iδP/ħ} − Ω_(a,b)‖_max` over a family of
/// intervals whose endpoints sit halfway between neighbouring atoms.
/// Zero (to rounding) when `P` generates exact spectral shifts at step `δ`.
pub fn shift_covariance_check<T: Real>(
    m: &SpectralMeasure<T>,
    generator: &HermitianOperator<T>,
    delta: T,
    scale: PlanckScale<T>,
) -> Result<T> {
    check_dim(m.dim(), generator.dim())?;
    let n = m.atoms.len();
    if n < 2 {
        return Ok(T::zero());
    }
    let es = generator.eigensystem()?;
    let two_pi = T::PI() + T::PI();
    let values = m.values();
    let half = T::lit(0.5);
    // midpoint just below atom k
    let mid_below = |k: usize| -> T {
        match m.topology {
            Topology::Line => (values[k - 1] + values[k]) * half,
            Topology::Circle => {
                if k == 0 {
                    (values[n - 1] - two_pi + values[0]) * half
                } else {
                    (values[k - 1] + values[k]) * half
                }
            }
        }
    };
    let mut worst = T::zero();
    for (start, len) in covariance_family(n, m.topology) {
        let a = mid_below(start);
        let b = match m.topology {
            Topology::Line => mid_below(start + len),
            Topology::Circle => {
                let end = (start + len) % n;
                let mut b = mid_below(end);
                while b <= a {
                    b = b + two_pi;
                }
                b
            }
        };
        let original = m.projector(a, b)?;
        let moved_atoms = m.atoms_in(a + delta, b + delta)?;
        let mut err = None;
        let shifted = m.projector_of(&moved_atoms, |v| match es.propagate(v, -delta, scale.hbar()) {
            Ok(w) => w,
            Err(e) => {
                err = Some(e);
                v.clone()
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        worst = worst.max(shifted.sub(&original)?.max_abs());
    }
    Ok(worst)
}

/// Records whether a generator shifts a measure covariantly at a given step.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CovarianceGate<T: Real = f64> {
    pub step: T,
    pub deviation: T,
}

impl<T: Real> CovarianceGate<T> {
    pub fn qualify(m: &SpectralMeasure<T>, generator: &HermitianOperator<T>, step: T, scale: PlanckScale<T>) -> Result<Self> {
        Ok(Self {
            step,
            deviation: shift_covariance_check(m, generator, step, scale)?,
        })
    }

    pub fn holds(&self) -> bool {
        self.deviation <= T::tolerance(COVARIANCE_TOLERANCE)
    }

    /// The gate holds and `delta` is an integer multiple of the qualified step.
    pub fn covers(&self, delta: T) -> bool {
        if !self.holds() {
            return false;
        }
        let ratio = delta / self.step;
        (ratio - ratio.round()).abs() <= T::tolerance(1e-9) * T::one().max(ratio.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::quantum_angle;
    use std::f64::consts::PI;

    fn diag_measure(values: &[f64], topology: Topology) -> SpectralMeasure {
        SpectralMeasure::from_operator(&HermitianOperator::from_real_diagonal(values), topology).unwrap()
    }

    #[test]
    fn atoms_from_diagonal() {
        let m = diag_measure(&[0.0, 1.0, 2.0], Topology::Line);
        assert_eq!(m.values(), vec![0.0, 1.0, 2.0]);
        assert!(m.atoms().iter().all(|a| a.rank() == 1));
        let m = diag_measure(&[0.0, 0.0, 1.0], Topology::Line);
        assert_eq!(m.values(), vec![0.0, 1.0]);
        assert_eq!(m.atoms()[0].rank(), 2);
        assert!(m.completeness_defect() < 1e-15);
    }

    #[test]
    fn circle_atoms_wrap() {
        let m = diag_measure(&[-0.5, 2.0 * PI + 0.25, 1e-12, 2.0 * PI - 1e-12], Topology::Circle);
        assert_eq!(m.atoms().len(), 3);
        assert_eq!(m.atoms()[0].rank(), 2);
        assert!((m.values()[1] - 0.25).abs() < 1e-12);
        assert!((m.values()[2] - (2.0 * PI - 0.5)).abs() < 1e-12);
    }

    #[test]
    fn interval_probability_basics() {
        let m = diag_measure(&[0.0, 1.0, 2.0], Topology::Line);
        let psi = StateVector::from_real(&[1.0, 1.0, 1.0]).unwrap();
        assert!((m.interval_probability(&psi, f64::NEG_INFINITY, f64::INFINITY).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(m.interval_probability(&psi, 0.5, 0.5).unwrap(), 0.0);
        // half-open (a, b]
        assert!((m.interval_probability(&psi, 0.0, 1.0).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!(matches!(m.interval_probability(&psi, 1.0, 0.0), Err(Error::MalformedInterval(..))));
        // additivity over adjacent intervals
        let whole = m.interval_probability(&psi, -0.5, 2.5).unwrap();
        let parts = m.interval_probability(&psi, -0.5, 0.7).unwrap() + m.interval_probability(&psi, 0.7, 2.5).unwrap();
        assert!((whole - parts).abs() < 1e-15);
    }

    #[test]
    fn circle_periodicity_exact() {
        let vals: Vec<f64> = (0..7).map(|k| 2.0 * PI * k as f64 / 7.0).collect();
        let m = diag_measure(&vals, Topology::Circle);
        let psi = StateVector::from_real(&[1.0, 2.0, 0.5, 0.0, 1.0, 3.0, 1.0]).unwrap();
        for &(a, b) in &[(0.1, 2.0), (5.0, 7.5), (-1.0, 0.3)] {
            let p = m.interval_probability(&psi, a, b).unwrap();
            let shifted = m.interval_probability(&psi, a + 2.0 * PI, b + 2.0 * PI).unwrap();
            assert_eq!(p, shifted);
        }
        assert!((m.interval_probability(&psi, 1.0, 1.0 + 2.0 * PI).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn two_atom_line_uncertainty() {
        let u = line_uncertainty_from_distribution(&[0.0, 1.0], &[0.5, 0.5], 0.0793).unwrap();
        assert_eq!((u.l, u.r, u.width), (0.0, 1.0, 1.0));
        assert_eq!((u.left_tail, u.right_tail), (0.0, 0.0));
        assert!(!u.degenerate);
    }

    #[test]
    fn point_mass_is_degenerate() {
        let u = line_uncertainty_from_distribution(&[0.0, 1.0, 2.0], &[0.0, 1.0, 0.0], default_tail()).unwrap();
        assert_eq!(u.width, 0.0);
        assert!(u.degenerate);
        let u = circle_uncertainty_from_distribution(&[0.0, 1.0, 2.0], &[0.0, 1.0, 0.0], default_tail()).unwrap();
        assert_eq!(u.width, 0.0);
        assert!(u.degenerate);
    }

    #[test]
    fn tail_bounds_respected() {
        let values: Vec<f64> = (0..10).map(|k| k as f64).collect();
        let probs = [0.05, 0.02, 0.3, 0.1, 0.1, 0.1, 0.2, 0.03, 0.04, 0.06];
        let q = default_tail();
        let u = line_uncertainty_from_distribution(&values, &probs, q).unwrap();
        assert!(u.left_tail <= q && u.right_tail <= q);
        // moving either endpoint inward would push its tail above q
        assert!(u.left_tail + probs[u.l_index] > q);
        assert!(u.right_tail + probs[u.r_index] > q);
        assert_eq!((u.l, u.r), (2.0, 8.0));
    }

    #[test]
    fn invalid_tail_rejected() {
        assert!(line_uncertainty_from_distribution(&[0.0, 1.0], &[0.5, 0.5], 0.5).is_err());
        assert!(circle_uncertainty_from_distribution(&[0.0, 1.0], &[0.5, 0.5], 0.0).is_err());
    }

    #[test]
    fn antipodal_atoms_tie_break() {
        let u = circle_uncertainty_from_distribution(&[0.0, PI], &[0.5, 0.5], default_tail()).unwrap();
        assert!((u.width - PI).abs() < 1e-15);
        assert_eq!(u.l, 0.0);
    }

    #[test]
    fn uniform_circle_width() {
        let n = 201;
        let vals: Vec<f64> = (0..n).map(|k| 2.0 * PI * k as f64 / n as f64).collect();
        let probs = vec![1.0 / n as f64; n];
        let q = default_tail::<f64>();
        let u = circle_uncertainty_from_distribution(&vals, &probs, q).unwrap();
        // smallest atom count c with 1 − c/n ≤ q spans c − 1 grid steps
        let c = ((1.0 - q) * n as f64).ceil();
        assert!((u.width - (c - 1.0) * 2.0 * PI / n as f64).abs() < 1e-12);
        assert!((u.width - (1.0 - q) * 2.0 * PI).abs() <= 2.0 * PI / n as f64);
    }

    #[test]
    fn projection_angle_lemma() {
        let m = diag_measure(&[0.0, 1.0, 2.0, 3.0], Topology::Line);
        let psi = StateVector::from_real(&[0.3, 0.5, 0.7, 0.4]).unwrap();
        let idx = m.atoms_in(0.5, 3.5).unwrap();
        let p = m.interval_probability(&psi, 0.5, 3.5).unwrap();
        let part = StateVector::new(m.project(psi.amplitudes(), &idx)).unwrap();
        let angle = quantum_angle(&psi, &part).unwrap();
        assert!((angle - p.sqrt().acos()).abs() < 1e-10);

        let left = StateVector::new(m.project(psi.amplitudes(), &m.atoms_in(-1.0, 1.5).unwrap())).unwrap();
        let right = StateVector::new(m.project(psi.amplitudes(), &m.atoms_in(1.5, 4.0).unwrap())).unwrap();
        assert!((quantum_angle(&left, &right).unwrap() - PI / 2.0).abs() < 1e-10);
    }

    #[test]
    fn projectors_idempotent_and_orthogonal() {
        let m = diag_measure(&[0.0, 1.0, 2.0, 3.0], Topology::Line);
        let a = m.projector(-1.0, 1.0).unwrap();
        let b = m.projector(1.0, 3.0).unwrap();
        assert!(a.matmul(&a).unwrap().sub(&a).unwrap().max_abs() < 1e-15);
        assert!(a.matmul(&b).unwrap().max_abs() < 1e-15);
    }

    #[test]
    fn covariance_of_cyclic_shift() {
        // generator of the cyclic shift on n sites: diagonal in the Fourier basis
        let n = 8;
        let vecs: Vec<Vec<C<f64>>> = (0..n)
            .map(|k| {
                (0..n)
                    .map(|j| {
                        let th = 2.0 * PI * (k * j) as f64 / n as f64;
                        C::new(th.cos(), th.sin()) / (n as f64).sqrt()
                    })
                    .collect()
            })
            .collect();
        let ks: Vec<f64> = (0..n).map(|k| k as f64).collect();
        let p = HermitianOperator::from_spectrum(ks, Matrix::from_columns(&vecs).unwrap()).unwrap();
        let angles: Vec<f64> = (0..n).map(|j| 2.0 * PI * j as f64 / n as f64).collect();
        let m = diag_measure(&angles, Topology::Circle);
        let s = PlanckScale::default();
        let dev = shift_covariance_check(&m, &p, 2.0 * PI / n as f64, s).unwrap();
        assert!(dev <= 1e-9, "{dev}");
        let dev = shift_covariance_check(&m, &p, PI / n as f64, s).unwrap();
        assert!(dev > 1e-3, "{dev}");
        let gate = CovarianceGate::qualify(&m, &p, 2.0 * PI / n as f64, s).unwrap();
        assert!(gate.covers(3.0 * 2.0 * PI / n as f64));
        assert!(!gate.covers(2.5 * 2.0 * PI / n as f64));
    }
}
