//! Finite-dimensional complex Hilbert space: pure states, Hermitian
//! operators, moments and exact one-parameter unitary evolution.

mod eigen;
mod matrix;

use std::sync::OnceLock;

pub use eigen::{jacobi, EigenSystem, MAX_SWEEPS, OFF_DIAGONAL_THRESHOLD};
pub use matrix::Matrix;

use crate::error::{check_dim, Error, Result};
use crate::num::{cplx, dot, norm, phase, Real, C};

/// Hermiticity tolerance, relative to `max(1, ‖A‖_max)`.
pub const HERMITIAN_TOLERANCE: f64 = 1e-12;

/// Planck's constant in the caller's action units.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlanckScale<T: Real = f64> {
    hbar: T,
}

impl<T: Real> PlanckScale<T> {
    pub fn new(hbar: T) -> Result<Self> {
        if hbar > T::zero() && hbar.is_finite() {
            Ok(Self { hbar })
        } else {
            Err(Error::InvalidParameter(format!("hbar must be positive, got {hbar}")))
        }
    }

    pub fn hbar(&self) -> T {
        self.hbar
    }
}

impl<T: Real> Default for PlanckScale<T> {
    /// Natural units, ħ = 1.
    fn default() -> Self {
        Self { hbar: T::one() }
    }
}

/// Unit-norm pure state |ψ⟩.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<T: Real = f64> {
    amplitudes: Vec<C<T>>,
}

impl<T: Real> StateVector<T> {
    /// Normalises `amplitudes`; fails on dimension < 2 or a null vector.
    pub fn new(amplitudes: Vec<C<T>>) -> Result<Self> {
        if amplitudes.len() < 2 {
            return Err(Error::DimensionTooSmall {
                dim: amplitudes.len(),
                min: 2,
            });
        }
        let n = norm(&amplitudes);
        if !(n > T::zero()) || !n.is_finite() {
            return Err(Error::ZeroNorm);
        }
        let amplitudes = amplitudes.into_iter().map(|z| z / n).collect();
        Ok(Self { amplitudes })
    }

    pub fn from_real(amplitudes: &[T]) -> Result<Self> {
        Self::new(amplitudes.iter().map(|&x| cplx(x, T::zero())).collect())
    }

    /// Basis vector `e_k`.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::InvalidParameter(format!("basis index {k} out of range for dim {dim}")));
        }
        let mut amps = vec![C::new(T::zero(), T::zero()); dim];
        amps[k] = cplx(T::one(), T::zero());
        Self::new(amps)
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C<T>] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<C<T>> {
        self.amplitudes
    }

    pub fn norm(&self) -> T {
        norm(&self.amplitudes)
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<C<T>> {
        inner(self, other)
    }

    /// `e^{iθ}·|ψ⟩`, the same ray.
    pub fn with_phase(&self, theta: T) -> Self {
        let p = phase(theta);
        Self {
            amplitudes: self.amplitudes.iter().map(|z| z * p).collect(),
        }
    }
}

/// Self-adjoint operator. Hermiticity is checked on construction and the
/// stored matrix is then symmetrised to `(A + A†)/2`.
///
/// The eigendecomposition is computed on first use and cached.
#[derive(Clone, Debug)]
pub struct HermitianOperator<T: Real = f64> {
    matrix: Matrix<T>,
    eigen: OnceLock<Result<EigenSystem<T>>>,
}

impl<T: Real> PartialEq for HermitianOperator<T> {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl<T: Real> HermitianOperator<T> {
    pub fn new(matrix: Matrix<T>) -> Result<Self> {
        let defect = matrix.hermiticity_defect();
        let scale = T::one().max(matrix.max_abs());
        if !(defect <= T::tolerance(HERMITIAN_TOLERANCE) * scale) {
            return Err(Error::NotHermitian(defect.as_f64()));
        }
        let sym = matrix.add(&matrix.adjoint())?.scaled(T::lit(0.5));
        Ok(Self::trusted(sym))
    }

    fn trusted(matrix: Matrix<T>) -> Self {
        Self {
            matrix,
            eigen: OnceLock::new(),
        }
    }

    pub fn from_real_diagonal(diag: &[T]) -> Self {
        Self::trusted(Matrix::from_real_diagonal(diag))
    }

    pub fn zero(dim: usize) -> Self {
        Self::trusted(Matrix::zeros(dim))
    }

    /// `Σ_k λ_k |v_k⟩⟨v_k|` from known orthonormal eigenvectors (columns of
    /// `vectors`). The eigensystem is cached without running the solver.
    pub fn from_spectrum(values: Vec<T>, vectors: Matrix<T>) -> Result<Self> {
        let es = EigenSystem::from_parts(values, vectors)?;
        let op = Self::trusted(es.reconstruct());
        let _ = op.eigen.set(Ok(es));
        Ok(op)
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn apply(&self, v: &[C<T>]) -> Result<Vec<C<T>>> {
        self.matrix.apply(v)
    }

    pub fn scaled(&self, s: T) -> Self {
        let op = Self::trusted(self.matrix.scaled(s));
        if s == -T::one() {
            if let Some(Ok(es)) = self.eigen.get() {
                let _ = op.eigen.set(Ok(es.negated()));
            }
        }
        op
    }

    /// `−A`, reusing a cached eigensystem when available.
    pub fn negated(&self) -> Self {
        self.scaled(-T::one())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self::trusted(self.matrix.add(&other.matrix)?))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(Self::trusted(self.matrix.sub(&other.matrix)?))
    }

    /// `A − c·I`.
    pub fn shifted(&self, c: T) -> Self {
        let mut m = self.matrix.clone();
        for i in 0..m.dim() {
            m[(i, i)] = m[(i, i)] - c;
        }
        Self::trusted(m)
    }

    pub fn eigensystem(&self) -> Result<&EigenSystem<T>> {
        self.eigen
            .get_or_init(|| jacobi(&self.matrix))
            .as_ref()
            .map_err(Clone::clone)
    }
}

/// `⟨a|b⟩ = Σ conj(a_i)·b_i`.
pub fn inner<T: Real>(a: &StateVector<T>, b: &StateVector<T>) -> Result<C<T>> {
    check_dim(a.dim(), b.dim())?;
    Ok(dot(&a.amplitudes, &b.amplitudes))
}

/// Mean `⟨ψ|A|ψ⟩`; the rounding-level imaginary part is dropped.
pub fn expectation<T: Real>(op: &HermitianOperator<T>, psi: &StateVector<T>) -> Result<T> {
    check_dim(op.dim(), psi.dim())?;
    let a_psi = op.apply(psi.amplitudes())?;
    Ok(dot(psi.amplitudes(), &a_psi).re)
}

/// Standard deviation `‖(A − Ā)ψ‖`.
pub fn std_dev<T: Real>(op: &HermitianOperator<T>, psi: &StateVector<T>) -> Result<T> {
    check_dim(op.dim(), psi.dim())?;
    let a_psi = op.apply(psi.amplitudes())?;
    let mean = dot(psi.amplitudes(), &a_psi).re;
    let centered: Vec<C<T>> = a_psi
        .iter()
        .zip(psi.amplitudes())
        .map(|(a, p)| a - p * mean)
        .collect();
    Ok(norm(&centered))
}

pub fn diagonalize<T: Real>(op: &HermitianOperator<T>) -> Result<EigenSystem<T>> {
    op.eigensystem().cloned()
}

/// `e^{−i·δs·A/ħ}|ψ⟩` through the eigendecomposition of `A`.
pub fn evolve<T: Real>(
    op: &HermitianOperator<T>,
    delta: T,
    psi: &StateVector<T>,
    scale: PlanckScale<T>,
) -> Result<StateVector<T>> {
    check_dim(op.dim(), psi.dim())?;
    if delta == T::zero() {
        return Ok(psi.clone());
    }
    let out = op.eigensystem()?.propagate(psi.amplitudes(), delta, scale.hbar())?;
    StateVector::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn c(re: f64, im: f64) -> C<f64> {
        C::new(re, im)
    }

    fn sz_half() -> HermitianOperator {
        HermitianOperator::from_real_diagonal(&[0.5, -0.5])
    }

    fn plus() -> StateVector {
        StateVector::from_real(&[1.0, 1.0]).unwrap()
    }

    #[test]
    fn inner_products() {
        let e1 = StateVector::<f64>::basis(2, 0).unwrap();
        let e2 = StateVector::<f64>::basis(2, 1).unwrap();
        assert_eq!(inner(&e1, &e1).unwrap(), c(1.0, 0.0));
        assert_eq!(inner(&e1, &e2).unwrap(), c(0.0, 0.0));
        assert!((inner(&plus(), &e1).unwrap() - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn inner_conjugate_linear_in_first_argument() {
        let a = StateVector::new(vec![c(1.0, 1.0), c(0.0, 2.0), c(-1.0, 0.5)]).unwrap();
        let b = StateVector::new(vec![c(0.3, -1.0), c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        let ai = StateVector::new(a.amplitudes().iter().map(|z| z * c(0.0, 1.0)).collect()).unwrap();
        let lhs = inner(&ai, &b).unwrap();
        let rhs = inner(&a, &b).unwrap() * c(0.0, -1.0);
        assert!((lhs - rhs).norm() < 1e-15);
    }

    #[test]
    fn dimension_checks() {
        let a = StateVector::<f64>::basis(2, 0).unwrap();
        let b = StateVector::<f64>::basis(3, 0).unwrap();
        assert!(matches!(inner(&a, &b), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(expectation(&sz_half(), &b), Err(Error::DimensionMismatch { .. })));
        assert_eq!(StateVector::<f64>::from_real(&[1.0]), Err(Error::DimensionTooSmall { dim: 1, min: 2 }));
        assert_eq!(StateVector::<f64>::from_real(&[0.0, 0.0]), Err(Error::ZeroNorm));
    }

    #[test]
    fn construction_normalises() {
        let s = StateVector::new(vec![c(3.0, 0.0), c(0.0, 4.0)]).unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn expectation_examples() {
        let z = HermitianOperator::from_real_diagonal(&[1.0, -1.0]);
        assert_eq!(expectation(&z, &StateVector::basis(2, 0).unwrap()).unwrap(), 1.0);
        assert!(expectation(&z, &plus()).unwrap().abs() < 1e-15);
        let circ = StateVector::new(vec![c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        assert!(expectation(&sz_half(), &circ).unwrap().abs() < 1e-15);
    }

    #[test]
    fn std_dev_examples() {
        let z = HermitianOperator::from_real_diagonal(&[1.0, -1.0]);
        assert_eq!(std_dev(&z, &StateVector::basis(2, 0).unwrap()).unwrap(), 0.0);
        assert!((std_dev(&sz_half(), &plus()).unwrap() - 0.5).abs() < 1e-15);
        let a = HermitianOperator::from_real_diagonal(&[0.0, 1.0, 2.0]);
        let u = StateVector::from_real(&[1.0, 1.0, 1.0]).unwrap();
        assert!((std_dev(&a, &u).unwrap() - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn non_hermitian_rejected() {
        let m = Matrix::from_rows(vec![vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(0.0, 0.0), c(0.0, 0.0)]]).unwrap();
        assert!(matches!(HermitianOperator::new(m), Err(Error::NotHermitian(_))));
        let tiny = Matrix::from_rows(vec![vec![c(1.0, 1e-14), c(1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]]).unwrap();
        let op = HermitianOperator::new(tiny).unwrap();
        assert_eq!(op.matrix()[(0, 0)], c(1.0, 0.0));
    }

    #[test]
    fn evolve_identity_and_phase() {
        let s = PlanckScale::default();
        assert_eq!(evolve(&sz_half(), 0.0, &plus(), s).unwrap(), plus());
        let out = evolve(&sz_half(), PI, &plus(), s).unwrap();
        let expect = [c(0.0, -FRAC_1_SQRT_2), c(0.0, FRAC_1_SQRT_2)];
        for (a, b) in out.amplitudes().iter().zip(&expect) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn evolve_with_nonunit_hbar() {
        let s = PlanckScale::new(2.0).unwrap();
        let a = evolve(&sz_half(), 2.0 * PI, &plus(), s).unwrap();
        let b = evolve(&sz_half(), PI, &plus(), PlanckScale::default()).unwrap();
        for (x, y) in a.amplitudes().iter().zip(b.amplitudes()) {
            assert!((x - y).norm() < 1e-14);
        }
        assert!(PlanckScale::new(0.0).is_err());
        assert!(PlanckScale::new(-1.0).is_err());
    }

    #[test]
    fn eigenstate_orbit_is_a_phase() {
        let e1 = StateVector::basis(2, 0).unwrap();
        let out = evolve(&sz_half(), 1.3, &e1, PlanckScale::default()).unwrap();
        assert!((inner(&e1, &out).unwrap().norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn from_spectrum_caches_eigensystem() {
        let r = FRAC_1_SQRT_2;
        let v = Matrix::from_rows(vec![vec![c(r, 0.0), c(r, 0.0)], vec![c(-r, 0.0), c(r, 0.0)]]).unwrap();
        let op = HermitianOperator::from_spectrum(vec![1.0, -1.0], v).unwrap();
        assert!((op.matrix()[(0, 1)] - c(-1.0, 0.0)).norm() < 1e-15);
        assert_eq!(op.eigensystem().unwrap().values(), &[-1.0, 1.0]);
    }

    #[test]
    fn single_precision_state_ops() {
        let a = HermitianOperator::<f32>::from_real_diagonal(&[0.5, -0.5]);
        let p = StateVector::<f32>::from_real(&[1.0, 1.0]).unwrap();
        assert!((std_dev(&a, &p).unwrap() - 0.5).abs() < 1e-6);
        let out = evolve(&a, 1.0, &p, PlanckScale::default()).unwrap();
        assert!((out.norm() - 1.0).abs() < 1e-6);
    }
}
