use crate::error::{Error, Result};
use crate::hilbert::{HermitianOperator, Matrix, PlanckScale, StateVector};
use crate::num::{phase, Real, C};
use crate::spectral::{CovarianceGate, SpectralMeasure, Topology};

pub const MIN_ROTOR_M: usize = 2;

/// Planar rotor truncated to `|m| ≤ m_max`, with the conjugate angle grid
/// `φ_k = 2πk/d`, `|φ_k⟩ = d^{−1/2} Σ_m e^{−imφ_k}|m⟩`.
#[derive(Clone, Debug)]
pub struct RotorSystem<T: Real = f64> {
    m_max: usize,
    scale: PlanckScale<T>,
    j: HermitianOperator<T>,
    phi_op: HermitianOperator<T>,
    phi_measure: SpectralMeasure<T>,
}

pub fn make_rotor<T: Real>(m_max: usize, scale: PlanckScale<T>) -> Result<RotorSystem<T>> {
    if m_max < MIN_ROTOR_M {
        return Err(Error::InvalidParameter(format!("rotor needs m_max ≥ {MIN_ROTOR_M}, got {m_max}")));
    }
    let d = 2 * m_max + 1;
    let ms: Vec<T> = (0..d).map(|i| T::lit(i as f64 - m_max as f64)).collect();
    let j = HermitianOperator::from_real_diagonal(&ms.iter().map(|&m| m * scale.hbar()).collect::<Vec<_>>());
    let two_pi = T::PI() + T::PI();
    let norm = T::lit(d as f64).sqrt().recip();
    let angles: Vec<T> = (0..d).map(|k| two_pi * T::lit(k as f64) / T::lit(d as f64)).collect();
    let kets: Vec<Vec<C<T>>> = angles
        .iter()
        .map(|&phi| ms.iter().map(|&m| phase(-m * phi) * norm).collect())
        .collect();
    let vectors = Matrix::from_columns(&kets)?;
    let phi_measure = SpectralMeasure::from_eigenpairs(Topology::Circle, &angles, &vectors)?;
    let reps: Vec<T> = angles.iter().map(|&a| if a > T::PI() { a - two_pi } else { a }).collect();
    let phi_op = HermitianOperator::from_spectrum(reps, vectors)?;
    Ok(RotorSystem {
        m_max,
        scale,
        j,
        phi_op,
        phi_measure,
    })
}

impl<T: Real> RotorSystem<T> {
    pub fn m_max(&self) -> usize {
        self.m_max
    }

    pub fn dim(&self) -> usize {
        2 * self.m_max + 1
    }

    pub fn scale(&self) -> PlanckScale<T> {
        self.scale
    }

    pub fn j(&self) -> &HermitianOperator<T> {
        &self.j
    }

    /// Angle operator with spectrum in `(−π, π]`.
    pub fn phi_op(&self) -> &HermitianOperator<T> {
        &self.phi_op
    }

    pub fn phi_measure(&self) -> &SpectralMeasure<T> {
        &self.phi_measure
    }

    pub fn grid_step(&self) -> T {
        (T::PI() + T::PI()) / T::lit(self.dim() as f64)
    }

    pub fn covariance_gate(&self) -> Result<CovarianceGate<T>> {
        CovarianceGate::qualify(&self.phi_measure, &self.j, self.grid_step(), self.scale)
    }

    fn index(&self, m: i64) -> Result<usize> {
        if m.unsigned_abs() as usize > self.m_max {
            return Err(Error::InvalidParameter(format!("|m| = {} exceeds m_max = {}", m.abs(), self.m_max)));
        }
        Ok((m + self.m_max as i64) as usize)
    }

    /// Angular-momentum eigenstate `|m⟩`.
    pub fn eigenstate(&self, m: i64) -> Result<StateVector<T>> {
        StateVector::basis(self.dim(), self.index(m)?)
    }

    /// Normalised `Σ c_m |m⟩`.
    pub fn superposition(&self, terms: &[(i64, C<T>)]) -> Result<StateVector<T>> {
        let mut amps = vec![C::new(T::zero(), T::zero()); self.dim()];
        for &(m, c) in terms {
            let i = self.index(m)?;
            amps[i] = amps[i] + c;
        }
        StateVector::new(amps)
    }

    /// Packet with grid amplitudes `∝ exp(κ(cos(φ_k − φ0) − 1)/2)`.
    pub fn von_mises_packet(&self, phi0: T, kappa: T) -> Result<StateVector<T>> {
        if !(kappa >= T::zero()) {
            return Err(Error::InvalidParameter(format!("concentration must be nonnegative, got {kappa}")));
        }
        let half = T::lit(0.5);
        let mut amps = vec![C::new(T::zero(), T::zero()); self.dim()];
        for atom in self.phi_measure.atoms() {
            let w = (kappa * ((atom.value - phi0).cos() - T::one()) * half).exp();
            for b in &atom.basis {
                for (a, bi) in amps.iter_mut().zip(b) {
                    *a = *a + bi * w;
                }
            }
        }
        StateVector::new(amps)
    }
}
