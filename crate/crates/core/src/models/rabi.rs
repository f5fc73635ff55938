use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{HermitianOperator, Matrix, PlanckScale, StateVector};
use crate::num::{cplx, Real};
use crate::unitary::DrivenHamiltonian;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarization {
    /// `ħΩ cos(ωt) σx`: Rabi oscillations only within the rotating-wave approximation.
    Linear,
    /// `(ħΩ/2)(cos ωt σx + sin ωt σy)`: exactly solvable.
    Circular,
}

/// Two-level atom with transition frequency `ω0 = ω − Δdet` driven at `ω`.
///
/// `H(t) = (ħω0/2)σz + coupling(t)`; basis `|e⟩ = (1, 0)`, `|g⟩ = (0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RabiDrive<T: Real = f64> {
    pub rabi: T,
    pub drive: T,
    pub detuning: T,
    pub polarization: Polarization,
    pub scale: PlanckScale<T>,
}

pub fn make_rabi<T: Real>(
    rabi: T,
    drive: T,
    detuning: T,
    polarization: Polarization,
    scale: PlanckScale<T>,
) -> Result<RabiDrive<T>> {
    if !(rabi >= T::zero()) || !drive.is_finite() || !detuning.is_finite() || !rabi.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "need finite frequencies and Ω ≥ 0 (Ω = {rabi}, ω = {drive}, Δ = {detuning})"
        )));
    }
    Ok(RabiDrive {
        rabi,
        drive,
        detuning,
        polarization,
        scale,
    })
}

impl<T: Real> RabiDrive<T> {
    pub fn transition_frequency(&self) -> T {
        self.drive - self.detuning
    }

    pub fn hamiltonian_at(&self, t: T) -> Result<HermitianOperator<T>> {
        let hbar = self.scale.hbar();
        let half = T::lit(0.5);
        let ez = hbar * self.transition_frequency() * half;
        let wt = self.drive * t;
        let off = match self.polarization {
            Polarization::Linear => cplx(hbar * self.rabi * wt.cos(), T::zero()),
            // σx cos + σy sin has upper-right entry e^{−iωt}
            Polarization::Circular => cplx(wt.cos(), -wt.sin()) * (hbar * self.rabi * half),
        };
        HermitianOperator::new(Matrix::from_rows(vec![
            vec![cplx(ez, T::zero()), off],
            vec![off.conj(), cplx(-ez, T::zero())],
        ])?)
    }

    pub fn hamiltonian(&self) -> DrivenHamiltonian<T> {
        let me = *self;
        DrivenHamiltonian::new(2, move |t| me.hamiltonian_at(t))
    }

    pub fn ground_state(&self) -> StateVector<T> {
        StateVector::basis(2, 1).expect("two-level basis")
    }

    pub fn excited_state(&self) -> StateVector<T> {
        StateVector::basis(2, 0).expect("two-level basis")
    }

    /// Generalised Rabi frequency `√(Ω² + Δ²)`.
    pub fn generalized_frequency(&self) -> T {
        self.rabi.hypot(self.detuning)
    }

    /// Excited population from the ground state: `(Ω/Ω′)² sin²(Ω′t/2)`,
    /// exact for circular drive, rotating-wave for linear.
    pub fn excited_population(&self, t: T) -> T {
        let g = self.generalized_frequency();
        if g == T::zero() {
            return T::zero();
        }
        let s = (g * t * T::lit(0.5)).sin();
        (self.rabi / g).powi(2) * s * s
    }

    /// First time the ground state is rotated by one radian at resonance, `2/Ω`.
    pub fn resonant_substantial_time(&self) -> T {
        T::lit(2.0) / self.rabi
    }

    /// `Δ_{ψ(t)}H(t) = (ħ/2)√(Ω² + ω0² sin²Ωt)` for the resonant circular
    /// drive started in the ground state.
    pub fn resonant_energy_spread(&self, t: T) -> T {
        let s = (self.rabi * t).sin();
        let w0 = self.transition_frequency();
        self.scale.hbar() * T::lit(0.5) * (self.rabi * self.rabi + w0 * w0 * s * s).sqrt()
    }
}
