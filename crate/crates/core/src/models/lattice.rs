use crate::error::{Error, Result};
use crate::hilbert::{HermitianOperator, Matrix, PlanckScale, StateVector};
use crate::num::{phase, Real, C};
use crate::spectral::{CovarianceGate, SpectralMeasure, Topology};

pub const MIN_SITES: usize = 8;

/// Periodic lattice of `N` sites on a ring of length `L`.
#[derive(Clone, Debug)]
pub struct LatticeSystem<T: Real = f64> {
    sites: usize,
    length: T,
    scale: PlanckScale<T>,
    x: HermitianOperator<T>,
    p: HermitianOperator<T>,
    x_measure: SpectralMeasure<T>,
}

/// Signed wavenumber indices `−⌊N/2⌋ … ⌈N/2⌉ − 1`.
pub fn signed_modes(n: usize) -> impl Iterator<Item = i64> {
    let lo = -((n / 2) as i64);
    (0..n as i64).map(move |k| lo + k)
}

pub fn make_lattice<T: Real>(sites: usize, length: T, scale: PlanckScale<T>) -> Result<LatticeSystem<T>> {
    if sites < MIN_SITES {
        return Err(Error::DimensionTooSmall {
            dim: sites,
            min: MIN_SITES,
        });
    }
    if !(length > T::zero()) || !length.is_finite() {
        return Err(Error::InvalidParameter(format!("lattice length must be positive, got {length}")));
    }
    let a = length / T::lit(sites as f64);
    let coords: Vec<T> = (0..sites)
        .map(|j| (T::lit(j as f64) - T::lit((sites / 2) as f64)) * a)
        .collect();
    let x = HermitianOperator::from_real_diagonal(&coords);
    let two_pi = T::PI() + T::PI();
    let norm = T::lit(sites as f64).sqrt().recip();
    let mut momenta = Vec::with_capacity(sites);
    let mut waves = Vec::with_capacity(sites);
    for n in signed_modes(sites) {
        let k = two_pi * T::lit(n as f64) / length;
        momenta.push(scale.hbar() * k);
        waves.push(coords.iter().map(|&xj| phase(k * xj) * norm).collect::<Vec<C<T>>>());
    }
    let p = HermitianOperator::from_spectrum(momenta, Matrix::from_columns(&waves)?)?;
    let x_measure = SpectralMeasure::from_operator(&x, Topology::Line)?;
    Ok(LatticeSystem {
        sites,
        length,
        scale,
        x,
        p,
        x_measure,
    })
}

impl<T: Real> LatticeSystem<T> {
    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn length(&self) -> T {
        self.length
    }

    pub fn spacing(&self) -> T {
        self.length / T::lit(self.sites as f64)
    }

    pub fn scale(&self) -> PlanckScale<T> {
        self.scale
    }

    pub fn x(&self) -> &HermitianOperator<T> {
        &self.x
    }

    pub fn p(&self) -> &HermitianOperator<T> {
        &self.p
    }

    pub fn x_measure(&self) -> &SpectralMeasure<T> {
        &self.x_measure
    }

    /// Site coordinates, ascending.
    pub fn coordinates(&self) -> Vec<T> {
        self.x_measure.values()
    }

    /// Shift covariance of `P` against the position measure at one spacing.
    pub fn covariance_gate(&self) -> Result<CovarianceGate<T>> {
        CovarianceGate::qualify(&self.x_measure, &self.p, self.spacing(), self.scale)
    }

    fn wave(&self, f: impl Fn(T) -> C<T>) -> Result<StateVector<T>> {
        StateVector::new(self.coordinates().into_iter().map(f).collect())
    }

    /// `ψ_j ∝ exp(−(x_j − x0)²/(4σ²) + i p0 x_j/ħ)`.
    pub fn gaussian_packet(&self, x0: T, p0: T, sigma: T) -> Result<StateVector<T>> {
        let (a, l) = (self.spacing(), self.length);
        if !(T::lit(4.0) * sigma < l / T::lit(2.0)) || !(sigma >= T::lit(3.0) * a) {
            return Err(Error::InvalidParameter(format!(
                "packet width {sigma} unresolved: need 3a ≤ σ < L/8 with a = {a}, L = {l}"
            )));
        }
        let four_s2 = T::lit(4.0) * sigma * sigma;
        let hbar = self.scale.hbar();
        self.wave(|x| phase(p0 * x / hbar) * (-(x - x0) * (x - x0) / four_s2).exp())
    }

    /// Main packet at `x0` plus a satellite at `x0 + separation` carrying
    /// probability ≈ `weight`.
    pub fn bimodal_packet(&self, x0: T, sigma: T, separation: T, weight: T) -> Result<StateVector<T>> {
        if !(weight >= T::zero() && weight <= T::one()) {
            return Err(Error::InvalidParameter(format!("satellite weight must lie in [0, 1], got {weight}")));
        }
        let main = self.gaussian_packet(x0, T::zero(), sigma)?;
        let side = self.gaussian_packet(x0 + separation, T::zero(), sigma)?;
        let (wm, ws) = ((T::one() - weight).sqrt(), weight.sqrt());
        StateVector::new(
            main.amplitudes()
                .iter()
                .zip(side.amplitudes())
                .map(|(m, s)| m * wm + s * ws)
                .collect(),
        )
    }

    /// Momentum eigenstate with signed mode index `n`.
    pub fn plane_wave(&self, n: i64) -> Result<StateVector<T>> {
        let half = (self.sites / 2) as i64;
        if n < -half || n >= self.sites as i64 - half {
            return Err(Error::InvalidParameter(format!("mode {n} outside the Brillouin zone")));
        }
        let k = (T::PI() + T::PI()) * T::lit(n as f64) / self.length;
        self.wave(|x| phase(k * x))
    }
}
