use crate::error::{Error, Result};
use crate::hilbert::{HermitianOperator, Matrix, PlanckScale, StateVector};
use crate::num::{cplx, phase, Real, C};
use crate::unitary::GeneratorSet;

/// Spin-`j` angular momentum in the basis `m = j, j−1, …, −j`.
#[derive(Clone, Debug)]
pub struct SpinSystem<T: Real = f64> {
    twice_j: usize,
    scale: PlanckScale<T>,
    components: [HermitianOperator<T>; 3],
}

/// `j` must be a positive half-integer.
pub fn make_spin<T: Real>(j: T, scale: PlanckScale<T>) -> Result<SpinSystem<T>> {
    let twice = j * T::lit(2.0);
    if !(twice >= T::one()) || twice.fract() != T::zero() {
        return Err(Error::InvalidParameter(format!("spin must be a positive half-integer, got {j}")));
    }
    let twice_j = twice.to_usize().ok_or_else(|| Error::InvalidParameter(format!("spin {j} too large")))?;
    let d = twice_j + 1;
    let hbar = scale.hbar();
    let m = |i: usize| j - T::lit(i as f64);
    // ⟨m+1|J+|m⟩ = ħ√(j(j+1) − m(m+1)); row i holds m = j − i
    let raise = |i: usize| hbar * (j * (j + T::one()) - m(i + 1) * (m(i + 1) + T::one())).sqrt();
    let half = T::lit(0.5);
    let zero = cplx(T::zero(), T::zero());
    let j1 = Matrix::from_fn(d, |r, c| match (r, c) {
        _ if c == r + 1 => cplx(raise(r) * half, T::zero()),
        _ if r == c + 1 => cplx(raise(c) * half, T::zero()),
        _ => zero,
    });
    let j2 = Matrix::from_fn(d, |r, c| match (r, c) {
        _ if c == r + 1 => cplx(T::zero(), -raise(r) * half),
        _ if r == c + 1 => cplx(T::zero(), raise(c) * half),
        _ => zero,
    });
    let j3 = Matrix::from_real_diagonal(&(0..d).map(|i| hbar * m(i)).collect::<Vec<_>>());
    Ok(SpinSystem {
        twice_j,
        scale,
        components: [HermitianOperator::new(j1)?, HermitianOperator::new(j2)?, HermitianOperator::new(j3)?],
    })
}

impl<T: Real> SpinSystem<T> {
    pub fn j(&self) -> T {
        T::lit(self.twice_j as f64) * T::lit(0.5)
    }

    pub fn dim(&self) -> usize {
        self.twice_j + 1
    }

    pub fn scale(&self) -> PlanckScale<T> {
        self.scale
    }

    /// `[J1, J2, J3]`.
    pub fn components(&self) -> &[HermitianOperator<T>; 3] {
        &self.components
    }

    /// Rotation generators labelled `J1`, `J2`, `J3`.
    pub fn generator_set(&self) -> Result<GeneratorSet<T>> {
        GeneratorSet::new(
            ["J1", "J2", "J3"]
                .iter()
                .zip(&self.components)
                .map(|(l, g)| (l.to_string(), g.clone()))
                .collect(),
        )
    }

    /// `n·J` for a (not necessarily unit) vector `n`.
    pub fn along(&self, n: [T; 3]) -> Result<HermitianOperator<T>> {
        let mut acc = HermitianOperator::zero(self.dim());
        for (g, &c) in self.components.iter().zip(&n) {
            acc = acc.add(&g.scaled(c))?;
        }
        Ok(acc)
    }

    /// Spin coherent state pointing along `(sinθ cosφ, sinθ sinφ, cosθ)`.
    pub fn coherent_state(&self, theta: T, phi: T) -> Result<StateVector<T>> {
        let n = self.twice_j;
        let half = T::lit(0.5);
        let (c, s) = ((theta * half).cos(), (theta * half).sin());
        let amps: Vec<C<T>> = (0..=n)
            .map(|i| {
                // i = j − m spin flips from the top state
                let binom = (0..i).fold(T::one(), |acc, k| acc * T::lit((n - k) as f64) / T::lit((k + 1) as f64));
                phase(phi * T::lit(i as f64)) * (binom.sqrt() * c.powi((n - i) as i32) * s.powi(i as i32))
            })
            .collect();
        StateVector::new(amps)
    }
}
