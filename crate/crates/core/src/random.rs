//! Seeded random ensembles. Every stream is a ChaCha8 generator seeded
//! explicitly; case `i` of a suite with base seed `s` uses seed `s + i`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::error::Result;
use crate::hilbert::{HermitianOperator, Matrix, StateVector};
use crate::num::{cplx, Real, C};

pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed of case `index` in a suite with base seed `base`.
pub fn task_seed(base: u64, index: usize) -> u64 {
    base.wrapping_add(index as u64)
}

fn gaussian<T: Real, R: Rng + ?Sized>(rng: &mut R) -> T {
    let x: f64 = StandardNormal.sample(rng);
    T::lit(x)
}

/// Haar-random unit vector (normalised complex Gaussian).
pub fn random_state<T: Real, R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Result<StateVector<T>> {
    let amps: Vec<C<T>> = (0..dim).map(|_| cplx(gaussian(rng), gaussian(rng))).collect();
    StateVector::new(amps)
}

/// GUE-distributed Hermitian matrix, `(G + G†)/2` with complex Gaussian `G`.
pub fn random_hermitian<T: Real, R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Result<HermitianOperator<T>> {
    let g = Matrix::from_fn(dim, |_, _| cplx(gaussian(rng), gaussian(rng)));
    let h = g.add(&g.adjoint())?.scaled(T::lit(0.5));
    HermitianOperator::new(h)
}

/// Uniform draw from the probability simplex with `n` vertices.
pub fn random_probabilities<T: Real, R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<T> {
    let raw: Vec<f64> = (0..n).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|x| T::lit(x / total)).collect()
}

/// Uniform direction on the unit sphere.
pub fn random_direction<T: Real, R: Rng + ?Sized>(rng: &mut R) -> [T; 3] {
    loop {
        let v: [f64; 3] = [
            StandardNormal.sample(rng),
            StandardNormal.sample(rng),
            StandardNormal.sample(rng),
        ];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 1e-12 {
            return [T::lit(v[0] / n), T::lit(v[1] / n), T::lit(v[2] / n)];
        }
    }
}
