//! Cyclic complex Jacobi eigensolver for Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary and then applies the classical real Jacobi rotation, so the
//! combined 2×2 block transform is
//!
//! ```text
//! U = [ c        s       ]
//!     [ −s·e^{−iα}  c·e^{−iα} ]      with a_pq = |a_pq|·e^{iα}
//! ```
//!
//! Sweeps visit pairs `(p, q)`, `p < q`, in row order. Convergence is declared
//! once the off-diagonal Frobenius norm drops below `1e−14·‖A‖_F`.
//!
//! Output is canonicalised so that identical inputs give identical spectral
//! data: eigenvalues ascending (ties keep solver order), and each eigenvector
//! rotated so that its largest-magnitude component is real and positive
//! (lowest index wins a tie).

use crate::error::{check_dim, Error, Result};
use crate::hilbert::matrix::Matrix;
use crate::num::{cplx, phase, Real, C};

pub const MAX_SWEEPS: usize = 100;
pub const OFF_DIAGONAL_THRESHOLD: f64 = 1e-14;

/// Ascending eigenvalues with the matching orthonormal eigenvectors as columns.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenSystem<T: Real = f64> {
    values: Vec<T>,
    vectors: Matrix<T>,
}

impl<T: Real> EigenSystem<T> {
    /// Builds from already-known spectral data, applying the canonical
    /// ordering and phase convention.
    pub fn from_parts(values: Vec<T>, vectors: Matrix<T>) -> Result<Self> {
        check_dim(vectors.dim(), values.len())?;
        Ok(canonicalize(values, vectors))
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn vectors(&self) -> &Matrix<T> {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn vector(&self, k: usize) -> Vec<C<T>> {
        self.vectors.column(k)
    }

    /// `V·Λ·V†`.
    pub fn reconstruct(&self) -> Matrix<T> {
        let n = self.dim();
        let v = &self.vectors;
        Matrix::from_fn(n, |i, j| {
            (0..n).fold(C::new(T::zero(), T::zero()), |acc, k| {
                acc + v[(i, k)] * v[(j, k)].conj() * self.values[k]
            })
        })
    }

    /// Coordinates of `psi` in the eigenbasis (`V†ψ`).
    pub fn to_eigenbasis(&self, psi: &[C<T>]) -> Result<Vec<C<T>>> {
        self.vectors.apply_adjoint(psi)
    }

    pub fn from_eigenbasis(&self, coeffs: &[C<T>]) -> Result<Vec<C<T>>> {
        self.vectors.apply(coeffs)
    }

    /// `e^{−i·s·A/ħ}·psi` without renormalisation.
    pub fn propagate(&self, psi: &[C<T>], s: T, hbar: T) -> Result<Vec<C<T>>> {
        let mut c = self.to_eigenbasis(psi)?;
        for (ck, &lambda) in c.iter_mut().zip(&self.values) {
            *ck = *ck * phase(-s * lambda / hbar);
        }
        self.from_eigenbasis(&c)
    }

    /// Dense `e^{−i·s·A/ħ}`.
    pub fn unitary(&self, s: T, hbar: T) -> Matrix<T> {
        let n = self.dim();
        let phases: Vec<C<T>> = self.values.iter().map(|&l| phase(-s * l / hbar)).collect();
        let v = &self.vectors;
        Matrix::from_fn(n, |i, j| {
            (0..n).fold(C::new(T::zero(), T::zero()), |acc, k| {
                acc + v[(i, k)] * phases[k] * v[(j, k)].conj()
            })
        })
    }

    /// Spectral data of `−A`: same eigenvectors, reversed order.
    pub fn negated(&self) -> Self {
        let n = self.dim();
        let values = self.values.iter().rev().map(|&v| -v).collect();
        let vectors = Matrix::from_fn(n, |i, j| self.vectors[(i, n - 1 - j)]);
        canonicalize(values, vectors)
    }
}

fn off_diagonal_norm<T: Real>(a: &Matrix<T>) -> T {
    let n = a.dim();
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s = s + a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Diagonalises a Hermitian matrix by cyclic Jacobi sweeps.
pub fn jacobi<T: Real>(input: &Matrix<T>) -> Result<EigenSystem<T>> {
    let n = input.dim();
    let mut a = input.clone();
    let mut v = Matrix::identity(n);
    let threshold = T::tolerance(OFF_DIAGONAL_THRESHOLD) * a.frobenius();
    let two = T::lit(2.0);

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                residual: off.as_f64(),
            });
        }
        sweeps += 1;
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag <= T::min_positive_value() {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = (aqq - app) / (two * mag);
                let t = if theta >= T::zero() {
                    T::one() / (theta + theta.hypot(T::one()))
                } else {
                    -T::one() / (-theta + theta.hypot(T::one()))
                };
                let c = T::one() / t.hypot(T::one());
                let s = t * c;
                let unphase = (apq / mag).conj();
                let u_pp = cplx(c, T::zero());
                let u_pq = cplx(s, T::zero());
                let u_qp = unphase * (-s);
                let u_qq = unphase * c;

                // A ← A·U
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * u_pp + akq * u_qp;
                    a[(k, q)] = akp * u_pq + akq * u_qq;
                }
                // A ← U†·A
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = u_pp.conj() * apk + u_qp.conj() * aqk;
                    a[(q, k)] = u_pq.conj() * apk + u_qq.conj() * aqk;
                }
                a[(p, q)] = C::new(T::zero(), T::zero());
                a[(q, p)] = C::new(T::zero(), T::zero());
                a[(p, p)] = cplx(a[(p, p)].re, T::zero());
                a[(q, q)] = cplx(a[(q, q)].re, T::zero());
                // V ← V·U
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * u_pp + vkq * u_qp;
                    v[(k, q)] = vkp * u_pq + vkq * u_qq;
                }
            }
        }
    }

    let values = (0..n).map(|i| a[(i, i)].re).collect();
    Ok(canonicalize(values, v))
}

fn canonicalize<T: Real>(values: Vec<T>, vectors: Matrix<T>) -> EigenSystem<T> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        values[i]
            .partial_cmp(&values[j])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(i.cmp(&j))
    });
    let sorted_values: Vec<T> = order.iter().map(|&k| values[k]).collect();
    let mut sorted = Matrix::from_fn(n, |i, j| vectors[(i, order[j])]);

    let tie = T::one() - T::tolerance(1e-10);
    for j in 0..n {
        let biggest = (0..n).fold(T::zero(), |m, i| m.max(sorted[(i, j)].norm()));
        if biggest == T::zero() {
            continue;
        }
        let pivot = (0..n)
            .find(|&i| sorted[(i, j)].norm() >= biggest * tie)
            .unwrap_or(0);
        let z = sorted[(pivot, j)];
        let rot = z.conj() / z.norm();
        for i in 0..n {
            sorted[(i, j)] = sorted[(i, j)] * rot;
        }
        sorted[(pivot, j)] = cplx(sorted[(pivot, j)].re, T::zero());
    }
    EigenSystem {
        values: sorted_values,
        vectors: sorted,
    }
}
