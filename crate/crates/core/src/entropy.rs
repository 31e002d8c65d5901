//! Shannon, binary, von Neumann and relative entropies. All in bits.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, hermitian_eigenvalues};
use crate::scalar::Real;
use crate::states::DensityMatrix;

/// Normalized probability distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector<T: Real> {
    probs: Vec<T>,
}

impl<T: Real> ProbabilityVector<T> {
    /// Validates `probs`; entries in `[-support_tol, 0)` are clamped to zero.
    pub fn new(probs: Vec<T>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::Probability("empty distribution".into()));
        }
        let mut clean = Vec::with_capacity(probs.len());
        for (k, &p) in probs.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::Probability(format!("entry {k} is not finite")));
            }
            if p < -T::support_tol() {
                return Err(Error::Probability(format!("entry {k} is negative ({p})")));
            }
            clean.push(p.max(T::zero()));
        }
        let total: T = clean.iter().copied().sum();
        if (total - T::one()).abs() > T::prob_sum_tol() {
            return Err(Error::Probability(format!("entries sum to {total}")));
        }
        Ok(Self { probs: clean })
    }

    pub fn as_slice(&self) -> &[T] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }
}

/// `H(p) = −Σ pₖ log₂ pₖ`.
pub fn shannon_entropy<T: Real>(p: &ProbabilityVector<T>) -> T {
    raw_shannon(p.as_slice())
}

/// Shannon sum over unvalidated non-negative weights; negatives and values
/// at or below the support threshold contribute nothing.
pub(crate) fn raw_shannon<T: Real>(weights: &[T]) -> T {
    let h: T = weights.iter().map(|&w| -w.xlog2x()).sum();
    h.max(T::zero())
}

/// `h(x) = −x log₂ x − (1−x) log₂(1−x)`.
pub fn binary_entropy<T: Real>(x: T) -> Result<T> {
    if !(x >= T::zero() && x <= T::one()) {
        return Err(Error::Domain(format!("binary entropy argument {x} outside [0, 1]")));
    }
    Ok(raw_shannon(&[x, T::one() - x]))
}

/// `S(ρ) = −Tr ρ log₂ ρ`.
pub fn von_neumann_entropy<T: Real>(rho: &DensityMatrix<T>) -> T {
    // validated on construction, so the Hermiticity check cannot fail
    let eigs = hermitian_eigenvalues(rho.matrix()).expect("density matrix is Hermitian");
    raw_shannon(&eigs)
}

/// `S(ρ‖σ) = Tr ρ log₂ ρ − Tr ρ log₂ σ`, or `+∞` when the support of `ρ` is
/// not contained in the support of `σ`.
pub fn relative_entropy<T: Real>(rho: &DensityMatrix<T>, sigma: &DensityMatrix<T>) -> Result<T> {
    if rho.dim() != sigma.dim() {
        return Err(Error::Dimension(format!(
            "relative entropy between {}- and {}-dimensional states",
            rho.dim(),
            sigma.dim()
        )));
    }
    let r = hermitian_eig(rho.matrix())?;
    let s = hermitian_eig(sigma.matrix())?;
    let tol = T::support_tol();

    let mut total = T::zero();
    for (lambda, v) in r.eigenvalues.iter().copied().zip(&r.eigenvectors) {
        if lambda <= tol {
            continue;
        }
        for (mu, w) in s.eigenvalues.iter().copied().zip(&s.eigenvectors) {
            let overlap: T = v
                .iter()
                .zip(w)
                .fold(num_complex::Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * b)
                .norm_sqr();
            let weight = overlap * lambda;
            if mu <= tol {
                if weight > tol {
                    return Ok(T::infinity());
                }
                continue;
            }
            total += weight * (lambda / mu).log2();
        }
    }
    Ok(total)
}
