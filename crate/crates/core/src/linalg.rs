//! Dense complex linear algebra on small square matrices.
//!
//! Storage is row-major. Bipartite operators use the convention that the A
//! index is the slow one: entry `(i·d_b + k, j·d_b + l)` of `a ⊗ b` is
//! `a[i,j]·b[k,l]`.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Invariant, Result};
use crate::scalar::{re, Real, C};

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T: Real> {
    dim: usize,
    data: Vec<C<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    /// Builds a `dim × dim` matrix from row-major entries.
    pub fn new(dim: usize, entries: Vec<C<T>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Dimension("matrix dimension must be positive".into()));
        }
        if entries.len() != dim * dim {
            return Err(Error::Dimension(format!(
                "expected {} entries for a {dim}×{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::validation(
                Invariant::Finite,
                format!("entry ({}, {}) is not finite", pos / dim, pos % dim),
            ));
        }
        Ok(Self { dim, data: entries })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![C::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = C::one();
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C<T>) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    pub fn from_real_diagonal(diag: &[T]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = re(d);
        }
        m
    }

    /// Rank-one operator `|u⟩⟨v|`.
    pub fn outer(u: &[C<T>], v: &[C<T>]) -> Self {
        assert_eq!(u.len(), v.len(), "outer product of vectors with different lengths");
        Self::from_fn(u.len(), |i, j| u[i] * v[j].conj())
    }

    /// Projector `|v⟩⟨v|`.
    pub fn projector(v: &[C<T>]) -> Self {
        Self::outer(v, v)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[C<T>] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: T) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_complex(&self, s: C<T>) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn trace(&self) -> C<T> {
        (0..self.dim).map(|i| self[(i, i)]).fold(C::zero(), |acc, z| acc + z)
    }

    pub fn diagonal_real(&self) -> Vec<T> {
        (0..self.dim).map(|i| self[(i, i)].re).collect()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.dim, other.dim, "max_abs_diff of matrices with different dims");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    /// Largest entrywise modulus of `self - self†`.
    pub fn hermiticity_defect(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// `(m + m†)/2`; the diagonal comes out exactly real.
    pub fn symmetrized(&self) -> Self {
        let half = T::lit(0.5);
        let mut out = Self::from_fn(self.dim, |i, j| (self[(i, j)] + self[(j, i)].conj()) * half);
        for i in 0..self.dim {
            out[(i, i)].im = T::zero();
        }
        out
    }

    /// `⟨u| self |v⟩`.
    pub fn sandwich(&self, u: &[C<T>], v: &[C<T>]) -> C<T> {
        let mut acc = C::zero();
        for i in 0..self.dim {
            let mut row = C::zero();
            for j in 0..self.dim {
                row += self[(i, j)] * v[j];
            }
            acc += u[i].conj() * row;
        }
        acc
    }

    /// Sub-block `(i, j)` of size `block × block`.
    pub fn block(&self, block: usize, i: usize, j: usize) -> Self {
        Self::from_fn(block, |k, l| self[(i * block + k, j * block + l)])
    }
}

impl<T: Real> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = C<T>;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C<T> {
        &self.data[i * self.dim + j]
    }
}

impl<T: Real> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C<T> {
        &mut self.data[i * self.dim + j]
    }
}

impl<'a, T: Real> Mul<&'a ComplexMatrix<T>> for &'a ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn mul(self, rhs: &'a ComplexMatrix<T>) -> ComplexMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "product of matrices with different dims");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }
}

impl<'a, T: Real> Add<&'a ComplexMatrix<T>> for &'a ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn add(self, rhs: &'a ComplexMatrix<T>) -> ComplexMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "sum of matrices with different dims");
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a, T: Real> Sub<&'a ComplexMatrix<T>> for &'a ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn sub(self, rhs: &'a ComplexMatrix<T>) -> ComplexMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "difference of matrices with different dims");
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Kronecker product `a ⊗ b`.
pub fn tensor_product<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    let (da, db) = (a.dim, b.dim);
    ComplexMatrix::from_fn(da * db, |r, s| a[(r / db, s / db)] * b[(r % db, s % db)])
}

/// Which tensor factor a partial trace removes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Traces out `over` from an operator on `A ⊗ B`.
pub fn partial_trace<T: Real>(
    rho: &ComplexMatrix<T>,
    dim_a: usize,
    dim_b: usize,
    over: Subsystem,
) -> Result<ComplexMatrix<T>> {
    if dim_a == 0 || dim_b == 0 || rho.dim != dim_a * dim_b {
        return Err(Error::Dimension(format!(
            "partial trace of a {}-dimensional operator with split {dim_a}×{dim_b}",
            rho.dim
        )));
    }
    Ok(match over {
        Subsystem::A => ComplexMatrix::from_fn(dim_b, |k, l| {
            (0..dim_a).fold(C::zero(), |acc, i| acc + rho[(i * dim_b + k, i * dim_b + l)])
        }),
        Subsystem::B => ComplexMatrix::from_fn(dim_a, |i, j| {
            (0..dim_b).fold(C::zero(), |acc, k| acc + rho[(i * dim_b + k, j * dim_b + k)])
        }),
    })
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues descending.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition<T: Real> {
    pub eigenvalues: Vec<T>,
    /// `eigenvectors[i]` belongs to `eigenvalues[i]`.
    pub eigenvectors: Vec<Vec<C<T>>>,
}

impl<T: Real> SpectralDecomposition<T> {
    /// `Σᵢ λᵢ |vᵢ⟩⟨vᵢ|`.
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        let n = self.eigenvalues.len();
        let mut out = ComplexMatrix::zeros(n);
        for (lambda, v) in self.eigenvalues.iter().zip(&self.eigenvectors) {
            for i in 0..n {
                let vi = v[i] * *lambda;
                for j in 0..n {
                    out[(i, j)] += vi * v[j].conj();
                }
            }
        }
        out
    }

    /// Largest entrywise deviation of the eigenvector Gram matrix from I.
    pub fn orthonormality_defect(&self) -> T {
        let vs = &self.eigenvectors;
        let mut worst = T::zero();
        for (i, u) in vs.iter().enumerate() {
            for (j, v) in vs.iter().enumerate() {
                let dot: C<T> = u.iter().zip(v).fold(C::zero(), |acc, (a, b)| acc + a.conj() * b);
                let target = if i == j { C::one() } else { C::zero() };
                worst = worst.max((dot - target).norm());
            }
        }
        worst
    }
}

const MAX_SWEEPS: usize = 64;

/// Hermitian eigen-decomposition by cyclic complex Jacobi rotations.
///
/// Inputs within the Hermiticity tolerance are symmetrized first. Ties in
/// the descending sort keep their original diagonal order.
pub fn hermitian_eig<T: Real>(m: &ComplexMatrix<T>) -> Result<SpectralDecomposition<T>> {
    let defect = m.hermiticity_defect();
    if !(defect <= T::hermitian_tol()) {
        return Err(Error::Hermiticity(defect.to_f64_lossy()));
    }
    Ok(jacobi(m.symmetrized()))
}

fn jacobi<T: Real>(mut a: ComplexMatrix<T>) -> SpectralDecomposition<T> {
    let n = a.dim;
    let mut v = ComplexMatrix::<T>::identity(n);
    let eps = T::epsilon();

    for _ in 0..MAX_SWEEPS {
        let mut off = T::zero();
        let mut total = T::zero();
        for i in 0..n {
            for j in 0..n {
                let z = a[(i, j)].norm_sqr();
                total += z;
                if i != j {
                    off += z;
                }
            }
        }
        if off <= eps * eps * total || off == T::zero() {
            break;
        }

        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag == T::zero() {
                    continue;
                }
                // D = diag(1, e^{-iα}) makes the pivot real, then a real
                // rotation annihilates it. U = D·R restricted to (p, q).
                let phase = apq / mag;
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = (aqq - app) / (T::lit(2.0) * mag);
                let t = if theta >= T::zero() {
                    T::one() / (theta + (T::one() + theta * theta).sqrt())
                } else {
                    -T::one() / (-theta + (T::one() + theta * theta).sqrt())
                };
                let cos = T::one() / (T::one() + t * t).sqrt();
                let sin = t * cos;

                let u_pp = re(cos);
                let u_pq = re(sin);
                let u_qp = -phase.conj() * sin;
                let u_qq = phase.conj() * cos;

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
                a[(p, q)] = C::zero();
                a[(q, p)] = C::zero();
                a[(p, p)].im = T::zero();
                a[(q, q)].im = T::zero();

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

    let mut order: Vec<usize> = (0..n).collect();
    let diag = a.diagonal_real();
    // stable: equal eigenvalues keep index order
    order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).unwrap_or(std::cmp::Ordering::Equal));

    SpectralDecomposition {
        eigenvalues: order.iter().map(|&i| diag[i]).collect(),
        eigenvectors: order
            .iter()
            .map(|&col| (0..n).map(|row| v[(row, col)]).collect())
            .collect(),
    }
}

/// Eigenvalues of a 2×2 Hermitian matrix in closed form, descending.
pub(crate) fn eigenvalues_2x2<T: Real>(m: &ComplexMatrix<T>) -> [T; 2] {
    let a = m[(0, 0)].re;
    let d = m[(1, 1)].re;
    let b = m[(0, 1)];
    let mean = (a + d) * T::lit(0.5);
    let half_gap = ((a - d) * T::lit(0.5)).hypot(b.norm());
    [mean + half_gap, mean - half_gap]
}

/// Eigenvalues of a Hermitian matrix, descending.
pub(crate) fn hermitian_eigenvalues<T: Real>(m: &ComplexMatrix<T>) -> Result<Vec<T>> {
    if m.dim() == 1 {
        return Ok(vec![m[(0, 0)].re]);
    }
    if m.dim() == 2 && m.hermiticity_defect() <= T::hermitian_tol() {
        return Ok(eigenvalues_2x2(&m.symmetrized()).to_vec());
    }
    hermitian_eig(m).map(|s| s.eigenvalues)
}
