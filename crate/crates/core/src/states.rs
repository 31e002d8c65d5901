//! Validated density matrices and the two-qubit state families.
//!
//! Two-qubit states use the computational ordering `|00⟩, |01⟩, |10⟩, |11⟩`
//! with qubit A as the left (slow) index. Bell states follow
//! `|Ψ±⟩ = (|01⟩ ± |10⟩)/√2` and `|Φ±⟩ = (|00⟩ ± |11⟩)/√2`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Invariant, Result};
use crate::linalg::{hermitian_eigenvalues, partial_trace, tensor_product, ComplexMatrix, Subsystem};
use crate::scalar::{c, re, Real, C};

/// Hermitian, unit-trace, positive semidefinite operator on `A ⊗ B`.
/// Monopartite states have `dim_b == 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T: Real> {
    matrix: ComplexMatrix<T>,
    dim_a: usize,
    dim_b: usize,
}

impl<T: Real> DensityMatrix<T> {
    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn is_bipartite(&self) -> bool {
        self.dim_b > 1
    }

    /// `ρ_A = Tr_B ρ`, as a monopartite state.
    pub fn reduced_a(&self) -> DensityMatrix<T> {
        let m = partial_trace(&self.matrix, self.dim_a, self.dim_b, Subsystem::B)
            .expect("split matches matrix dimension");
        Self::trusted(m, self.dim_a, 1)
    }

    /// `ρ_B = Tr_A ρ`, as a monopartite state.
    pub fn reduced_b(&self) -> DensityMatrix<T> {
        let m = partial_trace(&self.matrix, self.dim_a, self.dim_b, Subsystem::A)
            .expect("split matches matrix dimension");
        Self::trusted(m, self.dim_b, 1)
    }

    /// Same operator, different declared split.
    pub fn with_split(&self, dim_a: usize, dim_b: usize) -> Result<Self> {
        if dim_a * dim_b != self.dim() || dim_a == 0 {
            return Err(Error::Dimension(format!(
                "{}-dimensional state cannot be split as {dim_a}×{dim_b}",
                self.dim()
            )));
        }
        Ok(Self {
            matrix: self.matrix.clone(),
            dim_a,
            dim_b,
        })
    }

    /// Wraps a matrix produced by a trace- and positivity-preserving map of
    /// an already validated state. Only symmetrizes.
    pub(crate) fn trusted(matrix: ComplexMatrix<T>, dim_a: usize, dim_b: usize) -> Self {
        debug_assert_eq!(matrix.dim(), dim_a * dim_b);
        Self {
            matrix: matrix.symmetrized(),
            dim_a,
            dim_b,
        }
    }
}

/// Validates `matrix` as a state on `A ⊗ B` and symmetrizes it.
pub fn make_density<T: Real>(matrix: ComplexMatrix<T>, dim_a: usize, dim_b: usize) -> Result<DensityMatrix<T>> {
    if dim_a == 0 || dim_b == 0 || matrix.dim() != dim_a * dim_b {
        return Err(Error::validation(
            Invariant::Dimension,
            format!("matrix dimension {} does not equal {dim_a}·{dim_b}", matrix.dim()),
        ));
    }
    if matrix.entries().iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(Error::validation(Invariant::Finite, "matrix has non-finite entries"));
    }
    let defect = matrix.hermiticity_defect();
    if defect > T::hermitian_tol() {
        return Err(Error::validation(
            Invariant::Hermiticity,
            format!("max |m - m†| = {defect:e} exceeds {:e}", T::HERMITIAN_TOL),
        ));
    }
    let matrix = matrix.symmetrized();
    let tr = matrix.trace().re;
    if (tr - T::one()).abs() > T::trace_tol() {
        return Err(Error::validation(Invariant::Trace, format!("trace is {tr}, expected 1")));
    }
    let eigs = hermitian_eigenvalues(&matrix)?;
    let min = eigs.last().copied().unwrap_or_else(T::zero);
    if min < -T::psd_tol() {
        return Err(Error::validation(
            Invariant::Positivity,
            format!("minimum eigenvalue {min:e} is negative"),
        ));
    }
    Ok(DensityMatrix { matrix, dim_a, dim_b })
}

/// Which Bell state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bell {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

pub fn bell_vector<T: Real>(which: Bell) -> [C<T>; 4] {
    let h = re(T::FRAC_1_SQRT_2());
    let z = re(T::zero());
    match which {
        Bell::PhiPlus => [h, z, z, h],
        Bell::PhiMinus => [h, z, z, -h],
        Bell::PsiPlus => [z, h, h, z],
        Bell::PsiMinus => [z, h, -h, z],
    }
}

pub fn bell_projector<T: Real>(which: Bell) -> ComplexMatrix<T> {
    ComplexMatrix::projector(&bell_vector::<T>(which))
}

fn check_unit_interval<T: Real>(name: &str, p: T) -> Result<()> {
    if p >= T::zero() && p <= T::one() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} parameter p = {p} outside [0, 1]")))
    }
}

/// `p|Ψ⁺⟩⟨Ψ⁺| + (1−p)|11⟩⟨11|`.
pub fn x_state<T: Real>(p: T) -> Result<DensityMatrix<T>> {
    check_unit_interval("X-state", p)?;
    let mut m = bell_projector::<T>(Bell::PsiPlus).scale(p);
    m[(3, 3)] += re(T::one() - p);
    make_density(m, 2, 2)
}

/// `(I⊗I + Σᵢ tᵢ σᵢ⊗σᵢ)/4`.
pub fn bell_diagonal<T: Real>(t1: T, t2: T, t3: T) -> Result<DensityMatrix<T>> {
    let [s1, s2, s3] = pauli_matrices::<T>();
    let mut m = ComplexMatrix::identity(4);
    for (t, s) in [(t1, &s1), (t2, &s2), (t3, &s3)] {
        m = &m + &tensor_product(s, s).scale(t);
    }
    make_density(m.scale(T::lit(0.25)), 2, 2)
}

/// `p|Ψ⁻⟩⟨Ψ⁻| + ((1−p)/2)(|Ψ⁺⟩⟨Ψ⁺| + |Φ⁺⟩⟨Φ⁺|)`, i.e. the Bell-diagonal
/// state with `t = (1−2p, −p, −p)`.
pub fn bell_diagonal_family<T: Real>(p: T) -> Result<DensityMatrix<T>> {
    check_unit_interval("Bell-diagonal", p)?;
    bell_diagonal(T::one() - T::lit(2.0) * p, -p, -p)
}

/// `p|Ψ⁺⟩⟨Ψ⁺| + ((1−p)/4) I⊗I`.
pub fn werner<T: Real>(p: T) -> Result<DensityMatrix<T>> {
    check_unit_interval("Werner", p)?;
    let noise = ComplexMatrix::identity(4).scale((T::one() - p) * T::lit(0.25));
    let m = &bell_projector::<T>(Bell::PsiPlus).scale(p) + &noise;
    make_density(m, 2, 2)
}

/// Hilbert–Schmidt random state `GG†/Tr(GG†)` with `G` a complex Ginibre
/// matrix drawn from a ChaCha generator seeded with `seed`.
pub fn random_density<T: Real>(dim_a: usize, dim_b: usize, seed: u64) -> DensityMatrix<T> {
    assert!(dim_a >= 1 && dim_b >= 1, "subsystem dimensions must be positive");
    let n = dim_a * dim_b;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || -> T { T::lit(StandardNormal.sample(&mut rng)) };
    let g = ComplexMatrix::from_fn(n, |_, _| {
        let (a, b) = (draw(), draw());
        c(a, b)
    });
    let gg = &g * &g.adjoint();
    let tr = gg.trace().re;
    DensityMatrix::trusted(gg.scale(T::one() / tr), dim_a, dim_b)
}

/// `[σ₁, σ₂, σ₃]`.
pub fn pauli_matrices<T: Real>() -> [ComplexMatrix<T>; 3] {
    let (o, l) = (T::zero(), T::one());
    let m = |e: [C<T>; 4]| ComplexMatrix::new(2, e.to_vec()).expect("2×2 literal");
    [
        m([c(o, o), c(l, o), c(l, o), c(o, o)]),
        m([c(o, o), c(o, -l), c(o, l), c(o, o)]),
        m([c(l, o), c(o, o), c(o, o), c(-l, o)]),
    ]
}
