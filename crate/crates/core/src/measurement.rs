//! Rank-one projective measurements on subsystem A.

use num_traits::Zero;

use crate::entropy::ProbabilityVector;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::scalar::{c, re, Real, C};
use crate::states::DensityMatrix;

/// Orthonormal basis of A, the eigenbasis of a measured observable.
#[derive(Debug, Clone, PartialEq)]
pub struct ObservableBasis<T: Real> {
    vectors: Vec<Vec<C<T>>>,
    label: String,
}

impl<T: Real> ObservableBasis<T> {
    pub fn new(vectors: Vec<Vec<C<T>>>, label: impl Into<String>) -> Result<Self> {
        let d = vectors.len();
        if d == 0 || vectors.iter().any(|v| v.len() != d) {
            return Err(Error::Dimension(format!("basis must hold {d} vectors of length {d}")));
        }
        for (i, u) in vectors.iter().enumerate() {
            for (j, v) in vectors.iter().enumerate().skip(i) {
                let dot = inner(u, v);
                let target = if i == j { re(T::one()) } else { C::zero() };
                let defect = (dot - target).norm();
                if !(defect <= T::orthonormal_tol()) {
                    return Err(Error::Domain(format!(
                        "basis vectors {i} and {j} are not orthonormal (defect {defect:e})"
                    )));
                }
            }
        }
        Ok(Self {
            vectors,
            label: label.into(),
        })
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<C<T>>] {
        &self.vectors
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn projectors(&self) -> Vec<ComplexMatrix<T>> {
        self.vectors.iter().map(|v| ComplexMatrix::projector(v)).collect()
    }
}

fn inner<T: Real>(u: &[C<T>], v: &[C<T>]) -> C<T> {
    u.iter().zip(v).fold(C::zero(), |acc, (a, b)| acc + a.conj() * b)
}

/// Pauli observable on a qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    /// σ₁
    X,
    /// σ₂
    Y,
    /// σ₃
    Z,
}

impl Pauli {
    /// 1, 2, 3 → σ₁, σ₂, σ₃.
    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(Pauli::X),
            2 => Ok(Pauli::Y),
            3 => Ok(Pauli::Z),
            _ => Err(Error::Domain(format!("no Pauli matrix σ{i}"))),
        }
    }
}

/// Eigenbasis of a Pauli matrix, `+1` eigenvector first.
pub fn pauli_basis<T: Real>(which: Pauli) -> ObservableBasis<T> {
    let h = T::FRAC_1_SQRT_2();
    let (o, l) = (T::zero(), T::one());
    let (vectors, label) = match which {
        Pauli::X => (vec![vec![c(h, o), c(h, o)], vec![c(h, o), c(-h, o)]], "sigma1"),
        Pauli::Y => (vec![vec![c(h, o), c(o, h)], vec![c(h, o), c(o, -h)]], "sigma2"),
        Pauli::Z => (vec![vec![c(l, o), c(o, o)], vec![c(o, o), c(l, o)]], "sigma3"),
    };
    ObservableBasis { vectors, label: label.into() }
}

/// Standard basis `{|0⟩, …, |d−1⟩}`.
pub fn computational_basis<T: Real>(dim: usize) -> ObservableBasis<T> {
    let vectors = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { re(T::one()) } else { C::zero() }).collect())
        .collect();
    ObservableBasis {
        vectors,
        label: "computational".into(),
    }
}

/// Qubit basis whose first vector has Bloch angles `(theta, phi)`:
/// `{cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩, sin(θ/2)|0⟩ − e^{iφ} cos(θ/2)|1⟩}`.
pub fn bloch_basis<T: Real>(theta: T, phi: T) -> ObservableBasis<T> {
    let half = theta * T::lit(0.5);
    let (s, co) = half.sin_cos();
    let phase = C::from_polar(T::one(), phi);
    ObservableBasis {
        vectors: vec![vec![re(co), phase * s], vec![re(s), -phase * co]],
        label: format!("bloch:{theta}:{phi}"),
    }
}

fn check_dims<T: Real>(rho: &DensityMatrix<T>, basis: &ObservableBasis<T>) -> Result<()> {
    if basis.dim() != rho.dim_a() {
        return Err(Error::Dimension(format!(
            "basis of dimension {} measured on subsystem A of dimension {}",
            basis.dim(),
            rho.dim_a()
        )));
    }
    Ok(())
}

/// Unnormalized conditional operators `M_y = ⟨y|_A ρ |y⟩_A` on B.
fn conditional_blocks<T: Real>(rho: &DensityMatrix<T>, basis: &ObservableBasis<T>) -> Vec<ComplexMatrix<T>> {
    let (da, db) = (rho.dim_a(), rho.dim_b());
    let m = rho.matrix();
    basis
        .vectors()
        .iter()
        .map(|y| {
            ComplexMatrix::from_fn(db, |k, l| {
                let mut acc = C::zero();
                for i in 0..da {
                    let yi = y[i].conj();
                    if yi.is_zero() {
                        continue;
                    }
                    for j in 0..da {
                        acc += yi * y[j] * m[(i * db + k, j * db + l)];
                    }
                }
                acc
            })
        })
        .collect()
}

/// `Σ_y |y⟩⟨y| ⊗ M_y`.
fn assemble_joint<T: Real>(basis: &ObservableBasis<T>, blocks: &[ComplexMatrix<T>]) -> ComplexMatrix<T> {
    let da = basis.dim();
    let db = blocks[0].dim();
    let mut out = ComplexMatrix::zeros(da * db);
    for (y, mb) in basis.vectors().iter().zip(blocks) {
        for i in 0..da {
            for j in 0..da {
                let w = y[i] * y[j].conj();
                if w.is_zero() {
                    continue;
                }
                for k in 0..db {
                    for l in 0..db {
                        out[(i * db + k, j * db + l)] += w * mb[(k, l)];
                    }
                }
            }
        }
    }
    out
}

/// Dephasing `Δ_Y` on subsystem A: `Σ_y (|y⟩⟨y| ⊗ I) ρ (|y⟩⟨y| ⊗ I)`.
/// For monopartite states this keeps the diagonal in basis Y.
pub fn dephase<T: Real>(rho: &DensityMatrix<T>, basis: &ObservableBasis<T>) -> Result<DensityMatrix<T>> {
    check_dims(rho, basis)?;
    let blocks = conditional_blocks(rho, basis);
    Ok(DensityMatrix::trusted(
        assemble_joint(basis, &blocks),
        rho.dim_a(),
        rho.dim_b(),
    ))
}

/// Outcome statistics of measuring A in a basis.
#[derive(Debug, Clone)]
pub struct MeasurementOutcome<T: Real> {
    /// `p_y`.
    pub probs: ProbabilityVector<T>,
    /// `ρ_{B|y}`; `I/d_B` where the outcome has zero probability.
    pub conditional_states: Vec<DensityMatrix<T>>,
    /// Marks outcomes whose probability is at or below the support threshold.
    pub degenerate: Vec<bool>,
    /// `ρ_YB = Σ_y p_y |y⟩⟨y| ⊗ ρ_{B|y}`.
    pub joint_state: DensityMatrix<T>,
}

pub fn measure<T: Real>(rho: &DensityMatrix<T>, basis: &ObservableBasis<T>) -> Result<MeasurementOutcome<T>> {
    check_dims(rho, basis)?;
    let db = rho.dim_b();
    let blocks = conditional_blocks(rho, basis);
    let raw: Vec<T> = blocks.iter().map(|m| m.trace().re).collect();
    let probs = ProbabilityVector::new(raw)?;

    let mut conditional_states = Vec::with_capacity(blocks.len());
    let mut degenerate = Vec::with_capacity(blocks.len());
    for (m, &p) in blocks.iter().zip(probs.as_slice()) {
        if p <= T::support_tol() {
            conditional_states.push(DensityMatrix::trusted(
                ComplexMatrix::identity(db).scale(T::one() / T::from_usize(db).expect("small dim")),
                db,
                1,
            ));
            degenerate.push(true);
        } else {
            conditional_states.push(DensityMatrix::trusted(m.scale(T::one() / p), db, 1));
            degenerate.push(false);
        }
    }
    let joint_state = DensityMatrix::trusted(assemble_joint(basis, &blocks), rho.dim_a(), db);
    Ok(MeasurementOutcome {
        probs,
        conditional_states,
        degenerate,
        joint_state,
    })
}

/// `q_MU = log₂(1/c)`, `c = max |⟨x|z⟩|²`.
pub fn incompatibility<T: Real>(x: &ObservableBasis<T>, z: &ObservableBasis<T>) -> Result<T> {
    if x.dim() != z.dim() {
        return Err(Error::Dimension(format!(
            "incompatibility of bases with dimensions {} and {}",
            x.dim(),
            z.dim()
        )));
    }
    let mut overlap = T::zero();
    for u in x.vectors() {
        for v in z.vectors() {
            overlap = overlap.max(inner(u, v).norm_sqr());
        }
    }
    Ok((-overlap.log2()).max(T::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::{shannon_entropy, von_neumann_entropy};
    use crate::linalg::{partial_trace, tensor_product, Subsystem};
    use crate::states::{make_density, random_density, werner, x_state};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn same_up_to_phase(a: &ObservableBasis<f64>, b: &ObservableBasis<f64>) -> bool {
        a.vectors().iter().zip(b.vectors()).all(|(u, v)| (inner(u, v).norm() - 1.0).abs() < 1e-12)
    }

    fn random_basis(rng: &mut ChaCha8Rng) -> ObservableBasis<f64> {
        let theta = (rng.random_range(-1.0f64..1.0)).acos();
        bloch_basis(theta, rng.random_range(0.0..2.0 * PI))
    }

    #[test]
    fn pauli_bases() {
        let z = pauli_basis::<f64>(Pauli::Z);
        assert!(same_up_to_phase(&z, &computational_basis(2)));
        let x = pauli_basis::<f64>(Pauli::X);
        for u in x.vectors() {
            for v in z.vectors() {
                assert!((inner(u, v).norm_sqr() - 0.5).abs() < 1e-15);
            }
        }
        let y = pauli_basis::<f64>(Pauli::Y);
        assert!(ObservableBasis::new(y.vectors().to_vec(), "y").is_ok());
        assert!(Pauli::from_index(4).is_err());
        assert_eq!(Pauli::from_index(2).unwrap(), Pauli::Y);
    }

    #[test]
    fn pauli_bases_are_eigenbases() {
        let mats = crate::states::pauli_matrices::<f64>();
        for (p, m) in [Pauli::X, Pauli::Y, Pauli::Z].into_iter().zip(&mats) {
            let b = pauli_basis::<f64>(p);
            let v = &b.vectors()[0];
            assert!((m.sandwich(v, v).re - 1.0).abs() < 1e-15);
            let w = &b.vectors()[1];
            assert!((m.sandwich(w, w).re + 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn bloch_basis_special_angles() {
        assert!(same_up_to_phase(&bloch_basis(0.0, 0.0), &computational_basis(2)));
        assert!(same_up_to_phase(&bloch_basis(FRAC_PI_2, 0.0), &pauli_basis(Pauli::X)));
        assert!(same_up_to_phase(&bloch_basis(FRAC_PI_2, FRAC_PI_2), &pauli_basis(Pauli::Y)));
        let b = bloch_basis(1.234, 5.678);
        assert!(ObservableBasis::new(b.vectors().to_vec(), "b").is_ok());
    }

    #[test]
    fn basis_validation() {
        let bad = vec![vec![re(1.0), re(0.0)], vec![re(1.0), re(0.0)]];
        assert!(ObservableBasis::<f64>::new(bad, "bad").is_err());
        let ragged = vec![vec![re(1.0)], vec![re(0.0), re(1.0)]];
        assert!(matches!(ObservableBasis::<f64>::new(ragged, "r"), Err(Error::Dimension(_))));
    }

    #[test]
    fn dephase_examples() {
        let plus = make_density(ComplexMatrix::from_fn(2, |_, _| re(0.5)), 2, 1).unwrap();
        let d = dephase(&plus, &pauli_basis(Pauli::Z)).unwrap();
        assert!(d.matrix().max_abs_diff(&ComplexMatrix::identity(2).scale(0.5)) < 1e-15);
        // fixed point in its own eigenbasis
        let d = dephase(&plus, &pauli_basis(Pauli::X)).unwrap();
        assert!(d.matrix().max_abs_diff(plus.matrix()) < 1e-15);

        let bell = x_state(1.0f64).unwrap();
        let d = dephase(&bell, &pauli_basis(Pauli::Z)).unwrap();
        let expected = ComplexMatrix::from_real_diagonal(&[0.0, 0.5, 0.5, 0.0]);
        assert!(d.matrix().max_abs_diff(&expected) < 1e-15);

        assert!(matches!(
            dephase(&bell, &computational_basis(3)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn measure_examples() {
        let out = measure(&x_state(1.0f64).unwrap(), &pauli_basis(Pauli::Z)).unwrap();
        assert!((out.probs.as_slice()[0] - 0.5).abs() < 1e-15);
        let one = ComplexMatrix::from_real_diagonal(&[0.0, 1.0]);
        let zero = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]);
        assert!(out.conditional_states[0].matrix().max_abs_diff(&one) < 1e-15);
        assert!(out.conditional_states[1].matrix().max_abs_diff(&zero) < 1e-15);

        // Werner p = 0.5 measured in σ₁: conditionals I/2 ± σ₁/4
        let out = measure(&werner(0.5f64).unwrap(), &pauli_basis(Pauli::X)).unwrap();
        let [s1, _, _] = crate::states::pauli_matrices::<f64>();
        let half = ComplexMatrix::identity(2).scale(0.5);
        let plus = &half + &s1.scale(0.25);
        let minus = &half - &s1.scale(0.25);
        assert!(out.conditional_states[0].matrix().max_abs_diff(&plus) < 1e-15);
        assert!(out.conditional_states[1].matrix().max_abs_diff(&minus) < 1e-15);
        assert_eq!(out.probs.as_slice().len(), 2);
        assert!(out.probs.as_slice().iter().all(|p| (p - 0.5).abs() < 1e-15));
    }

    #[test]
    fn measure_product_state_has_identical_conditionals() {
        let a = random_density::<f64>(2, 1, 1);
        let b = random_density::<f64>(3, 1, 2);
        let ab = make_density(tensor_product(a.matrix(), b.matrix()), 2, 3).unwrap();
        let out = measure(&ab, &bloch_basis(0.7, 2.1)).unwrap();
        for cond in &out.conditional_states {
            assert!(cond.matrix().max_abs_diff(b.matrix()) < 1e-12);
        }
    }

    #[test]
    fn measure_flags_zero_probability_outcomes() {
        let out = measure(&x_state(0.0f64).unwrap(), &pauli_basis(Pauli::Z)).unwrap();
        assert_eq!(out.degenerate, vec![true, false]);
        let mixed = ComplexMatrix::identity(2).scale(0.5);
        assert!(out.conditional_states[0].matrix().max_abs_diff(&mixed) < 1e-15);
    }

    #[test]
    fn incompatibility_examples() {
        let x = pauli_basis::<f64>(Pauli::X);
        let y = pauli_basis::<f64>(Pauli::Y);
        let z = pauli_basis::<f64>(Pauli::Z);
        assert_eq!(incompatibility(&z, &z).unwrap(), 0.0);
        assert!((incompatibility(&x, &z).unwrap() - 1.0).abs() < 1e-14);
        assert!((incompatibility(&x, &y).unwrap() - 1.0).abs() < 1e-14);
        assert!(matches!(
            incompatibility(&x, &computational_basis(3)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn dephasing_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for seed in 0..500u64 {
            let rho = random_density::<f64>(2, 2, seed);
            let basis = random_basis(&mut rng);

            let once = dephase(&rho, &basis).unwrap();
            let twice = dephase(&once, &basis).unwrap();
            assert!(twice.matrix().max_abs_diff(once.matrix()) < 1e-10);

            assert!(von_neumann_entropy(&once) >= von_neumann_entropy(&rho) - 1e-9);

            let out = measure(&rho, &basis).unwrap();
            let block_entropy = shannon_entropy(&out.probs)
                + out
                    .probs
                    .as_slice()
                    .iter()
                    .zip(&out.conditional_states)
                    .map(|(p, s)| p * von_neumann_entropy(s))
                    .sum::<f64>();
            assert!((von_neumann_entropy(&out.joint_state) - block_entropy).abs() < 1e-9);
            assert!(out.joint_state.matrix().max_abs_diff(once.matrix()) < 1e-10);

            let lhs = partial_trace(once.matrix(), 2, 2, Subsystem::B).unwrap();
            let rhs = dephase(&rho.reduced_a(), &basis).unwrap();
            assert!(lhs.max_abs_diff(rhs.matrix()) < 1e-10);
        }
    }
}
