//! Relative entropy of coherence and purity, plain and unilateral.
//!
//! Every quantity here is evaluated through its closed form as a difference
//! of von Neumann entropies; no minimization over free states is needed.

use crate::correlations::conditional_entropy;
use crate::entropy::von_neumann_entropy;
use crate::error::{Error, Result};
use crate::measurement::{dephase, ObservableBasis};
use crate::scalar::{clamp_dust, Real};
use crate::states::DensityMatrix;

/// Coherence of a state with respect to a basis of A.
#[derive(Debug, Clone, PartialEq)]
pub struct CoherenceValue<T: Real> {
    pub value: T,
    pub basis_label: String,
    /// `true` for `C^{B|A}`, `false` for plain `C`.
    pub unilateral: bool,
}

const DUST: f64 = 1e-10;

/// `C(Y|ρ) = S(Δ_Y(ρ)) − S(ρ) = H(Y) − S(ρ)` for a monopartite state.
pub fn coherence_rel<T: Real>(rho: &DensityMatrix<T>, basis: &ObservableBasis<T>) -> Result<CoherenceValue<T>> {
    if rho.is_bipartite() {
        return Err(Error::Dimension(format!(
            "plain coherence needs a monopartite state, got a {}×{} split",
            rho.dim_a(),
            rho.dim_b()
        )));
    }
    let value = von_neumann_entropy(&dephase(rho, basis)?) - von_neumann_entropy(rho);
    Ok(CoherenceValue {
        value: clamp_dust(value, T::lit(DUST)),
        basis_label: basis.label().to_owned(),
        unilateral: false,
    })
}

/// `C^{B|A}(Y|ρ_AB) = S(ρ_YB) − S(ρ_AB)`.
pub fn unilateral_coherence<T: Real>(
    rho: &DensityMatrix<T>,
    basis: &ObservableBasis<T>,
) -> Result<CoherenceValue<T>> {
    let value = von_neumann_entropy(&dephase(rho, basis)?) - von_neumann_entropy(rho);
    Ok(CoherenceValue {
        value: clamp_dust(value, T::lit(DUST)),
        basis_label: basis.label().to_owned(),
        unilateral: true,
    })
}

/// `P(ρ) = log₂ d − S(ρ)` with `d` the full dimension of `ρ`.
pub fn purity_rel<T: Real>(rho: &DensityMatrix<T>) -> T {
    let d = T::from_usize(rho.dim()).expect("small dim");
    clamp_dust(d.log2() - von_neumann_entropy(rho), T::lit(DUST))
}

/// `P^{B|A}(ρ_AB) = log₂ d_A − S(A|B)`. Exceeds `log₂ d_A` when `S(A|B) < 0`.
pub fn unilateral_purity<T: Real>(rho: &DensityMatrix<T>) -> T {
    let d = T::from_usize(rho.dim_a()).expect("small dim");
    clamp_dust(d.log2() - conditional_entropy(rho), T::lit(DUST))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlations::{holevo, mutual_information};
    use crate::entropy::relative_entropy;
    use crate::linalg::{tensor_product, ComplexMatrix};
    use crate::measurement::{bloch_basis, pauli_basis, Pauli};
    use crate::states::{bell_diagonal_family, make_density, random_density, werner, x_state};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mono(m: ComplexMatrix<f64>) -> DensityMatrix<f64> {
        let d = m.dim();
        make_density(m, d, 1).unwrap()
    }

    #[test]
    fn coherence_examples() {
        let z = pauli_basis::<f64>(Pauli::Z);
        let inc = mono(ComplexMatrix::from_real_diagonal(&[0.3, 0.7]));
        assert_eq!(coherence_rel(&inc, &z).unwrap().value, 0.0);

        let plus = mono(ComplexMatrix::from_fn(2, |_, _| crate::scalar::re(0.5)));
        let c = coherence_rel(&plus, &z).unwrap();
        assert!((c.value - 1.0).abs() < 1e-12);
        assert!(!c.unilateral);
        assert_eq!(c.basis_label, "sigma3");

        let mixed = mono(ComplexMatrix::identity(2).scale(0.5));
        assert!(coherence_rel(&mixed, &bloch_basis(0.4, 1.9)).unwrap().value.abs() < 1e-12);

        assert!(matches!(coherence_rel(&werner(0.3f64).unwrap(), &z), Err(Error::Dimension(_))));
    }

    #[test]
    fn unilateral_coherence_examples() {
        let z = pauli_basis::<f64>(Pauli::Z);
        let x = pauli_basis::<f64>(Pauli::X);
        let a = mono(ComplexMatrix::from_real_diagonal(&[0.2, 0.8]));
        let b = random_density::<f64>(2, 1, 9);
        let prod = make_density(tensor_product(a.matrix(), b.matrix()), 2, 2).unwrap();
        assert!(unilateral_coherence(&prod, &z).unwrap().value.abs() < 1e-10);

        let c = unilateral_coherence(&x_state(1.0f64).unwrap(), &x).unwrap();
        assert!((c.value - 1.0).abs() < 1e-12);
        assert!(c.unilateral);

        assert!(unilateral_coherence(&werner(0.0f64).unwrap(), &bloch_basis(2.0, 0.3)).unwrap().value.abs() < 1e-12);
    }

    #[test]
    fn purity_examples() {
        assert!(purity_rel(&mono(ComplexMatrix::identity(3).scale(1.0 / 3.0))).abs() < 1e-12);
        let pure = mono(ComplexMatrix::from_real_diagonal(&[0.0, 1.0]));
        assert!((purity_rel(&pure) - 1.0).abs() < 1e-12);
        let skew = mono(ComplexMatrix::from_real_diagonal(&[0.25, 0.75]));
        assert!((purity_rel(&skew) - 0.188_721_875_540_867_14).abs() < 1e-14);
    }

    #[test]
    fn unilateral_purity_examples() {
        let b = random_density::<f64>(2, 1, 4);
        let free = make_density(tensor_product(&ComplexMatrix::identity(2).scale(0.5), b.matrix()), 2, 2).unwrap();
        assert!(unilateral_purity(&free).abs() < 1e-10);
        assert!((unilateral_purity(&x_state(1.0f64).unwrap()) - 2.0).abs() < 1e-12);

        for i in 0..=20 {
            let p = i as f64 / 20.0;
            let xlog = |v: f64| if v > 0.0 { v * v.log2() } else { 0.0 };
            let closed = 2.0 * (2.0 + xlog(p) + (1.0 - p) * if p < 1.0 { ((1.0 - p) / 2.0).log2() } else { 0.0 });
            let value = 2.0 * unilateral_purity(&bell_diagonal_family(p).unwrap());
            assert!((value - closed).abs() < 1e-10, "p = {p}: {value} vs {closed}");
        }
        assert!((2.0 * unilateral_purity(&bell_diagonal_family(1.0f64).unwrap()) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn coherence_identities_on_random_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for seed in 0..1000u64 {
            let rho = random_density::<f64>(2, 2, seed);
            let theta = rng.random_range(-1.0f64..1.0).acos();
            let basis = bloch_basis(theta, rng.random_range(0.0..std::f64::consts::TAU));

            let uni = unilateral_coherence(&rho, &basis).unwrap().value;
            let via_relent = relative_entropy(&rho, &dephase(&rho, &basis).unwrap()).unwrap();
            assert!((uni - via_relent).abs() < 1e-9, "seed {seed}");

            let rho_a = rho.reduced_a();
            let decomposed = coherence_rel(&rho_a, &basis).unwrap().value + mutual_information(&rho)
                - holevo(&rho, &basis).unwrap();
            assert!((uni - decomposed).abs() < 1e-9, "seed {seed}");

            assert!(purity_rel(&rho_a) >= coherence_rel(&rho_a, &basis).unwrap().value - 1e-10);

            let split = purity_rel(&rho_a) + mutual_information(&rho);
            assert!((unilateral_purity(&rho) - split).abs() < 1e-9);
        }
    }
}
