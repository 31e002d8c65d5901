//! Conditional entropy, mutual information, Holevo quantity, and the
//! classical correlation / quantum discord pair for a qubit A.
//!
//! The classical correlation `J_A` maximizes the Holevo quantity over
//! rank-one projective measurements on A, parametrized by the Bloch angles
//! of the first basis vector. The search is a full `grid × grid` scan over
//! `θ ∈ [0, π]`, `φ ∈ [0, 2π)` followed by compass-search refinement of the
//! best few grid points down to `resolution` radians.

use num_traits::Zero;

use crate::entropy::von_neumann_entropy;
use crate::error::{Error, Result};
use crate::linalg::{eigenvalues_2x2, hermitian_eigenvalues, ComplexMatrix};
use crate::measurement::{bloch_basis, measure, ObservableBasis};
use crate::scalar::{clamp_dust, Real, C};
use crate::states::{pauli_matrices, DensityMatrix};

const DUST: f64 = 1e-10;

/// `S(A|B) = S(ρ_AB) − S(ρ_B)`. Negative values witness entanglement.
pub fn conditional_entropy<T: Real>(rho: &DensityMatrix<T>) -> T {
    von_neumann_entropy(rho) - von_neumann_entropy(&rho.reduced_b())
}

/// `I(A:B) = S(ρ_A) + S(ρ_B) − S(ρ_AB)`.
pub fn mutual_information<T: Real>(rho: &DensityMatrix<T>) -> T {
    let i = von_neumann_entropy(&rho.reduced_a()) + von_neumann_entropy(&rho.reduced_b()) - von_neumann_entropy(rho);
    clamp_dust(i, T::lit(DUST))
}

/// Holevo quantity `I(Y:B) = S(ρ_B) − Σ_y p_y S(ρ_{B|y})` of measuring A in `basis`.
pub fn holevo<T: Real>(rho: &DensityMatrix<T>, basis: &ObservableBasis<T>) -> Result<T> {
    let out = measure(rho, basis)?;
    let averaged: T = out
        .probs
        .as_slice()
        .iter()
        .zip(&out.conditional_states)
        .map(|(&p, s)| if p.is_zero() { T::zero() } else { p * von_neumann_entropy(s) })
        .sum();
    Ok(clamp_dust(von_neumann_entropy(&rho.reduced_b()) - averaged, T::lit(DUST)))
}

/// Optimal projective measurement on a qubit A.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscordResult<T: Real> {
    /// `D_A = I(A:B) − J_A`.
    pub discord: T,
    /// `J_A`, the Holevo quantity of the optimal basis.
    pub classical_correlation: T,
    pub mutual_information: T,
    pub optimal_theta: T,
    pub optimal_phi: T,
    /// Objective evaluations spent by the search.
    pub optimizer_evals: usize,
}

/// Grid-then-refine search settings for [`classical_correlation_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscordSearch {
    /// Grid points per angle.
    pub grid: usize,
    /// Final compass-search step, radians.
    pub resolution: f64,
    /// Number of well-separated grid maxima refined.
    pub candidates: usize,
}

impl Default for DiscordSearch {
    fn default() -> Self {
        Self {
            grid: 64,
            resolution: 1e-6,
            candidates: 4,
        }
    }
}

/// `J_A` and `D_A` with the default search.
pub fn classical_correlation<T: Real>(rho: &DensityMatrix<T>) -> Result<DiscordResult<T>> {
    classical_correlation_with(rho, &DiscordSearch::default())
}

pub fn classical_correlation_with<T: Real>(rho: &DensityMatrix<T>, search: &DiscordSearch) -> Result<DiscordResult<T>> {
    if rho.dim_a() != 2 {
        return Err(Error::UnsupportedDimension(format!(
            "classical correlation search needs a qubit A, got dimension {}",
            rho.dim_a()
        )));
    }
    if search.grid < 2 || search.candidates == 0 || !(search.resolution > 0.0) {
        return Err(Error::Domain(format!("invalid discord search settings {search:?}")));
    }

    let objective = BlochObjective::new(rho);
    let mut evals = 0usize;
    let mut eval = |theta: T, phi: T| {
        evals += 1;
        objective.holevo(theta, phi)
    };

    let g = search.grid;
    let theta_step = T::PI() / T::from_usize(g - 1).expect("grid size");
    let phi_step = T::TAU() / T::from_usize(g).expect("grid size");

    // scan order: θ outer, φ inner
    let mut grid = Vec::with_capacity(g * g);
    for i in 0..g {
        let theta = theta_step * T::from_usize(i).expect("grid index");
        for j in 0..g {
            let phi = phi_step * T::from_usize(j).expect("grid index");
            grid.push((eval(theta, phi), theta, phi));
        }
    }
    // Leading seed: earliest point in scan order within rounding noise of
    // the grid maximum, so flat objectives resolve deterministically.
    let top = grid.iter().fold(T::neg_infinity(), |m, g| m.max(g.0));
    let lead = *grid
        .iter()
        .find(|g| g.0 >= top - improvement_margin(top))
        .expect("non-empty grid");
    grid.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap_or(std::cmp::Ordering::Equal));

    let separation = T::lit(4.0) * theta_step;
    let mut seeds: Vec<(T, T, T)> = Vec::with_capacity(search.candidates);
    seeds.push(lead);
    for &cand in &grid {
        if seeds.len() == search.candidates {
            break;
        }
        if seeds.iter().all(|&(_, t, p)| axis_angle(cand.1, cand.2, t, p) > separation) {
            seeds.push(cand);
        }
    }

    let resolution = T::lit(search.resolution);
    let mut best = seeds[0];
    for (k, &seed) in seeds.iter().enumerate() {
        let refined = compass_search(&mut eval, seed, theta_step, phi_step, resolution);
        if k == 0 || refined.0 > best.0 + improvement_margin(best.0) {
            best = refined;
        }
    }

    let (_, theta, phi) = best;
    let mi = mutual_information(rho);
    let j = holevo(rho, &bloch_basis(theta, phi))?;
    Ok(DiscordResult {
        discord: clamp_dust(mi - j, T::lit(DUST)),
        classical_correlation: j,
        mutual_information: mi,
        optimal_theta: theta,
        optimal_phi: phi,
        optimizer_evals: evals,
    })
}

#[inline]
fn improvement_margin<T: Real>(value: T) -> T {
    T::lit(64.0) * T::epsilon() * (T::one() + value.abs())
}

/// Angle between measurement axes, identifying antipodal Bloch vectors
/// (they describe the same measurement).
fn axis_angle<T: Real>(t1: T, p1: T, t2: T, p2: T) -> T {
    let n1 = bloch_vector(t1, p1);
    let n2 = bloch_vector(t2, p2);
    let dot = n1[0] * n2[0] + n1[1] * n2[1] + n1[2] * n2[2];
    dot.abs().min(T::one()).acos()
}

fn bloch_vector<T: Real>(theta: T, phi: T) -> [T; 3] {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    [st * cp, st * sp, ct]
}

/// Maps angles back to `θ ∈ [0, π]`, `φ ∈ [0, 2π)` without changing the
/// Bloch vector.
fn wrap_angles<T: Real>(mut theta: T, mut phi: T) -> (T, T) {
    let tau = T::TAU();
    theta %= tau;
    if theta < T::zero() {
        theta += tau;
    }
    if theta > T::PI() {
        theta = tau - theta;
        phi += T::PI();
    }
    phi %= tau;
    if phi < T::zero() {
        phi += tau;
    }
    (theta, phi)
}

fn compass_search<T: Real>(
    eval: &mut impl FnMut(T, T) -> T,
    start: (T, T, T),
    theta_step: T,
    phi_step: T,
    resolution: T,
) -> (T, T, T) {
    let (mut value, mut theta, mut phi) = start;
    let mut dt = theta_step;
    let mut dp = phi_step;
    let half = T::lit(0.5);
    while dt > resolution || dp > resolution {
        let mut moved = false;
        for (mt, mp) in [(dt, T::zero()), (-dt, T::zero()), (T::zero(), dp), (T::zero(), -dp)] {
            if mt.is_zero() && mp.is_zero() {
                continue;
            }
            let (t, p) = wrap_angles(theta + mt, phi + mp);
            let v = eval(t, p);
            if v > value + improvement_margin(value) {
                value = v;
                theta = t;
                phi = p;
                moved = true;
                break;
            }
        }
        if !moved {
            if dt > resolution {
                dt *= half;
            }
            if dp > resolution {
                dp *= half;
            }
        }
    }
    (value, theta, phi)
}

/// Holevo quantity of `bloch_basis(θ, φ)` from precomputed B operators:
/// the outcome operators are `M± = (ρ_B ± Σᵢ nᵢ Γᵢ)/2` with
/// `Γᵢ = Tr_A[(σᵢ ⊗ I) ρ]`.
struct BlochObjective<T: Real> {
    rho_b: ComplexMatrix<T>,
    gamma: [ComplexMatrix<T>; 3],
    entropy_b: T,
}

impl<T: Real> BlochObjective<T> {
    fn new(rho: &DensityMatrix<T>) -> Self {
        let db = rho.dim_b();
        let m = rho.matrix();
        let paulis = pauli_matrices::<T>();
        let gamma = paulis.map(|s| {
            ComplexMatrix::from_fn(db, |k, l| {
                let mut acc = C::zero();
                for a in 0..2 {
                    for a2 in 0..2 {
                        acc += s[(a, a2)] * m[(a2 * db + k, a * db + l)];
                    }
                }
                acc
            })
        });
        let rho_b = rho.reduced_b();
        Self {
            entropy_b: von_neumann_entropy(&rho_b),
            rho_b: rho_b.into_matrix(),
            gamma,
        }
    }

    fn holevo(&self, theta: T, phi: T) -> T {
        let n = bloch_vector(theta, phi);
        let shift = &(&self.gamma[0].scale(n[0]) + &self.gamma[1].scale(n[1])) + &self.gamma[2].scale(n[2]);
        let half = T::lit(0.5);
        let plus = (&self.rho_b + &shift).scale(half);
        let minus = (&self.rho_b - &shift).scale(half);
        self.entropy_b - weighted_entropy(&plus) - weighted_entropy(&minus)
    }
}

/// `p·S(M/p)` for a positive operator `M` with `p = Tr M`, i.e.
/// `−Σ μ log₂ μ + p log₂ p` over the eigenvalues `μ` of `M`.
fn weighted_entropy<T: Real>(m: &ComplexMatrix<T>) -> T {
    let p = m.trace().re;
    if p <= T::support_tol() {
        return T::zero();
    }
    let eigs: Vec<T> = if m.dim() == 2 {
        eigenvalues_2x2(m).to_vec()
    } else {
        hermitian_eigenvalues(m).expect("outcome operator is Hermitian")
    };
    let s: T = eigs.iter().map(|&mu| -mu.xlog2x()).sum();
    s + p.xlog2x()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::binary_entropy;
    use crate::linalg::tensor_product;
    use crate::measurement::{pauli_basis, Pauli};
    use crate::states::{bell_diagonal_family, make_density, random_density, werner, x_state};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn product() -> DensityMatrix<f64> {
        let a = random_density::<f64>(2, 1, 31);
        let b = random_density::<f64>(2, 1, 32);
        make_density(tensor_product(a.matrix(), b.matrix()), 2, 2).unwrap()
    }

    #[test]
    fn conditional_entropy_examples() {
        let a = random_density::<f64>(2, 1, 31);
        let prod = product();
        assert!((conditional_entropy(&prod) - von_neumann_entropy(&a)).abs() < 1e-10);
        assert!((conditional_entropy(&x_state(1.0f64).unwrap()) + 1.0).abs() < 1e-12);
        let w = conditional_entropy(&werner(0.5f64).unwrap());
        assert!((w - 0.548_794_940_695_398_5).abs() < 1e-12);
    }

    #[test]
    fn mutual_information_examples() {
        assert!(mutual_information(&product()).abs() < 1e-10);
        assert!((mutual_information(&x_state(1.0f64).unwrap()) - 2.0).abs() < 1e-12);
        for i in 0..=10 {
            let p = i as f64 / 10.0;
            let rho = bell_diagonal_family(p).unwrap();
            let spectrum = [p, (1.0 - p) / 2.0, (1.0 - p) / 2.0];
            let s_ab: f64 = spectrum.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.log2()).sum();
            assert!((mutual_information(&rho) - (2.0 - s_ab)).abs() < 1e-10);
        }
    }

    #[test]
    fn holevo_examples() {
        assert!(holevo(&product(), &bloch_basis(0.3, 0.2)).unwrap().abs() < 1e-10);
        assert!((holevo(&x_state(1.0f64).unwrap(), &pauli_basis(Pauli::Z)).unwrap() - 1.0).abs() < 1e-12);
        for i in 0..=10 {
            let p = i as f64 / 10.0;
            let rho = bell_diagonal_family(p).unwrap();
            let hx = holevo(&rho, &pauli_basis(Pauli::X)).unwrap();
            let hz = holevo(&rho, &pauli_basis(Pauli::Z)).unwrap();
            assert!((hx - (1.0 - binary_entropy(p).unwrap())).abs() < 1e-10, "p = {p}");
            assert!((hz - (1.0 - binary_entropy((1.0 + p) / 2.0).unwrap())).abs() < 1e-10, "p = {p}");
        }
        assert!(matches!(
            holevo(&x_state(1.0f64).unwrap(), &crate::measurement::computational_basis(3)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn fast_objective_matches_generic_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for seed in 0..50u64 {
            let rho = random_density::<f64>(2, if seed % 2 == 0 { 2 } else { 3 }, seed);
            let obj = BlochObjective::new(&rho);
            for _ in 0..10 {
                let (t, p) = (rng.random_range(0.0..3.2), rng.random_range(0.0..6.3));
                let slow = holevo(&rho, &bloch_basis(t, p)).unwrap();
                assert!((obj.holevo(t, p) - slow).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn wrap_angles_preserves_bloch_vector() {
        for (t, p) in [(-0.3, 0.1), (3.5, 6.0), (7.0, -1.0), (0.5, 6.5)] {
            let (t2, p2) = wrap_angles(t, p);
            assert!((0.0..=std::f64::consts::PI).contains(&t2));
            assert!((0.0..std::f64::consts::TAU).contains(&p2));
            let (a, b) = (bloch_vector(t, p), bloch_vector(t2, p2));
            for k in 0..3 {
                assert!((a[k] - b[k]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn classical_correlation_examples() {
        let r = classical_correlation(&product()).unwrap();
        assert!(r.classical_correlation.abs() < 1e-9 && r.discord.abs() < 1e-9);

        let r = classical_correlation(&x_state(1.0f64).unwrap()).unwrap();
        assert!((r.classical_correlation - 1.0).abs() < 1e-9);
        assert!((r.discord - 1.0).abs() < 1e-9);

        // 1 − h(0.75), frozen
        let r = classical_correlation(&werner(0.5f64).unwrap()).unwrap();
        assert!((r.classical_correlation - 0.188_721_875_540_867_14).abs() < 1e-9);
        // flat objective: first grid point in scan order
        assert_eq!((r.optimal_theta, r.optimal_phi), (0.0, 0.0));
        assert!(r.optimizer_evals >= 64 * 64);

        let big = random_density::<f64>(3, 2, 1);
        assert!(matches!(classical_correlation(&big), Err(Error::UnsupportedDimension(_))));
    }

    #[test]
    fn discord_result_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for seed in 0..40u64 {
            let rho = random_density::<f64>(2, 2, seed);
            let r = classical_correlation(&rho).unwrap();
            assert!((r.discord + r.classical_correlation - r.mutual_information).abs() < 1e-7);
            let at_opt = holevo(&rho, &bloch_basis(r.optimal_theta, r.optimal_phi)).unwrap();
            assert!((at_opt - r.classical_correlation).abs() < 1e-9);
            assert!(r.classical_correlation >= -1e-9 && r.classical_correlation <= r.mutual_information + 1e-9);
            assert!(r.discord >= -1e-9);
            for _ in 0..50 {
                let probe = bloch_basis(rng.random_range(-1.0f64..1.0).acos(), rng.random_range(0.0..6.3));
                let h = holevo(&rho, &probe).unwrap();
                assert!(r.classical_correlation >= h - 1e-9, "seed {seed}");
                assert!(h <= r.mutual_information + 1e-9);
            }
        }
    }

    #[test]
    fn classical_correlation_ignores_local_unitaries_on_b() {
        for seed in 0..20u64 {
            let rho = random_density::<f64>(2, 2, seed);
            let u_src = random_density::<f64>(2, 1, seed + 900);
            let eig = crate::linalg::hermitian_eig(u_src.matrix()).unwrap();
            let u = ComplexMatrix::from_fn(2, |i, j| eig.eigenvectors[j][i]);
            let full = tensor_product(&ComplexMatrix::identity(2), &u);
            let rotated = &(&full * rho.matrix()) * &full.adjoint();
            let rotated = make_density(rotated, 2, 2).unwrap();
            let a = classical_correlation(&rho).unwrap().classical_correlation;
            let b = classical_correlation(&rotated).unwrap().classical_correlation;
            assert!((a - b).abs() < 1e-6, "seed {seed}");
        }
    }

    #[test]
    fn single_precision_runs() {
        let r = classical_correlation(&x_state(1.0f32).unwrap()).unwrap();
        assert!((r.classical_correlation - 1.0).abs() < 1e-4);
    }
}
