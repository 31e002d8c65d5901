//! Lower and upper bounds on the sum of unilateral coherences for two
//! measurement bases on A, the matching memory-assisted entropic
//! uncertainty relations, and the certainty relation.
//!
//! With `q = q_MU`, `s = S(A|B)`, `δ = I(A:B) − I(X:B) − I(Z:B)` and
//! `g = D_A − J_A`, a [`BoundReport`] holds
//!
//! ```text
//! q − s                  ≤ q − s + max{0, g}     ≤ C^{B|A}(X) + C^{B|A}(Z)
//! q − s                  ≤ q − s + max{0, δ}     ≤ C^{B|A}(X) + C^{B|A}(Z)
//! C^{B|A}(X) + C^{B|A}(Z) ≤ 2P^{B|A} − I(X:B) − I(Z:B) ≤ 2P^{B|A}
//! q + s                  ≤ q + s + max{0, g | δ} ≤ H(X|B) + H(Z|B) ≤ 2 log₂ d − I(X:B) − I(Z:B)
//! ```
//!
//! and `H(X|B) + H(Z|B) = C^{B|A}(X) + C^{B|A}(Z) + 2s` exactly.

use rayon::prelude::*;

use crate::coherence::{coherence_rel, unilateral_coherence, unilateral_purity};
use crate::correlations::{classical_correlation, conditional_entropy, holevo, mutual_information};
use crate::entropy::von_neumann_entropy;
use crate::error::{Error, Result};
use crate::measurement::{dephase, incompatibility, ObservableBasis};
use crate::scalar::{clamp_dust, Real};
use crate::states::{bell_diagonal_family, werner, x_state, DensityMatrix};

/// Shared tolerance for bound comparisons.
pub const BOUND_TOL: f64 = 1e-9;
/// Tolerance for bounds that depend on the discord search.
pub const DISCORD_BOUND_TOL: f64 = 1e-6;

/// `max{0, x}` after flushing `|x| ≤ support_tol` to zero.
fn positive_part<T: Real>(x: T) -> T {
    if x.abs() <= T::support_tol() {
        T::zero()
    } else {
        x.max(T::zero())
    }
}

/// Everything evaluated for one state and one pair of bases on A.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport<T: Real> {
    /// `C^{B|A}(X) + C^{B|A}(Z)`.
    pub lhs_coherence: T,
    /// `H(X|B) + H(Z|B)`.
    pub lhs_eur: T,
    pub q_mu: T,
    /// `S(A|B)`.
    pub cond_entropy: T,
    /// `q_MU − S(A|B)`.
    pub lb_theorem2: T,
    /// `q_MU − S(A|B) + max{0, D_A − J_A}`.
    pub lb_theorem3: T,
    /// `q_MU − S(A|B) + max{0, δ}`.
    pub lb_theorem4: T,
    /// `2 P^{B|A}`.
    pub ub_purity: T,
    /// `2 P^{B|A} − I(X:B) − I(Z:B)`.
    pub ub_holevo: T,
    /// `q_MU + S(A|B)`.
    pub eur_berta: T,
    /// `q_MU + S(A|B) + max{0, D_A − J_A}`.
    pub eur_pati: T,
    /// `q_MU + S(A|B) + max{0, δ}`.
    pub eur_adabi: T,
    /// `2 log₂ d − I(X:B) − I(Z:B)`.
    pub certainty_ub: T,
    /// `I(A:B) − I(X:B) − I(Z:B)`.
    pub delta: T,
    /// `D_A − J_A`.
    pub discord_gap: T,
    pub coherence_x: T,
    pub coherence_z: T,
    /// `H(X|B)`.
    pub cond_entropy_x: T,
    /// `H(Z|B)`.
    pub cond_entropy_z: T,
    pub mutual_information: T,
    /// `I(X:B)`.
    pub holevo_x: T,
    /// `I(Z:B)`.
    pub holevo_z: T,
    pub discord: T,
    pub classical_correlation: T,
}

impl<T: Real> BoundReport<T> {
    /// `(name, value)` pairs in declaration order.
    pub fn fields(&self) -> [(&'static str, T); 24] {
        [
            ("lhs_coherence", self.lhs_coherence),
            ("lhs_eur", self.lhs_eur),
            ("q_mu", self.q_mu),
            ("cond_entropy", self.cond_entropy),
            ("lb_theorem2", self.lb_theorem2),
            ("lb_theorem3", self.lb_theorem3),
            ("lb_theorem4", self.lb_theorem4),
            ("ub_purity", self.ub_purity),
            ("ub_holevo", self.ub_holevo),
            ("eur_berta", self.eur_berta),
            ("eur_pati", self.eur_pati),
            ("eur_adabi", self.eur_adabi),
            ("certainty_ub", self.certainty_ub),
            ("delta", self.delta),
            ("discord_gap", self.discord_gap),
            ("coherence_x", self.coherence_x),
            ("coherence_z", self.coherence_z),
            ("cond_entropy_x", self.cond_entropy_x),
            ("cond_entropy_z", self.cond_entropy_z),
            ("mutual_information", self.mutual_information),
            ("holevo_x", self.holevo_x),
            ("holevo_z", self.holevo_z),
            ("discord", self.discord),
            ("classical_correlation", self.classical_correlation),
        ]
    }

    /// Every inequality the report should satisfy, as `(name, margin,
    /// tolerance)`; an inequality holds when `margin ≥ −tolerance`.
    pub fn inequalities(&self) -> Vec<Inequality<T>> {
        let tol = T::lit(BOUND_TOL);
        let dtol = T::lit(DISCORD_BOUND_TOL);
        let ineq = |name, margin, tolerance| Inequality { name, margin, tolerance };
        vec![
            ineq("theorem2: lhs_coherence >= lb_theorem2", self.lhs_coherence - self.lb_theorem2, tol),
            ineq("theorem3: lhs_coherence >= lb_theorem3", self.lhs_coherence - self.lb_theorem3, dtol),
            ineq("theorem4: lhs_coherence >= lb_theorem4", self.lhs_coherence - self.lb_theorem4, tol),
            ineq("lb_theorem3 >= lb_theorem2", self.lb_theorem3 - self.lb_theorem2, tol),
            ineq("lb_theorem4 >= lb_theorem2", self.lb_theorem4 - self.lb_theorem2, tol),
            ineq("lb_theorem4 >= lb_theorem3", self.lb_theorem4 - self.lb_theorem3, dtol),
            ineq("ub_holevo >= lhs_coherence", self.ub_holevo - self.lhs_coherence, tol),
            ineq("ub_purity >= ub_holevo", self.ub_purity - self.ub_holevo, tol),
            ineq("berta: lhs_eur >= eur_berta", self.lhs_eur - self.eur_berta, tol),
            ineq("pati: lhs_eur >= eur_pati", self.lhs_eur - self.eur_pati, dtol),
            ineq("adabi: lhs_eur >= eur_adabi", self.lhs_eur - self.eur_adabi, tol),
            ineq("eur_pati >= eur_berta", self.eur_pati - self.eur_berta, tol),
            ineq("eur_adabi >= eur_berta", self.eur_adabi - self.eur_berta, tol),
            ineq("certainty: certainty_ub >= lhs_eur", self.certainty_ub - self.lhs_eur, tol),
        ]
    }

    /// `H(X|B) + H(Z|B) − [C^{B|A}(X) + C^{B|A}(Z) + 2 S(A|B)]`.
    pub fn conversion_residual(&self) -> T {
        self.lhs_eur - (self.lhs_coherence + T::lit(2.0) * self.cond_entropy)
    }
}

/// One inequality check: holds when `margin ≥ −tolerance`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Inequality<T: Real> {
    pub name: &'static str,
    pub margin: T,
    pub tolerance: T,
}

impl<T: Real> Inequality<T> {
    pub fn holds(&self) -> bool {
        self.margin >= -self.tolerance
    }
}

/// Coherence sum for a monopartite state and its lower bound
/// `q_MU − S(ρ)`, returned as `(lhs, lb)`.
pub fn coherence_bound_t1<T: Real>(
    rho_a: &DensityMatrix<T>,
    x: &ObservableBasis<T>,
    z: &ObservableBasis<T>,
) -> Result<(T, T)> {
    let lhs = coherence_rel(rho_a, x)?.value + coherence_rel(rho_a, z)?.value;
    let lb = incompatibility(x, z)? - von_neumann_entropy(rho_a);
    Ok((lhs, lb))
}

/// Evaluates every bound for a state with a qubit A.
pub fn evaluate_all<T: Real>(
    rho: &DensityMatrix<T>,
    x: &ObservableBasis<T>,
    z: &ObservableBasis<T>,
) -> Result<BoundReport<T>> {
    if rho.dim_a() != 2 {
        return Err(Error::UnsupportedDimension(format!(
            "bound evaluation needs a qubit A, got dimension {}",
            rho.dim_a()
        )));
    }
    let two = T::lit(2.0);
    let q_mu = incompatibility(x, z)?;
    let s_b = von_neumann_entropy(&rho.reduced_b());
    let cond = conditional_entropy(rho);

    let coherence_x = unilateral_coherence(rho, x)?.value;
    let coherence_z = unilateral_coherence(rho, z)?.value;
    // H(Y|B) ≥ 0 for classical Y; flush rounding residue only
    let dust = T::lit(1e-10);
    let cond_entropy_x = clamp_dust(von_neumann_entropy(&dephase(rho, x)?) - s_b, dust);
    let cond_entropy_z = clamp_dust(von_neumann_entropy(&dephase(rho, z)?) - s_b, dust);

    let mi = mutual_information(rho);
    let holevo_x = holevo(rho, x)?;
    let holevo_z = holevo(rho, z)?;
    let disc = classical_correlation(rho)?;

    let delta = mi - holevo_x - holevo_z;
    let discord_gap = disc.discord - disc.classical_correlation;
    let gap_term = positive_part(discord_gap);
    let delta_term = positive_part(delta);

    let lb_theorem2 = q_mu - cond;
    let ub_purity = two * unilateral_purity(rho);
    let log_d = T::from_usize(rho.dim_a()).expect("small dim").log2();

    Ok(BoundReport {
        lhs_coherence: coherence_x + coherence_z,
        lhs_eur: cond_entropy_x + cond_entropy_z,
        q_mu,
        cond_entropy: cond,
        lb_theorem2,
        lb_theorem3: lb_theorem2 + gap_term,
        lb_theorem4: lb_theorem2 + delta_term,
        ub_purity,
        ub_holevo: ub_purity - holevo_x - holevo_z,
        eur_berta: q_mu + cond,
        eur_pati: q_mu + cond + gap_term,
        eur_adabi: q_mu + cond + delta_term,
        certainty_ub: two * log_d - holevo_x - holevo_z,
        delta,
        discord_gap,
        coherence_x,
        coherence_z,
        cond_entropy_x,
        cond_entropy_z,
        mutual_information: mi,
        holevo_x,
        holevo_z,
        discord: disc.discord,
        classical_correlation: disc.classical_correlation,
    })
}

/// One-parameter two-qubit state family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `p|Ψ⁺⟩⟨Ψ⁺| + (1−p)|11⟩⟨11|`
    XState,
    /// `p|Ψ⁻⟩⟨Ψ⁻| + ((1−p)/2)(|Ψ⁺⟩⟨Ψ⁺| + |Φ⁺⟩⟨Φ⁺|)`
    BellDiagonal,
    /// `p|Ψ⁺⟩⟨Ψ⁺| + ((1−p)/4) I`
    Werner,
}

impl Family {
    pub fn state<T: Real>(self, p: T) -> Result<DensityMatrix<T>> {
        match self {
            Family::XState => x_state(p),
            Family::BellDiagonal => bell_diagonal_family(p),
            Family::Werner => werner(p),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::XState => "xstate",
            Family::BellDiagonal => "bell_diagonal",
            Family::Werner => "werner",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "xstate" => Ok(Family::XState),
            "bell_diagonal" => Ok(Family::BellDiagonal),
            "werner" => Ok(Family::Werner),
            other => Err(Error::Domain(format!("unknown state family {other:?}"))),
        }
    }
}

/// Evaluates a family at every grid point. Points run in parallel; the
/// output is in grid order.
pub fn sweep_family<T: Real>(
    family: Family,
    x: &ObservableBasis<T>,
    z: &ObservableBasis<T>,
    p_grid: &[T],
) -> Result<Vec<(T, BoundReport<T>)>> {
    if let Some(bad) = p_grid.iter().find(|p| !(**p >= T::zero() && **p <= T::one())) {
        return Err(Error::Domain(format!("sweep parameter {bad} outside [0, 1]")));
    }
    p_grid
        .par_iter()
        .map(|&p| Ok((p, evaluate_all(&family.state(p)?, x, z)?)))
        .collect()
}

/// `n` evenly spaced points from `lo` to `hi` inclusive.
pub fn linear_grid<T: Real>(lo: T, hi: T, n: usize) -> Vec<T> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let last = T::from_usize(n - 1).expect("grid size");
            (0..n)
                .map(|i| {
                    let i = T::from_usize(i).expect("grid index");
                    lo + (hi - lo) * i / last
                })
                .collect()
        }
    }
}
