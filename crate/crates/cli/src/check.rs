use std::fmt::Write as _;

use coherence_core::{
    bloch_basis, coherence_bound_t1, coherence_rel, conditional_entropy, dephase, evaluate_all, hermitian_eig,
    holevo, incompatibility, make_density, measure, mutual_information, partial_trace, purity_rel, random_density,
    relative_entropy, tensor_product, unilateral_coherence, unilateral_purity, von_neumann_entropy, Density64,
    Report64, Subsystem, BOUND_TOL, DISCORD_BOUND_TOL,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::CliError;

const TOL: f64 = 1e-9;

pub const SUITES: [&str; 7] = ["linalg", "entropy", "states", "measurement", "coherence_purity", "correlations", "bounds"];

/// Report fields the hidden corruption hook may shift.
pub const CORRUPTIBLE: [&str; 10] = [
    "lb_theorem2",
    "lb_theorem3",
    "lb_theorem4",
    "eur_berta",
    "eur_pati",
    "eur_adabi",
    "ub_purity",
    "ub_holevo",
    "certainty_ub",
    "lhs_coherence",
];

/// One random test case: a state seed and two Bloch axes on A.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Case {
    pub state_seed: u64,
    pub x: (f64, f64),
    pub z: (f64, f64),
}

fn random_axis(rng: &mut ChaCha8Rng) -> (f64, f64) {
    let theta = rng.random_range(-1.0f64..=1.0).acos();
    (theta, rng.random_range(0.0..std::f64::consts::TAU))
}

pub fn cases(seed: u64, n: usize) -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| Case {
            state_seed: rng.random(),
            x: random_axis(&mut rng),
            z: random_axis(&mut rng),
        })
        .collect()
}

/// A violated check: `margin < −tolerance`.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub suite: &'static str,
    pub case: Case,
    pub inequality: String,
    pub margin: f64,
}

#[derive(Default)]
struct Checks {
    failed: Vec<(String, f64)>,
}

impl Checks {
    /// Records `margin ≥ −tol`.
    fn at_least(&mut self, name: &str, margin: f64, tol: f64) {
        if !(margin >= -tol) {
            self.failed.push((name.to_owned(), margin));
        }
    }

    /// Records `|residual| ≤ tol`; the margin is `tol − |residual|`.
    fn near(&mut self, name: &str, residual: f64, tol: f64) {
        self.at_least(name, -residual.abs(), tol);
    }
}

fn suite_linalg(rho: &Density64, c: &mut Checks) -> Result<(), CliError> {
    let eig = hermitian_eig(rho.matrix())?;
    c.near("eigendecomposition reconstructs rho", eig.reconstruct().max_abs_diff(rho.matrix()), 1e-10);
    c.near("eigenvectors orthonormal", eig.orthonormality_defect(), 1e-10);
    for (over, name) in [(Subsystem::A, "Tr_A preserves trace"), (Subsystem::B, "Tr_B preserves trace")] {
        let reduced = partial_trace(rho.matrix(), 2, 2, over)?;
        c.near(name, reduced.trace().re - 1.0, TOL);
    }
    let product = tensor_product(rho.reduced_a().matrix(), rho.reduced_b().matrix());
    c.near("tensor product multiplies traces", product.trace().re - 1.0, TOL);
    Ok(())
}

fn suite_entropy(rho: &Density64, c: &mut Checks) -> Result<(), CliError> {
    let s = von_neumann_entropy(rho);
    c.at_least("S(rho) >= 0", s, TOL);
    c.at_least("S(rho) <= log2 d", 2.0 - s, TOL);
    let product = make_density(tensor_product(rho.reduced_a().matrix(), rho.reduced_b().matrix()), 2, 2)?;
    let d = relative_entropy(rho, &product)?;
    c.at_least("S(rho || rho_A x rho_B) >= 0", d, TOL);
    c.near("S(rho || rho_A x rho_B) = I(A:B)", d - mutual_information(rho), TOL);
    Ok(())
}

fn suite_states(rho: &Density64, c: &mut Checks) -> Result<(), CliError> {
    c.near("trace one", rho.matrix().trace().re - 1.0, TOL);
    c.near("hermitian", rho.matrix().hermiticity_defect(), 1e-10);
    let min_eig = hermitian_eig(rho.matrix())?.eigenvalues.last().copied().unwrap_or(0.0);
    c.at_least("positive semidefinite", min_eig, TOL);
    Ok(())
}

fn suite_measurement(rho: &Density64, case: &Case, c: &mut Checks) -> Result<(), CliError> {
    let x = bloch_basis(case.x.0, case.x.1);
    let z = bloch_basis(case.z.0, case.z.1);
    for basis in [&x, &z] {
        let out = measure(rho, basis)?;
        c.near("outcome probabilities sum to one", out.probs.as_slice().iter().sum::<f64>() - 1.0, TOL);
        let once = dephase(rho, basis)?;
        c.near("dephasing preserves trace", once.matrix().trace().re - 1.0, TOL);
        c.near("dephasing is idempotent", dephase(&once, basis)?.matrix().max_abs_diff(once.matrix()), TOL);
        c.near("dephasing leaves rho_B unchanged", once.reduced_b().matrix().max_abs_diff(rho.reduced_b().matrix()), TOL);
    }
    let q = incompatibility(&x, &z)?;
    c.at_least("q_MU >= 0", q, TOL);
    c.at_least("q_MU <= log2 d", 1.0 - q, TOL);
    Ok(())
}

fn suite_coherence(rho: &Density64, case: &Case, c: &mut Checks) -> Result<(), CliError> {
    let rho_a = rho.reduced_a();
    let mi = mutual_information(rho);
    for (theta, phi) in [case.x, case.z] {
        let basis = bloch_basis(theta, phi);
        let uni = unilateral_coherence(rho, &basis)?.value;
        let plain = coherence_rel(&rho_a, &basis)?.value;
        c.at_least("unilateral coherence >= 0", uni, TOL);
        c.near(
            "C^{B|A} = C(rho_A) + I(A:B) - I(Y:B)",
            uni - (plain + mi - holevo(rho, &basis)?),
            TOL,
        );
        c.near(
            "C^{B|A} = S(rho || dephased rho)",
            uni - relative_entropy(rho, &dephase(rho, &basis)?)?,
            TOL,
        );
        c.at_least("P(rho_A) >= C(rho_A)", purity_rel(&rho_a) - plain, TOL);
    }
    c.near("P^{B|A} = P(rho_A) + I(A:B)", unilateral_purity(rho) - (purity_rel(&rho_a) + mi), TOL);
    Ok(())
}

fn suite_correlations(rho: &Density64, case: &Case, report: &Report64, c: &mut Checks) -> Result<(), CliError> {
    let mi = report.mutual_information;
    let j = report.classical_correlation;
    c.at_least("I(A:B) >= 0", mi, TOL);
    c.at_least("S(A|B) >= -log2 d_A", conditional_entropy(rho) + 1.0, TOL);
    c.at_least("J_A >= 0", j, DISCORD_BOUND_TOL);
    c.at_least("D_A >= 0", report.discord, DISCORD_BOUND_TOL);
    for (theta, phi) in [case.x, case.z] {
        c.at_least("J_A >= I(Y:B)", j - holevo(rho, &bloch_basis(theta, phi))?, DISCORD_BOUND_TOL);
    }
    c.at_least("delta >= D_A - J_A", report.delta - report.discord_gap, DISCORD_BOUND_TOL);
    Ok(())
}

fn suite_bounds(rho: &Density64, case: &Case, report: &Report64, c: &mut Checks) -> Result<(), CliError> {
    let x = bloch_basis(case.x.0, case.x.1);
    let z = bloch_basis(case.z.0, case.z.1);
    let (lhs, lb) = coherence_bound_t1(&rho.reduced_a(), &x, &z)?;
    c.at_least("theorem1: C(X|rho_A) + C(Z|rho_A) >= q_MU - S(rho_A)", lhs - lb, BOUND_TOL);
    for ineq in report.inequalities() {
        c.at_least(ineq.name, ineq.margin, ineq.tolerance);
    }
    c.near("conversion identity", report.conversion_residual(), BOUND_TOL);
    Ok(())
}

fn corrupt(report: &mut Report64, field: &str) {
    let (slot, shift) = match field {
        "lb_theorem2" => (&mut report.lb_theorem2, 1.0),
        "lb_theorem3" => (&mut report.lb_theorem3, 1.0),
        "lb_theorem4" => (&mut report.lb_theorem4, 1.0),
        "eur_berta" => (&mut report.eur_berta, 1.0),
        "eur_pati" => (&mut report.eur_pati, 1.0),
        "eur_adabi" => (&mut report.eur_adabi, 1.0),
        "ub_purity" => (&mut report.ub_purity, -1.0),
        "ub_holevo" => (&mut report.ub_holevo, -1.0),
        "certainty_ub" => (&mut report.certainty_ub, -1.0),
        "lhs_coherence" => (&mut report.lhs_coherence, -1.0),
        _ => return,
    };
    *slot += shift;
}

/// Failed checks of one case, per suite in [`SUITES`] order.
fn run_case(case: &Case, corruption: Option<&str>) -> Result<Vec<Vec<(String, f64)>>, CliError> {
    let rho = random_density::<f64>(2, 2, case.state_seed);
    let x = bloch_basis(case.x.0, case.x.1);
    let z = bloch_basis(case.z.0, case.z.1);
    let mut report = evaluate_all(&rho, &x, &z)?;
    if let Some(field) = corruption {
        corrupt(&mut report, field);
    }

    let mut out = Vec::with_capacity(SUITES.len());
    for suite in SUITES {
        let mut c = Checks::default();
        match suite {
            "linalg" => suite_linalg(&rho, &mut c)?,
            "entropy" => suite_entropy(&rho, &mut c)?,
            "states" => suite_states(&rho, &mut c)?,
            "measurement" => suite_measurement(&rho, case, &mut c)?,
            "coherence_purity" => suite_coherence(&rho, case, &mut c)?,
            "correlations" => suite_correlations(&rho, case, &report, &mut c)?,
            _ => suite_bounds(&rho, case, &report, &mut c)?,
        }
        out.push(c.failed);
    }
    Ok(out)
}

/// Outcome of a check run.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckSummary {
    pub cases: usize,
    /// Passing case count per suite, in [`SUITES`] order.
    pub passed: Vec<usize>,
    pub violations: Vec<Violation>,
}

impl CheckSummary {
    pub fn all_passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (suite, passed) in SUITES.iter().zip(&self.passed) {
            writeln!(out, "{suite}: {passed}/{} passed", self.cases).expect("write to String");
        }
        out
    }
}

pub fn run_check(seed: u64, n: usize, corruption: Option<&str>) -> Result<CheckSummary, CliError> {
    if n == 0 {
        return Err(CliError::Validation("need cases >= 1".into()));
    }
    if let Some(field) = corruption {
        if !CORRUPTIBLE.contains(&field) {
            return Err(CliError::Parse(format!("cannot corrupt {field:?}")));
        }
    }
    let all = cases(seed, n);
    let results: Vec<_> = all
        .par_iter()
        .map(|case| run_case(case, corruption))
        .collect::<Result<_, _>>()?;

    let mut passed = vec![0usize; SUITES.len()];
    let mut violations = Vec::new();
    for (case, per_suite) in all.iter().zip(results) {
        for (k, failed) in per_suite.into_iter().enumerate() {
            if failed.is_empty() {
                passed[k] += 1;
            }
            violations.extend(failed.into_iter().map(|(inequality, margin)| Violation {
                suite: SUITES[k],
                case: *case,
                inequality,
                margin,
            }));
        }
    }
    Ok(CheckSummary {
        cases: n,
        passed,
        violations,
    })
}

pub fn cmd_check(seed: u64, n: usize, corruption: Option<&str>) -> Result<(), CliError> {
    let summary = run_check(seed, n, corruption)?;
    print!("{}", summary.render());
    if summary.all_passed() {
        println!("all suites passed ({n} cases, seed {seed})");
        return Ok(());
    }
    let mut msg = format!("{} invariant violation(s):", summary.violations.len());
    for v in &summary.violations {
        write!(
            msg,
            "\n  [{}] state seed {}, x = bloch:{}:{}, z = bloch:{}:{}: {} (margin {:.6e})",
            v.suite, v.case.state_seed, v.case.x.0, v.case.x.1, v.case.z.0, v.case.z.1, v.inequality, v.margin
        )
        .expect("write to String");
    }
    Err(CliError::Invariant(msg))
}
