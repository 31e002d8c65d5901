//! Entropic and coherence quantities for finite-dimensional bipartite
//! quantum states, with lower and upper bounds on the sum of unilateral
//! coherences and the memory-assisted entropic uncertainty relations they
//! imply.
//!
//! Everything numerical is generic over [`Real`] (`f32` or `f64`). The
//! `*64` / `*32` aliases below fix the scalar; all logarithms are base 2.
//!
//! ```
//! use coherence_core::{evaluate_all, pauli_basis, werner, Pauli};
//!
//! let rho = werner(0.8f64).unwrap();
//! let report = evaluate_all(&rho, &pauli_basis(Pauli::X), &pauli_basis(Pauli::Z)).unwrap();
//! assert!(report.lhs_coherence >= report.lb_theorem4 - 1e-9);
//! ```

pub mod bounds;
pub mod coherence;
pub mod correlations;
pub mod entropy;
pub mod error;
pub mod linalg;
pub mod measurement;
pub mod scalar;
pub mod state_file;
pub mod states;

pub use bounds::{
    coherence_bound_t1, evaluate_all, linear_grid, sweep_family, BoundReport, Family, Inequality, BOUND_TOL,
    DISCORD_BOUND_TOL,
};
pub use coherence::{coherence_rel, purity_rel, unilateral_coherence, unilateral_purity, CoherenceValue};
pub use correlations::{
    classical_correlation, classical_correlation_with, conditional_entropy, holevo, mutual_information,
    DiscordResult, DiscordSearch,
};
pub use entropy::{binary_entropy, relative_entropy, shannon_entropy, von_neumann_entropy, ProbabilityVector};
pub use error::{Error, Invariant, Result};
pub use linalg::{hermitian_eig, partial_trace, tensor_product, ComplexMatrix, SpectralDecomposition, Subsystem};
pub use measurement::{
    bloch_basis, computational_basis, dephase, incompatibility, measure, pauli_basis, MeasurementOutcome,
    ObservableBasis, Pauli,
};
pub use scalar::Real;
pub use state_file::{parse_state, write_state, ParseError, StateFile};
pub use states::{
    bell_diagonal, bell_diagonal_family, make_density, random_density, werner, x_state, Bell, DensityMatrix,
};

pub type Complex64 = num_complex::Complex<f64>;
pub type Complex32 = num_complex::Complex<f32>;

pub type Matrix64 = ComplexMatrix<f64>;
pub type Matrix32 = ComplexMatrix<f32>;
pub type Density64 = DensityMatrix<f64>;
pub type Density32 = DensityMatrix<f32>;
pub type Basis64 = ObservableBasis<f64>;
pub type Basis32 = ObservableBasis<f32>;
pub type Report64 = BoundReport<f64>;
pub type Report32 = BoundReport<f32>;
pub type Discord64 = DiscordResult<f64>;
pub type Discord32 = DiscordResult<f32>;
