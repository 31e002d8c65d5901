//! Figure sweeps, single-state evaluation and randomized invariant checks
//! on top of `coherence-core`.

pub mod check;
pub mod error;
pub mod eval;
pub mod figure;
pub mod format;
pub mod selector;

pub use error::CliError;
