use std::fmt;

use thiserror::Error;

/// Density-matrix invariant named by a [`Error::Validation`] failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    Finite,
    Dimension,
    Hermiticity,
    Trace,
    Positivity,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Invariant::Finite => "finite",
            Invariant::Dimension => "dimension",
            Invariant::Hermiticity => "hermiticity",
            Invariant::Trace => "trace",
            Invariant::Positivity => "positivity",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not Hermitian (max |m - m†| = {0:e})")]
    Hermiticity(f64),

    #[error("invalid probability vector: {0}")]
    Probability(String),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("{invariant} invariant violated: {detail}")]
    Validation { invariant: Invariant, detail: String },

    #[error("unsupported dimension: {0}")]
    UnsupportedDimension(String),
}

impl Error {
    pub(crate) fn validation(invariant: Invariant, detail: impl Into<String>) -> Self {
        Error::Validation {
            invariant,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
