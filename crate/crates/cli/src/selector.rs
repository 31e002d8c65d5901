use coherence_core::{bloch_basis, computational_basis, pauli_basis, Basis64, Pauli};

use crate::error::CliError;

/// Measurement basis on A named on the command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Selector {
    Pauli(Pauli),
    Bloch { theta: f64, phi: f64 },
    Computational,
}

impl Selector {
    pub fn basis(&self, dim_a: usize) -> Result<Basis64, CliError> {
        match *self {
            Selector::Computational => Ok(computational_basis(dim_a)),
            _ if dim_a != 2 => Err(CliError::Validation(format!(
                "selector {self:?} needs a qubit A, got dimension {dim_a}"
            ))),
            Selector::Pauli(p) => Ok(pauli_basis(p)),
            Selector::Bloch { theta, phi } => Ok(bloch_basis(theta, phi)),
        }
    }
}

impl std::str::FromStr for Selector {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::Parse(format!("unknown basis selector {s:?} (sigma1, sigma2, sigma3, computational, bloch:<theta>:<phi>)"));
        match s {
            "sigma1" => Ok(Selector::Pauli(Pauli::X)),
            "sigma2" => Ok(Selector::Pauli(Pauli::Y)),
            "sigma3" => Ok(Selector::Pauli(Pauli::Z)),
            "computational" => Ok(Selector::Computational),
            _ => {
                let rest = s.strip_prefix("bloch:").ok_or_else(bad)?;
                let (t, p) = rest.split_once(':').ok_or_else(bad)?;
                let theta: f64 = t.parse().map_err(|_| bad())?;
                let phi: f64 = p.parse().map_err(|_| bad())?;
                if !theta.is_finite() || !phi.is_finite() {
                    return Err(bad());
                }
                Ok(Selector::Bloch { theta, phi })
            }
        }
    }
}
