use std::fmt::Write as _;

use coherence_core::{linear_grid, pauli_basis, sweep_family, Family, Pauli, Report64};

use crate::error::CliError;
use crate::format::cell;

/// Grid settings for a figure sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub p_min: f64,
    pub p_max: f64,
    pub steps: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            p_min: 0.0,
            p_max: 1.0,
            steps: 101,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if !(0.0 <= self.p_min && self.p_min <= self.p_max && self.p_max <= 1.0) {
            return Err(CliError::Validation(format!(
                "need 0 <= pmin <= pmax <= 1, got pmin {} pmax {}",
                self.p_min, self.p_max
            )));
        }
        if self.steps < 2 {
            return Err(CliError::Validation(format!("need steps >= 2, got {}", self.steps)));
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        linear_grid(self.p_min, self.p_max, self.steps)
    }
}

type Column = fn(&Report64) -> f64;

struct Figure {
    family: Family,
    z: Pauli,
    header: &'static str,
    columns: &'static [Column],
}

fn figure(n: u8) -> Result<Figure, CliError> {
    Ok(match n {
        1 => Figure {
            family: Family::XState,
            z: Pauli::Z,
            header: "p,lb_berta_coh,lb_pati_coh,lb_adabi_coh",
            columns: &[|r| r.lb_theorem2, |r| r.lb_theorem3, |r| r.lb_theorem4],
        },
        2 | 3 => Figure {
            family: Family::BellDiagonal,
            z: if n == 2 { Pauli::Z } else { Pauli::Y },
            header: "p,lhs_coherence,ub_purity,ub_holevo",
            columns: &[|r| r.lhs_coherence, |r| r.ub_purity, |r| r.ub_holevo],
        },
        4 => Figure {
            family: Family::Werner,
            z: Pauli::Z,
            header: "p,lb_coherence,lb_eur,cond_entropy",
            columns: &[|r| r.lb_theorem2, |r| r.eur_berta, |r| r.cond_entropy],
        },
        _ => return Err(CliError::Parse(format!("no figure {n}; expected 1, 2, 3 or 4"))),
    })
}

/// CSV text for figure `n`. X is always σ₁.
pub fn figure_csv(n: u8, config: &SweepConfig) -> Result<String, CliError> {
    let fig = figure(n)?;
    config.validate()?;
    let x = pauli_basis(Pauli::X);
    let z = pauli_basis(fig.z);
    let rows = sweep_family(fig.family, &x, &z, &config.grid())?;

    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(fig.header);
    out.push('\n');
    for (p, report) in &rows {
        out.push_str(&cell(*p));
        for col in fig.columns {
            let v = col(report);
            if !v.is_finite() {
                return Err(CliError::Validation(format!("non-finite value at p = {p}")));
            }
            write!(out, ",{}", cell(v)).expect("write to String");
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn cmd_figure(n: u8, out: &str, config: &SweepConfig) -> Result<(), CliError> {
    let csv = figure_csv(n, config)?;
    std::fs::write(out, csv).map_err(|e| CliError::io(out, e))
}
