//! Plain-text density matrix format.
//!
//! ```text
//! dims: <dim_a> <dim_b>
//! <row> <col> <re> <im>
//! ...
//! ```
//!
//! One line per nonzero entry, 0-based indices, whitespace separated.
//! Entries not listed are zero. Blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::linalg::ComplexMatrix;
use crate::scalar::{c, Real, C};
use crate::states::DensityMatrix;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Parsed file contents, not yet validated as a state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateFile<T: Real> {
    pub dim_a: usize,
    pub dim_b: usize,
    pub matrix: ComplexMatrix<T>,
}

pub fn parse_state<T: Real>(text: &str) -> Result<StateFile<T>, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hl, header) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    let dims = header
        .strip_prefix("dims:")
        .ok_or_else(|| err(hl, "expected header \"dims: <dim_a> <dim_b>\""))?;
    let dims: Vec<usize> = dims
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| err(hl, format!("bad dimension {t:?}"))))
        .collect::<Result<_, _>>()?;
    let [dim_a, dim_b] = dims[..] else {
        return Err(err(hl, "header needs exactly two dimensions"));
    };
    if dim_a == 0 || dim_b == 0 {
        return Err(err(hl, "dimensions must be positive"));
    }
    let n = dim_a * dim_b;

    let mut entries = vec![None::<C<T>>; n * n];
    for (ln, line) in lines {
        let tok: Vec<&str> = line.split_whitespace().collect();
        if tok.len() != 4 {
            return Err(err(ln, format!("expected \"row col re im\", got {} fields", tok.len())));
        }
        let idx = |t: &str| t.parse::<usize>().map_err(|_| err(ln, format!("bad index {t:?}")));
        let num = |t: &str| {
            t.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| err(ln, format!("bad number {t:?}")))
        };
        let (row, col) = (idx(tok[0])?, idx(tok[1])?);
        if row >= n || col >= n {
            return Err(err(ln, format!("entry ({row}, {col}) outside a {n}×{n} matrix")));
        }
        let slot = &mut entries[row * n + col];
        if slot.is_some() {
            return Err(err(ln, format!("duplicate entry ({row}, {col})")));
        }
        *slot = Some(c(T::lit(num(tok[2])?), T::lit(num(tok[3])?)));
    }

    let matrix = ComplexMatrix::new(n, entries.into_iter().map(|e| e.unwrap_or_else(|| c(T::zero(), T::zero()))).collect())
        .map_err(|e| err(1, e.to_string()))?;
    Ok(StateFile { dim_a, dim_b, matrix })
}

/// Serializes nonzero entries with round-trip precision.
pub fn write_state<T: Real>(rho: &DensityMatrix<T>) -> String {
    let mut out = format!("dims: {} {}\n", rho.dim_a(), rho.dim_b());
    let m = rho.matrix();
    for i in 0..m.dim() {
        for j in 0..m.dim() {
            let z = m[(i, j)];
            if z.re != T::zero() || z.im != T::zero() {
                writeln!(out, "{i} {j} {:?} {:?}", z.re.to_f64_lossy(), z.im.to_f64_lossy()).expect("write to String");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{make_density, random_density, werner};
    use proptest::prelude::*;

    #[test]
    fn parses_werner_file() {
        let text = "dims: 2 2\n0 0 0.25 0\n1 1 0.25 0\n\n2 2 0.25 0\n3 3 0.25 0\n";
        let f = parse_state::<f64>(text).unwrap();
        assert_eq!((f.dim_a, f.dim_b), (2, 2));
        let rho = make_density(f.matrix, 2, 2).unwrap();
        assert_eq!(rho, werner(0.0f64).unwrap());
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "",
            "dim: 2 2\n",
            "dims: 2\n",
            "dims: 0 2\n",
            "dims: 2 x\n",
            "dims: 2 2\n0 0 1\n",
            "dims: 2 2\n0 4 1 0\n",
            "dims: 2 2\n0 0 abc 0\n",
            "dims: 2 2\n0 0 nan 0\n",
            "dims: 2 2\n0 0 1 0\n0 0 1 0\n",
            "dims: 2 2\n-1 0 1 0\n",
        ] {
            assert!(parse_state::<f64>(bad).is_err(), "{bad:?}");
        }
        let e = parse_state::<f64>("dims: 2 2\n0 0 1 0\n0 9 1 0\n").unwrap_err();
        assert_eq!(e.line, 3);
    }

    proptest! {
        #[test]
        fn write_then_parse_is_identity(seed in 0u64..10_000, da in 1usize..4, db in 1usize..4) {
            let rho = random_density::<f64>(da, db, seed);
            let f = parse_state::<f64>(&write_state(&rho)).unwrap();
            prop_assert_eq!((f.dim_a, f.dim_b), (da, db));
            prop_assert_eq!(&f.matrix, rho.matrix());
        }
    }
}
