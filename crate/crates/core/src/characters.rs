//! Character functions and the tensor obstruction.
//!
//! For `1 <= j <= 2^(n-1) - 1` the character `chi_j(U)` is
//! `u_{2j-2} u_{2j-1}^{-1} u_{2j}^{-1} u_{2j+1}`. The obstruction vector `eta(U)`
//! collects their arguments on the principal branch and vanishes exactly when
//! `U` factors as an `(n-1)`-qubit diagonal tensored with a one-qubit diagonal.

use crate::diagonal::{wrap_angle, DiagonalUnitary};
use crate::error::{Error, Result};

/// Obstruction vector: one principal-branch angle per character.
#[derive(Clone, Debug, PartialEq)]
pub struct EtaVector {
    values: Vec<f64>,
}

impl EtaVector {
    pub fn new(values: Vec<f64>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Number of characters for `n` qubits.
pub fn eta_len(n: usize) -> usize {
    (1usize << (n - 1)) - 1
}

fn chi_unchecked(thetas: &[f64], j: usize) -> f64 {
    wrap_angle(thetas[2 * j - 2] - thetas[2 * j - 1] - thetas[2 * j] + thetas[2 * j + 1])
}

/// Argument of `chi_j(U)` in `(-pi, pi]`; `j` is 1-based.
pub fn chi(u: &DiagonalUnitary, j: usize) -> Result<f64> {
    if u.n() < 2 {
        return Err(Error::Dimension("characters need at least 2 qubits".into()));
    }
    let max = eta_len(u.n());
    if j == 0 || j > max {
        return Err(Error::IndexOutOfRange { index: j, max });
    }
    Ok(chi_unchecked(u.thetas(), j))
}

pub fn eta(u: &DiagonalUnitary) -> Result<EtaVector> {
    if u.n() < 2 {
        return Err(Error::Dimension("eta is undefined for 1 qubit".into()));
    }
    let thetas = u.thetas();
    Ok(EtaVector::new(
        (1..=eta_len(u.n()))
            .map(|j| chi_unchecked(thetas, j))
            .collect(),
    ))
}

/// Whether `U` splits off its last line, to within `tol` on every character.
pub fn is_tensor(u: &DiagonalUnitary, tol: f64) -> Result<bool> {
    Ok(eta(u)?.max_abs() <= tol)
}
