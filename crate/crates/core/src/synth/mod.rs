//! Synthesis algorithms.

use std::fmt;
use std::str::FromStr;

use crate::characters::{eta, is_tensor, EtaVector};
use crate::circuit::{Circuit, SynthesisReport};
use crate::diagonal::{compose, tensor_split, DiagonalUnitary, TensorSplit};
use crate::error::{Error, Result};
use crate::eta_matrix::{cached, BlockOrder};
use crate::subsets::SubsetMask;

pub mod lambda;
pub mod twolevel;
pub mod xor;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Xor,
    Lambda,
    TwoLevel,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Xor => "xor",
            Algorithm::Lambda => "lambda",
            Algorithm::TwoLevel => "twolevel",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "xor" => Ok(Algorithm::Xor),
            "lambda" => Ok(Algorithm::Lambda),
            "twolevel" => Ok(Algorithm::TwoLevel),
            other => Err(Error::Format(format!("unknown algorithm `{other}`"))),
        }
    }
}

/// Runs `algo` on `u`. `style` only affects the XOR route.
pub fn synthesize(
    algo: Algorithm,
    u: &DiagonalUnitary,
    tol: f64,
    style: xor::XorStyle,
) -> Result<(Circuit, SynthesisReport)> {
    match algo {
        Algorithm::Xor => xor::synth_xor_with(u, tol, style),
        Algorithm::Lambda => lambda::synth_lambda(u, tol),
        Algorithm::TwoLevel => twolevel::synth_twolevel(u),
    }
}

/// Intermediate values of one recursion level.
#[derive(Clone, Debug)]
pub struct LevelTrace {
    /// Obstruction of the level's input.
    pub psi: EtaVector,
    /// Block subsets in matrix column order, with the angles emitted for them.
    pub blocks: Vec<(SubsetMask, f64)>,
    /// Input composed with the inverse blocks; a tensor on the last line.
    pub tilde: DiagonalUnitary,
    pub split: TensorSplit,
}

/// One level of the obstruction-zeroing recursion, shared by both block families.
///
/// `scale` multiplies the solution of `M x = psi`; `block` builds the diagonal
/// of a single block with the given subset and angle.
pub(crate) fn reduce_level(
    u: &DiagonalUnitary,
    tol: f64,
    order: BlockOrder,
    scale: f64,
    block: impl Fn(SubsetMask, f64, usize) -> DiagonalUnitary,
) -> Result<LevelTrace> {
    let n = u.n();
    let psi = eta(u)?;
    let system = cached(order, n)?;
    let (matrix, solver) = (&system.0, &system.1);
    let x = solver.solve(psi.values())?;
    let blocks: Vec<(SubsetMask, f64)> = matrix
        .column_subsets()
        .iter()
        .zip(x)
        .map(|(&s, v)| (s, scale * v))
        .collect();

    let mut tilde = u.clone();
    for &(s, alpha) in &blocks {
        tilde = compose(&block(s, -alpha, n), &tilde)?;
    }
    if !is_tensor(&tilde, tol)? {
        let deviation = eta(&tilde)?.max_abs();
        return Err(Error::Internal(format!(
            "{n}-qubit level left obstruction {deviation:e} above tol {tol:e}"
        )));
    }
    let split = tensor_split(&tilde, tol)?;
    Ok(LevelTrace {
        psi,
        blocks,
        tilde,
        split,
    })
}

/// Writes the one-qubit remainder `e^{i Phi} Rz(alpha)`; returns `Phi`.
pub(crate) fn one_qubit_rz(u: &DiagonalUnitary, circuit: &mut Circuit) -> f64 {
    debug_assert_eq!(u.n(), 1);
    let t = u.thetas();
    circuit.push(crate::circuit::Gate::Rz {
        line: 1,
        angle: t[1] - t[0],
    });
    (t[0] + t[1]) / 2.0
}

fn check_block_subset(s: SubsetMask, n: usize) -> Result<()> {
    if n == 0 || s.max_line() >= n {
        return Err(Error::Domain(format!(
            "block subset {s} must lie within lines 1..{n}"
        )));
    }
    Ok(())
}
