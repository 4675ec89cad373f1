//! Exact simulation of circuits built from basis-permuting, phase-only gates.
//!
//! Every gate kind maps a computational basis state to another basis state
//! times a phase, so a circuit is evaluated one basis state at a time in
//! `O(gates)` with no dense matrices.

use crate::circuit::{Circuit, Gate};
use crate::diagonal::{phase_deviation, DiagonalUnitary};
use crate::error::{Error, Result};

/// A gate lowered to bit masks over the basis index.
#[derive(Clone, Copy)]
enum Op {
    Flip {
        mask: usize,
    },
    Cnot {
        control: usize,
        target: usize,
    },
    Phase {
        controls: usize,
        target: usize,
        theta0: f64,
        theta1: f64,
    },
}

fn lower(c: &Circuit) -> Vec<Op> {
    let n = c.n;
    let at = |line: usize| 1usize << (n - line);
    c.gates
        .iter()
        .map(|g| match *g {
            Gate::X { line } => Op::Flip { mask: at(line) },
            Gate::Cnot { control, target } => Op::Cnot {
                control: at(control),
                target: at(target),
            },
            Gate::Rz { line, angle } => Op::Phase {
                controls: 0,
                target: at(line),
                theta0: -angle / 2.0,
                theta1: angle / 2.0,
            },
            Gate::Mcrz {
                controls,
                target,
                angle,
            } => Op::Phase {
                controls: controls.index_bits(n),
                target: at(target),
                theta0: -angle / 2.0,
                theta1: angle / 2.0,
            },
            Gate::CDiag {
                controls,
                target,
                theta0,
                theta1,
            } => Op::Phase {
                controls: controls.index_bits(n),
                target: at(target),
                theta0,
                theta1,
            },
        })
        .collect()
}

fn run(ops: &[Op], j: usize) -> (usize, f64) {
    let mut state = j;
    let mut theta = 0.0;
    for op in ops {
        match *op {
            Op::Flip { mask } => state ^= mask,
            Op::Cnot { control, target } => {
                if state & control != 0 {
                    state ^= target;
                }
            }
            Op::Phase {
                controls,
                target,
                theta0,
                theta1,
            } => {
                if state & controls == controls {
                    theta += if state & target == 0 { theta0 } else { theta1 };
                }
            }
        }
    }
    (state, theta)
}

/// Image of basis state `j` and the phase it picks up, excluding the circuit's
/// global phase.
pub fn apply_to_basis(c: &Circuit, j: usize) -> Result<(usize, f64)> {
    c.validate()?;
    if j >= 1 << c.n {
        return Err(Error::Structural(format!(
            "basis index {j} out of range for {} lines",
            c.n
        )));
    }
    Ok(run(&lower(c), j))
}

/// The diagonal a circuit induces, including its global phase.
pub fn circuit_to_diagonal(c: &Circuit) -> Result<DiagonalUnitary> {
    c.validate()?;
    let ops = lower(c);
    let mut thetas = Vec::with_capacity(1 << c.n);
    for j in 0..1usize << c.n {
        let (out, theta) = run(&ops, j);
        if out != j {
            return Err(Error::NotDiagonal {
                input: j,
                output: out,
            });
        }
        thetas.push(theta + c.global_phase);
    }
    DiagonalUnitary::from_thetas(c.n, thetas)
}

/// Max wrapped phase deviation between the circuit and `u`, up to global phase.
pub fn residual(c: &Circuit, u: &DiagonalUnitary) -> Result<f64> {
    if c.n != u.n() {
        return Err(Error::Dimension(format!(
            "circuit has {} lines, diagonal has {} qubits",
            c.n,
            u.n()
        )));
    }
    phase_deviation(&circuit_to_diagonal(c)?, u)
}

/// Like [`residual`], but fails when the residual exceeds `tol`.
pub fn verify(c: &Circuit, u: &DiagonalUnitary, tol: f64) -> Result<f64> {
    let r = residual(c, u)?;
    if r > tol {
        return Err(Error::VerificationFailed { residual: r, tol });
    }
    Ok(r)
}
