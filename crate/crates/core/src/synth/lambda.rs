//! Synthesis from multi-controlled rotations, kept as `Mcrz` gates.
//!
//! Same recursion as the XOR route, with one `Lambda_S[Rz(alpha)]` per nonempty
//! subset in dictionary order and block angles taken directly from the solve.
//! Each level contributes `2^(n-1) - 1` controlled rotations and one `Rz`, so the
//! block total is `2^n - 1`.

use crate::circuit::{count_gates, peephole_cancel, Circuit, Gate, SynthesisReport};
use crate::diagonal::{DiagonalUnitary, GlobalPhase};
use crate::error::Result;
use crate::eta_matrix::BlockOrder;
use crate::subsets::SubsetMask;

use super::{check_block_subset, one_qubit_rz, reduce_level, LevelTrace};

/// `Lambda_S[Rz(alpha)]` on `n` lines with target line `n`; a plain `Rz` when `S` is empty.
pub fn emit_lambda_block(s: SubsetMask, alpha: f64, n: usize) -> Result<Vec<Gate>> {
    check_block_subset(s, n)?;
    Ok(vec![if s.is_empty() {
        Gate::Rz {
            line: n,
            angle: alpha,
        }
    } else {
        Gate::Mcrz {
            controls: s,
            target: n,
            angle: alpha,
        }
    }])
}

/// Diagonal of `Lambda_S[Rz(alpha)]` computed directly from its definition.
pub fn lambda_block_diagonal(s: SubsetMask, alpha: f64, n: usize) -> DiagonalUnitary {
    let pattern = s.index_bits(n - 1);
    DiagonalUnitary::from_fn(n, |i| {
        if (i >> 1) & pattern != pattern {
            0.0
        } else if i & 1 == 0 {
            -alpha / 2.0
        } else {
            alpha / 2.0
        }
    })
    .expect("block size is valid")
}

/// One level of controlled-rotation synthesis on an input with at least 2 qubits.
pub fn lambda_level(u: &DiagonalUnitary, tol: f64) -> Result<LevelTrace> {
    reduce_level(u, tol, BlockOrder::LambdaDict, 1.0, lambda_block_diagonal)
}

pub fn synth_lambda(u: &DiagonalUnitary, tol: f64) -> Result<(Circuit, SynthesisReport)> {
    let mut circuit = Circuit::new(u.n());
    let mut phase = 0.0;
    let mut current = u.clone();
    while current.n() >= 2 {
        let n = current.n();
        let level = lambda_level(&current, tol)?;
        circuit.extend(emit_lambda_block(SubsetMask::EMPTY, level.split.alpha0, n)?);
        for &(s, alpha) in &level.blocks {
            circuit.extend(emit_lambda_block(s, alpha, n)?);
        }
        phase += level.split.phase.radians();
        current = level.split.v;
    }
    phase += one_qubit_rz(&current, &mut circuit);
    circuit.global_phase = phase;

    let circuit = peephole_cancel(&circuit);
    let mut report = count_gates(&circuit);
    report.global_phase = GlobalPhase(circuit.global_phase);
    Ok((circuit, report))
}
