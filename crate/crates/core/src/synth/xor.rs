//! Synthesis from XOR-controlled rotations.
//!
//! Each level zeroes the obstruction of its input with one XOR-controlled
//! `Rz` per nonempty subset of the control lines, taken in Gray order, splits
//! off the last line, and recurses on the remaining `n - 1` lines. Emitting
//! the blocks in Gray order (empty set first) leaves exactly one CNOT between
//! consecutive rotations once adjacent pairs cancel, for `2^(n+1) - 3`
//! elementary gates in total.

use crate::circuit::{count_gates, peephole_cancel, Circuit, Gate, SynthesisReport};
use crate::diagonal::{DiagonalUnitary, GlobalPhase};
use crate::error::Result;
use crate::eta_matrix::BlockOrder;
use crate::subsets::SubsetMask;

use super::{check_block_subset, one_qubit_rz, reduce_level, LevelTrace};

/// Gate layout for a single XOR-controlled rotation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum XorStyle {
    /// One CNOT from each control onto the target on both sides of the rotation.
    #[default]
    Fan,
    /// A CNOT ladder through the controls in increasing order, then onto the target.
    Chain,
}

/// Gates for `XOR_S[Rz(alpha)]` on `n` lines with target line `n`.
///
/// Basis state `|b_1 ... b_n>` picks up `-alpha/2` when `b_n` XOR the parity of
/// the `S` bits is 0, and `+alpha/2` otherwise.
pub fn emit_xor_block(s: SubsetMask, alpha: f64, n: usize, style: XorStyle) -> Result<Vec<Gate>> {
    check_block_subset(s, n)?;
    let lines: Vec<usize> = s.lines().collect();
    let ladder: Vec<Gate> = match style {
        XorStyle::Fan => lines
            .iter()
            .map(|&c| Gate::Cnot {
                control: c,
                target: n,
            })
            .collect(),
        XorStyle::Chain => lines
            .iter()
            .zip(lines.iter().skip(1).chain(std::iter::once(&n)))
            .map(|(&c, &t)| Gate::Cnot {
                control: c,
                target: t,
            })
            .collect(),
    };
    let mut gates = Vec::with_capacity(2 * ladder.len() + 1);
    gates.extend(ladder.iter().cloned());
    gates.push(Gate::Rz {
        line: n,
        angle: alpha,
    });
    gates.extend(ladder.into_iter().rev());
    Ok(gates)
}

/// Diagonal of `XOR_S[Rz(alpha)]` computed directly from its definition.
pub fn xor_block_diagonal(s: SubsetMask, alpha: f64, n: usize) -> DiagonalUnitary {
    let pattern = s.index_bits(n - 1);
    DiagonalUnitary::from_fn(n, |i| {
        let parity = ((i >> 1) & pattern).count_ones() as usize & 1;
        if (i & 1) ^ parity == 0 {
            -alpha / 2.0
        } else {
            alpha / 2.0
        }
    })
    .expect("block size is valid")
}

/// One level of XOR synthesis on an input with at least 2 qubits.
///
/// Block angles are `-1/2` times the solution of the Gray-order system.
pub fn xor_level(u: &DiagonalUnitary, tol: f64) -> Result<LevelTrace> {
    reduce_level(u, tol, BlockOrder::XorGray, -0.5, xor_block_diagonal)
}

pub fn synth_xor(u: &DiagonalUnitary, tol: f64) -> Result<(Circuit, SynthesisReport)> {
    synth_xor_with(u, tol, XorStyle::Fan)
}

pub fn synth_xor_with(
    u: &DiagonalUnitary,
    tol: f64,
    style: XorStyle,
) -> Result<(Circuit, SynthesisReport)> {
    let mut circuit = Circuit::new(u.n());
    let mut phase = 0.0;
    let mut current = u.clone();
    while current.n() >= 2 {
        let n = current.n();
        let level = xor_level(&current, tol)?;
        circuit.extend(emit_xor_block(
            SubsetMask::EMPTY,
            level.split.alpha0,
            n,
            style,
        )?);
        for &(s, alpha) in &level.blocks {
            circuit.extend(emit_xor_block(s, alpha, n, style)?);
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::{circuit_to_diagonal, residual};
    use crate::{equal_up_to_global_phase, DEFAULT_TOL};
    use rand::{rngs::StdRng, SeedableRng};
    use std::f64::consts::PI;

    fn s(lines: &[usize]) -> SubsetMask {
        SubsetMask::from_lines(lines).unwrap()
    }

    fn cx(control: usize, target: usize) -> Gate {
        Gate::Cnot { control, target }
    }

    #[test]
    fn fan_block_layout() {
        let a = 0.3;
        let gates = emit_xor_block(s(&[1, 3]), a, 4, XorStyle::Fan).unwrap();
        assert_eq!(
            gates,
            vec![
                cx(1, 4),
                cx(3, 4),
                Gate::Rz { line: 4, angle: a },
                cx(3, 4),
                cx(1, 4)
            ]
        );
        assert_eq!(
            emit_xor_block(SubsetMask::EMPTY, a, 4, XorStyle::Fan).unwrap(),
            vec![Gate::Rz { line: 4, angle: a }]
        );
        assert!(emit_xor_block(s(&[4]), a, 4, XorStyle::Fan).is_err());
    }

    #[test]
    fn chain_block_layout() {
        let gates = emit_xor_block(s(&[1, 2, 3]), 0.3, 4, XorStyle::Chain).unwrap();
        assert_eq!(gates.len(), 7);
        assert_eq!(gates[0], cx(1, 2));
        assert_eq!(gates[2], cx(3, 4));
        assert_eq!(gates[6], cx(1, 2));
    }

    #[test]
    fn block_multiplier_table() {
        // phi = -alpha/2; rows of the 4-qubit table for S = {1,3}, as signs of phi
        let alpha = 0.8;
        let phi = -alpha / 2.0;
        let signs = [1, -1, -1, 1, 1, -1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1];
        let d = xor_block_diagonal(s(&[1, 3]), alpha, 4);
        for (i, sign) in signs.iter().enumerate() {
            assert!(
                (d.thetas()[i] - f64::from(*sign) * phi).abs() < 1e-15,
                "row {i:04b}"
            );
        }
        for style in [XorStyle::Fan, XorStyle::Chain] {
            let mut c = Circuit::new(4);
            c.extend(emit_xor_block(s(&[1, 3]), alpha, 4, style).unwrap());
            let sim = circuit_to_diagonal(&c).unwrap();
            assert_eq!(sim.thetas(), d.thetas());
        }
    }

    #[test]
    fn worked_three_qubit_level() {
        let ks = [4.0, 2.0, 9.0, 7.0, 3.0, 8.0, 11.0, 10.0];
        let u =
            DiagonalUnitary::from_thetas(3, ks.iter().map(|k| k * PI / 12.0).collect()).unwrap();
        let level = xor_level(&u, DEFAULT_TOL).unwrap();
        let expected = [(s(&[2]), 3.0), (s(&[1, 2]), -3.0), (s(&[1]), -4.0)];
        for ((got_s, got_a), (exp_s, k)) in level.blocks.iter().zip(expected) {
            assert_eq!(*got_s, exp_s);
            assert!((got_a - k * PI / 24.0).abs() < 1e-12);
        }
        let tilde = [12.0, 12.0, 32.0, 32.0, 22.0, 22.0, 42.0, 42.0];
        for (a, k) in level.tilde.thetas().iter().zip(tilde) {
            assert!((a - k * PI / 48.0).abs() < 1e-12);
        }
        assert!(level.split.alpha0.abs() < 1e-12);

        // alpha0 vanishes here and the 2-qubit remainder is already a tensor, so
        // two zero rotations drop and the CNOT pair around the second one cancels
        let (c, report) = synth_xor(&u, DEFAULT_TOL).unwrap();
        assert_eq!(report.elementary(), 9);
        assert_eq!((report.counts.rz, report.counts.cnot), (5, 4));
        // the exact global phase is tracked, so the match holds without slack
        let d = circuit_to_diagonal(&c).unwrap();
        for (a, b) in d.thetas().iter().zip(u.thetas()) {
            assert!(crate::wrap_angle(a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn identity_cancels_completely() {
        let (c, report) = synth_xor(&DiagonalUnitary::identity(4).unwrap(), DEFAULT_TOL).unwrap();
        assert!(c.is_empty(), "{:?}", c.gates);
        assert_eq!(report.elementary(), 0);
    }

    #[test]
    fn rz_tensor_recovers_rotations() {
        let alphas = [0.3, 0.7, 1.1];
        let u = DiagonalUnitary::rz_tensor(&alphas).unwrap();
        let (c, report) = synth_xor(&u, DEFAULT_TOL).unwrap();
        assert_eq!((report.counts.rz, report.counts.cnot), (3, 0));
        for g in &c.gates {
            let Gate::Rz { line, angle } = g else {
                panic!("{g}")
            };
            assert!((angle - alphas[line - 1]).abs() < 1e-12);
        }
        assert!(residual(&c, &u).unwrap() < 1e-12);
    }

    #[test]
    fn random_inputs_hit_exact_count() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in 1..=7 {
            for _ in 0..5 {
                let u = DiagonalUnitary::random(n, &mut rng).unwrap();
                let (c, report) = synth_xor(&u, DEFAULT_TOL).unwrap();
                assert_eq!(report.elementary(), (1 << (n + 1)) - 3);
                assert_eq!(report.counts.rz, (1 << n) - 1);
                assert!(residual(&c, &u).unwrap() < 1e-9);
            }
        }
    }

    #[test]
    fn chain_style_is_equivalent() {
        let mut rng = StdRng::seed_from_u64(11);
        for n in 2..=6 {
            let u = DiagonalUnitary::random(n, &mut rng).unwrap();
            let (c, _) = synth_xor_with(&u, DEFAULT_TOL, XorStyle::Chain).unwrap();
            let d = circuit_to_diagonal(&c).unwrap();
            assert!(equal_up_to_global_phase(&d, &u, 1e-9).unwrap());
        }
    }

    #[test]
    fn obstruction_zeroed_each_level() {
        let mut rng = StdRng::seed_from_u64(3);
        let u = DiagonalUnitary::random(6, &mut rng).unwrap();
        let level = xor_level(&u, DEFAULT_TOL).unwrap();
        assert!(crate::eta(&level.tilde).unwrap().max_abs() <= 1e-10);
        assert!(equal_up_to_global_phase(&level.split.recompose(), &level.tilde, 1e-12).unwrap());
    }
}
