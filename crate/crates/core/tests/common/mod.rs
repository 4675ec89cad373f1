//! Reference helpers shared by the integration tests. Nothing here calls the
//! crate's simulator or solver, so they serve as independent checks.

#![allow(dead_code)]

use std::f64::consts::PI;

use diagsynth::{Circuit, Gate};

pub fn wrap(x: f64) -> f64 {
    let y = (x + PI).rem_euclid(2.0 * PI) - PI;
    if y == -PI {
        PI
    } else {
        y
    }
}

fn bit(state: usize, n: usize, line: usize) -> usize {
    (state >> (n - line)) & 1
}

fn all_set(state: usize, n: usize, controls: &diagsynth::SubsetMask) -> bool {
    controls.lines().all(|l| bit(state, n, l) == 1)
}

/// Walks every basis state through the gate list and returns the phases,
/// global phase included. Panics if the circuit is not diagonal.
pub fn simulate(c: &Circuit) -> Vec<f64> {
    let n = c.n;
    (0..1usize << n)
        .map(|j| {
            let mut s = j;
            let mut phase = 0.0;
            for g in &c.gates {
                match g {
                    Gate::X { line } => s ^= 1 << (n - line),
                    Gate::Cnot { control, target } => {
                        if bit(s, n, *control) == 1 {
                            s ^= 1 << (n - target);
                        }
                    }
                    Gate::Rz { line, angle } => {
                        phase += if bit(s, n, *line) == 0 {
                            -angle / 2.0
                        } else {
                            angle / 2.0
                        };
                    }
                    Gate::Mcrz {
                        controls,
                        target,
                        angle,
                    } => {
                        if all_set(s, n, controls) {
                            phase += if bit(s, n, *target) == 0 {
                                -angle / 2.0
                            } else {
                                angle / 2.0
                            };
                        }
                    }
                    Gate::CDiag {
                        controls,
                        target,
                        theta0,
                        theta1,
                    } => {
                        if all_set(s, n, controls) {
                            phase += if bit(s, n, *target) == 0 {
                                *theta0
                            } else {
                                *theta1
                            };
                        }
                    }
                }
            }
            assert_eq!(s, j, "circuit permutes basis state {j}");
            phase + c.global_phase
        })
        .collect()
}

/// Largest wrapped deviation after aligning the first entries.
pub fn deviation_up_to_phase(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let shift = a[0] - b[0];
    a.iter()
        .zip(b)
        .map(|(x, y)| wrap(x - y - shift).abs())
        .fold(0.0, f64::max)
}

pub fn deviation_exact(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| wrap(x - y).abs())
        .fold(0.0, f64::max)
}

/// Characters straight from their definition, 1-based `j` stored at `j - 1`.
pub fn characters(thetas: &[f64]) -> Vec<f64> {
    (1..thetas.len() / 2)
        .map(|j| wrap(thetas[2 * j - 2] - thetas[2 * j - 1] - thetas[2 * j] + thetas[2 * j + 1]))
        .collect()
}

/// Basis indices (of the top `m` lines) whose bits over `lines` have odd parity.
pub fn flips(lines: &[usize], m: usize) -> Vec<usize> {
    (0..1usize << m)
        .filter(|&j| lines.iter().filter(|&&l| (j >> (m - l)) & 1 == 1).count() % 2 == 1)
        .collect()
}

/// Basis indices with every bit in `lines` set.
pub fn conditioned(lines: &[usize], m: usize) -> Vec<usize> {
    (0..1usize << m)
        .filter(|&j| lines.iter().all(|&l| (j >> (m - l)) & 1 == 1))
        .collect()
}

/// `sum of v_j` over `set`, with `v_j = e_j - e_{j+1}` and `v_dim = e_dim`.
pub fn v_sum(set: &[usize], dim: usize) -> Vec<i64> {
    let mut col = vec![0i64; dim];
    for &j in set.iter().filter(|&&j| j >= 1) {
        col[j - 1] += 1;
        if j < dim {
            col[j] -= 1;
        }
    }
    col
}

/// Minimal reader for the `x` / `cx` / `rz` subset of OpenQASM 2.0 written by
/// the exporter. Returns the rebuilt circuit, global phase comment included.
pub fn parse_qasm(text: &str) -> Circuit {
    let mut n = None;
    let mut phase = 0.0;
    let mut gates = Vec::new();
    let qubit = |s: &str| -> usize {
        let s = s.trim().trim_end_matches(';');
        let inner = s
            .strip_prefix("q[")
            .and_then(|r| r.strip_suffix(']'))
            .expect("qubit ref");
        inner.parse::<usize>().expect("qubit index") + 1
    };
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if let Some(p) = line.strip_prefix("// global phase:") {
            phase = p.trim().parse().expect("phase");
        } else if line.starts_with("OPENQASM") || line.starts_with("include") {
        } else if let Some(r) = line.strip_prefix("qreg q[") {
            n = Some(
                r.trim_end_matches("];")
                    .parse::<usize>()
                    .expect("qreg size"),
            );
        } else if let Some(r) = line.strip_prefix("x ") {
            gates.push(Gate::X { line: qubit(r) });
        } else if let Some(r) = line.strip_prefix("cx ") {
            let (a, b) = r.split_once(',').expect("two operands");
            gates.push(Gate::Cnot {
                control: qubit(a),
                target: qubit(b),
            });
        } else if let Some(r) = line.strip_prefix("rz(") {
            let (angle, q) = r.split_once(')').expect("rz angle");
            gates.push(Gate::Rz {
                line: qubit(q),
                angle: angle.parse().expect("angle"),
            });
        } else {
            panic!("unexpected qasm line: {line}");
        }
    }
    let mut c = Circuit::new(n.expect("qreg declared"));
    c.global_phase = phase;
    c.extend(gates);
    c
}
