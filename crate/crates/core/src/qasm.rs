//! OpenQASM 2.0 export for circuits made only of `rz`, `cx` and `x`.
//!
//! Line `k` maps to `q[k-1]`. The `Rz` here is `diag(e^{-ia/2}, e^{ia/2})`;
//! backends that define `rz` as `diag(1, e^{ia})` differ by a global phase
//! only. The circuit's tracked global phase is written as a comment.

use std::fmt::Write;

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};

/// Formats an angle so it parses back to the same `f64`.
fn real(x: f64) -> String {
    let s = format!("{x}");
    if s.contains('.') {
        s
    } else {
        s + ".0"
    }
}

pub fn to_qasm(c: &Circuit) -> Result<String> {
    c.validate()?;
    let mut out = String::new();
    out.push_str("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    let _ = writeln!(out, "// global phase: {}", real(c.global_phase));
    let _ = writeln!(out, "qreg q[{}];", c.n);
    for g in &c.gates {
        let _ = match *g {
            Gate::X { line } => writeln!(out, "x q[{}];", line - 1),
            Gate::Cnot { control, target } => {
                writeln!(out, "cx q[{}],q[{}];", control - 1, target - 1)
            }
            Gate::Rz { line, angle } => writeln!(out, "rz({}) q[{}];", real(angle), line - 1),
            Gate::Mcrz { .. } => return Err(Error::UnsupportedGate("mcrz")),
            Gate::CDiag { .. } => return Err(Error::UnsupportedGate("cdiag")),
        };
    }
    Ok(out)
}
