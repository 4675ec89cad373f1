//! Circuit intermediate representation, peephole cancellation and gate counts.

use std::f64::consts::{PI, TAU};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagonal::{wrap_angle, GlobalPhase};
use crate::error::{Error, Result};
use crate::subsets::SubsetMask;

/// Angles at or below this magnitude (after wrapping) are treated as zero.
pub const ZERO_ANGLE_EPS: f64 = 1e-12;

/// A gate acting on 1-based lines.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Gate {
    /// Pauli X.
    X { line: usize },
    /// Controlled-NOT.
    Cnot { control: usize, target: usize },
    /// `diag(exp(-i angle/2), exp(i angle/2))`.
    Rz { line: usize, angle: f64 },
    /// `Rz(angle)` on `target`, applied only when every control line is 1.
    Mcrz {
        controls: SubsetMask,
        target: usize,
        angle: f64,
    },
    /// `diag(exp(i theta0), exp(i theta1))` on `target`, applied only when
    /// every control line is 1.
    #[serde(rename = "cdiag")]
    CDiag {
        controls: SubsetMask,
        target: usize,
        theta0: f64,
        theta1: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GateKind {
    X,
    Cnot,
    Rz,
    Mcrz,
    CDiag,
}

impl GateKind {
    pub fn name(self) -> &'static str {
        match self {
            GateKind::X => "x",
            GateKind::Cnot => "cnot",
            GateKind::Rz => "rz",
            GateKind::Mcrz => "mcrz",
            GateKind::CDiag => "cdiag",
        }
    }
}

impl Gate {
    pub fn kind(&self) -> GateKind {
        match self {
            Gate::X { .. } => GateKind::X,
            Gate::Cnot { .. } => GateKind::Cnot,
            Gate::Rz { .. } => GateKind::Rz,
            Gate::Mcrz { .. } => GateKind::Mcrz,
            Gate::CDiag { .. } => GateKind::CDiag,
        }
    }

    /// Every line the gate touches, as a mask.
    pub fn support(&self) -> SubsetMask {
        let bit = |line: usize| 1u32.checked_shl(line as u32 - 1).unwrap_or(0);
        SubsetMask::from_bits(match *self {
            Gate::X { line } | Gate::Rz { line, .. } => bit(line),
            Gate::Cnot { control, target } => bit(control) | bit(target),
            Gate::Mcrz {
                controls, target, ..
            }
            | Gate::CDiag {
                controls, target, ..
            } => controls.bits() | bit(target),
        })
    }

    /// Whether the gate is diagonal in the computational basis.
    pub fn is_diagonal(&self) -> bool {
        matches!(
            self,
            Gate::Rz { .. } | Gate::Mcrz { .. } | Gate::CDiag { .. }
        )
    }

    /// Lines the gate may flip (X target or CNOT target).
    fn flipped_line(&self) -> Option<usize> {
        match *self {
            Gate::X { line } => Some(line),
            Gate::Cnot { target, .. } => Some(target),
            _ => None,
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let in_range = |line: usize| (1..=n).contains(&line);
        let ok = match *self {
            Gate::X { line } | Gate::Rz { line, .. } => in_range(line),
            Gate::Cnot { control, target } => {
                in_range(control) && in_range(target) && control != target
            }
            Gate::Mcrz {
                controls, target, ..
            }
            | Gate::CDiag {
                controls, target, ..
            } => in_range(target) && controls.max_line() <= n && !controls.contains(target),
        };
        let finite = match *self {
            Gate::Rz { angle, .. } | Gate::Mcrz { angle, .. } => angle.is_finite(),
            Gate::CDiag { theta0, theta1, .. } => theta0.is_finite() && theta1.is_finite(),
            _ => true,
        };
        if !ok || !finite {
            return Err(Error::Structural(format!("{self} on {n} lines")));
        }
        Ok(())
    }
}

/// Whether two gates commute, by a sufficient syntactic test.
fn commutes(a: &Gate, b: &Gate) -> bool {
    if a.support().bits() & b.support().bits() == 0 {
        return true;
    }
    match (a, b) {
        (Gate::X { .. }, Gate::X { .. }) => true,
        _ if a.is_diagonal() && b.is_diagonal() => true,
        (
            Gate::Cnot {
                control: c1,
                target: t1,
            },
            Gate::Cnot {
                control: c2,
                target: t2,
            },
        ) => c1 != t2 && c2 != t1,
        (Gate::X { line }, Gate::Cnot { control, .. })
        | (Gate::Cnot { control, .. }, Gate::X { line }) => line != control,
        // a flip commutes with a diagonal gate that does not touch the flipped line
        _ => {
            let (flip, diag) = if a.is_diagonal() { (b, a) } else { (a, b) };
            match flip.flipped_line() {
                Some(line) if diag.is_diagonal() => !diag.support().contains(line),
                _ => false,
            }
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::X { line } => write!(f, "X({line})"),
            Gate::Cnot { control, target } => write!(f, "CNOT({control},{target})"),
            Gate::Rz { line, angle } => write!(f, "RZ({line}, {angle})"),
            Gate::Mcrz {
                controls,
                target,
                angle,
            } => {
                write!(f, "MCRZ({controls} -> {target}, {angle})")
            }
            Gate::CDiag {
                controls,
                target,
                theta0,
                theta1,
            } => {
                write!(f, "CDIAG({controls} -> {target}, {theta0}, {theta1})")
            }
        }
    }
}

/// Ordered gate list; the first gate acts first.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Circuit {
    pub n: usize,
    #[serde(default)]
    pub global_phase: f64,
    pub gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            global_phase: 0.0,
            gates: Vec::new(),
        }
    }

    pub fn push(&mut self, gate: Gate) {
        self.gates.push(gate);
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) {
        self.gates.extend(gates);
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn global_phase(&self) -> GlobalPhase {
        GlobalPhase(self.global_phase)
    }

    /// Checks line ranges and distinct control/target lines.
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > crate::diagonal::MAX_QUBITS {
            return Err(Error::Structural(format!("circuit on {} lines", self.n)));
        }
        if !self.global_phase.is_finite() {
            return Err(Error::Structural("global phase is not finite".into()));
        }
        self.gates.iter().try_for_each(|g| g.validate(self.n))
    }
}

/// Gate tallies by kind.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GateCounts {
    pub x: usize,
    pub cnot: usize,
    pub rz: usize,
    pub mcrz: usize,
    pub cdiag: usize,
}

impl GateCounts {
    /// X + CNOT + RZ.
    pub fn elementary(&self) -> usize {
        self.x + self.cnot + self.rz
    }

    /// MCRZ + CDIAG.
    pub fn blocks(&self) -> usize {
        self.mcrz + self.cdiag
    }

    pub fn get(&self, kind: GateKind) -> usize {
        match kind {
            GateKind::X => self.x,
            GateKind::Cnot => self.cnot,
            GateKind::Rz => self.rz,
            GateKind::Mcrz => self.mcrz,
            GateKind::CDiag => self.cdiag,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SynthesisReport {
    pub n: usize,
    pub counts: GateCounts,
    pub global_phase: GlobalPhase,
    /// Max phase deviation from the target, when verified.
    pub residual: Option<f64>,
}

impl SynthesisReport {
    pub fn elementary(&self) -> usize {
        self.counts.elementary()
    }
}

impl fmt::Display for SynthesisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.counts;
        writeln!(f, "qubits:       {}", self.n)?;
        writeln!(f, "x:            {}", c.x)?;
        writeln!(f, "cnot:         {}", c.cnot)?;
        writeln!(f, "rz:           {}", c.rz)?;
        writeln!(f, "mcrz:         {}", c.mcrz)?;
        writeln!(f, "cdiag:        {}", c.cdiag)?;
        writeln!(f, "elementary:   {}", c.elementary())?;
        writeln!(f, "blocks:       {}", c.blocks())?;
        write!(f, "global phase: {}", self.global_phase.radians())?;
        if let Some(r) = self.residual {
            write!(f, "\nresidual:     {r:e}")?;
        }
        Ok(())
    }
}

pub fn count_gates(c: &Circuit) -> SynthesisReport {
    let mut counts = GateCounts::default();
    for g in &c.gates {
        match g.kind() {
            GateKind::X => counts.x += 1,
            GateKind::Cnot => counts.cnot += 1,
            GateKind::Rz => counts.rz += 1,
            GateKind::Mcrz => counts.mcrz += 1,
            GateKind::CDiag => counts.cdiag += 1,
        }
    }
    SynthesisReport {
        n: c.n,
        counts,
        global_phase: c.global_phase(),
        residual: None,
    }
}

/// Global phase released by dropping `gate`, if it acts as a pure phase.
fn droppable(gate: &Gate) -> Option<f64> {
    match *gate {
        // Rz(2 pi k) = (-1)^k
        Gate::Rz { angle, .. } if wrap_angle(angle).abs() <= ZERO_ANGLE_EPS => {
            Some(PI * (angle / TAU).round())
        }
        // a controlled (-1) is not a global phase, so only 4 pi multiples vanish
        Gate::Mcrz { angle, .. } if wrap_angle(angle / 2.0).abs() <= ZERO_ANGLE_EPS / 2.0 => {
            Some(0.0)
        }
        Gate::CDiag { theta0, theta1, .. }
            if wrap_angle(theta0).abs() <= ZERO_ANGLE_EPS
                && wrap_angle(theta1).abs() <= ZERO_ANGLE_EPS =>
        {
            Some(0.0)
        }
        _ => None,
    }
}

fn cancel_pass(gates: Vec<Gate>, phase: &mut f64) -> (Vec<Gate>, bool) {
    let mut out: Vec<Gate> = Vec::with_capacity(gates.len());
    let mut changed = false;
    'next: for gate in gates {
        if let Some(shift) = droppable(&gate) {
            *phase += shift;
            changed = true;
            continue;
        }
        if matches!(gate, Gate::X { .. } | Gate::Cnot { .. }) {
            for k in (0..out.len()).rev() {
                if out[k] == gate {
                    out.remove(k);
                    changed = true;
                    continue 'next;
                }
                if !commutes(&out[k], &gate) {
                    break;
                }
            }
        }
        out.push(gate);
    }
    (out, changed)
}

/// Removes cancelling X and CNOT pairs (moving them through gates they commute
/// with) and zero-angle rotations, repeating until nothing changes.
pub fn peephole_cancel(c: &Circuit) -> Circuit {
    let mut phase = c.global_phase;
    let mut gates = c.gates.clone();
    loop {
        let (next, changed) = cancel_pass(gates, &mut phase);
        gates = next;
        if !changed {
            break;
        }
    }
    Circuit {
        n: c.n,
        global_phase: phase,
        gates,
    }
}
