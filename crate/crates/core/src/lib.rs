//! Compile diagonal unitaries into circuits of controlled-NOT and `Rz` gates.
//!
//! A diagonal unitary on `n` qubits is stored as its `2^n` phase angles. Three
//! synthesis routes are provided:
//!
//! * [`synth_xor`]: recursive synthesis with XOR-controlled rotations, emitting
//!   exactly `2^(n+1) - 3` elementary gates for generic input.
//! * [`synth_lambda`]: the same recursion built from multi-controlled
//!   rotations, kept as `Mcrz` block gates.
//! * [`synth_twolevel`]: the two-level baseline made of X-conjugated
//!   fully-controlled one-qubit diagonals.
//!
//! Every output can be checked with [`sim::verify`], which simulates the
//! circuit exactly as a phase-decorated permutation of basis states.
//!
//! Conventions: basis index `j = b_1 b_2 ... b_n` in binary with `b_1` most
//! significant, line 1 is the top line and line `n` the target of every block.
//! `Rz(a) = diag(exp(-i a/2), exp(i a/2))`.

pub mod characters;
pub mod circuit;
pub mod diagonal;
pub mod error;
pub mod eta_matrix;
pub mod io;
pub mod linalg;
pub mod qasm;
pub mod sim;
pub mod subsets;
pub mod synth;

pub use characters::{chi, eta, is_tensor, EtaVector};
pub use circuit::{
    count_gates, peephole_cancel, Circuit, Gate, GateCounts, GateKind, SynthesisReport,
};
pub use diagonal::{
    compose, equal_up_to_global_phase, tensor_split, wrap_angle, DiagonalUnitary, GlobalPhase,
    TensorSplit, DEFAULT_TOL,
};
pub use error::{Error, Result};
pub use eta_matrix::{build_eta_lambda, build_eta_xor, solve, BlockOrder, EtaMatrix};
pub use sim::{apply_to_basis, circuit_to_diagonal, residual, verify};
pub use subsets::{conditioned_set, dictionary_sequence, flip_set, gray_sequence, SubsetMask};
pub use synth::lambda::{emit_lambda_block, lambda_level, synth_lambda};
pub use synth::twolevel::{synth_twolevel, synth_twolevel_ordered};
pub use synth::xor::{emit_xor_block, synth_xor, synth_xor_with, xor_level, XorStyle};
pub use synth::{synthesize, Algorithm, LevelTrace};
