//! Shared fixtures for the benchmarks.

use diagsynth::DiagonalUnitary;
use rand::{rngs::StdRng, SeedableRng};

/// A reproducible random diagonal.
pub fn random_diagonal(n: usize, seed: u64) -> DiagonalUnitary {
    DiagonalUnitary::random(n, &mut StdRng::seed_from_u64(seed)).expect("valid qubit count")
}
