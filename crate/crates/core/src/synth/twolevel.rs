//! Two-level baseline: one fully-controlled diagonal per pair of basis states.
//!
//! Pair `i` (basis states `2i`, `2i + 1`) gets `CDIAG(theta_2i, theta_2i+1)`
//! controlled on every top line, conjugated by X on the top lines where `i`
//! has a 0 bit. Visiting the conjugation masks in Gray order from the empty
//! set merges each X layer with the next, leaving `2^(n-1)` X gates.

use crate::circuit::{
    count_gates, peephole_cancel, Circuit, Gate, SynthesisReport, ZERO_ANGLE_EPS,
};
use crate::diagonal::{wrap_angle, DiagonalUnitary};
use crate::error::{Error, Result};
use crate::subsets::{gray_sequence, SubsetMask};

/// Lines to conjugate with X so that pair `pair` fires the all-ones control.
fn conjugation_mask(pair: usize, m: usize) -> SubsetMask {
    SubsetMask::from_index_bits(!pair & ((1 << m) - 1), m)
}

/// Pair indices ordered so their conjugation masks follow the Gray sequence.
fn gray_pair_order(m: usize) -> Result<Vec<usize>> {
    Ok(gray_sequence(m)?
        .into_iter()
        .map(|mask| !mask.index_bits(m) & ((1 << m) - 1))
        .collect())
}

pub fn synth_twolevel(u: &DiagonalUnitary) -> Result<(Circuit, SynthesisReport)> {
    if u.n() < 2 {
        return Err(Error::Domain(
            "two-level synthesis needs at least 2 qubits".into(),
        ));
    }
    synth_twolevel_ordered(u, &gray_pair_order(u.n() - 1)?)
}

/// Two-level synthesis visiting the pairs in the given order.
///
/// `order` must be a permutation of `0..2^(n-1)`. X layers between consecutive
/// blocks are merged to their symmetric difference; identity blocks are skipped.
pub fn synth_twolevel_ordered(
    u: &DiagonalUnitary,
    order: &[usize],
) -> Result<(Circuit, SynthesisReport)> {
    let n = u.n();
    if n < 2 {
        return Err(Error::Domain(
            "two-level synthesis needs at least 2 qubits".into(),
        ));
    }
    let m = n - 1;
    let pairs = 1usize << m;
    let mut seen = vec![false; pairs];
    if order.len() != pairs
        || !order
            .iter()
            .all(|&i| i < pairs && !std::mem::replace(&mut seen[i], true))
    {
        return Err(Error::Domain(format!(
            "pair order must be a permutation of 0..{pairs}"
        )));
    }

    let controls = SubsetMask::all(m);
    let thetas = u.thetas();
    let mut circuit = Circuit::new(n);
    let mut flipped = SubsetMask::EMPTY;
    for &pair in order {
        let (theta0, theta1) = (thetas[2 * pair], thetas[2 * pair + 1]);
        if wrap_angle(theta0).abs() <= ZERO_ANGLE_EPS && wrap_angle(theta1).abs() <= ZERO_ANGLE_EPS
        {
            continue;
        }
        let mask = conjugation_mask(pair, m);
        circuit.extend(
            flipped
                .symmetric_difference(mask)
                .lines()
                .map(|line| Gate::X { line }),
        );
        circuit.push(Gate::CDiag {
            controls,
            target: n,
            theta0,
            theta1,
        });
        flipped = mask;
    }
    circuit.extend(flipped.lines().map(|line| Gate::X { line }));

    let circuit = peephole_cancel(&circuit);
    let report = count_gates(&circuit);
    Ok((circuit, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::{circuit_to_diagonal, residual};
    use rand::{rngs::StdRng, seq::SliceRandom, SeedableRng};

    #[test]
    fn two_qubit_layout() {
        let (a, b, c, d) = (0.1, 0.2, 0.3, 0.4);
        let u = DiagonalUnitary::from_thetas(2, vec![a, b, c, d]).unwrap();
        let (circuit, report) = synth_twolevel(&u).unwrap();
        let controls = SubsetMask::from_lines(&[1]).unwrap();
        assert_eq!(
            circuit.gates,
            vec![
                Gate::CDiag {
                    controls,
                    target: 2,
                    theta0: c,
                    theta1: d
                },
                Gate::X { line: 1 },
                Gate::CDiag {
                    controls,
                    target: 2,
                    theta0: a,
                    theta1: b
                },
                Gate::X { line: 1 },
            ]
        );
        assert_eq!(report.counts.x, 2);
        assert_eq!(residual(&circuit, &u).unwrap(), 0.0);
    }

    #[test]
    fn identity_is_empty() {
        let (c, _) = synth_twolevel(&DiagonalUnitary::identity(4).unwrap()).unwrap();
        assert!(c.is_empty());
    }

    #[test]
    fn random_five_qubits_exact() {
        let mut rng = StdRng::seed_from_u64(9);
        let u = DiagonalUnitary::random(5, &mut rng).unwrap();
        let (c, report) = synth_twolevel(&u).unwrap();
        assert_eq!((report.counts.cdiag, report.counts.x), (16, 16));
        let d = circuit_to_diagonal(&c).unwrap();
        for (a, b) in d.thetas().iter().zip(u.thetas()) {
            assert!((a - b).abs() <= 1e-12);
        }
    }

    #[test]
    fn any_enumeration_gives_same_operator() {
        let mut rng = StdRng::seed_from_u64(21);
        let u = DiagonalUnitary::random(4, &mut rng).unwrap();
        let mut order: Vec<usize> = (0..8).collect();
        order.shuffle(&mut rng);
        let (c1, _) = synth_twolevel(&u).unwrap();
        let (c2, _) = synth_twolevel_ordered(&u, &order).unwrap();
        assert_eq!(
            circuit_to_diagonal(&c1).unwrap(),
            circuit_to_diagonal(&c2).unwrap()
        );
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(synth_twolevel(&DiagonalUnitary::identity(1).unwrap()).is_err());
        let u = DiagonalUnitary::identity(2).unwrap();
        assert!(synth_twolevel_ordered(&u, &[0, 0]).is_err());
        assert!(synth_twolevel_ordered(&u, &[0]).is_err());
    }
}
