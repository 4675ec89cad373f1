//! Diagonal unitaries stored as phase angles.

use std::f64::consts::{PI, TAU};

use rand::Rng;

use crate::characters;
use crate::error::{Error, Result};

/// Default angular tolerance, in radians.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Largest qubit count accepted by the constructors.
pub const MAX_QUBITS: usize = 24;

/// Maps an angle to the principal range `(-pi, pi]`.
pub fn wrap_angle(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// An overall phase `exp(i phi)`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct GlobalPhase(pub f64);

impl GlobalPhase {
    pub fn radians(self) -> f64 {
        self.0
    }
}

/// An `n`-qubit diagonal unitary `sum_j exp(i thetas[j]) |j><j|`.
///
/// Angles are stored as given; they are only interpreted modulo `2 pi`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalUnitary {
    n: usize,
    thetas: Vec<f64>,
}

impl DiagonalUnitary {
    pub fn from_thetas(n: usize, thetas: Vec<f64>) -> Result<Self> {
        check_qubits(n)?;
        if thetas.len() != 1 << n {
            return Err(Error::Dimension(format!(
                "{n} qubits need {} angles, got {}",
                1usize << n,
                thetas.len()
            )));
        }
        if let Some(bad) = thetas.iter().position(|t| !t.is_finite()) {
            return Err(Error::Domain(format!("angle {bad} is not finite")));
        }
        Ok(Self { n, thetas })
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_qubits(n)?;
        Ok(Self {
            n,
            thetas: vec![0.0; 1 << n],
        })
    }

    /// Builds a diagonal from a function of the basis index.
    pub fn from_fn(n: usize, f: impl FnMut(usize) -> f64) -> Result<Self> {
        check_qubits(n)?;
        Self::from_thetas(n, (0..1usize << n).map(f).collect())
    }

    /// Samples iid angles uniformly from `[0, 2 pi)`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        check_qubits(n)?;
        Ok(Self {
            n,
            thetas: (0..1usize << n).map(|_| rng.gen_range(0.0..TAU)).collect(),
        })
    }

    /// `Rz(a_1) (x) Rz(a_2) (x) ... (x) Rz(a_n)`, with `alphas[k]` acting on line `k + 1`.
    pub fn rz_tensor(alphas: &[f64]) -> Result<Self> {
        let n = alphas.len();
        Self::from_fn(n, |j| {
            alphas
                .iter()
                .enumerate()
                .map(|(k, a)| {
                    let bit = (j >> (n - 1 - k)) & 1;
                    if bit == 0 {
                        -a / 2.0
                    } else {
                        a / 2.0
                    }
                })
                .sum()
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.thetas.len()
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn into_thetas(self) -> Vec<f64> {
        self.thetas
    }

    /// Integer power; angles scale by `a`.
    pub fn powi(&self, a: i32) -> Self {
        Self {
            n: self.n,
            thetas: self.thetas.iter().map(|t| t * f64::from(a)).collect(),
        }
    }

    /// Multiplies by a global phase.
    pub fn with_phase(&self, phi: f64) -> Self {
        Self {
            n: self.n,
            thetas: self.thetas.iter().map(|t| t + phi).collect(),
        }
    }

    /// Kronecker product `self (x) other`; `other` acts on the bottom lines.
    pub fn tensor(&self, other: &DiagonalUnitary) -> Result<Self> {
        check_qubits(self.n + other.n)?;
        let inner = other.dim();
        let mut thetas = Vec::with_capacity(self.dim() * inner);
        for a in &self.thetas {
            thetas.extend(other.thetas.iter().map(|b| a + b));
        }
        Ok(Self {
            n: self.n + other.n,
            thetas,
        })
    }
}

fn check_qubits(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::Dimension(format!(
            "qubit count {n} outside 1..={MAX_QUBITS}"
        )));
    }
    Ok(())
}

fn check_same_size(u1: &DiagonalUnitary, u2: &DiagonalUnitary) -> Result<()> {
    if u1.n != u2.n {
        return Err(Error::Dimension(format!(
            "qubit counts differ: {} vs {}",
            u1.n, u2.n
        )));
    }
    Ok(())
}

/// Product of two diagonals: componentwise angle addition.
pub fn compose(u1: &DiagonalUnitary, u2: &DiagonalUnitary) -> Result<DiagonalUnitary> {
    check_same_size(u1, u2)?;
    Ok(DiagonalUnitary {
        n: u1.n,
        thetas: u1
            .thetas
            .iter()
            .zip(&u2.thetas)
            .map(|(a, b)| a + b)
            .collect(),
    })
}

/// Largest wrapped deviation between `u1` and `u2` once the index-0 difference
/// is taken as the global phase.
pub fn phase_deviation(u1: &DiagonalUnitary, u2: &DiagonalUnitary) -> Result<f64> {
    check_same_size(u1, u2)?;
    let phi = wrap_angle(u1.thetas[0] - u2.thetas[0]);
    Ok(u1
        .thetas
        .iter()
        .zip(&u2.thetas)
        .map(|(a, b)| wrap_angle(a - b - phi).abs())
        .fold(0.0, f64::max))
}

pub fn equal_up_to_global_phase(
    u1: &DiagonalUnitary,
    u2: &DiagonalUnitary,
    tol: f64,
) -> Result<bool> {
    Ok(phase_deviation(u1, u2)? <= tol)
}

/// Result of splitting `U = e^{i Phi} V (x) Rz(alpha_0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorSplit {
    /// Factor on the top `n - 1` lines, normalized so `v.thetas()[0] == 0`.
    pub v: DiagonalUnitary,
    /// Raw angles of the one-qubit factor on the last line.
    pub w: (f64, f64),
    /// `w.1 - w.0`, so the last-line factor is `e^{i Phi} Rz(alpha0)`.
    pub alpha0: f64,
    /// `(w.0 + w.1) / 2`.
    pub phase: GlobalPhase,
}

impl TensorSplit {
    /// Rebuilds `V (x) W` from the stored factors.
    pub fn recompose(&self) -> DiagonalUnitary {
        let thetas = self
            .v
            .thetas
            .iter()
            .flat_map(|t| [t + self.w.0, t + self.w.1])
            .collect();
        DiagonalUnitary {
            n: self.v.n + 1,
            thetas,
        }
    }
}

/// Splits a diagonal that is a tensor on its last line.
///
/// `W = (thetas[0], thetas[1])` and `V[j] = thetas[2j] - thetas[0]`.
pub fn tensor_split(u: &DiagonalUnitary, tol: f64) -> Result<TensorSplit> {
    if u.n < 2 {
        return Err(Error::Dimension(
            "tensor split needs at least 2 qubits".into(),
        ));
    }
    let deviation = characters::eta(u)?.max_abs();
    if deviation > tol {
        return Err(Error::NotATensor { deviation, tol });
    }
    let (w0, w1) = (u.thetas[0], u.thetas[1]);
    let v = DiagonalUnitary {
        n: u.n - 1,
        thetas: u.thetas.iter().step_by(2).map(|t| t - w0).collect(),
    };
    Ok(TensorSplit {
        v,
        w: (w0, w1),
        alpha0: w1 - w0,
        phase: GlobalPhase((w0 + w1) / 2.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn pis(n: usize, scale: f64, ks: &[f64]) -> DiagonalUnitary {
        DiagonalUnitary::from_thetas(n, ks.iter().map(|k| k * PI / scale).collect()).unwrap()
    }

    #[test]
    fn wrap_is_principal() {
        assert_eq!(wrap_angle(PI), PI);
        assert!((wrap_angle(-PI) - PI).abs() < 1e-15);
        assert!((wrap_angle(3.0 * PI / 2.0) + PI / 2.0).abs() < 1e-15);
        assert_eq!(wrap_angle(0.0), 0.0);
        assert_eq!(wrap_angle(-1e-300), 0.0);
    }

    #[test]
    fn constructor_checks_length() {
        assert!(DiagonalUnitary::from_thetas(1, vec![0.0, 0.0]).is_ok());
        assert!(matches!(
            DiagonalUnitary::from_thetas(2, vec![0.0; 3]),
            Err(Error::Dimension(_))
        ));
        assert!(DiagonalUnitary::from_thetas(0, vec![0.0]).is_err());
        assert!(DiagonalUnitary::from_thetas(1, vec![0.0, f64::NAN]).is_err());
    }

    #[test]
    fn compose_worked_example_factors() {
        // Three block diagonals and U from the 3-qubit XOR walk-through, in units of pi/48.
        let factors = [
            [-4.0, 4.0, -4.0, 4.0, 4.0, -4.0, 4.0, -4.0],
            [-3.0, 3.0, 3.0, -3.0, 3.0, -3.0, -3.0, 3.0],
            [3.0, -3.0, -3.0, 3.0, 3.0, -3.0, -3.0, 3.0],
            [16.0, 8.0, 36.0, 28.0, 12.0, 32.0, 44.0, 40.0],
        ];
        let product = factors
            .iter()
            .map(|f| pis(3, 48.0, f))
            .reduce(|a, b| compose(&a, &b).unwrap())
            .unwrap();
        let expected = pis(3, 48.0, &[12.0, 12.0, 32.0, 32.0, 22.0, 22.0, 42.0, 42.0]);
        for (a, b) in product.thetas().iter().zip(expected.thetas()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn compose_identity_and_mismatch() {
        let u = pis(2, 12.0, &[1.0, 2.0, 3.0, 4.0]);
        let id = DiagonalUnitary::identity(2).unwrap();
        assert_eq!(compose(&u, &id).unwrap(), u);
        let one = DiagonalUnitary::identity(1).unwrap();
        assert!(matches!(compose(&u, &one), Err(Error::Dimension(_))));
    }

    #[test]
    fn global_phase_comparison() {
        let u = pis(2, 12.0, &[1.0, 5.0, -3.0, 7.0]);
        let tol = 1e-9;
        assert!(equal_up_to_global_phase(&u, &u.with_phase(1.234), tol).unwrap());
        let mut t = u.thetas().to_vec();
        t[2] += 10.0 * tol;
        let v = DiagonalUnitary::from_thetas(2, t).unwrap();
        assert!(!equal_up_to_global_phase(&u, &v, tol).unwrap());
        // 2 pi shifts are invisible
        assert!(equal_up_to_global_phase(&u, &u.with_phase(-4.0 * PI), 0.0).unwrap());
    }

    #[test]
    fn split_identity() {
        let s = tensor_split(&DiagonalUnitary::identity(2).unwrap(), DEFAULT_TOL).unwrap();
        assert_eq!(s.v, DiagonalUnitary::identity(1).unwrap());
        assert_eq!(s.alpha0, 0.0);
        assert_eq!(s.phase, GlobalPhase(0.0));
    }

    #[test]
    fn split_worked_xor_remainder() {
        let u = pis(3, 48.0, &[12.0, 12.0, 32.0, 32.0, 22.0, 22.0, 42.0, 42.0]);
        let s = tensor_split(&u, DEFAULT_TOL).unwrap();
        assert_eq!(s.alpha0, 0.0);
        let expected_v = pis(2, 48.0, &[12.0, 32.0, 22.0, 42.0]);
        assert!(equal_up_to_global_phase(&s.v, &expected_v, 1e-12).unwrap());
        assert!((s.phase.radians() - 12.0 * PI / 48.0).abs() < 1e-15);
    }

    #[test]
    fn split_lambda_example_remainder() {
        let u = pis(3, 12.0, &[12.0, 6.0, 20.0, 14.0, 9.0, 3.0, 9.0, 3.0]);
        let s = tensor_split(&u, DEFAULT_TOL).unwrap();
        let expected_v = pis(2, 12.0, &[0.0, 8.0, -3.0, -3.0]);
        for (a, b) in s.v.thetas().iter().zip(expected_v.thetas()) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!((s.w.0 - PI).abs() < 1e-15 && (s.w.1 - PI / 2.0).abs() < 1e-15);
        for (a, b) in s.recompose().thetas().iter().zip(u.thetas()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn split_rejects_non_tensor() {
        let u = pis(2, 12.0, &[1.0, 0.0, 0.0, 0.0]);
        assert!(matches!(
            tensor_split(&u, DEFAULT_TOL),
            Err(Error::NotATensor { .. })
        ));
        assert!(tensor_split(&DiagonalUnitary::identity(1).unwrap(), 1.0).is_err());
    }

    #[test]
    fn tensor_of_rz_matches_builder() {
        let a = DiagonalUnitary::rz_tensor(&[0.3]).unwrap();
        let b = DiagonalUnitary::rz_tensor(&[0.7]).unwrap();
        let ab = DiagonalUnitary::rz_tensor(&[0.3, 0.7]).unwrap();
        assert_eq!(a.tensor(&b).unwrap(), ab);
        assert_eq!(a.thetas(), &[-0.15, 0.15]);
    }
}
