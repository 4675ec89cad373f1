//! Subsets of control lines and the orders they are enumerated in.
//!
//! A [`SubsetMask`] stores line `k` in bit `k - 1`. Basis indices over the `m`
//! control lines are written `j = b_1 ... b_m` with `b_1` most significant, so
//! line `k` lives at bit `m - k` of `j`; [`SubsetMask::index_bits`] performs
//! that conversion.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set of lines, line `k` in bit `k - 1`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn from_bits(bits: u32) -> Self {
        Self(bits)
    }

    pub fn from_lines(lines: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        for &line in lines {
            if line == 0 || line > 32 {
                return Err(Error::Domain(format!("line {line} out of range")));
            }
            bits |= 1 << (line - 1);
        }
        Ok(Self(bits))
    }

    /// All lines `1..=m`.
    pub fn all(m: usize) -> Self {
        Self(low_bits(m))
    }

    /// Converts a basis-index pattern over `m` lines (`b_1` most significant).
    pub fn from_index_bits(index: usize, m: usize) -> Self {
        let mut bits = 0u32;
        for k in 1..=m {
            if (index >> (m - k)) & 1 == 1 {
                bits |= 1 << (k - 1);
            }
        }
        Self(bits)
    }

    /// The mask as a pattern over basis indices of `m` lines.
    pub fn index_bits(self, m: usize) -> usize {
        self.lines().fold(0, |acc, k| acc | (1usize << (m - k)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, line: usize) -> bool {
        (1..=32).contains(&line) && (self.0 >> (line - 1)) & 1 == 1
    }

    /// Largest line in the set, or 0 when empty.
    pub fn max_line(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// Lines in increasing order.
    pub fn lines(self) -> impl Iterator<Item = usize> {
        (1..=32).filter(move |&k| (self.0 >> (k - 1)) & 1 == 1)
    }

    pub fn symmetric_difference(self, other: SubsetMask) -> SubsetMask {
        Self(self.0 ^ other.0)
    }

    fn check_within(self, m: usize) -> Result<()> {
        if self.max_line() > m {
            return Err(Error::Domain(format!("{self} exceeds {m} control lines")));
        }
        Ok(())
    }
}

impl From<SubsetMask> for Vec<usize> {
    fn from(mask: SubsetMask) -> Self {
        mask.lines().collect()
    }
}

impl TryFrom<Vec<usize>> for SubsetMask {
    type Error = Error;

    fn try_from(lines: Vec<usize>) -> Result<Self> {
        SubsetMask::from_lines(&lines)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, line) in self.lines().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{line}")?;
        }
        f.write_str("}")
    }
}

fn low_bits(m: usize) -> u32 {
    if m >= 32 {
        u32::MAX
    } else {
        (1u32 << m) - 1
    }
}

fn check_lines(m: usize) -> Result<()> {
    if m == 0 || m > 31 {
        return Err(Error::Domain(format!("line count {m} outside 1..=31")));
    }
    Ok(())
}

/// Binary-reflected Gray sequence of all `2^m` subsets, starting at the empty set.
pub fn gray_sequence(m: usize) -> Result<Vec<SubsetMask>> {
    check_lines(m)?;
    Ok((0..1usize << m)
        .map(|i| SubsetMask::from_index_bits(i ^ (i >> 1), m))
        .collect())
}

/// Nonempty subsets ordered as strings of their sorted elements.
pub fn dictionary_sequence(m: usize) -> Result<Vec<SubsetMask>> {
    check_lines(m)?;
    let mut subsets: Vec<(Vec<usize>, SubsetMask)> = (1..1u32 << m)
        .map(|bits| {
            let mask = SubsetMask(bits);
            (mask.lines().collect(), mask)
        })
        .collect();
    subsets.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    Ok(subsets.into_iter().map(|(_, mask)| mask).collect())
}

/// Flip states `F(S)`: indices `1..2^m` whose bits over `S` have odd parity.
pub fn flip_set(s: SubsetMask, m: usize) -> Result<Vec<usize>> {
    check_lines(m)?;
    if s.is_empty() {
        return Err(Error::Domain("flip set of the empty subset".into()));
    }
    s.check_within(m)?;
    let pattern = s.index_bits(m);
    Ok((1..1usize << m)
        .filter(|j| (j & pattern).count_ones() % 2 == 1)
        .collect())
}

/// Conditioned states `C(S)`: indices `1..2^m` with every bit of `S` set.
pub fn conditioned_set(s: SubsetMask, m: usize) -> Result<Vec<usize>> {
    check_lines(m)?;
    if s.is_empty() {
        return Err(Error::Domain("conditioned set of the empty subset".into()));
    }
    s.check_within(m)?;
    let pattern = s.index_bits(m);
    Ok((1..1usize << m)
        .filter(|j| j & pattern == pattern)
        .collect())
}
