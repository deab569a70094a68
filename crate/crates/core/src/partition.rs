//! Integer partitions as weakly decreasing sequences of positive parts.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{AbacusError, Result};

/// A partition `(λ1, ..., λk)` with `λ1 ≥ ... ≥ λk ≥ 1`.
///
/// The empty partition is the unique partition of 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates and wraps `parts`.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(AbacusError::NotWeaklyDecreasing { prev: w[0], next: w[1] });
            }
        }
        if parts.last() == Some(&0) {
            return Err(AbacusError::MalformedInput("parts must be positive".into()));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts into decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The staircase `(m, m-1, ..., 1)`.
    pub fn staircase(m: usize) -> Self {
        Self { parts: (1..=m).rev().collect() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `λ'_j = |{i : λ_i ≥ j}|`.
    pub fn conjugate(&self) -> Self {
        let parts = (1..=self.largest_part()).map(|j| self.parts.iter().take_while(|&&p| p >= j).count()).collect();
        Self { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Returns `Some(m)` when this is the staircase `(m, ..., 1)`.
    pub fn staircase_index(&self) -> Option<usize> {
        let m = self.parts.len();
        self.parts.iter().enumerate().all(|(i, &p)| p == m - i).then_some(m)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = AbacusError;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = AbacusError;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Parses `"p1,p2,...,pk"`; the empty string is the empty partition.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let text = text.trim();
    if text.is_empty() || text == "∅" {
        return Ok(Partition::empty());
    }
    let parts = text
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            match tok.parse::<usize>() {
                Ok(0) => Err(AbacusError::MalformedInput(format!("part {tok:?} is not positive"))),
                Ok(v) => Ok(v),
                Err(_) => Err(AbacusError::MalformedInput(format!("{tok:?} is not a positive integer"))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_partition("6,3,3,1").unwrap(), p(&[6, 3, 3, 1]));
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        assert_eq!(parse_partition("3,5"), Err(AbacusError::NotWeaklyDecreasing { prev: 3, next: 5 }));
        assert!(matches!(parse_partition("3,x"), Err(AbacusError::MalformedInput(_))));
        assert!(matches!(parse_partition("3,0"), Err(AbacusError::MalformedInput(_))));
        assert!(matches!(parse_partition("2,,1"), Err(AbacusError::MalformedInput(_))));
        assert!(matches!(parse_partition("-1"), Err(AbacusError::MalformedInput(_))));
    }

    #[test]
    fn display_roundtrip() {
        let lam = p(&[6, 3, 3, 1]);
        assert_eq!(lam.to_string(), "6,3,3,1");
        assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam);
        assert_eq!(Partition::empty().to_string(), "");
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[6, 3, 3, 1]).conjugate(), p(&[4, 3, 3, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn self_conjugate_examples() {
        assert!(p(&[2, 1]).is_self_conjugate());
        assert!(!p(&[6, 3, 3, 1]).is_self_conjugate());
        assert!(p(&[3, 1, 1]).is_self_conjugate());
        assert!(Partition::empty().is_self_conjugate());
    }

    #[test]
    fn staircase_detection() {
        assert_eq!(Partition::staircase(3), p(&[3, 2, 1]));
        assert_eq!(Partition::staircase(0).staircase_index(), Some(0));
        assert_eq!(p(&[3, 2, 1]).staircase_index(), Some(3));
        assert_eq!(p(&[3, 1]).staircase_index(), None);
        assert_eq!(p(&[2, 2]).staircase_index(), None);
    }

    #[test]
    fn serde_as_list() {
        let lam = p(&[4, 2]);
        assert_eq!(serde_json::to_string(&lam).unwrap(), "[4,2]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
