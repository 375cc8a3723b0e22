//! Degree sequences: multisets of positive generator degrees.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// A multiset of `c` positive integers, stored in nondecreasing order.
///
/// Displayed nonincreasing, e.g. `(46, 36, 32, 15, 12, 5)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeSequence(Vec<u32>);

impl DegreeSequence {
    pub fn new(entries: impl Into<Vec<u32>>) -> Result<Self> {
        let mut entries = entries.into();
        if entries.is_empty() {
            return Err(Error::InvalidInput("degree sequence is empty".into()));
        }
        if entries.iter().any(|&a| a == 0) {
            return Err(Error::InvalidInput(
                "degree sequence entries must be positive".into(),
            ));
        }
        entries.sort_unstable();
        Ok(DegreeSequence(entries))
    }

    /// Codimension, i.e. the number of entries.
    pub fn codim(&self) -> usize {
        self.0.len()
    }

    /// Entries in nondecreasing order.
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Entries in nonincreasing order, the display convention.
    pub fn descending(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        v.reverse();
        v
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    pub fn product(&self) -> BigInt {
        self.0.iter().map(|&a| BigInt::from(a)).product()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.descending().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_and_display() {
        let s = DegreeSequence::new(vec![5, 12, 46, 15, 36, 32]).unwrap();
        assert_eq!(s.entries(), &[5, 12, 15, 32, 36, 46]);
        assert_eq!(s.to_string(), "(46, 36, 32, 15, 12, 5)");
        assert_eq!(s.sum(), 146);
    }

    #[test]
    fn rejects_zero_and_empty() {
        assert!(DegreeSequence::new(vec![]).is_err());
        assert!(DegreeSequence::new(vec![2, 0]).is_err());
    }
}
