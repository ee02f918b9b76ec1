//! Integer partitions and their structural invariants.

mod enumerate;
mod symbols;

pub use enumerate::{enumerate_partitions, partitions, Constraints, Parity, PartCount, Partitions};
pub use symbols::{DurfeeSymbol, FrobeniusSymbol};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nonincreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} contains a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not nonincreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Self {
        Partition((1..=k).rev().collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn smallest(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// `mult[j]` is the multiplicity of `j`; the vector runs through `largest + 1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0; self.largest().unwrap_or(0) + 2];
        for &x in &self.0 {
            mult[x] += 1;
        }
        mult
    }

    /// Number of different part values.
    pub fn different_parts(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] != w[1]).count() + usize::from(!self.is_empty())
    }

    pub fn conjugate(&self) -> Partition {
        let Some(first) = self.largest() else {
            return Partition::empty();
        };
        let mut out = Vec::with_capacity(first);
        let mut rows = self.0.len();
        for col in 1..=first {
            while rows > 0 && self.0[rows - 1] < col {
                rows -= 1;
            }
            out.push(rows);
        }
        Partition(out)
    }

    /// Side of the largest square fitting in the diagram.
    pub fn durfee_size(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|&(i, &x)| x > i)
            .count()
    }

    pub fn durfee_symbol(&self) -> DurfeeSymbol {
        DurfeeSymbol::of(self)
    }

    pub fn frobenius_symbol(&self) -> FrobeniusSymbol {
        FrobeniusSymbol::of(self)
    }

    /// Largest part minus number of parts; 0 for the empty partition.
    pub fn rank(&self) -> i64 {
        self.largest().unwrap_or(0) as i64 - self.len() as i64
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

pub(crate) fn write_joined(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    write_joined(f, xs)?;
    f.write_str(")")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    let t = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| t.strip_prefix('[').and_then(|r| r.strip_suffix(']')))
        .unwrap_or(t)
        .trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse::<usize>()
                .map_err(|e| Error::Parse(format!("`{x}`: {e}")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(9,6,5,2)`, `9,6,5,2` or `9 6 5 2`.
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![3, 1, 2]).is_err());
        assert!(Partition::new(vec![3, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(p("(9,6,5,2)").to_string(), "(9,6,5,2)");
        assert_eq!(p("()").to_string(), "()");
        assert_eq!(p("4 4 1"), Partition::new(vec![4, 4, 1]).unwrap());
        assert!("(1,x)".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("(1)").conjugate(), p("(1)"));
        assert_eq!(p("(7,7,6,4,4,2,2)").conjugate(), p("(7,7,5,5,3,3,2)"));
    }

    #[test]
    fn durfee_sizes() {
        assert_eq!(Partition::empty().durfee_size(), 0);
        assert_eq!(p("(11,11,11,9,7,5,5,4,4,3)").durfee_size(), 5);
        assert_eq!(p("(3,3)").durfee_size(), 2);
    }

    #[test]
    fn ranks() {
        assert_eq!(p("(3)").rank(), 2);
        assert_eq!(p("(2,1)").rank(), 0);
        assert_eq!(p("(11,11,11,9,7,5,5,4,4,3)").rank(), 1);
        assert_eq!(Partition::empty().rank(), 0);
    }

    #[test]
    fn different_parts_counts_values() {
        assert_eq!(p("(3,3,2,1,1)").different_parts(), 3);
        assert_eq!(Partition::empty().different_parts(), 0);
    }

    #[test]
    fn json_is_a_plain_array() {
        let x = p("(4,1)");
        assert_eq!(serde_json::to_string(&x).unwrap(), "[4,1]");
        assert!(serde_json::from_str::<Partition>("[1,4]").is_err());
    }
}
