use std::fmt;

use serde::Serialize;

use super::{write_joined, Partition};
use crate::error::{Error, Result};

/// Durfee symbol: the columns to the right of the Durfee square (as the
/// conjugate of that block) over the rows below it, with the square's size.
///
/// Rows hold positive entries only, each at most `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DurfeeSymbol {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
    pub d: usize,
}

impl DurfeeSymbol {
    pub fn new(mut top: Vec<usize>, mut bottom: Vec<usize>, d: usize) -> Result<Self> {
        top.retain(|&x| x > 0);
        bottom.retain(|&x| x > 0);
        for (name, row) in [("top", &top), ("bottom", &bottom)] {
            if row.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidSymbol(format!(
                    "{name} row {row:?} is not nonincreasing"
                )));
            }
            if let Some(&x) = row.iter().find(|&&x| x > d) {
                return Err(Error::InvalidSymbol(format!(
                    "{name} entry {x} exceeds size {d}"
                )));
            }
        }
        Ok(DurfeeSymbol { top, bottom, d })
    }

    pub(crate) fn of(p: &Partition) -> Self {
        let d = p.durfee_size();
        let right: Vec<usize> = p.parts()[..d]
            .iter()
            .map(|&x| x - d)
            .filter(|&x| x > 0)
            .collect();
        DurfeeSymbol {
            top: Partition::from_sorted_unchecked(right)
                .conjugate()
                .into_parts(),
            bottom: p.parts()[d..].to_vec(),
            d,
        }
    }

    pub fn to_partition(&self) -> Partition {
        let right = Partition::from_sorted_unchecked(self.top.clone()).conjugate();
        let mut parts: Vec<usize> = (0..self.d)
            .map(|i| self.d + right.parts().get(i).copied().unwrap_or(0))
            .collect();
        parts.extend_from_slice(&self.bottom);
        Partition::from_sorted_unchecked(parts)
    }

    pub fn weight(&self) -> usize {
        self.d * self.d + self.top.iter().sum::<usize>() + self.bottom.iter().sum::<usize>()
    }

    /// Number of entries equal to `d` in the top row.
    pub fn top_count_of_d(&self) -> usize {
        self.top.iter().filter(|&&x| x == self.d).count()
    }

    /// Number of entries equal to `d` in the bottom row.
    pub fn bottom_count_of_d(&self) -> usize {
        self.bottom.iter().filter(|&&x| x == self.d).count()
    }
}

impl Partition {
    pub fn from_durfee_symbol(ds: &DurfeeSymbol) -> Result<Partition> {
        let checked = DurfeeSymbol::new(ds.top.clone(), ds.bottom.clone(), ds.d)?;
        Ok(checked.to_partition())
    }

    pub fn from_frobenius_symbol(fs: &FrobeniusSymbol) -> Result<Partition> {
        let checked = FrobeniusSymbol::new(fs.top.clone(), fs.bottom.clone())?;
        Ok(checked.to_partition())
    }
}

impl fmt::Display for DurfeeSymbol {
    /// `(top / bottom)_d`, e.g. `(5,5,4,4,3,3 / 5,5,4,4,3)_5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_joined(f, &self.top)?;
        f.write_str(" / ")?;
        write_joined(f, &self.bottom)?;
        write!(f, ")_{}", self.d)
    }
}

/// Frobenius symbol: arm lengths over leg lengths along the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FrobeniusSymbol {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

impl FrobeniusSymbol {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::InvalidSymbol(format!(
                "rows have lengths {} and {}",
                top.len(),
                bottom.len()
            )));
        }
        for (name, row) in [("top", &top), ("bottom", &bottom)] {
            if row.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::InvalidSymbol(format!(
                    "{name} row {row:?} is not strictly decreasing"
                )));
            }
        }
        Ok(FrobeniusSymbol { top, bottom })
    }

    pub(crate) fn of(p: &Partition) -> Self {
        let r = p.durfee_size();
        let conj = p.conjugate();
        FrobeniusSymbol {
            top: (0..r).map(|i| p.parts()[i] - i - 1).collect(),
            bottom: (0..r).map(|i| conj.parts()[i] - i - 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.len() + self.top.iter().sum::<usize>() + self.bottom.iter().sum::<usize>()
    }

    pub fn to_partition(&self) -> Partition {
        let r = self.len();
        let mut parts: Vec<usize> = (0..r).map(|i| self.top[i] + i + 1).collect();
        let cols: Vec<usize> = (0..r).map(|i| self.bottom[i] + i + 1).collect();
        let mut row = r;
        loop {
            let len = cols.iter().filter(|&&c| c > row).count();
            if len == 0 {
                break;
            }
            parts.push(len);
            row += 1;
        }
        Partition::from_sorted_unchecked(parts)
    }
}

impl fmt::Display for FrobeniusSymbol {
    /// `(6,5,3,0 / 6,5,2,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_joined(f, &self.top)?;
        f.write_str(" / ")?;
        write_joined(f, &self.bottom)?;
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn durfee_symbol_examples() {
        let ds = p("(11,11,11,9,7,5,5,4,4,3)").durfee_symbol();
        assert_eq!(
            ds,
            DurfeeSymbol::new(vec![5, 5, 4, 4, 3, 3], vec![5, 5, 4, 4, 3], 5).unwrap()
        );
        assert_eq!(ds.to_string(), "(5,5,4,4,3,3 / 5,5,4,4,3)_5");
        let ds = p("(2,2,2)").durfee_symbol();
        assert_eq!((ds.top.len(), ds.bottom.clone(), ds.d), (0, vec![2], 2));
        let ds = p("(3,3,3)").durfee_symbol();
        assert!(ds.top.is_empty() && ds.bottom.is_empty() && ds.d == 3);
    }

    #[test]
    fn durfee_reconstruction() {
        let sq = DurfeeSymbol::new(vec![], vec![], 2).unwrap();
        assert_eq!(Partition::from_durfee_symbol(&sq).unwrap(), p("(2,2)"));
        let ds = DurfeeSymbol::new(vec![2, 2], vec![], 2).unwrap();
        assert_eq!(Partition::from_durfee_symbol(&ds).unwrap(), p("(4,4)"));
        let ds = DurfeeSymbol::new(vec![5, 5, 4, 4, 3, 3], vec![5, 5, 4, 4, 3, 0], 5).unwrap();
        assert_eq!(
            Partition::from_durfee_symbol(&ds).unwrap(),
            p("(11,11,11,9,7,5,5,4,4,3)")
        );
    }

    #[test]
    fn oversized_durfee_entry_is_rejected() {
        let bad = DurfeeSymbol {
            top: vec![3],
            bottom: vec![],
            d: 2,
        };
        assert!(matches!(
            Partition::from_durfee_symbol(&bad),
            Err(Error::InvalidSymbol(_))
        ));
    }

    #[test]
    fn frobenius_examples() {
        let fs = p("(7,7,6,4,4,2,2)").frobenius_symbol();
        assert_eq!(
            fs,
            FrobeniusSymbol::new(vec![6, 5, 3, 0], vec![6, 5, 2, 1]).unwrap()
        );
        assert_eq!(fs.to_string(), "(6,5,3,0 / 6,5,2,1)");
        assert_eq!(
            p("(1)").frobenius_symbol(),
            FrobeniusSymbol::new(vec![0], vec![0]).unwrap()
        );
        assert_eq!(
            p("(2,2)").frobenius_symbol(),
            FrobeniusSymbol::new(vec![1, 0], vec![1, 0]).unwrap()
        );
        assert!(Partition::empty().frobenius_symbol().is_empty());
    }

    #[test]
    fn frobenius_reconstruction() {
        let fs = FrobeniusSymbol::new(vec![6, 5, 3, 0], vec![6, 5, 2, 1]).unwrap();
        assert_eq!(
            Partition::from_frobenius_symbol(&fs).unwrap(),
            p("(7,7,6,4,4,2,2)")
        );
        let fs = FrobeniusSymbol::new(vec![1, 0], vec![1, 0]).unwrap();
        assert_eq!(fs.to_partition(), p("(2,2)"));
        let bad = FrobeniusSymbol {
            top: vec![1, 1],
            bottom: vec![1, 0],
        };
        assert!(Partition::from_frobenius_symbol(&bad).is_err());
    }
}
