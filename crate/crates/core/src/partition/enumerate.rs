use std::fmt;
use std::sync::Arc;

use super::Partition;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PartCount {
    #[default]
    Any,
    Exactly(usize),
    AtMost(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    fn admits(self, x: usize) -> bool {
        match self {
            Parity::Odd => x % 2 == 1,
            Parity::Even => x.is_multiple_of(2),
        }
    }
}

type Predicate = Arc<dyn Fn(&Partition) -> bool + Send + Sync>;

/// Restrictions on the partitions produced by [`enumerate_partitions`].
///
/// Structural restrictions prune the search; the predicate only filters.
#[derive(Clone, Default)]
pub struct Constraints {
    pub distinct: bool,
    pub max_part: Option<usize>,
    pub min_part: Option<usize>,
    pub parts: PartCount,
    pub parity: Option<Parity>,
    predicate: Option<Predicate>,
}

impl fmt::Debug for Constraints {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Constraints")
            .field("distinct", &self.distinct)
            .field("max_part", &self.max_part)
            .field("min_part", &self.min_part)
            .field("parts", &self.parts)
            .field("parity", &self.parity)
            .field("predicate", &self.predicate.is_some())
            .finish()
    }
}

impl Constraints {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn distinct(mut self) -> Self {
        self.distinct = true;
        self
    }

    pub fn max_part(mut self, k: usize) -> Self {
        self.max_part = Some(k);
        self
    }

    pub fn min_part(mut self, k: usize) -> Self {
        self.min_part = Some(k);
        self
    }

    pub fn exactly(mut self, k: usize) -> Self {
        self.parts = PartCount::Exactly(k);
        self
    }

    pub fn at_most(mut self, k: usize) -> Self {
        self.parts = PartCount::AtMost(k);
        self
    }

    pub fn parity(mut self, parity: Parity) -> Self {
        self.parity = Some(parity);
        self
    }

    pub fn filter(mut self, f: impl Fn(&Partition) -> bool + Send + Sync + 'static) -> Self {
        self.predicate = Some(Arc::new(f));
        self
    }

    fn admits(&self, x: usize) -> bool {
        x >= 1 && self.min_part.is_none_or(|m| x >= m) && self.parity.is_none_or(|p| p.admits(x))
    }

    /// Largest admissible value `<= x`.
    fn admissible_at_most(&self, mut x: usize) -> Option<usize> {
        if self.parity.is_some_and(|p| !p.admits(x)) {
            x = x.checked_sub(1)?;
        }
        self.admits(x).then_some(x)
    }

    fn lowest(&self) -> usize {
        let lo = self.min_part.unwrap_or(1).max(1);
        match self.parity {
            Some(p) if !p.admits(lo) => lo + 1,
            _ => lo,
        }
    }

    fn step(&self) -> usize {
        if self.parity.is_some() {
            2
        } else {
            1
        }
    }

    /// Whether `rem` can still be written with parts at most `cap`, given
    /// `used` parts so far. Only necessary conditions; dead ends are allowed.
    fn feasible(&self, rem: usize, used: usize, cap: usize) -> bool {
        let slots = match self.parts {
            PartCount::Any => None,
            PartCount::Exactly(k) | PartCount::AtMost(k) => match k.checked_sub(used) {
                Some(s) => Some(s),
                None => return false,
            },
        };
        if rem == 0 {
            return match self.parts {
                PartCount::Exactly(k) => used == k,
                _ => true,
            };
        }
        let lo = self.lowest();
        let Some(hi) = self.admissible_at_most(cap) else {
            return false;
        };
        if hi < lo || rem < lo {
            return false;
        }
        let step = self.step();
        // how many values lie in [lo, hi] on the admissible grid
        let available = (hi - lo) / step + 1;
        let max_with = |j: usize| -> usize {
            if self.distinct {
                let j = j.min(available);
                j * hi - step * j * j.saturating_sub(1) / 2
            } else {
                j * hi
            }
        };
        match (self.parts, slots) {
            (PartCount::Exactly(_), Some(j)) => {
                if j == 0 || (self.distinct && j > available) {
                    return false;
                }
                let min = if self.distinct {
                    j * lo + step * j * (j - 1) / 2
                } else {
                    j * lo
                };
                min <= rem && rem <= max_with(j)
            }
            (PartCount::AtMost(_), Some(j)) => j > 0 && rem <= max_with(j),
            _ => {
                if self.distinct {
                    rem <= max_with(available)
                } else {
                    true
                }
            }
        }
    }
}

/// Iterator over the partitions of `n` meeting a [`Constraints`], in
/// lexicographically descending order.
pub struct Partitions {
    c: Constraints,
    remaining: usize,
    parts: Vec<usize>,
    // next candidate to try at each depth; `frames.len() == parts.len() + 1`
    frames: Vec<usize>,
    pending_empty: bool,
}

impl Partitions {
    fn new(n: usize, c: Constraints) -> Self {
        let cap = c.max_part.map_or(n, |m| m.min(n));
        let start_ok = n > 0 && c.feasible(n, 0, cap);
        Partitions {
            pending_empty: n == 0,
            remaining: n,
            parts: Vec::new(),
            frames: if start_ok { vec![cap] } else { Vec::new() },
            c,
        }
    }

    fn accept(&self, p: &Partition) -> bool {
        let count_ok = match self.c.parts {
            PartCount::Any => true,
            PartCount::Exactly(k) => p.len() == k,
            PartCount::AtMost(k) => p.len() <= k,
        };
        count_ok && self.c.predicate.as_ref().is_none_or(|f| f(p))
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.pending_empty {
            self.pending_empty = false;
            let p = Partition::empty();
            if self.accept(&p) {
                return Some(p);
            }
            return None;
        }
        while let Some(&cand) = self.frames.last() {
            let depth = self.parts.len();
            let mut chosen = None;
            let mut next = self.c.admissible_at_most(cand.min(self.remaining));
            while let Some(a) = next {
                let child_cap = if self.c.distinct { a - 1 } else { a };
                let rem = self.remaining - a;
                if self.c.feasible(rem, depth + 1, child_cap.min(rem)) {
                    chosen = Some(a);
                    break;
                }
                next = self.c.admissible_at_most(a - 1);
            }
            let Some(a) = chosen else {
                self.frames.pop();
                if let Some(x) = self.parts.pop() {
                    self.remaining += x;
                }
                continue;
            };
            *self.frames.last_mut().expect("frame present") = a - 1;
            self.parts.push(a);
            self.remaining -= a;
            if self.remaining == 0 {
                let p = Partition::from_sorted_unchecked(self.parts.clone());
                self.parts.pop();
                self.remaining += a;
                if self.accept(&p) {
                    return Some(p);
                }
            } else {
                let cap = if self.c.distinct { a - 1 } else { a };
                self.frames.push(cap.min(self.remaining));
            }
        }
        None
    }
}

pub fn enumerate_partitions(n: usize, c: Constraints) -> Partitions {
    Partitions::new(n, c)
}

/// All partitions of `n`.
pub fn partitions(n: usize) -> Partitions {
    Partitions::new(n, Constraints::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn list(n: usize, c: Constraints) -> Vec<String> {
        enumerate_partitions(n, c).map(|p| p.to_string()).collect()
    }

    #[test]
    fn unrestricted_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).count()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn canonical_order() {
        assert_eq!(
            list(4, Constraints::new()),
            ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]
        );
    }

    #[test]
    fn distinct_parts_of_five() {
        assert_eq!(
            list(5, Constraints::new().distinct()),
            ["(5)", "(4,1)", "(3,2)"]
        );
    }

    #[test]
    fn part_count_restrictions() {
        assert_eq!(
            list(6, Constraints::new().exactly(3)),
            ["(4,1,1)", "(3,2,1)", "(2,2,2)"]
        );
        assert_eq!(
            enumerate_partitions(6, Constraints::new().at_most(2)).count(),
            4
        );
        assert_eq!(
            enumerate_partitions(0, Constraints::new().exactly(1)).count(),
            0
        );
        assert_eq!(
            enumerate_partitions(0, Constraints::new().exactly(0)).count(),
            1
        );
    }

    #[test]
    fn parity_and_bounds() {
        assert_eq!(
            list(8, Constraints::new().parity(Parity::Odd).distinct()),
            ["(7,1)", "(5,3)"]
        );
        assert_eq!(
            list(6, Constraints::new().parity(Parity::Even)),
            ["(6)", "(4,2)", "(2,2,2)"]
        );
        assert_eq!(
            list(5, Constraints::new().max_part(2).min_part(2)),
            Vec::<String>::new()
        );
        assert_eq!(
            list(6, Constraints::new().min_part(2).max_part(3)),
            ["(3,3)", "(2,2,2)"]
        );
    }

    #[test]
    fn contradictory_constraints_are_empty() {
        assert_eq!(
            enumerate_partitions(5, Constraints::new().parity(Parity::Even)).count(),
            0
        );
        assert_eq!(
            enumerate_partitions(3, Constraints::new().distinct().exactly(3)).count(),
            0
        );
    }

    #[test]
    fn predicate_filters() {
        let c = Constraints::new().filter(|p| p.len() % 2 == 0);
        assert_eq!(list(4, c), ["(3,1)", "(2,2)", "(1,1,1,1)"]);
    }
}
