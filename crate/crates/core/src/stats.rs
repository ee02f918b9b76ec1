//! Partition classifiers and the keyed counting registry.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::concave;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Constraints, Partition};

/// Smallest part occurring an even number of times (absent values count
/// as zero occurrences) is even.
pub fn is_flushed(p: &Partition) -> bool {
    let mult = p.multiplicities();
    let j = (1..mult.len())
        .find(|&j| mult[j].is_multiple_of(2))
        .expect("largest + 1 has multiplicity 0");
    j % 2 == 0
}

/// Equally many `d`s in both rows of the Durfee symbol, `d` the Durfee size.
pub fn is_proper(p: &Partition) -> bool {
    let ds = p.durfee_symbol();
    ds.top_count_of_d() == ds.bottom_count_of_d()
}

/// Whenever some `j` occurs at least `k` times, so does every positive integer below `j`.
pub fn has_initial_k_repetitions(p: &Partition, k: usize) -> bool {
    let mult = p.multiplicities();
    match (1..mult.len()).rev().find(|&j| mult[j] >= k) {
        None => true,
        Some(top) => (1..top).all(|i| mult[i] >= k),
    }
}

pub fn smallest_missing_summand(p: &Partition) -> usize {
    let mult = p.multiplicities();
    (1..mult.len())
        .find(|&j| mult[j] == 0)
        .expect("largest + 1 is missing")
}

fn require_distinct(op: &'static str, p: &Partition) -> Result<()> {
    if p.has_distinct_parts() {
        Ok(())
    } else {
        Err(Error::domain(op, format!("{p} has repeated parts")))
    }
}

/// For a partition into distinct parts: the `k >= 1` such that the parts
/// include `1..=k` but not `k + 1`, provided the partition is not the
/// staircase `(k, ..., 1)` itself.
pub fn initial_sylvester_triangle(p: &Partition) -> Result<Option<usize>> {
    require_distinct("initial_sylvester_triangle", p)?;
    let k = p
        .parts()
        .iter()
        .rev()
        .enumerate()
        .take_while(|&(i, &x)| x == i + 1)
        .count();
    Ok((k >= 1 && k < p.len()).then_some(k))
}

/// For a partition into distinct parts: reading parts upward from a
/// virtual part 0, the first difference between neighbours exceeding 1.
pub fn first_gap(p: &Partition) -> Result<Option<usize>> {
    require_distinct("first_gap", p)?;
    let mut prev = 0;
    for &x in p.parts().iter().rev() {
        if x - prev > 1 {
            return Ok(Some(x - prev));
        }
        prev = x;
    }
    Ok(None)
}

/// How a statistic uses its optional integer parameter `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Param {
    None,
    /// optional; number of parts
    Parts,
    /// required; number of different part values
    DifferentParts,
    /// required; rank value (may be negative)
    Rank,
}

macro_rules! stat_keys {
    ($($var:ident => $id:literal, $param:ident, $doc:literal;)*) => {
        /// Every counting statistic, addressed by a stable string id.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum StatKey { $($var,)* }

        impl StatKey {
            pub const ALL: &'static [StatKey] = &[$(StatKey::$var,)*];

            pub fn id(self) -> &'static str {
                match self { $(StatKey::$var => $id,)* }
            }

            pub fn param(self) -> Param {
                match self { $(StatKey::$var => Param::$param,)* }
            }

            pub fn description(self) -> &'static str {
                match self { $(StatKey::$var => $doc,)* }
            }
        }
    };
}

stat_keys! {
    P => "p", Parts, "partitions";
    Q => "Q", Parts, "partitions into distinct parts";
    QE => "Q_E", None, "partitions into an even number of distinct parts";
    F => "F", Parts, "flushed partitions";
    UF => "UF", Parts, "unflushed partitions";
    UFOdd => "UF_odd", Parts, "unflushed partitions with an odd number of parts";
    UFEven => "UF_even", Parts, "unflushed partitions with an even number of parts";
    PR => "PR", None, "proper partitions (equally many d's in both Durfee rows)";
    IMPR => "IMPR", None, "improper partitions";
    Dee => "D_ee", None, "even number of distinct parts, smallest part even";
    Deo => "D_eo", None, "even number of distinct parts, smallest part odd";
    Doe => "D_oe", None, "odd number of distinct parts, smallest part even";
    Doo => "D_oo", None, "odd number of distinct parts, smallest part odd";
    DeMn => "De_mn", DifferentParts, "initial 2-repetitions, m different parts, even number of parts occurring once";
    DoMn => "Do_mn", DifferentParts, "initial 2-repetitions, m different parts, odd number of parts occurring once";
    IeMn => "Ie_mn", DifferentParts, "initial 2-repetitions with a repeated part, m different parts, even number of parts in repeated values";
    IoMn => "Io_mn", DifferentParts, "initial 2-repetitions with a repeated part, m different parts, odd number of parts in repeated values";
    SeMn => "Se_mn", DifferentParts, "distinct parts, m parts, first gap even";
    SoMn => "So_mn", DifferentParts, "distinct parts, m parts, first gap odd";
    NRank => "N_rank", Rank, "partitions of rank m";
    NeMinusNo => "Ne_minus_No", None, "even rank minus odd rank";
    LoMinusLe => "Lo_minus_Le", None, "distinct parts: smallest part odd minus smallest part even";
    PoD => "Po_D", None, "distinct parts, largest part odd";
    PeD => "Pe_D", None, "distinct parts, largest part even";
    FrobNoZeroTop => "frob_no_zero_top", None, "no 0 in the top row of the Frobenius symbol";
    SmallestMissingOdd => "smallest_missing_odd", None, "smallest positive integer that is not a part is odd";
    XCor44 => "X_cor44", Parts, "Durfee size k >= 1, no k in the top row, an even number of k's in the bottom row";
    CE => "ce", None, "concave compositions of even length";
}

impl fmt::Display for StatKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for StatKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StatKey::ALL
            .iter()
            .copied()
            .find(|k| k.id() == s)
            .ok_or_else(|| Error::UnknownStatistic(s.to_string()))
    }
}

impl Serialize for StatKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

fn parity_sign(x: usize) -> i64 {
    if x.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn repeated_part_total(mult: &[usize]) -> usize {
    mult.iter().filter(|&&c| c >= 2).sum()
}

impl StatKey {
    /// Whether the weight can be negative.
    pub fn is_signed(self) -> bool {
        matches!(self, StatKey::NeMinusNo | StatKey::LoMinusLe)
    }

    fn base(self) -> Constraints {
        use StatKey::*;
        match self {
            Q | QE | Dee | Deo | Doe | Doo | SeMn | SoMn | LoMinusLe | PoD | PeD => {
                Constraints::new().distinct()
            }
            _ => Constraints::new(),
        }
    }

    /// Contribution of `p` to the count, ignoring the parameter.
    pub fn weight(self, p: &Partition) -> i64 {
        use StatKey::*;
        let n = p.len();
        let small = p.smallest().unwrap_or(0);
        let b = |x: bool| i64::from(x);
        match self {
            P | NRank => 1,
            Q => b(p.has_distinct_parts()),
            QE => b(p.has_distinct_parts() && n.is_multiple_of(2)),
            F => b(is_flushed(p)),
            UF => b(!is_flushed(p)),
            UFOdd => b(!is_flushed(p) && n % 2 == 1),
            UFEven => b(!is_flushed(p) && n.is_multiple_of(2)),
            PR => b(is_proper(p)),
            IMPR => b(!is_proper(p)),
            Dee | Deo | Doe | Doo => {
                if n == 0 || !p.has_distinct_parts() {
                    return 0;
                }
                let want = match self {
                    Dee => (0, 0),
                    Deo => (0, 1),
                    Doe => (1, 0),
                    _ => (1, 1),
                };
                b((n % 2, small % 2) == want)
            }
            DeMn | DoMn => {
                if !has_initial_k_repetitions(p, 2) {
                    return 0;
                }
                let once = p.multiplicities().iter().filter(|&&c| c == 1).count();
                b((once % 2 == 0) == (self == DeMn))
            }
            IeMn | IoMn => {
                let mult = p.multiplicities();
                let total = repeated_part_total(&mult);
                if total == 0 || !has_initial_k_repetitions(p, 2) {
                    return 0;
                }
                b(total.is_multiple_of(2) == (self == IeMn))
            }
            SeMn | SoMn => match first_gap(p) {
                Ok(Some(g)) => b((g % 2 == 0) == (self == SeMn)),
                _ => 0,
            },
            NeMinusNo => parity_sign(p.rank().unsigned_abs() as usize),
            LoMinusLe => {
                if n == 0 || !p.has_distinct_parts() {
                    0
                } else {
                    -parity_sign(small)
                }
            }
            PoD | PeD => {
                if n == 0 || !p.has_distinct_parts() {
                    return 0;
                }
                b((p.parts()[0] % 2 == 1) == (self == PoD))
            }
            FrobNoZeroTop => b(!p.frobenius_symbol().top.contains(&0)),
            SmallestMissingOdd => b(smallest_missing_summand(p) % 2 == 1),
            XCor44 => {
                let ds = p.durfee_symbol();
                b(ds.d >= 1 && ds.top_count_of_d() == 0 && ds.bottom_count_of_d().is_multiple_of(2))
            }
            CE => 0,
        }
    }

    /// The value the parameter `m` is compared against.
    pub fn param_of(self, p: &Partition) -> i64 {
        match self.param() {
            Param::None | Param::Parts => p.len() as i64,
            Param::DifferentParts => p.different_parts() as i64,
            Param::Rank => p.rank(),
        }
    }

    fn check_param(self, m: Option<i64>) -> Result<()> {
        match (self.param(), m) {
            (Param::None, Some(_)) => Err(Error::UnexpectedParameter {
                key: self.id().into(),
            }),
            (Param::DifferentParts | Param::Rank, None) => Err(Error::MissingParameter {
                key: self.id().into(),
            }),
            _ => Ok(()),
        }
    }

    fn constraints(self, m: Option<i64>) -> Constraints {
        let c = self.base();
        match (self.param(), m) {
            (Param::Parts, Some(m)) if m >= 0 => c.exactly(m as usize),
            _ => c,
        }
    }
}

/// Exact value of a statistic at `n`, optionally restricted by `m`.
pub fn count(key: StatKey, n: usize, m: Option<i64>) -> Result<BigInt> {
    key.check_param(m)?;
    if key == StatKey::CE {
        return Ok(concave::ce(n));
    }
    if m.is_some_and(|m| m < 0) && key.param() != Param::Rank {
        return Ok(BigInt::zero());
    }
    let mut total = 0i64;
    for p in enumerate_partitions(n, key.constraints(m)) {
        if m.is_none_or(|m| key.param_of(&p) == m) {
            total += key.weight(&p);
        }
    }
    Ok(BigInt::from(total))
}

/// `count(key, n, m)` for every `n` in `0..=max_n`, computed in parallel.
pub fn counts_up_to(key: StatKey, max_n: usize, m: Option<i64>) -> Result<Vec<BigInt>> {
    key.check_param(m)?;
    (0..=max_n)
        .into_par_iter()
        .map(|n| count(key, n, m))
        .collect()
}

/// Values of the statistic at `n` split by the parameter; zero entries omitted.
pub fn distribution(key: StatKey, n: usize) -> Result<BTreeMap<i64, BigInt>> {
    if key.param() == Param::None {
        return Err(Error::domain(
            "distribution",
            format!("`{key}` takes no parameter"),
        ));
    }
    let mut acc: BTreeMap<i64, i64> = BTreeMap::new();
    for p in enumerate_partitions(n, key.base()) {
        let w = key.weight(&p);
        if w != 0 {
            *acc.entry(key.param_of(&p)).or_default() += w;
        }
    }
    Ok(acc
        .into_iter()
        .filter(|&(_, v)| v != 0)
        .map(|(k, v)| (k, BigInt::from(v)))
        .collect())
}

/// Partitions of `n` contributing to the statistic, with their weights.
pub fn members(key: StatKey, n: usize, m: Option<i64>) -> Result<Vec<(Partition, i64)>> {
    key.check_param(m)?;
    if key == StatKey::CE {
        return Err(Error::domain(
            "members",
            "`ce` counts compositions; enumerate them with the concave module",
        ));
    }
    Ok(enumerate_partitions(n, key.constraints(m))
        .filter(|p| m.is_none_or(|m| key.param_of(p) == m))
        .filter_map(|p| {
            let w = key.weight(&p);
            (w != 0).then_some((p, w))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn c(key: &str, n: usize) -> i64 {
        i64::try_from(count(key.parse().unwrap(), n, None).unwrap()).unwrap()
    }

    #[test]
    fn flushed_examples() {
        assert!(is_flushed(&p("(6,1)")));
        assert!(!is_flushed(&p("(7)")));
        assert!(is_flushed(&p("(3,2,1)")));
        assert!(!is_flushed(&Partition::empty()));
    }

    #[test]
    fn proper_examples() {
        assert!(is_proper(&p("(11,11,11,9,7,5,5,4,4,3)")));
        assert!(!is_proper(&p("(2,2,2)")));
        assert!(is_proper(&Partition::empty()));
    }

    #[test]
    fn initial_repetitions() {
        assert!(has_initial_k_repetitions(&p("(5,3,1)"), 2));
        assert!(has_initial_k_repetitions(&p("(3,2,2,1,1)"), 2));
        assert!(!has_initial_k_repetitions(&p("(3,2,2)"), 2));
    }

    #[test]
    fn missing_summands() {
        assert_eq!(smallest_missing_summand(&p("(4)")), 1);
        assert_eq!(smallest_missing_summand(&p("(3,1)")), 2);
        assert_eq!(smallest_missing_summand(&p("(2,1,1)")), 3);
    }

    #[test]
    fn sylvester_triangles_and_gaps() {
        assert_eq!(
            initial_sylvester_triangle(&p("(7,3,2,1)")).unwrap(),
            Some(3)
        );
        assert_eq!(initial_sylvester_triangle(&p("(3,2,1)")).unwrap(), None);
        assert_eq!(initial_sylvester_triangle(&p("(5,2)")).unwrap(), None);
        assert_eq!(first_gap(&p("(7,3,2,1)")).unwrap(), Some(4));
        assert_eq!(first_gap(&p("(3,2,1)")).unwrap(), None);
        assert_eq!(first_gap(&p("(5,2,1)")).unwrap(), Some(3));
        assert_eq!(first_gap(&p("(5,2)")).unwrap(), Some(2));
        assert!(first_gap(&p("(2,2)")).is_err());
        assert!(initial_sylvester_triangle(&p("(2,2)")).is_err());
    }

    #[test]
    fn small_counts() {
        assert_eq!(c("F", 6), 3);
        assert_eq!(c("F", 7), 5);
        assert_eq!(c("UF_odd", 7), 5);
        assert_eq!(c("UF_even", 7), 5);
        assert_eq!(c("Q_E", 5), 2);
        assert_eq!(
            (0..5).map(|n| c("frob_no_zero_top", n)).collect::<Vec<_>>(),
            [1, 0, 1, 2, 3]
        );
    }

    #[test]
    fn parameters_are_checked() {
        assert_eq!(
            count(StatKey::DeMn, 3, None).unwrap_err(),
            Error::MissingParameter {
                key: "De_mn".into()
            }
        );
        assert_eq!(
            count(StatKey::PR, 3, Some(1)).unwrap_err(),
            Error::UnexpectedParameter { key: "PR".into() }
        );
        assert!(matches!(
            "bogus".parse::<StatKey>(),
            Err(Error::UnknownStatistic(_))
        ));
        assert_eq!(count(StatKey::P, 6, Some(3)).unwrap(), BigInt::from(3));
    }

    #[test]
    fn rank_counts_can_be_negative_indexed() {
        // partitions of 4: ranks 3, 1, 0, -1, -3
        assert_eq!(count(StatKey::NRank, 4, Some(-3)).unwrap(), BigInt::from(1));
        assert_eq!(count(StatKey::NRank, 4, Some(2)).unwrap(), BigInt::from(0));
    }

    #[test]
    fn ids_round_trip() {
        for &k in StatKey::ALL {
            assert_eq!(k.id().parse::<StatKey>().unwrap(), k);
        }
    }

    #[test]
    fn distribution_over_parameter() {
        let d = distribution(StatKey::P, 5).unwrap();
        let got: Vec<(i64, i64)> = d
            .iter()
            .map(|(k, v)| (*k, i64::try_from(v).unwrap()))
            .collect();
        assert_eq!(got, [(1, 1), (2, 2), (3, 2), (4, 1), (5, 1)]);
    }
}
