//! Concave compositions of even length and the map onto improper partitions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, partitions, Constraints, FrobeniusSymbol, Partition};
use crate::stats::is_proper;

/// `a_1 > ... > a_m = b_m < ... < b_1`, stored as two decreasing rows.
///
/// `m = 0` is the empty composition of 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawComposition")]
pub struct ConcaveComposition {
    a: Vec<usize>,
    b: Vec<usize>,
}

#[derive(Deserialize)]
struct RawComposition {
    a: Vec<usize>,
    b: Vec<usize>,
}

impl TryFrom<RawComposition> for ConcaveComposition {
    type Error = Error;

    fn try_from(r: RawComposition) -> Result<Self> {
        ConcaveComposition::new(r.a, r.b)
    }
}

impl ConcaveComposition {
    pub fn new(a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::InvalidComposition(format!(
                "sides have lengths {} and {}",
                a.len(),
                b.len()
            )));
        }
        for (name, row) in [("a", &a), ("b", &b)] {
            if row.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::InvalidComposition(format!(
                    "{name} side {row:?} is not strictly decreasing"
                )));
            }
        }
        if a.last() != b.last() {
            return Err(Error::InvalidComposition("central parts differ".into()));
        }
        if a == [0] {
            return Err(Error::InvalidComposition(
                "0=0 is not a composition; use the empty one".into(),
            ));
        }
        Ok(ConcaveComposition { a, b })
    }

    pub fn empty() -> Self {
        ConcaveComposition {
            a: Vec::new(),
            b: Vec::new(),
        }
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    /// Common length `m` of the two sides.
    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn weight(&self) -> usize {
        self.a.iter().sum::<usize>() + self.b.iter().sum::<usize>()
    }

    pub fn center(&self) -> Option<usize> {
        self.a.last().copied()
    }
}

impl fmt::Display for ConcaveComposition {
    /// `2>1>0=0<1<2`; the empty composition prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a.is_empty() {
            return f.write_str("()");
        }
        for (i, x) in self.a.iter().enumerate() {
            if i > 0 {
                f.write_str(">")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("=")?;
        for (i, x) in self.b.iter().rev().enumerate() {
            if i > 0 {
                f.write_str("<")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for ConcaveComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "()" {
            return Ok(Self::empty());
        }
        let (left, right) = s
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("`{s}` has no `=`")))?;
        let num = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("`{x}`: {e}")))
        };
        let a = left.split('>').map(num).collect::<Result<Vec<_>>>()?;
        let mut b = right.split('<').map(num).collect::<Result<Vec<_>>>()?;
        b.reverse();
        ConcaveComposition::new(a, b)
    }
}

/// The four shapes distinguished by the map onto improper partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PhiCase {
    /// zero center, `a_{m-1} = b_{m-1}`
    Case1,
    /// positive center
    Case2,
    /// zero center, `a_{m-1} > b_{m-1}`
    Case3,
    /// zero center, `a_{m-1} < b_{m-1}`
    Case4,
}

impl fmt::Display for PhiCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = match self {
            PhiCase::Case1 => 1,
            PhiCase::Case2 => 2,
            PhiCase::Case3 => 3,
            PhiCase::Case4 => 4,
        };
        write!(f, "case {n}")
    }
}

pub fn phi_case(c: &ConcaveComposition) -> Result<PhiCase> {
    let m = c.m();
    if m == 0 {
        return Err(Error::domain("phi", "the empty composition has no image"));
    }
    if c.a[m - 1] > 0 {
        return Ok(PhiCase::Case2);
    }
    // a validated composition with zero center has m >= 2
    let (x, y) = (c.a[m - 2], c.b[m - 2]);
    Ok(match x.cmp(&y) {
        std::cmp::Ordering::Equal => PhiCase::Case1,
        std::cmp::Ordering::Greater => PhiCase::Case3,
        std::cmp::Ordering::Less => PhiCase::Case4,
    })
}

/// Sends a nonempty concave composition of even length to an improper
/// partition of the same weight.
///
/// In Frobenius coordinates the image is `(a_i | b_i - 1)` over all
/// `i <= m` for a positive center, and for a zero center it drops the
/// center and lowers whichever side is not larger at `m - 1`.
pub fn phi(c: &ConcaveComposition) -> Result<Partition> {
    let case = phi_case(c)?;
    let m = c.m();
    let (top, bottom): (Vec<usize>, Vec<usize>) = match case {
        PhiCase::Case2 => (c.a.clone(), c.b.iter().map(|x| x - 1).collect()),
        PhiCase::Case1 | PhiCase::Case4 => (
            c.a[..m - 1].iter().map(|x| x - 1).collect(),
            c.b[..m - 1].to_vec(),
        ),
        PhiCase::Case3 => (
            c.a[..m - 1].to_vec(),
            c.b[..m - 1].iter().map(|x| x - 1).collect(),
        ),
    };
    let p = FrobeniusSymbol::new(top, bottom)?.to_partition();
    debug_assert_eq!(p.weight(), c.weight());
    Ok(p)
}

/// Inverse of [`phi`], dispatching on last arm minus last leg of the
/// Frobenius symbol (which equals the difference of the `d` counts in the
/// two rows of the Durfee symbol).
pub fn phi_inverse(p: &Partition) -> Result<ConcaveComposition> {
    let fs = p.frobenius_symbol();
    let Some(r) = fs.len().checked_sub(1) else {
        return Err(Error::domain(
            "phi_inverse",
            "the empty partition is proper",
        ));
    };
    let delta = fs.top[r] as i64 - fs.bottom[r] as i64;
    let (a, b) = match delta {
        0 => return Err(Error::domain("phi_inverse", format!("{p} is proper"))),
        // cases 2 and 3
        d if d > 0 => {
            let a = fs.top.clone();
            let b: Vec<usize> = fs.bottom.iter().map(|x| x + 1).collect();
            if d == 1 {
                (a, b)
            } else {
                (with_zero(a), with_zero(b))
            }
        }
        // cases 1 and 4
        _ => (
            with_zero(fs.top.iter().map(|x| x + 1).collect()),
            with_zero(fs.bottom.clone()),
        ),
    };
    ConcaveComposition::new(a, b)
}

fn with_zero(mut v: Vec<usize>) -> Vec<usize> {
    v.push(0);
    v
}

/// Every concave composition of even length with weight `n`.
///
/// Ordered by center, then by the `a` side's parts (descending weight,
/// then lexicographically descending), then the `b` side likewise.
pub fn enumerate_concave_even(n: usize) -> Vec<ConcaveComposition> {
    if n == 0 {
        return vec![ConcaveComposition::empty()];
    }
    let mut out = Vec::new();
    for c in 0..=n / 2 {
        let rest = n - 2 * c;
        // distinct parts above the center, grouped by weight
        let sides: Vec<Vec<Partition>> = (0..=rest)
            .map(|w| {
                enumerate_partitions(w, Constraints::new().distinct().min_part(c + 1)).collect()
            })
            .collect();
        for wa in (0..=rest).rev() {
            for pa in &sides[wa] {
                for pb in sides[rest - wa].iter().filter(|pb| pb.len() == pa.len()) {
                    if c == 0 && pa.is_empty() {
                        continue;
                    }
                    let mut a = pa.parts().to_vec();
                    let mut b = pb.parts().to_vec();
                    a.push(c);
                    b.push(c);
                    out.push(ConcaveComposition { a, b });
                }
            }
        }
    }
    out
}

/// Number of concave compositions of even length with weight `n`.
pub fn ce(n: usize) -> BigInt {
    BigInt::from(enumerate_concave_even(n).len())
}

/// Outcome of checking that [`phi`] is a bijection at one weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiSummary {
    pub n: usize,
    pub compositions: usize,
    pub improper_partitions: usize,
    /// Images that are improper, of weight `n`, and map back to their source.
    pub round_trips: usize,
    pub distinct_images: usize,
    pub bijective: bool,
}

/// Maps every composition of weight `n >= 1` and checks injectivity,
/// improperness of the images, and the inverse round trip.
pub fn check_phi(n: usize) -> Result<PhiSummary> {
    if n == 0 {
        return Err(Error::domain(
            "check_phi",
            "weight 0 has only the empty composition",
        ));
    }
    let comps = enumerate_concave_even(n);
    let mut images = std::collections::BTreeSet::new();
    let mut round_trips = 0;
    for c in &comps {
        let p = phi(c)?;
        if p.weight() == n && !is_proper(&p) && phi_inverse(&p).as_ref() == Ok(c) {
            round_trips += 1;
        }
        images.insert(p);
    }
    let improper_partitions = partitions(n).filter(|p| !is_proper(p)).count();
    Ok(PhiSummary {
        n,
        compositions: comps.len(),
        improper_partitions,
        round_trips,
        distinct_images: images.len(),
        bijective: round_trips == comps.len()
            && images.len() == comps.len()
            && comps.len() == improper_partitions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cc(s: &str) -> ConcaveComposition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn display_round_trip() {
        for s in ["2>1>0=0<1<2", "1=1", "3>2>0=0<1<2", "()"] {
            assert_eq!(cc(s).to_string(), s);
        }
        assert!("2>2=2".parse::<ConcaveComposition>().is_err());
        assert!("0=0".parse::<ConcaveComposition>().is_err());
        assert!("3=2".parse::<ConcaveComposition>().is_err());
    }

    #[test]
    fn json_shape() {
        let c = cc("2>1=1<3");
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"a":[2,1],"b":[3,1]}"#);
        assert_eq!(serde_json::from_str::<ConcaveComposition>(&s).unwrap(), c);
        assert!(serde_json::from_str::<ConcaveComposition>(r#"{"a":[1],"b":[2]}"#).is_err());
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_concave_even(0), vec![ConcaveComposition::empty()]);
        assert!(enumerate_concave_even(1).is_empty());
        let two: Vec<String> = enumerate_concave_even(2)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(two, ["1>0=0<1", "1=1"]);
        let four: Vec<String> = enumerate_concave_even(4)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(four, ["3>0=0<1", "2>0=0<2", "1>0=0<3", "2=2"]);
        assert_eq!(ce(7), BigInt::from(10));
    }

    #[test]
    fn worked_maps() {
        assert_eq!(phi(&cc("2>1>0=0<1<2")).unwrap(), p("(2,2,2)"));
        assert_eq!(phi(&cc("2>1=1<2")).unwrap(), p("(3,3)"));
        assert_eq!(phi(&cc("3>2>0=0<1<2")).unwrap(), p("(4,4)"));
        assert_eq!(phi_inverse(&p("(2,2,2)")).unwrap(), cc("2>1>0=0<1<2"));
        assert_eq!(phi_inverse(&p("(3,3)")).unwrap(), cc("2>1=1<2"));
        assert_eq!(phi_inverse(&p("(4,4)")).unwrap(), cc("3>2>0=0<1<2"));
    }

    #[test]
    fn cases() {
        assert_eq!(phi_case(&cc("2>1>0=0<1<2")).unwrap(), PhiCase::Case1);
        assert_eq!(phi_case(&cc("2>1=1<2")).unwrap(), PhiCase::Case2);
        assert_eq!(phi_case(&cc("3>2>0=0<1<2")).unwrap(), PhiCase::Case3);
        assert_eq!(phi_case(&cc("1>0=0<3")).unwrap(), PhiCase::Case4);
        assert!(phi(&ConcaveComposition::empty()).is_err());
    }

    #[test]
    fn proper_partitions_have_no_preimage() {
        assert!(phi_inverse(&Partition::empty()).is_err());
        assert!(phi_inverse(&p("(11,11,11,9,7,5,5,4,4,3)")).is_err());
        assert!(phi_inverse(&p("(1)")).is_err());
    }

    #[test]
    fn phi_is_bijective_for_small_weights() {
        for n in 1..=12 {
            let s = check_phi(n).unwrap();
            assert!(s.bijective, "{s:?}");
        }
        assert!(check_phi(0).is_err());
    }
}
