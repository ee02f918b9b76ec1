//! Sign-reversing involutions on triples `(lambda, mu, rho_d)`.
//!
//! `lambda` has `n` distinct entries, `mu` has `l` entries padded with
//! zeros, and `d = n + l` is the size of the staircase `rho_d`. The weight
//! is `|lambda| + |mu| + d(d+1)/2`. Each flavor fixes the admissible
//! shapes, the sign, and which part moves between `lambda` and `mu`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::error::{Error, Result};
use crate::identities::formulas;
use crate::partition::{enumerate_partitions, write_list, Constraints};
use crate::series::{BiSeries, Series, ZPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// Compares largest parts; `lambda` may hold one zero but never empties.
    Alpha,
    /// Compares largest parts; `lambda` has positive parts and may empty.
    Alpha1,
    /// Compares smallest parts; `lambda` may hold one zero.
    Alpha2,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::Alpha, Flavor::Alpha1, Flavor::Alpha2];

    pub fn id(self) -> &'static str {
        match self {
            Flavor::Alpha => "alpha",
            Flavor::Alpha1 => "alpha1",
            Flavor::Alpha2 => "alpha2",
        }
    }

    fn allows_zero(self) -> bool {
        self != Flavor::Alpha1
    }

    fn min_lambda(self) -> usize {
        if self == Flavor::Alpha1 {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Flavor::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown involution `{s}` (expected alpha, alpha1 or alpha2)"
                ))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignedTriple {
    lambda: Vec<usize>,
    mu: Vec<usize>,
    d: usize,
    flavor: Flavor,
}

/// Returned by [`SignedTriple::apply`] on a fixed point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("the triple is a fixed point of {0}")]
pub struct FixedPoint(pub Flavor);

impl SignedTriple {
    /// `d` is implied by the lengths.
    pub fn new(flavor: Flavor, lambda: Vec<usize>, mu: Vec<usize>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidTriple(msg));
        if lambda.windows(2).any(|w| w[0] <= w[1]) {
            return bad(format!("lambda {lambda:?} is not strictly decreasing"));
        }
        if mu.windows(2).any(|w| w[0] < w[1]) {
            return bad(format!("mu {mu:?} is not nonincreasing"));
        }
        if lambda.len() < flavor.min_lambda() {
            return bad(format!("{flavor} needs a nonempty lambda"));
        }
        if !flavor.allows_zero() && lambda.last() == Some(&0) {
            return bad(format!("{flavor} does not allow a zero in lambda"));
        }
        let d = lambda.len() + mu.len();
        Ok(SignedTriple {
            lambda,
            mu,
            d,
            flavor,
        })
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn weight(&self) -> usize {
        self.lambda.iter().sum::<usize>() + self.mu.iter().sum::<usize>() + formulas::tri(self.d)
    }

    fn largest(&self) -> usize {
        self.lambda.first().copied().unwrap_or(0)
    }

    fn smallest(&self) -> usize {
        self.lambda.last().copied().unwrap_or(0)
    }

    pub fn sign(&self) -> i64 {
        let n = self.lambda.len();
        let l = self.mu.len();
        match self.flavor {
            Flavor::Alpha => formulas::sign(self.smallest() + l),
            Flavor::Alpha1 => formulas::sign(l),
            // (-1)^{k - n + 1}; k >= n - 1 always holds for n distinct entries
            Flavor::Alpha2 => formulas::sign(self.largest() + 1 + n),
        }
    }

    /// Fixed-point test written from the characterisation, not from [`Self::apply`].
    pub fn is_fixed(&self) -> bool {
        let n = self.lambda.len();
        let mu_top = self.mu.first().copied().unwrap_or(0);
        match self.flavor {
            Flavor::Alpha => n == 1 && self.lambda[0] >= mu_top,
            Flavor::Alpha1 => n == 0 && mu_top == 0,
            Flavor::Alpha2 => n == 1 && self.mu.last().is_none_or(|&m| self.lambda[0] <= m),
        }
    }

    pub fn apply(&self) -> Result<SignedTriple, FixedPoint> {
        let mut t = self.clone();
        let n = t.lambda.len();
        match self.flavor {
            Flavor::Alpha | Flavor::Alpha1 => {
                let mu_top = t.mu.first().copied().unwrap_or(0);
                if n > 0 && t.lambda[0] >= mu_top {
                    if self.flavor == Flavor::Alpha && n == 1 {
                        return Err(FixedPoint(self.flavor));
                    }
                    let x = t.lambda.remove(0);
                    t.mu.insert(0, x);
                } else if t.largest() < mu_top {
                    let x = t.mu.remove(0);
                    t.lambda.insert(0, x);
                } else {
                    return Err(FixedPoint(self.flavor));
                }
            }
            Flavor::Alpha2 => {
                let low = t.smallest();
                match t.mu.last().copied() {
                    Some(m) if low > m => {
                        t.mu.pop();
                        t.lambda.push(m);
                    }
                    _ if n >= 2 => {
                        t.lambda.pop();
                        t.mu.push(low);
                    }
                    _ => return Err(FixedPoint(self.flavor)),
                }
            }
        }
        Ok(t)
    }
}

impl fmt::Display for SignedTriple {
    /// `lambda=(9,6,5,2) mu=(6,4,4) d=7 sign=-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("lambda=")?;
        write_list(f, &self.lambda)?;
        f.write_str(" mu=")?;
        write_list(f, &self.mu)?;
        write!(
            f,
            " d={} sign={}",
            self.d,
            if self.sign() > 0 { "+1" } else { "-1" }
        )
    }
}

/// Every triple of the flavor with the given weight.
///
/// Ordered by `d`, then by `n`, then by the weight of `lambda`
/// (descending), then by `lambda` and `mu` lexicographically descending.
pub fn enumerate_triples(flavor: Flavor, weight: usize) -> Vec<SignedTriple> {
    let mut out = Vec::new();
    let mut d = 0;
    while formulas::tri(d) <= weight {
        let rest = weight - formulas::tri(d);
        for n in flavor.min_lambda()..=d {
            let l = d - n;
            for a in (0..=rest).rev() {
                let lambdas = distinct_entries(flavor, a, n);
                if lambdas.is_empty() {
                    continue;
                }
                let mus: Vec<Vec<usize>> =
                    enumerate_partitions(rest - a, Constraints::new().at_most(l))
                        .map(|p| {
                            let mut v = p.into_parts();
                            v.resize(l, 0);
                            v
                        })
                        .collect();
                for lam in &lambdas {
                    for mu in &mus {
                        out.push(SignedTriple {
                            lambda: lam.clone(),
                            mu: mu.clone(),
                            d,
                            flavor,
                        });
                    }
                }
            }
        }
        d += 1;
    }
    out
}

/// Strictly decreasing sequences of `n` entries summing to `a`; a final 0
/// is allowed when the flavor permits it.
fn distinct_entries(flavor: Flavor, a: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> =
        enumerate_partitions(a, Constraints::new().distinct().exactly(n))
            .map(|p| p.into_parts())
            .collect();
    if flavor.allows_zero() && n >= 1 {
        out.extend(
            enumerate_partitions(a, Constraints::new().distinct().exactly(n - 1)).map(|p| {
                let mut v = p.into_parts();
                v.push(0);
                v
            }),
        );
    }
    out
}

/// What power of `z` a triple carries when the sums are refined.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Refinement {
    #[default]
    None,
    /// `z^d`
    TriangleSize,
    /// `z^{d+k}` with `k` the smallest entry of `lambda`; `alpha` only.
    TriangleSizePlusSmallest,
}

impl Refinement {
    fn z_power(self, t: &SignedTriple) -> usize {
        match self {
            Refinement::None => 0,
            Refinement::TriangleSize => t.d,
            Refinement::TriangleSizePlusSmallest => t.d + t.smallest(),
        }
    }
}

/// The two sides an involution's sums must reproduce.
fn expected_sides(
    flavor: Flavor,
    refinement: Refinement,
    order: usize,
) -> Result<(BiSeries, BiSeries)> {
    use Refinement as R;
    let uni = |a: Series, b: Series| (BiSeries::from_series(&a), BiSeries::from_series(&b));
    Ok(match (flavor, refinement) {
        (Flavor::Alpha, R::None) => uni(
            formulas::square_sum(order)?,
            formulas::staircase_sum(order)?,
        ),
        (Flavor::Alpha, R::TriangleSize) => (
            formulas::square_sum_bi(order, false)?,
            formulas::staircase_sum_bi(order, false)?,
        ),
        (Flavor::Alpha, R::TriangleSizePlusSmallest) => (
            formulas::square_sum_bi(order, true)?,
            formulas::staircase_sum_bi(order, true)?,
        ),
        (Flavor::Alpha1, R::None) => uni(
            formulas::frobenius_cleared(order)?,
            formulas::theta_triangular(order)?,
        ),
        (Flavor::Alpha1, R::TriangleSize) => (
            formulas::frobenius_cleared_bi(order)?,
            formulas::theta_triangular_bi(order)?,
        ),
        (Flavor::Alpha2, R::None) => uni(
            formulas::fine_cleared(order)?,
            formulas::smallest_part_sum(order)?,
        ),
        (Flavor::Alpha2, R::TriangleSize) => (
            formulas::fine_cleared_bi(order)?,
            formulas::smallest_part_sum_bi(order)?,
        ),
        (_, R::TriangleSizePlusSmallest) => {
            return Err(Error::domain(
                "verify_involution",
                format!("the d+k refinement is only defined for alpha, not {flavor}"),
            ))
        }
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightReport {
    pub weight: usize,
    pub triples: usize,
    pub fixed_points: usize,
    /// Signed sum over all triples, as a polynomial in `z`.
    pub signed_total: ZPoly,
    pub expected_total: ZPoly,
    /// Signed sum over fixed points.
    pub fixed_sum: ZPoly,
    pub expected_fixed_sum: ZPoly,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvolutionReport {
    pub flavor: Flavor,
    pub max_weight: usize,
    pub refinement: Refinement,
    pub passed: bool,
    pub weights: Vec<WeightReport>,
}

fn check_move(t: &SignedTriple, refinement: Refinement) -> std::result::Result<bool, String> {
    let fixed = t.is_fixed();
    match t.apply() {
        Err(_) if fixed => Ok(true),
        Err(_) => Err(format!(
            "{t}: apply reports a fixed point but the characterisation disagrees"
        )),
        Ok(_) if fixed => Err(format!("{t}: characterised as fixed but apply moved it")),
        Ok(u) => {
            if SignedTriple::new(u.flavor, u.lambda.clone(), u.mu.clone()).is_err() {
                return Err(format!("{t} -> {u}: image is not a valid triple"));
            }
            if u.weight() != t.weight() || u.d != t.d {
                return Err(format!("{t} -> {u}: weight or d changed"));
            }
            if u.sign() != -t.sign() {
                return Err(format!("{t} -> {u}: sign not reversed"));
            }
            if refinement.z_power(&u) != refinement.z_power(t) {
                return Err(format!("{t} -> {u}: refined statistic changed"));
            }
            match u.apply() {
                Ok(back) if back == *t => Ok(false),
                Ok(back) => Err(format!("{t} -> {u} -> {back}: not an involution")),
                Err(_) => Err(format!("{t} -> {u}: image is a fixed point")),
            }
        }
    }
}

fn verify_weight(
    flavor: Flavor,
    w: usize,
    refinement: Refinement,
    lhs: &BiSeries,
    rhs: &BiSeries,
) -> WeightReport {
    let triples = enumerate_triples(flavor, w);
    let mut total = ZPoly::zero();
    let mut fixed_sum = ZPoly::zero();
    let mut fixed_points = 0;
    let mut counterexample = None;
    for t in &triples {
        let term = ZPoly::monomial(t.sign(), refinement.z_power(t));
        total.add_assign(&term);
        match check_move(t, refinement) {
            Ok(true) => {
                fixed_points += 1;
                fixed_sum.add_assign(&term);
            }
            Ok(false) => {}
            Err(msg) => {
                counterexample.get_or_insert(msg);
            }
        }
    }
    let expected_total = lhs.coeff(w).clone();
    let expected_fixed_sum = rhs.coeff(w).clone();
    if counterexample.is_none() && total != expected_total {
        counterexample = Some(format!(
            "signed total {total} differs from the series coefficient {expected_total}"
        ));
    }
    if counterexample.is_none() && fixed_sum != expected_fixed_sum {
        counterexample = Some(format!(
            "fixed-point sum {fixed_sum} differs from the series coefficient {expected_fixed_sum}"
        ));
    }
    WeightReport {
        weight: w,
        triples: triples.len(),
        fixed_points,
        signed_total: total,
        expected_total,
        fixed_sum,
        expected_fixed_sum,
        passed: counterexample.is_none(),
        counterexample,
    }
}

/// Exhaustively checks the involution at every weight through `max_weight`.
pub fn verify_involution(
    flavor: Flavor,
    max_weight: usize,
    refinement: Refinement,
) -> Result<InvolutionReport> {
    let (lhs, rhs) = expected_sides(flavor, refinement, max_weight)?;
    let weights: Vec<WeightReport> = (0..=max_weight)
        .into_par_iter()
        .map(|w| verify_weight(flavor, w, refinement, &lhs, &rhs))
        .collect();
    Ok(InvolutionReport {
        flavor,
        max_weight,
        refinement,
        passed: weights.iter().all(|w| w.passed),
        weights,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceEntry {
    pub triple: SignedTriple,
    pub sign: i64,
    /// `None` for a fixed point.
    pub partner: Option<SignedTriple>,
}

/// Every triple of one weight with its image.
pub fn trace(flavor: Flavor, weight: usize) -> Vec<TraceEntry> {
    enumerate_triples(flavor, weight)
        .into_iter()
        .map(|t| TraceEntry {
            sign: t.sign(),
            partner: t.apply().ok(),
            triple: t,
        })
        .collect()
}

/// Sum of `sign * z^stat` over a list of triples; handy for tests.
pub fn signed_sum(triples: &[SignedTriple], refinement: Refinement) -> ZPoly {
    let mut acc = ZPoly::zero();
    for t in triples {
        acc.add_assign(&ZPoly::monomial(
            BigInt::from(t.sign()),
            refinement.z_power(t),
        ));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(flavor: Flavor, lambda: &[usize], mu: &[usize]) -> SignedTriple {
        SignedTriple::new(flavor, lambda.to_vec(), mu.to_vec()).unwrap()
    }

    #[test]
    fn worked_move() {
        let t = triple(Flavor::Alpha, &[9, 6, 5, 2], &[6, 4, 4]);
        assert_eq!((t.d(), t.sign()), (7, -1));
        let u = t.apply().unwrap();
        assert_eq!(u, triple(Flavor::Alpha, &[6, 5, 2], &[9, 6, 4, 4]));
        assert_eq!(u.sign(), 1);
        assert_eq!(u.to_string(), "lambda=(6,5,2) mu=(9,6,4,4) d=7 sign=+1");
        assert_eq!(u.apply().unwrap(), t);
    }

    #[test]
    fn alpha_fixed_point() {
        let t = triple(Flavor::Alpha, &[5], &[3, 2]);
        assert!(t.is_fixed());
        assert_eq!(t.apply(), Err(FixedPoint(Flavor::Alpha)));
    }

    #[test]
    fn alpha1_fixed_points_are_bare_staircases() {
        let t = triple(Flavor::Alpha1, &[], &[0, 0, 0]);
        assert!(t.is_fixed());
        assert_eq!(t.sign(), -1);
        assert!(!triple(Flavor::Alpha1, &[], &[1, 0]).is_fixed());
    }

    #[test]
    fn alpha2_moves_smallest_parts() {
        let t = triple(Flavor::Alpha2, &[4, 1], &[3]);
        let u = t.apply().unwrap();
        assert_eq!(u, triple(Flavor::Alpha2, &[4], &[3, 1]));
        assert_eq!(u.apply().unwrap(), t);
        assert!(triple(Flavor::Alpha2, &[2], &[3]).is_fixed());
    }

    #[test]
    fn shapes_are_validated() {
        assert!(SignedTriple::new(Flavor::Alpha1, vec![2, 0], vec![]).is_err());
        assert!(SignedTriple::new(Flavor::Alpha, vec![], vec![1]).is_err());
        assert!(SignedTriple::new(Flavor::Alpha, vec![2, 2], vec![]).is_err());
        assert!(SignedTriple::new(Flavor::Alpha2, vec![2, 0], vec![0, 1]).is_err());
    }

    #[test]
    fn alpha1_weight_one_sums_to_minus_one() {
        let ts = enumerate_triples(Flavor::Alpha1, 1);
        assert_eq!(signed_sum(&ts, Refinement::None), ZPoly::constant(-1));
        assert_eq!(enumerate_triples(Flavor::Alpha1, 0).len(), 1);
    }

    #[test]
    fn small_weights_pass() {
        for f in Flavor::ALL {
            let r = verify_involution(f, 10, Refinement::TriangleSize).unwrap();
            assert!(r.passed, "{f}: {:?}", r.weights.iter().find(|w| !w.passed));
        }
        let r = verify_involution(Flavor::Alpha, 10, Refinement::TriangleSizePlusSmallest).unwrap();
        assert!(r.passed, "{:?}", r.weights.iter().find(|w| !w.passed));
        assert!(
            verify_involution(Flavor::Alpha1, 3, Refinement::TriangleSizePlusSmallest).is_err()
        );
    }
}
