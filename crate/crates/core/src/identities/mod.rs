//! Registry of identities and count equivalences, each checked by comparing
//! two independently built sides coefficient by coefficient.

mod cases;
pub mod formulas;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::{serialize_bigint, BiSeries, Series};

pub use cases::REGISTRY;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    SeriesVsSeries,
    SeriesVsCount,
    CountVsCount,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::SeriesVsSeries => "series-vs-series",
            Kind::SeriesVsCount => "series-vs-count",
            Kind::CountVsCount => "count-vs-count",
        })
    }
}

/// One side of a comparison.
#[derive(Clone, Debug)]
pub enum Side {
    Uni(Series),
    Bi(BiSeries),
}

impl From<Series> for Side {
    fn from(s: Series) -> Self {
        Side::Uni(s)
    }
}

impl From<BiSeries> for Side {
    fn from(s: BiSeries) -> Self {
        Side::Bi(s)
    }
}

impl Side {
    fn into_bi(self) -> BiSeries {
        match self {
            Side::Uni(s) => BiSeries::from_series(&s),
            Side::Bi(b) => b,
        }
    }

    fn perturb(&mut self, degree: usize, delta: &BigInt) {
        match self {
            Side::Uni(s) => s.add_monomial(delta.clone(), degree),
            Side::Bi(b) => b.add_monomial(delta.clone(), 0, degree),
        }
    }
}

/// Two sides that must agree from `from_degree` on.
#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub lhs: Side,
    pub rhs: Side,
    pub from_degree: usize,
}

impl Check {
    pub fn new(label: impl Into<String>, lhs: impl Into<Side>, rhs: impl Into<Side>) -> Self {
        Check {
            label: label.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            from_degree: 0,
        }
    }

    pub fn from_degree(mut self, d: usize) -> Self {
        self.from_degree = d;
        self
    }

    fn first_discrepancy(self) -> Option<Discrepancy> {
        let label = self.label;
        let from = self.from_degree;
        let (a, b) = (self.lhs.into_bi(), self.rhs.into_bi());
        let top = a.order().min(b.order());
        (from..=top).find_map(|n| {
            let (x, y) = (a.coeff(n), b.coeff(n));
            if x == y {
                return None;
            }
            let len = x.coeffs().len().max(y.coeffs().len());
            let z = (0..len).find(|&k| x.coeff(k) != y.coeff(k)).unwrap_or(0);
            Some(Discrepancy {
                check: label.clone(),
                degree: n,
                z_power: z,
                lhs: x.coeff(z),
                rhs: y.coeff(z),
            })
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub check: String,
    pub degree: usize,
    pub z_power: usize,
    #[serde(serialize_with = "serialize_bigint")]
    pub lhs: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub rhs: BigInt,
}

/// A registry entry; `build(order)` produces its checks.
#[derive(Serialize)]
pub struct IdentityCase {
    pub id: &'static str,
    pub kind: Kind,
    pub statement: &'static str,
    pub default_order: usize,
    /// Largest order accepted before the enumeration cost is prohibitive.
    pub max_order: usize,
    /// Optional cases do not gate the aggregate status.
    pub optional: bool,
    #[serde(skip)]
    build: fn(usize) -> Result<Vec<Check>>,
}

impl fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCase")
            .field("id", &self.id)
            .finish_non_exhaustive()
    }
}

impl IdentityCase {
    pub fn checks(&self, order: usize) -> Result<Vec<Check>> {
        if order == 0 {
            return Err(Error::domain("verify", "order must be at least 1"));
        }
        if order > self.max_order {
            return Err(Error::Infeasible {
                id: self.id.to_string(),
                requested: order,
                max: self.max_order,
            });
        }
        (self.build)(order)
    }
}

pub fn list_identities() -> &'static [IdentityCase] {
    REGISTRY
}

pub fn lookup(id: &str) -> Result<&'static IdentityCase> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub order: usize,
    pub status: Status,
    pub optional: bool,
    pub checks: usize,
    pub first_discrepancy: Option<Discrepancy>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn verified(&self) -> bool {
        self.status == Status::Verified
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Verified => "verified",
            Status::Failed => "FAILED",
        };
        write!(
            f,
            "{:<26} {:<8} order {:<4} {} checks  {} ms",
            self.id, status, self.order, self.checks, self.elapsed_ms
        )?;
        if let Some(d) = &self.first_discrepancy {
            write!(
                f,
                "\n    {}: first difference at q^{} z^{}: lhs {} rhs {}",
                d.check, d.degree, d.z_power, d.lhs, d.rhs
            )?;
        }
        Ok(())
    }
}

/// Adds `delta * q^degree` to the left side of a case's first check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perturbation {
    pub degree: usize,
    pub delta: BigInt,
}

pub fn verify_identity(id: &str, order: Option<usize>) -> Result<VerificationReport> {
    verify_identity_with(id, order, None)
}

pub fn verify_identity_with(
    id: &str,
    order: Option<usize>,
    perturbation: Option<&Perturbation>,
) -> Result<VerificationReport> {
    let case = lookup(id)?;
    let order = order.unwrap_or(case.default_order);
    let start = Instant::now();
    let mut checks = case.checks(order)?;
    if let (Some(p), Some(first)) = (perturbation, checks.first_mut()) {
        if !p.delta.is_zero() {
            first.lhs.perturb(p.degree, &p.delta);
        }
    }
    let n = checks.len();
    let first_discrepancy = checks.into_iter().find_map(Check::first_discrepancy);
    Ok(VerificationReport {
        id: case.id.to_string(),
        order,
        status: if first_discrepancy.is_none() {
            Status::Verified
        } else {
            Status::Failed
        },
        optional: case.optional,
        checks: n,
        first_discrepancy,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs every case, in parallel, reporting in registry order.
///
/// `orders` overrides default orders by id; `perturb` injects a deliberate
/// error into one case.
pub fn verify_all(
    orders: &BTreeMap<String, usize>,
    perturb: Option<(&str, &Perturbation)>,
) -> Result<Vec<VerificationReport>> {
    for id in orders.keys() {
        lookup(id)?;
    }
    REGISTRY
        .par_iter()
        .map(|c| {
            let p = perturb.and_then(|(id, p)| (id == c.id).then_some(p));
            verify_identity_with(c.id, orders.get(c.id).copied(), p)
        })
        .collect()
}

/// Whether every non-optional report verified.
pub fn all_required_verified(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.optional || r.verified())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique() {
        let mut ids: Vec<&str> = REGISTRY.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), REGISTRY.len());
        assert_eq!(REGISTRY.len(), 36);
        assert_eq!(REGISTRY.iter().filter(|c| !c.optional).count(), 35);
    }

    #[test]
    fn lookups() {
        assert_eq!(lookup("thm2.1").unwrap().kind, Kind::SeriesVsSeries);
        assert!(matches!(lookup("bogus"), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn infeasible_orders_are_refused() {
        let err = verify_identity("eq1.1-flushed-gf", Some(10_000)).unwrap_err();
        assert!(matches!(err, Error::Infeasible { .. }));
        assert!(verify_identity("thm2.1", Some(0)).is_err());
    }

    #[test]
    fn perturbation_is_reported_at_its_degree() {
        let p = Perturbation {
            degree: 3,
            delta: BigInt::from(1),
        };
        let r = verify_identity_with("thm2.1", Some(20), Some(&p)).unwrap();
        assert_eq!(r.status, Status::Failed);
        assert_eq!(r.first_discrepancy.unwrap().degree, 3);
    }
}
