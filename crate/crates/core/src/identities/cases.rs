use num_bigint::BigInt;
use rayon::prelude::*;

use super::formulas as f;
use super::{Check, IdentityCase, Kind};
use crate::concave;
use crate::error::Result;
use crate::series::{BiSeries, QSubstitution, Series, ZPoly, ZSubstitution};
use crate::stats::{self, StatKey};

// Enumeration limits behind `max_order`.
const ALL_PARTITIONS: usize = 75;
const DISTINCT_PARTS: usize = 150;
const CONCAVE: usize = 60;
const SERIES: usize = 500;
const BIVARIATE: usize = 80;

fn counts(key: StatKey, order: usize) -> Result<Series> {
    Ok(Series::from_coeffs(
        order,
        stats::counts_up_to(key, order, None)?,
    ))
}

fn count_diff(a: StatKey, b: StatKey, order: usize) -> Result<Series> {
    Ok(&counts(a, order)? - &counts(b, order)?)
}

/// Counts split by the statistic's parameter, tracked by the power of `z`.
fn counts_bi(key: StatKey, order: usize) -> Result<BiSeries> {
    let rows = (0..=order)
        .into_par_iter()
        .map(|n| stats::distribution(key, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(BiSeries::from_fn(order, |n| {
        let mut p = ZPoly::zero();
        for (&m, c) in &rows[n] {
            p.add_assign(&ZPoly::monomial(c.clone(), m as usize));
        }
        p
    }))
}

fn ce_counts(order: usize) -> Series {
    let v: Vec<BigInt> = (0..=order).into_par_iter().map(concave::ce).collect();
    Series::from_coeffs(order, v)
}

fn at_one(x: &BiSeries) -> Result<Series> {
    x.substitute_z(ZSubstitution::One)
}

fn at_minus_one(x: &BiSeries) -> Result<Series> {
    x.substitute_z(ZSubstitution::MinusOne)
}

fn negate_q(x: &Series) -> Result<Series> {
    x.substitute(QSubstitution::NegateQ)
}

fn one(order: usize) -> Series {
    Series::one(order)
}

fn flushed(n: usize) -> Result<Vec<Check>> {
    let fc = counts(StatKey::F, n)?;
    Ok(vec![
        Check::new(
            "pentagonal sum / (q)_inf vs F(n)",
            f::flushed_fraction(n)?,
            fc.clone(),
        ),
        Check::new(
            "pentagonal sum vs (q)_inf * F(n)",
            f::pentagonal(n)?,
            f::times_euler(&fc)?,
        ),
        Check::new("product form vs F(n)", f::flushed_product(n)?, fc),
    ])
}

fn concave_even(n: usize) -> Result<Vec<Check>> {
    let ce = ce_counts(n);
    Ok(vec![
        Check::new(
            "(1 - pentagonal sum) / (q)_inf vs ce(n)",
            f::concave_even_fraction(n)?,
            ce.clone(),
        ),
        Check::new(
            "1 - pentagonal sum vs (q)_inf * ce(n)",
            &one(n) - &f::pentagonal(n)?,
            f::times_euler(&ce)?,
        ),
    ])
}

fn squares(n: usize) -> Result<Vec<Check>> {
    Ok(vec![Check::new(
        "square sum vs staircase sum",
        f::square_sum(n)?,
        f::staircase_sum(n)?,
    )])
}

fn squares_bi(n: usize, z_in_pole: bool) -> Result<Vec<Check>> {
    let lhs = f::square_sum_bi(n, z_in_pole)?;
    Ok(vec![
        Check::new("bivariate", lhs.clone(), f::staircase_sum_bi(n, z_in_pole)?),
        Check::new(
            "z = 1 against the univariate staircase sum",
            at_one(&lhs)?,
            f::staircase_sum(n)?,
        ),
    ])
}

fn squares_bi_a(n: usize) -> Result<Vec<Check>> {
    squares_bi(n, false)
}

fn squares_bi_b(n: usize) -> Result<Vec<Check>> {
    squares_bi(n, true)
}

/// Both bivariate sides under `q -> q^2, z -> -q^{-1}`, plus the expanded sum.
fn halved(n: usize, z_in_pole: bool, target: Series) -> Result<Vec<Check>> {
    let lhs = f::halve_z(&f::square_sum_bi(n, z_in_pole)?)?;
    let rhs = f::halve_z(&f::staircase_sum_bi(n, z_in_pole)?)?;
    Ok(vec![
        Check::new("substituted square sum", lhs, target.clone()),
        Check::new("substituted staircase sum", rhs, target.clone()),
        Check::new(
            "expanded substituted sum",
            f::halved_square_sum(n, !z_in_pole)?,
            target,
        ),
    ])
}

fn halved_phi(n: usize) -> Result<Vec<Check>> {
    halved(n, false, &one(n) - &f::mock_phi(n)?)
}

fn halved_psi(n: usize) -> Result<Vec<Check>> {
    halved(n, true, -&f::mock_psi(n)?)
}

/// `(-q)_inf (1 - phi(-q))`.
fn phi_side(n: usize) -> Result<Series> {
    f::times_distinct(&(&one(n) - &negate_q(&f::mock_phi(n)?)?))
}

/// `(-q)_inf (-psi(-q))`.
fn psi_side(n: usize) -> Result<Series> {
    f::times_distinct(&-&negate_q(&f::mock_psi(n)?)?)
}

fn phi_odd(n: usize) -> Result<Vec<Check>> {
    Ok(vec![Check::new(
        "(-q)_inf (1 - phi(-q))",
        phi_side(n)?,
        f::odd_phi_sum(n)?,
    )])
}

fn psi_odd(n: usize) -> Result<Vec<Check>> {
    let lhs = psi_side(n)?;
    Ok(vec![
        Check::new("(-q)_inf (-psi(-q))", lhs.clone(), f::odd_psi_sum(n)?),
        Check::new(
            "(-q)_inf (-psi(-q)), folded pole",
            lhs,
            f::odd_psi_sum_folded(n)?,
        ),
    ])
}

fn phi_distinct(n: usize) -> Result<Vec<Check>> {
    use StatKey::*;
    let c = &(&(&counts(Doe, n)? + &counts(Doo, n)?) + &counts(Dee, n)?) - &counts(Deo, n)?;
    Ok(vec![
        Check::new(
            "(-q)_inf (1 - phi(-q)) vs D_oe + D_oo + D_ee - D_eo",
            phi_side(n)?,
            c.clone(),
        ),
        Check::new("odd-index sum vs the same counts", f::odd_phi_sum(n)?, c),
    ])
}

fn psi_distinct(n: usize) -> Result<Vec<Check>> {
    Ok(vec![Check::new(
        "(-q)_inf (-psi(-q)) vs D_oo",
        psi_side(n)?,
        counts(StatKey::Doo, n)?,
    )])
}

fn smallest_parity(n: usize) -> Result<Vec<Check>> {
    use StatKey::*;
    let phi = negate_q(&f::mock_phi(n)?)?;
    let psi = negate_q(&f::mock_psi(n)?)?;
    let lhs = f::times_distinct(&(&(&phi - &psi.scale(2)) - &one(n)))?;
    let c = &(&(&counts(Doo, n)? + &counts(Deo, n)?) - &counts(Dee, n)?) - &counts(Doe, n)?;
    let sum = f::smallest_part_sum(n)?;
    Ok(vec![
        Check::new(
            "(-q)_inf (phi(-q) - 2 psi(-q) - 1) vs D_oo + D_eo - D_ee - D_oe",
            lhs.clone(),
            c,
        ),
        Check::new("same product vs smallest-part sum", lhs, sum.clone()),
        Check::new("L_o - L_e vs smallest-part sum", counts(LoMinusLe, n)?, sum),
    ])
}

fn frobenius_counts(n: usize) -> Result<Vec<Check>> {
    let a = counts(StatKey::FrobNoZeroTop, n)?;
    let b = counts(StatKey::SmallestMissingOdd, n)?;
    let s = &f::partition_gf(n)? * &f::theta_triangular(n)?;
    Ok(vec![
        Check::new(
            "no 0 on top vs smallest missing part odd",
            a.clone(),
            b.clone(),
        ),
        Check::new("no 0 on top vs theta / (q)_inf", a, s.clone()),
        Check::new("smallest missing part odd vs theta / (q)_inf", b, s),
    ])
}

fn frobenius(n: usize) -> Result<Vec<Check>> {
    let theta = f::theta_triangular(n)?;
    Ok(vec![
        Check::new(
            "fraction form",
            f::frobenius_fraction(n)?,
            &f::partition_gf(n)? * &theta,
        ),
        Check::new("cleared form", f::frobenius_cleared(n)?, theta),
    ])
}

fn frobenius_bi(n: usize) -> Result<Vec<Check>> {
    let lhs = f::frobenius_cleared_bi(n)?;
    let rhs = f::theta_triangular_bi(n)?;
    let c = &counts_bi(StatKey::DeMn, n)? - &counts_bi(StatKey::DoMn, n)?;
    Ok(vec![
        Check::new("bivariate", lhs.clone(), rhs.clone()),
        Check::new("D_e(m,n) - D_o(m,n) vs triangular theta", c, rhs),
        Check::new("z = 1", at_one(&lhs)?, f::theta_triangular(n)?),
    ])
}

fn even_distinct(n: usize) -> Result<Vec<Check>> {
    let qe = counts(StatKey::QE, n)?;
    let q = counts(StatKey::Q, n)?;
    let alt = Series::from_fn(n, |m| {
        let mut acc = BigInt::from(0);
        let mut j = 0;
        while j * j <= m {
            acc += q.coeff(m - j * j) * f::sign(j);
            j += 1;
        }
        acc
    });
    let theta = f::theta_squares(n)?;
    let sub = |x: BiSeries| -> Result<Series> {
        x.substitute_q(QSubstitution::Power(2))?
            .substitute_z(ZSubstitution::Monomial {
                coeff: 1,
                exponent: -1,
            })
    };
    Ok(vec![
        Check::new("Q_E(n) vs alternating sum of Q(n - j^2)", qe.clone(), alt),
        Check::new("even-length sum vs Q_E(n)", f::even_distinct_sum(n)?, qe),
        Check::new(
            "even-length sum vs (-q)_inf theta",
            f::even_distinct_sum(n)?,
            &f::distinct_gf(n)? * &theta,
        ),
        Check::new(
            "substituted Frobenius sum",
            sub(f::frobenius_cleared_bi(n)?)?,
            theta.clone(),
        ),
        Check::new(
            "substituted triangular theta",
            sub(f::theta_triangular_bi(n)?)?,
            theta.clone(),
        ),
        Check::new(
            "expanded substituted sum",
            f::odd_weighted_square_sum(n)?,
            theta,
        ),
    ])
}

fn durfee_shifted(n: usize) -> Result<Vec<Check>> {
    let alt = f::alternating_triangular(n)?;
    Ok(vec![
        Check::new(
            "fraction form",
            f::durfee_shifted_fraction(n)?,
            &f::partition_gf(n)? * &alt,
        ),
        Check::new("cleared form", f::durfee_shifted_cleared(n)?, alt),
    ])
}

fn durfee_shifted_bi(n: usize) -> Result<Vec<Check>> {
    let lhs = f::durfee_shifted_cleared_bi(n)?;
    Ok(vec![
        Check::new("bivariate", lhs.clone(), f::alternating_triangular_bi(n)?),
        Check::new("z = 1", at_one(&lhs)?, f::alternating_triangular(n)?),
    ])
}

fn durfee_square(n: usize) -> Result<Vec<Check>> {
    let lhs = f::durfee_square_bi(n)?;
    let rhs = f::parts_gf_bi(n)?;
    Ok(vec![
        Check::new("bivariate", lhs.clone(), rhs.clone()),
        Check::new("p(m,n) by number of parts", counts_bi(StatKey::P, n)?, rhs),
        Check::new("z = 1", at_one(&lhs)?, f::partition_gf(n)?),
    ])
}

fn fine(n: usize) -> Result<Vec<Check>> {
    let mf = f::mock_f(n)?;
    let sum = f::smallest_part_sum(n)?;
    Ok(vec![
        Check::new(
            "f(q) vs 1 + smallest-part sum / (-q)_inf",
            mf.clone(),
            f::fine_fraction(n)?,
        ),
        Check::new("cleared form", f::fine_cleared(n)?, sum.clone()),
        Check::new(
            "N_e(n) - N_o(n) vs f(q)",
            counts(StatKey::NeMinusNo, n)?,
            mf,
        ),
        Check::new(
            "L_o(n) - L_e(n) vs cleared right side",
            counts(StatKey::LoMinusLe, n)?,
            sum,
        ),
    ])
}

fn ramanujan(n: usize) -> Result<Vec<Check>> {
    let phi = negate_q(&f::mock_phi(n)?)?;
    let psi = negate_q(&f::mock_psi(n)?)?;
    Ok(vec![Check::new(
        "phi(-q) - 2 psi(-q) vs f(q)",
        &phi - &psi.scale(2),
        f::mock_f(n)?,
    )])
}

fn fine_shifted(n: usize) -> Result<Vec<Check>> {
    let rhs = at_one(&f::staircase_gap_sum(n)?)?;
    let lhs = f::fine_shifted_fraction(n)?;
    Ok(vec![
        Check::new("fraction form", lhs.clone(), f::over_distinct(&rhs)?),
        Check::new("cleared form", f::times_distinct(&lhs)?, rhs),
    ])
}

/// Carries the missing `q/(1+q)` term; see the test module.
fn fine_lowered(n: usize) -> Result<Vec<Check>> {
    let rhs = at_one(&f::staircase_gap_sum_shifted(n)?)?;
    let lone = at_one(&f::lone_part_bi(n)?)?;
    let lhs = f::fine_lowered_fraction(n)?;
    Ok(vec![
        Check::new(
            "fraction form",
            lhs.clone(),
            &f::over_distinct(&lone)? + &f::over_distinct(&rhs)?,
        ),
        Check::new("cleared form", f::times_distinct(&lhs)?, &lone + &rhs),
    ])
}

fn fine_bi(n: usize) -> Result<Vec<Check>> {
    let lhs = f::fine_cleared_bi(n)?;
    Ok(vec![
        Check::new("bivariate", lhs.clone(), f::smallest_part_sum_bi(n)?),
        Check::new("z = 1", at_one(&lhs)?, f::smallest_part_sum(n)?),
    ])
}

fn fine_shifted_bi(n: usize) -> Result<Vec<Check>> {
    let lhs = f::fine_shifted_bi(n)?;
    Ok(vec![
        Check::new("bivariate", lhs.clone(), f::staircase_gap_sum(n)?),
        Check::new(
            "z = 1",
            at_one(&lhs)?,
            f::times_distinct(&f::fine_shifted_fraction(n)?)?,
        ),
    ])
}

fn fine_lowered_bi(n: usize) -> Result<Vec<Check>> {
    let lhs = f::fine_lowered_bi(n)?;
    Ok(vec![
        Check::new(
            "bivariate",
            lhs.clone(),
            &f::lone_part_bi(n)? + &f::staircase_gap_sum_shifted(n)?,
        ),
        Check::new(
            "z = 1",
            at_one(&lhs)?,
            f::times_distinct(&f::fine_lowered_fraction(n)?)?,
        ),
    ])
}

fn gaps(n: usize) -> Result<Vec<Check>> {
    use StatKey::*;
    let i = &counts_bi(IeMn, n)? - &counts_bi(IoMn, n)?;
    let s = &counts_bi(SeMn, n)? - &counts_bi(SoMn, n)?;
    Ok(vec![
        Check::new("I_e - I_o vs S_e - S_o", i.clone(), s.clone()),
        Check::new(
            "I_e - I_o vs shifted bivariate sum",
            i,
            f::fine_shifted_bi(n)?,
        ),
        Check::new(
            "S_e - S_o vs staircase-gap double sum",
            s,
            f::staircase_gap_sum(n)?,
        ),
    ])
}

fn pentagonal_staircase(n: usize) -> Result<Vec<Check>> {
    Ok(vec![Check::new(
        "pentagonal sum vs staircase sum",
        f::pentagonal(n)?,
        f::staircase_sum(n)?,
    )])
}

fn pentagonal_distinct(n: usize) -> Result<Vec<Check>> {
    Ok(vec![Check::new(
        "pentagonal sum vs sum q^{n(2n-1)} / (-q)_{2n}",
        f::pentagonal(n)?,
        f::pentagonal_over_distinct(n)?,
    )])
}

fn largest_parity(n: usize) -> Result<Vec<Check>> {
    Ok(vec![Check::new(
        "pentagonal sum vs P_o(D_n) - P_e(D_n)",
        f::pentagonal(n)?,
        count_diff(StatKey::PoD, StatKey::PeD, n)?,
    )])
}

fn largest_parity_staircase(n: usize) -> Result<Vec<Check>> {
    Ok(vec![Check::new(
        "P_o(D_n) - P_e(D_n) vs staircase sum",
        count_diff(StatKey::PoD, StatKey::PeD, n)?,
        f::staircase_sum(n)?,
    )])
}

fn flushed_proper(n: usize) -> Result<Vec<Check>> {
    let fc = counts(StatKey::F, n)?;
    let pr = counts(StatKey::PR, n)?;
    Ok(vec![
        Check::new("F(n) vs PR(n)", fc.clone(), pr.clone()).from_degree(1),
        Check::new("PR(n) vs proper generating function", pr, f::proper_gf(n)?),
        Check::new(
            "F(n) vs pentagonal sum / (q)_inf",
            fc,
            f::flushed_fraction(n)?,
        ),
    ])
}

fn concave_improper(n: usize) -> Result<Vec<Check>> {
    let ce = ce_counts(n);
    let impr = counts(StatKey::IMPR, n)?;
    let summaries = (1..=n)
        .into_par_iter()
        .map(concave::check_phi)
        .collect::<Result<Vec<_>>>()?;
    let images = Series::from_fn(n, |m| {
        if m == 0 {
            BigInt::from(0)
        } else {
            BigInt::from(summaries[m - 1].distinct_images)
        }
    });
    let trips = Series::from_fn(n, |m| {
        if m == 0 {
            BigInt::from(0)
        } else {
            BigInt::from(summaries[m - 1].round_trips)
        }
    });
    Ok(vec![
        Check::new("ce(n) vs IMPR(n)", ce.clone(), impr.clone()).from_degree(1),
        Check::new(
            "ce(n) vs concave generating function",
            ce,
            f::concave_even_fraction(n)?,
        ),
        Check::new("distinct images under phi vs IMPR(n)", images, impr.clone()).from_degree(1),
        Check::new("inverse round trips vs IMPR(n)", trips, impr).from_degree(1),
    ])
}

fn unflushed_parts(n: usize) -> Result<Vec<Check>> {
    use StatKey::*;
    let uf = counts_bi(UF, n)?;
    let x = counts_bi(XCor44, n)?;
    let rest = &counts_bi(P, n)? - &x;
    Ok(vec![
        Check::new("UF(m,n) vs p(m,n) - X(m,n)", uf.clone(), rest),
        Check::new(
            "paired-pole sum vs UF(m,n)",
            f::unflushed_paired_bi(n)?,
            uf.clone(),
        ),
        Check::new(
            "even sum over (zq)_inf vs UF(m,n)",
            f::unflushed_even_bi(n)?,
            uf.clone(),
        ),
        Check::new(
            "alternating sum over (zq)_inf vs UF(m,n)",
            f::unflushed_alternating_bi(n)?,
            uf.clone(),
        ),
        Check::new(
            "Durfee difference vs UF(m,n)",
            f::unflushed_durfee_bi(n)?,
            uf,
        ),
        Check::new(
            "subtracted sum vs X(m,n)",
            f::unflushed_complement_bi(n)?,
            x,
        ),
    ])
}

fn unflushed_parity(n: usize) -> Result<Vec<Check>> {
    use StatKey::*;
    let rest = &counts_bi(P, n)? - &counts_bi(XCor44, n)?;
    Ok(vec![
        Check::new(
            "UF_odd(n) vs UF_even(n)",
            counts(UFOdd, n)?,
            counts(UFEven, n)?,
        )
        .from_degree(1),
        Check::new(
            "UF(m,n) at z = -1",
            at_minus_one(&counts_bi(UF, n)?)?,
            one(n),
        ),
        Check::new("p(m,n) - X(m,n) at z = -1", at_minus_one(&rest)?, one(n)),
        Check::new(
            "Durfee difference at z = -1",
            at_minus_one(&f::unflushed_durfee_bi(n)?)?,
            one(n),
        ),
    ])
}

fn rank_zero(n: usize) -> Result<Vec<Check>> {
    let c = Series::from_coeffs(n, stats::counts_up_to(StatKey::NRank, n, Some(0))?);
    Ok(vec![Check::new(
        "N(0,n) vs signed pentagonal sum / (q)_inf",
        c,
        f::rank_zero_fraction(n)?,
    )
    .from_degree(1)])
}

macro_rules! case {
    ($id:literal, $kind:ident, $stmt:literal, $order:expr, $max:expr, $build:expr) => {
        case!($id, $kind, $stmt, $order, $max, $build, false)
    };
    ($id:literal, $kind:ident, $stmt:literal, $order:expr, $max:expr, $build:expr, $optional:expr) => {
        IdentityCase {
            id: $id,
            kind: Kind::$kind,
            statement: $stmt,
            default_order: $order,
            max_order: $max,
            optional: $optional,
            build: $build,
        }
    };
}

pub static REGISTRY: &[IdentityCase] = &[
    case!("eq1.1-flushed-gf", SeriesVsCount,
        "sum F(n) q^n = sum_{n>=1} q^{n(2n-1)}/((q^2;q^2)_{2n}(q^{2n+1})_inf) = sum_{n>=1} q^{n(3n-1)/2}(1-q^n)/(q)_inf",
        60, ALL_PARTITIONS, flushed),
    case!("eq1.2-ce-gf", SeriesVsCount,
        "sum ce(n) q^n = (1 - sum_{n>=1} q^{n(3n-1)/2}(1-q^n))/(q)_inf",
        60, CONCAVE, concave_even),
    case!("thm2.1", SeriesVsSeries,
        "sum_{n>=1} q^{n^2}(q^{n+1})_inf/((q)_{n-1}(1+q^n)) = sum_{n>=1} (-1)^{n-1} q^{n(n+1)/2}/(-q)_n",
        60, SERIES, squares),
    case!("cor2.2a", SeriesVsSeries,
        "sum_{n>=1} z^n q^{n^2}(zq^{n+1})_inf/((q)_{n-1}(1+q^n)) = sum_{n>=1} (-1)^{n-1} z^n q^{n(n+1)/2}/(-q)_n",
        30, BIVARIATE, squares_bi_a),
    case!("cor2.2b", SeriesVsSeries,
        "sum_{n>=1} z^n q^{n^2}(zq^{n+1})_inf/((q)_{n-1}(1+zq^n)) = sum_{n>=1} (-1)^{n-1} z^n q^{n(n+1)/2}/(-zq)_n",
        30, BIVARIATE, squares_bi_b),
    case!("eq2.4-phi", SeriesVsSeries,
        "sum_{n>=1} (-1)^n q^{2n^2-n}(-q^{2n+1};q^2)_inf/((q^2;q^2)_{n-1}(1+q^{2n})) = 1 - phi(q)",
        30, BIVARIATE, halved_phi),
    case!("eq2.5-psi", SeriesVsSeries,
        "sum_{n>=1} (-1)^n q^{2n^2-n}(-q^{2n+1};q^2)_inf/((q^2;q^2)_{n-1}(1-q^{2n-1})) = -psi(q)",
        30, BIVARIATE, halved_psi),
    case!("eq2.6", SeriesVsSeries,
        "(-q)_inf (1 - phi(-q)) = sum_{n>=1} q^{2n^2-n}/((q)_{2n-1}(1+q^{2n}))",
        60, SERIES, phi_odd),
    case!("eq2.7", SeriesVsSeries,
        "(-q)_inf (-psi(-q)) = sum_{n>=1} q^{2n^2-n}/((q)_{2n-1}(1+q^{2n-1})) = sum_{n>=1} q^{2n^2-n}/((q)_{2n-2}(1-q^{4n-2}))",
        60, SERIES, psi_odd),
    case!("thm2.3a", SeriesVsCount,
        "(-q)_inf (1 - phi(-q)) = sum (D_oe + D_oo + D_ee - D_eo)(n) q^n",
        60, DISTINCT_PARTS, phi_distinct),
    case!("thm2.3b", SeriesVsCount,
        "(-q)_inf (-psi(-q)) = sum D_oo(n) q^n",
        60, DISTINCT_PARTS, psi_distinct),
    case!("cor2.4", SeriesVsCount,
        "(-q)_inf (phi(-q) - 2 psi(-q) - 1) = sum (D_oo + D_eo - D_ee - D_oe)(n) q^n = sum_{n>=1} (-1)^{n-1} q^n (-q^{n+1})_inf",
        60, DISTINCT_PARTS, smallest_parity),
    case!("thm3.1-counts", CountVsCount,
        "#{no 0 in the Frobenius top row} = #{smallest missing part odd} = [q^n] sum (-1)^j q^{j(j+1)/2}/(q)_inf",
        60, ALL_PARTITIONS, frobenius_counts),
    case!("lem3.2", SeriesVsSeries,
        "sum_{n>=0} q^{n^2+n}/(q)_n^2 = sum_{n>=0} (-1)^n q^{n(n+1)/2}/(q)_inf",
        60, SERIES, frobenius),
    case!("thm3.3", SeriesVsCount,
        "sum_{n>=0} z^n q^{n^2+n}(zq^{n+1})_inf/(q)_n = sum_{j>=0} (-1)^j z^j q^{j(j+1)/2} = sum (D_e - D_o)(m,n) z^m q^n",
        30, ALL_PARTITIONS, frobenius_bi),
    case!("thm3.4-QE", CountVsCount,
        "Q_E(n) = sum_j (-1)^j Q(n - j^2); sum_{n>=0} q^{n(2n+1)}/(q)_{2n} = (-q)_inf sum (-1)^j q^{j^2}",
        60, DISTINCT_PARTS, even_distinct),
    case!("cor3.5a", SeriesVsSeries,
        "sum_{n>=1} q^{n^2}/((q)_{n-1}(q)_n) = sum_{n>=1} (-1)^{n-1} q^{n(n+1)/2}/(q)_inf",
        60, SERIES, durfee_shifted),
    case!("cor3.5b", SeriesVsSeries,
        "sum_{n>=1} z^n q^{n^2}(zq^{n+1})_inf/(q)_{n-1} = sum_{n>=1} (-1)^{n-1} z^n q^{n(n+1)/2}",
        30, BIVARIATE, durfee_shifted_bi),
    case!("cor3.6-durfee", SeriesVsCount,
        "sum_{n>=0} z^n q^{n^2}/((zq)_n(q)_n) = 1/(zq)_inf = sum p(m,n) z^m q^n",
        30, ALL_PARTITIONS, durfee_square),
    case!("thm3.7-fine", SeriesVsCount,
        "f(q) = 1 + sum_{n>=1} (-1)^{n-1} q^n (-q^{n+1})_inf/(-q)_inf = sum (N_e - N_o)(n) q^n",
        60, ALL_PARTITIONS, fine),
    case!("cor3.8-ramanujan", SeriesVsSeries,
        "phi(-q) - 2 psi(-q) = f(q)",
        100, SERIES, ramanujan),
    case!("cor3.9a", SeriesVsSeries,
        "sum_{n>=1} q^{n^2+n}/(-q)_n^2 = sum_{k,n>=1} (-1)^{n-1} q^{k(k-1)/2+k+n}(-q^{k+n+1})_inf/(-q)_inf",
        60, BIVARIATE, fine_shifted),
    case!("cor3.9b", SeriesVsSeries,
        "sum_{n>=1} q^{n^2}/((-q)_{n-1}(-q)_n) = q/(1+q) + sum_{k,n>=1} (-1)^{n-1} q^{k(k+1)/2+k+n+1}(-q^{k+n+2})_inf/(-q)_inf",
        60, BIVARIATE, fine_lowered),
    case!("cor3.9s1", SeriesVsSeries,
        "sum_{n>=1} z^n q^{n^2}(-zq^{n+1})_inf/(-q)_n = sum_{k>=1} (-1)^{k-1} z q^k (-zq^{k+1})_inf",
        30, BIVARIATE, fine_bi),
    case!("cor3.9s2", SeriesVsSeries,
        "sum_{n>=1} z^n q^{n^2+n}(-zq^{n+1})_inf/(-q)_n = sum_{k,n>=1} (-1)^{n-1} z^k q^{k(k-1)/2+k+n}(-zq^{n+k+1})_inf",
        30, BIVARIATE, fine_shifted_bi),
    case!("cor3.9s3", SeriesVsSeries,
        "sum_{n>=1} z^n q^{n^2}(-zq^{n+1})_inf/(-q)_{n-1} = zq(-zq^2)_inf + sum_{k,n>=1} (-1)^{n-1} z^{k+1} q^{k(k+1)/2+k+n+1}(-zq^{n+k+2})_inf",
        30, BIVARIATE, fine_lowered_bi),
    case!("thm3.10-counts", CountVsCount,
        "(I_e - I_o)(m,n) = (S_e - S_o)(m,n), both equal to the coefficients of the shifted bivariate sum",
        30, ALL_PARTITIONS, gaps),
    case!("lem4.1a", SeriesVsSeries,
        "sum_{n>=1} q^{n(3n-1)/2}(1-q^n) = sum_{n>=1} (-1)^{n-1} q^{n(n+1)/2}/(-q)_n",
        60, SERIES, pentagonal_staircase),
    case!("lem4.1b", SeriesVsSeries,
        "sum_{n>=1} q^{n(3n-1)/2}(1-q^n) = sum_{n>=1} q^{n(2n-1)}/(-q)_{2n}",
        60, SERIES, pentagonal_distinct),
    case!("eq4.3-fine-franklin", SeriesVsCount,
        "sum_{n>=1} q^{n(3n-1)/2}(1-q^n) = sum (P_o(D_n) - P_e(D_n)) q^n",
        60, DISTINCT_PARTS, largest_parity),
    case!("eq4.4", SeriesVsCount,
        "sum (P_o(D_n) - P_e(D_n)) q^n = sum_{n>=1} (-1)^{n-1} q^{n(n+1)/2}/(-q)_n",
        60, DISTINCT_PARTS, largest_parity_staircase),
    case!("thm4.2-F-eq-PR", CountVsCount,
        "F(n) = PR(n) for n >= 1; sum PR(n) q^n = 1 + sum_{n>=1} q^{n^2}/((q)_{n-1}^2(1-q^{2n}))",
        60, ALL_PARTITIONS, flushed_proper),
    case!("thm4.3-ce-eq-IMPR", CountVsCount,
        "ce(n) = IMPR(n) for n >= 1, through the bijection phi",
        60, CONCAVE, concave_improper),
    case!("cor4.4-unflushed-m-parts", SeriesVsCount,
        "sum UF(m,n) z^m q^n = four equivalent sums = sum (p(m,n) - X(m,n)) z^m q^n",
        30, ALL_PARTITIONS, unflushed_parts),
    case!("thm4.5-parity", CountVsCount,
        "UF_odd(n) = UF_even(n) for n >= 1",
        60, ALL_PARTITIONS, unflushed_parity),
    case!("rank0-atkin", SeriesVsCount,
        "sum_{n>=1} N(0,n) q^n = sum_{n>=1} (-1)^{n-1} q^{n(3n-1)/2}(1-q^n)/(q)_inf",
        60, ALL_PARTITIONS, rank_zero, true),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::verify_identity;

    #[test]
    fn double_sum_needs_the_lone_part_term() {
        // without the q/(1+q) term the two sides already differ at q^1
        let n = 20;
        let lhs = f::fine_lowered_fraction(n).unwrap();
        let bare =
            f::over_distinct(&at_one(&f::staircase_gap_sum_shifted(n).unwrap()).unwrap()).unwrap();
        assert_eq!(lhs.first_difference(&bare), Some(1));
        let lhs = f::fine_lowered_bi(n).unwrap();
        assert_eq!(
            lhs.first_difference(&f::staircase_gap_sum_shifted(n).unwrap()),
            Some(1)
        );
    }

    #[test]
    fn gap_signs_run_the_same_way() {
        // (I_e - I_o) equals (S_e - S_o), not its negative
        let n = 12;
        let i = &counts_bi(StatKey::IeMn, n).unwrap() - &counts_bi(StatKey::IoMn, n).unwrap();
        let s = &counts_bi(StatKey::SeMn, n).unwrap() - &counts_bi(StatKey::SoMn, n).unwrap();
        assert_eq!(i, s);
        assert_ne!(i, -&s);
    }

    #[test]
    fn unflushed_pole_needs_z_squared() {
        // with (q^2;q^2)_{2n+1} in place of (z^2q^2;q^2)_{2n+1} the sum is wrong
        let n = 12;
        let plain: BiSeries = crate::series::sum_terms(n, 0, None, |k| {
            use crate::series::{Poch, Truncated};
            if k * (2 * k + 1) > n {
                return Ok(None);
            }
            Ok(Some(
                BiSeries::monomial(1, 2 * k, k * (2 * k + 1), n)
                    .div_poch(&Poch::q(2, 2, 2 * k + 1))?
                    .div_poch(&Poch::q_inf(2 * k + 2, 1).with_z(1))?,
            ))
        })
        .unwrap();
        assert_ne!(plain, counts_bi(StatKey::UF, n).unwrap());
    }

    #[test]
    fn cheap_cases_verify() {
        for id in ["thm2.1", "lem4.1a", "lem4.1b", "eq2.6", "eq2.7", "cor3.5a"] {
            let r = verify_identity(id, Some(30)).unwrap();
            assert!(r.verified(), "{r}");
        }
    }
}
