//! Series builders shared by the identity registry, the involution harness
//! and the `series` catalog.
//!
//! Functions ending in `_bi` carry a second variable `z`; the rest are
//! univariate. Every sum goes through [`sum_terms`], so runaway builders
//! surface as divergence errors.

use crate::error::Result;
use crate::series::{
    linear_term_cap, sum_terms, BiSeries, Poch, QSubstitution, Series, Truncated, ZSubstitution,
};

pub(crate) fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub(crate) fn tri(n: usize) -> usize {
    n * (n + 1) / 2
}

fn term(c: i64, e: usize, order: usize) -> Option<Series> {
    (e <= order).then(|| Series::monomial(c, e, order))
}

fn bterm(c: i64, zp: usize, e: usize, order: usize) -> Option<BiSeries> {
    (e <= order).then(|| BiSeries::monomial(c, zp, e, order))
}

/// `(a; q)_inf` style helpers with the usual step 1.
fn qinf(start: usize) -> Poch {
    Poch::q_inf(start, 1)
}

fn nqinf(start: usize) -> Poch {
    Poch::neg_q_inf(start, 1)
}

pub fn euler_product(order: usize) -> Result<Series> {
    Series::one(order).mul_poch(&qinf(1))
}

/// `1/(q)_inf`.
pub fn partition_gf(order: usize) -> Result<Series> {
    Series::one(order).div_poch(&qinf(1))
}

/// `(-q)_inf`.
pub fn distinct_gf(order: usize) -> Result<Series> {
    Series::one(order).mul_poch(&nqinf(1))
}

/// `sum_{n>=1} q^{n(3n-1)/2} (1 - q^n)`.
pub fn pentagonal(order: usize) -> Result<Series> {
    signed_pentagonal_with(order, false)
}

/// `sum_{n>=1} (-1)^{n-1} q^{n(3n-1)/2} (1 - q^n)`.
pub fn signed_pentagonal(order: usize) -> Result<Series> {
    signed_pentagonal_with(order, true)
}

fn signed_pentagonal_with(order: usize, alternate: bool) -> Result<Series> {
    sum_terms(order, 1, None, |n| {
        let c = if alternate { sign(n - 1) } else { 1 };
        let Some(t) = term(c, n * (3 * n - 1) / 2, order) else {
            return Ok(None);
        };
        Ok(Some(t.mul_poch(&Poch::q(n, 1, 1))?))
    })
}

/// `sum_{n>=0} (-1)^n q^{n(n+1)/2}`.
pub fn theta_triangular(order: usize) -> Result<Series> {
    sum_terms(order, 0, None, |n| Ok(term(sign(n), tri(n), order)))
}

/// `sum_{n>=1} (-1)^{n-1} q^{n(n+1)/2}`.
pub fn alternating_triangular(order: usize) -> Result<Series> {
    sum_terms(order, 1, None, |n| Ok(term(sign(n - 1), tri(n), order)))
}

/// `sum_{j>=0} (-1)^j q^{j^2}`.
pub fn theta_squares(order: usize) -> Result<Series> {
    sum_terms(order, 0, None, |j| Ok(term(sign(j), j * j, order)))
}

/// `f(q) = sum_{n>=0} q^{n^2} / (-q)_n^2`.
pub fn mock_f(order: usize) -> Result<Series> {
    sum_terms(order, 0, None, |n| {
        let Some(t) = term(1, n * n, order) else {
            return Ok(None);
        };
        let d = Poch::neg_q(1, 1, n);
        Ok(Some(t.div_poch(&d)?.div_poch(&d)?))
    })
}

/// `phi(q) = sum_{n>=0} q^{n^2} / (-q^2; q^2)_n`.
pub fn mock_phi(order: usize) -> Result<Series> {
    sum_terms(order, 0, None, |n| {
        let Some(t) = term(1, n * n, order) else {
            return Ok(None);
        };
        Ok(Some(t.div_poch(&Poch::neg_q(2, 2, n))?))
    })
}

/// `psi(q) = sum_{n>=1} q^{n^2} / (q; q^2)_n`.
pub fn mock_psi(order: usize) -> Result<Series> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = term(1, n * n, order) else {
            return Ok(None);
        };
        Ok(Some(t.div_poch(&Poch::q(1, 2, n))?))
    })
}

/// Flushed partitions: pentagonal sum over `(q)_inf`.
pub fn flushed_fraction(order: usize) -> Result<Series> {
    Ok(&pentagonal(order)? * &partition_gf(order)?)
}

/// `sum_{n>=1} q^{n(2n-1)} / ((q^2;q^2)_{2n} (q^{2n+1})_inf)`.
pub fn flushed_product(order: usize) -> Result<Series> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = term(1, n * (2 * n - 1), order) else {
            return Ok(None);
        };
        Ok(Some(
            t.div_poch(&Poch::q(2, 2, 2 * n))?
                .div_poch(&qinf(2 * n + 1))?,
        ))
    })
}

/// Concave compositions of even length: `(1 - pentagonal sum) / (q)_inf`.
pub fn concave_even_fraction(order: usize) -> Result<Series> {
    let num = &Series::one(order) - &pentagonal(order)?;
    Ok(&num * &partition_gf(order)?)
}

/// `1 + sum_{n>=1} q^{n^2} / ((q)_{n-1}^2 (1 - q^{2n}))`.
pub fn proper_gf(order: usize) -> Result<Series> {
    let tail = sum_terms(order, 1, None, |n| {
        let Some(t) = term(1, n * n, order) else {
            return Ok(None);
        };
        let d = Poch::q(1, 1, n - 1);
        Ok(Some(t.div_poch(&d)?.div_poch(&d)?.div_poch(&Poch::q(
            2 * n,
            1,
            1,
        ))?))
    })?;
    Ok(&Series::one(order) + &tail)
}

/// Rank-zero partitions: signed pentagonal sum over `(q)_inf`.
pub fn rank_zero_fraction(order: usize) -> Result<Series> {
    Ok(&signed_pentagonal(order)? * &partition_gf(order)?)
}

// Involution alpha: squares split into a staircase plus two pieces.

/// `sum_{n>=1} q^{n^2} (q^{n+1})_inf / ((q)_{n-1} (1 + q^n))`.
pub fn square_sum(order: usize) -> Result<Series> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = term(1, n * n, order) else {
            return Ok(None);
        };
        Ok(Some(
            t.mul_poch(&qinf(n + 1))?
                .div_poch(&Poch::q(1, 1, n - 1))?
                .div_poch(&Poch::neg_q(n, 1, 1))?,
        ))
    })
}

/// `sum_{n>=1} (-1)^{n-1} q^{n(n+1)/2} / (-q)_n`.
pub fn staircase_sum(order: usize) -> Result<Series> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = term(sign(n - 1), tri(n), order) else {
            return Ok(None);
        };
        Ok(Some(t.div_poch(&Poch::neg_q(1, 1, n))?))
    })
}

/// `sum_{n>=1} z^n q^{n^2} (z q^{n+1})_inf / ((q)_{n-1} (1 + z^s q^n))`
/// with `s = 1` when `z_in_pole`, else `s = 0`.
pub fn square_sum_bi(order: usize, z_in_pole: bool) -> Result<BiSeries> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = bterm(1, n, n * n, order) else {
            return Ok(None);
        };
        let pole = Poch::neg_q(n, 1, 1).with_z(u32::from(z_in_pole));
        Ok(Some(
            t.mul_poch(&qinf(n + 1).with_z(1))?
                .div_poch(&Poch::q(1, 1, n - 1))?
                .div_poch(&pole)?,
        ))
    })
}

/// `sum_{n>=1} (-1)^{n-1} z^n q^{n(n+1)/2} / (-z^s q)_n`.
pub fn staircase_sum_bi(order: usize, z_in_pole: bool) -> Result<BiSeries> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = bterm(sign(n - 1), n, tri(n), order) else {
            return Ok(None);
        };
        Ok(Some(t.div_poch(
            &Poch::neg_q(1, 1, n).with_z(u32::from(z_in_pole)),
        )?))
    })
}

/// `q -> q^2`, then `z -> -q^{-1}`.
pub fn halve_z(x: &BiSeries) -> Result<Series> {
    x.substitute_q(QSubstitution::Power(2))?
        .substitute_z(ZSubstitution::Monomial {
            coeff: -1,
            exponent: -1,
        })
}

/// `sum_{n>=1} (-1)^n q^{2n^2-n} (-q^{2n+1}; q^2)_inf / ((q^2;q^2)_{n-1} (1 - c q^e))`
/// where the pole is `1 + q^{2n}` for `even_pole` and `1 - q^{2n-1}` otherwise.
pub fn halved_square_sum(order: usize, even_pole: bool) -> Result<Series> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = term(sign(n), 2 * n * n - n, order) else {
            return Ok(None);
        };
        let pole = if even_pole {
            Poch::neg_q(2 * n, 1, 1)
        } else {
            Poch::q(2 * n - 1, 1, 1)
        };
        Ok(Some(
            t.mul_poch(&Poch::neg_q_inf(2 * n + 1, 2))?
                .div_poch(&Poch::q(2, 2, n - 1))?
                .div_poch(&pole)?,
        ))
    })
}

/// `sum_{n>=1} q^{n(2n-1)} / (-q)_{2n}`.
pub fn pentagonal_over_distinct(order: usize) -> Result<Series> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = term(1, n * (2 * n - 1), order) else {
            return Ok(None);
        };
        Ok(Some(t.div_poch(&Poch::neg_q(1, 1, 2 * n))?))
    })
}

/// `sum_{n>=1} q^{2n^2-n} / ((q)_{2n-1} (1 + q^{2n}))`.
pub fn odd_phi_sum(order: usize) -> Result<Series> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = term(1, 2 * n * n - n, order) else {
            return Ok(None);
        };
        Ok(Some(
            t.div_poch(&Poch::q(1, 1, 2 * n - 1))?
                .div_poch(&Poch::neg_q(2 * n, 1, 1))?,
        ))
    })
}

/// `sum_{n>=1} q^{2n^2-n} / ((q)_{2n-1} (1 + q^{2n-1}))`.
pub fn odd_psi_sum(order: usize) -> Result<Series> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = term(1, 2 * n * n - n, order) else {
            return Ok(None);
        };
        Ok(Some(
            t.div_poch(&Poch::q(1, 1, 2 * n - 1))?
                .div_poch(&Poch::neg_q(2 * n - 1, 1, 1))?,
        ))
    })
}

/// `sum_{n>=1} q^{2n^2-n} / ((q)_{2n-2} (1 - q^{4n-2}))`.
pub fn odd_psi_sum_folded(order: usize) -> Result<Series> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = term(1, 2 * n * n - n, order) else {
            return Ok(None);
        };
        Ok(Some(
            t.div_poch(&Poch::q(1, 1, 2 * n - 2))?
                .div_poch(&Poch::q(4 * n - 2, 1, 1))?,
        ))
    })
}

/// `sum_{n>=1} (-1)^{n-1} q^n (-q^{n+1})_inf`.
pub fn smallest_part_sum(order: usize) -> Result<Series> {
    sum_terms(order, 1, Some(linear_term_cap(order)), |n| {
        let Some(t) = term(sign(n - 1), n, order) else {
            return Ok(None);
        };
        Ok(Some(t.mul_poch(&nqinf(n + 1))?))
    })
}

// Involution alpha': Frobenius symbols.

/// `sum_{n>=0} q^{n^2+n} / (q)_n^2`.
pub fn frobenius_fraction(order: usize) -> Result<Series> {
    sum_terms(order, 0, None, |n| {
        let Some(t) = term(1, n * n + n, order) else {
            return Ok(None);
        };
        let d = Poch::q(1, 1, n);
        Ok(Some(t.div_poch(&d)?.div_poch(&d)?))
    })
}

/// `sum_{n>=0} z^n q^{n^2+n} (z q^{n+1})_inf / (q)_n`; `z -> 1` gives the
/// cleared form of [`frobenius_fraction`].
pub fn frobenius_cleared_bi(order: usize) -> Result<BiSeries> {
    sum_terms(order, 0, None, |n| {
        let Some(t) = bterm(1, n, n * n + n, order) else {
            return Ok(None);
        };
        Ok(Some(
            t.mul_poch(&qinf(n + 1).with_z(1))?
                .div_poch(&Poch::q(1, 1, n))?,
        ))
    })
}

pub fn frobenius_cleared(order: usize) -> Result<Series> {
    sum_terms(order, 0, None, |n| {
        let Some(t) = term(1, n * n + n, order) else {
            return Ok(None);
        };
        Ok(Some(t.mul_poch(&qinf(n + 1))?.div_poch(&Poch::q(1, 1, n))?))
    })
}

/// `sum_{j>=0} (-1)^j z^j q^{j(j+1)/2}`.
pub fn theta_triangular_bi(order: usize) -> Result<BiSeries> {
    sum_terms(order, 0, None, |j| Ok(bterm(sign(j), j, tri(j), order)))
}

/// `sum_{n>=1} (-1)^{n-1} z^n q^{n(n+1)/2}`.
pub fn alternating_triangular_bi(order: usize) -> Result<BiSeries> {
    sum_terms(order, 1, None, |n| Ok(bterm(sign(n - 1), n, tri(n), order)))
}

/// `sum_{n>=0} q^{n(2n+1)} / (q)_{2n}`.
pub fn even_distinct_sum(order: usize) -> Result<Series> {
    sum_terms(order, 0, None, |n| {
        let Some(t) = term(1, n * (2 * n + 1), order) else {
            return Ok(None);
        };
        Ok(Some(t.div_poch(&Poch::q(1, 1, 2 * n))?))
    })
}

/// `(q; q^2)_inf sum_{n>=0} q^{2n^2+n} / (q)_{2n}`.
pub fn odd_weighted_square_sum(order: usize) -> Result<Series> {
    let s = sum_terms(order, 0, None, |n| {
        let Some(t) = term(1, 2 * n * n + n, order) else {
            return Ok(None);
        };
        Ok(Some(t.div_poch(&Poch::q(1, 1, 2 * n))?))
    })?;
    s.mul_poch(&Poch::q_inf(1, 2))
}

/// `sum_{n>=1} q^{n^2} / ((q)_{n-1} (q)_n)`.
pub fn durfee_shifted_fraction(order: usize) -> Result<Series> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = term(1, n * n, order) else {
            return Ok(None);
        };
        Ok(Some(
            t.div_poch(&Poch::q(1, 1, n - 1))?
                .div_poch(&Poch::q(1, 1, n))?,
        ))
    })
}

/// `sum_{n>=1} z^n q^{n^2} (z q^{n+1})_inf / (q)_{n-1}`.
pub fn durfee_shifted_cleared_bi(order: usize) -> Result<BiSeries> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = bterm(1, n, n * n, order) else {
            return Ok(None);
        };
        Ok(Some(
            t.mul_poch(&qinf(n + 1).with_z(1))?
                .div_poch(&Poch::q(1, 1, n - 1))?,
        ))
    })
}

pub fn durfee_shifted_cleared(order: usize) -> Result<Series> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = term(1, n * n, order) else {
            return Ok(None);
        };
        Ok(Some(t.mul_poch(&qinf(n + 1))?.div_poch(&Poch::q(
            1,
            1,
            n - 1,
        ))?))
    })
}

/// `sum_{n>=0} z^n q^{n^2} / ((zq)_n (q)_n)`.
pub fn durfee_square_bi(order: usize) -> Result<BiSeries> {
    sum_terms(order, 0, None, |n| {
        let Some(t) = bterm(1, n, n * n, order) else {
            return Ok(None);
        };
        Ok(Some(
            t.div_poch(&Poch::q(1, 1, n).with_z(1))?
                .div_poch(&Poch::q(1, 1, n))?,
        ))
    })
}

/// `1/(zq)_inf`.
pub fn parts_gf_bi(order: usize) -> Result<BiSeries> {
    BiSeries::one(order).div_poch(&qinf(1).with_z(1))
}

// Involution alpha'': the mock theta function f.

/// `sum_{n>=1} q^{n^2} (-q^{n+1})_inf / (-q)_n`.
pub fn fine_cleared(order: usize) -> Result<Series> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = term(1, n * n, order) else {
            return Ok(None);
        };
        Ok(Some(
            t.mul_poch(&nqinf(n + 1))?.div_poch(&Poch::neg_q(1, 1, n))?,
        ))
    })
}

/// `1 + sum_{n>=1} (-1)^{n-1} q^n / (-q)_n`, i.e. the smallest-part sum over `(-q)_inf`.
pub fn fine_fraction(order: usize) -> Result<Series> {
    let inv = Series::one(order).div_poch(&nqinf(1))?;
    Ok(&Series::one(order) + &(&smallest_part_sum(order)? * &inv))
}

/// `sum_{n>=1} z^n q^{n^2 + s n} (-z q^{n+1})_inf / (-q)_{n-t}` for the
/// shapes `(s, t)` used below.
fn fine_family_bi(order: usize, extra: usize, drop: usize) -> Result<BiSeries> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = bterm(1, n, n * n + extra * n, order) else {
            return Ok(None);
        };
        Ok(Some(
            t.mul_poch(&nqinf(n + 1).with_z(1))?
                .div_poch(&Poch::neg_q(1, 1, n - drop))?,
        ))
    })
}

/// `sum_{n>=1} z^n q^{n^2} (-z q^{n+1})_inf / (-q)_n`.
pub fn fine_cleared_bi(order: usize) -> Result<BiSeries> {
    fine_family_bi(order, 0, 0)
}

/// `sum_{n>=1} z^n q^{n^2+n} (-z q^{n+1})_inf / (-q)_n`.
pub fn fine_shifted_bi(order: usize) -> Result<BiSeries> {
    fine_family_bi(order, 1, 0)
}

/// `sum_{n>=1} z^n q^{n^2} (-z q^{n+1})_inf / (-q)_{n-1}`.
pub fn fine_lowered_bi(order: usize) -> Result<BiSeries> {
    fine_family_bi(order, 0, 1)
}

/// `sum_{k>=1} (-1)^{k-1} z q^k (-z q^{k+1})_inf`.
pub fn smallest_part_sum_bi(order: usize) -> Result<BiSeries> {
    sum_terms(order, 1, Some(linear_term_cap(order)), |k| {
        let Some(t) = bterm(sign(k - 1), 1, k, order) else {
            return Ok(None);
        };
        Ok(Some(t.mul_poch(&nqinf(k + 1).with_z(1))?))
    })
}

/// Double sum `sum_{k,n>=1} (-1)^{n-1} z^{k+a} q^{k(k-1)/2 + k + n + b(k+1)} (-z q^{n+k+1+b})_inf`
/// for `b` in `{0, 1}` and `a = b`.
fn staircase_gap_sum_bi(order: usize, shifted: bool) -> Result<BiSeries> {
    let b = usize::from(shifted);
    sum_terms(order, 1, None, |k| {
        let low = k * (k - 1) / 2 + k + 1 + b * (k + 1);
        if low > order {
            return Ok(None);
        }
        let inner: BiSeries = sum_terms(order, 1, Some(linear_term_cap(order)), |n| {
            let Some(t) = bterm(sign(n - 1), k + b, low - 1 + n, order) else {
                return Ok(None);
            };
            Ok(Some(t.mul_poch(&nqinf(n + k + 1 + b).with_z(1))?))
        })?;
        Ok(Some(inner))
    })
}

/// `sum_{k,n>=1} (-1)^{n-1} z^k q^{k(k-1)/2 + k + n} (-z q^{n+k+1})_inf`.
pub fn staircase_gap_sum(order: usize) -> Result<BiSeries> {
    staircase_gap_sum_bi(order, false)
}

/// `sum_{k,n>=1} (-1)^{n-1} z^{k+1} q^{k(k+1)/2 + k + n + 1} (-z q^{n+k+2})_inf`.
pub fn staircase_gap_sum_shifted(order: usize) -> Result<BiSeries> {
    staircase_gap_sum_bi(order, true)
}

/// `z q (-z q^2)_inf`.
pub fn lone_part_bi(order: usize) -> Result<BiSeries> {
    BiSeries::monomial(1, 1, 1, order).mul_poch(&nqinf(2).with_z(1))
}

/// `sum_{n>=1} q^{n^2+n} / (-q)_n^2`.
pub fn fine_shifted_fraction(order: usize) -> Result<Series> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = term(1, n * n + n, order) else {
            return Ok(None);
        };
        let d = Poch::neg_q(1, 1, n);
        Ok(Some(t.div_poch(&d)?.div_poch(&d)?))
    })
}

/// `sum_{n>=1} q^{n^2} / ((-q)_{n-1} (-q)_n)`.
pub fn fine_lowered_fraction(order: usize) -> Result<Series> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = term(1, n * n, order) else {
            return Ok(None);
        };
        Ok(Some(
            t.div_poch(&Poch::neg_q(1, 1, n - 1))?
                .div_poch(&Poch::neg_q(1, 1, n))?,
        ))
    })
}

/// Divides by `(-q)_inf`.
pub fn over_distinct(x: &Series) -> Result<Series> {
    x.clone().div_poch(&nqinf(1))
}

/// Multiplies by `(-q)_inf`.
pub fn times_distinct(x: &Series) -> Result<Series> {
    x.clone().mul_poch(&nqinf(1))
}

/// Multiplies by `(q)_inf`.
pub fn times_euler(x: &Series) -> Result<Series> {
    x.clone().mul_poch(&qinf(1))
}

/// Divides by `(q)_inf`.
pub fn over_euler(x: &Series) -> Result<Series> {
    x.clone().div_poch(&qinf(1))
}

// Unflushed partitions counted by number of parts.

/// `sum_{n>=0} z^{2n} q^{n(2n+1)} / ((z^2 q^2; q^2)_{2n+1} (z q^{2n+2})_inf)`.
pub fn unflushed_paired_bi(order: usize) -> Result<BiSeries> {
    sum_terms(order, 0, None, |n| {
        let Some(t) = bterm(1, 2 * n, n * (2 * n + 1), order) else {
            return Ok(None);
        };
        Ok(Some(
            t.div_poch(&Poch::q(2, 2, 2 * n + 1).with_z(2))?
                .div_poch(&qinf(2 * n + 2).with_z(1))?,
        ))
    })
}

/// `(1/(zq)_inf) sum_{n>=0} z^{2n} q^{n(2n+1)} / (-zq)_{2n+1}`.
pub fn unflushed_even_bi(order: usize) -> Result<BiSeries> {
    let s: BiSeries = sum_terms(order, 0, None, |n| {
        let Some(t) = bterm(1, 2 * n, n * (2 * n + 1), order) else {
            return Ok(None);
        };
        Ok(Some(t.div_poch(&Poch::neg_q(1, 1, 2 * n + 1).with_z(1))?))
    })?;
    s.div_poch(&qinf(1).with_z(1))
}

/// `(1/(zq)_inf) sum_{n>=0} (-1)^n z^n q^{n(n+1)/2} / (-zq)_n`.
pub fn unflushed_alternating_bi(order: usize) -> Result<BiSeries> {
    let s: BiSeries = sum_terms(order, 0, None, |n| {
        let Some(t) = bterm(sign(n), n, tri(n), order) else {
            return Ok(None);
        };
        Ok(Some(t.div_poch(&Poch::neg_q(1, 1, n).with_z(1))?))
    })?;
    s.div_poch(&qinf(1).with_z(1))
}

/// `sum_{n>=1} z^n q^{n^2} / ((q)_{n-1} (zq)_{n-1} (1 - z^2 q^{2n}))`: the
/// partitions that are subtracted from all partitions to leave the unflushed ones.
pub fn unflushed_complement_bi(order: usize) -> Result<BiSeries> {
    sum_terms(order, 1, None, |n| {
        let Some(t) = bterm(1, n, n * n, order) else {
            return Ok(None);
        };
        Ok(Some(
            t.div_poch(&Poch::q(1, 1, n - 1))?
                .div_poch(&Poch::q(1, 1, n - 1).with_z(1))?
                .div_poch(&Poch::q(2 * n, 1, 1).with_z(2))?,
        ))
    })
}

/// [`durfee_square_bi`] minus [`unflushed_complement_bi`].
pub fn unflushed_durfee_bi(order: usize) -> Result<BiSeries> {
    Ok(&durfee_square_bi(order)? - &unflushed_complement_bi(order)?)
}

/// Named univariate series for the command line.
pub const NAMED_SERIES: &[(&str, &str)] = &[
    ("euler", "(q;q)_inf"),
    ("partitions", "1/(q;q)_inf"),
    ("distinct", "(-q;q)_inf"),
    ("pentagonal", "sum_{n>=1} q^{n(3n-1)/2} (1 - q^n)"),
    ("theta-triangular", "sum_{n>=0} (-1)^n q^{n(n+1)/2}"),
    ("theta-squares", "sum_{n>=0} (-1)^n q^{n^2}"),
    ("mock-f", "sum_{n>=0} q^{n^2} / (-q;q)_n^2"),
    ("mock-phi", "sum_{n>=0} q^{n^2} / (-q^2;q^2)_n"),
    ("mock-psi", "sum_{n>=1} q^{n^2} / (q;q^2)_n"),
    ("flushed", "sum_{n>=1} q^{n(3n-1)/2} (1 - q^n) / (q;q)_inf"),
    (
        "concave-even",
        "(1 - sum_{n>=1} q^{n(3n-1)/2} (1 - q^n)) / (q;q)_inf",
    ),
    (
        "proper",
        "1 + sum_{n>=1} q^{n^2} / ((q;q)_{n-1}^2 (1 - q^{2n}))",
    ),
    (
        "rank-zero",
        "sum_{n>=1} (-1)^{n-1} q^{n(3n-1)/2} (1 - q^n) / (q;q)_inf",
    ),
];

pub fn named_series(id: &str, order: usize) -> Result<Series> {
    match id {
        "euler" => euler_product(order),
        "partitions" => partition_gf(order),
        "distinct" => distinct_gf(order),
        "pentagonal" => pentagonal(order),
        "theta-triangular" => theta_triangular(order),
        "theta-squares" => theta_squares(order),
        "mock-f" => mock_f(order),
        "mock-phi" => mock_phi(order),
        "mock-psi" => mock_psi(order),
        "flushed" => flushed_fraction(order),
        "concave-even" => concave_even_fraction(order),
        "proper" => proper_gf(order),
        "rank-zero" => rank_zero_fraction(order),
        _ => Err(crate::Error::UnknownSeries(id.to_string())),
    }
}
