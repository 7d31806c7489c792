//! The mock theta functions `W1`..`W4`, the classical functions `omega`,
//! `S1` and `T1`, and the two closed forms of each `Wi`: a theta-product
//! prefactor times a Hecke-type double sum, and Appell-Lerch sums plus a
//! theta quotient.
//!
//! `omega(q) = sum_{n>=0} q^{2n(n+1)} / (q; q^2)_{n+1}^2` is the standard
//! third-order function.

pub mod catalog;

use num_rational::{BigRational, Rational64};

use crate::error::{Error, Result};
use crate::exponent::{Exponent, Lattice};
use crate::hecke::{f_eval, m_eval, theta_np, AppellLerch, HeckeParams};
use crate::par::Execution;
use crate::qprod::{poch_finite_to, product_to, quotient_to, Factor, Monomial};
use crate::series::LaurentSeries;
use crate::summation::{averaged_partial_sums, sum_with_cutoff, ValBound};

pub use catalog::{check, expand, run_all, CheckEntry, SeriesEntry, CHECKS, SERIES};

fn e(n: i64) -> Exponent {
    Exponent::int(n)
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn int(c: i64) -> BigRational {
    BigRational::from_integer(c.into())
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn poch(lat: Lattice, a: Monomial, base: i64, n: u64, prec: Exponent) -> Result<LaurentSeries> {
    poch_finite_to(lat, a, e(base), n, prec)
}

/// `1 / (a; q^base)_k` for `k = 0..=n_max`, through `q^prec`. Requires
/// `exp(a) > 0`.
fn inverse_pochs(
    lat: Lattice,
    a: Monomial,
    base: i64,
    n_max: u64,
    prec: Exponent,
    exec: Execution,
) -> Result<Vec<LaurentSeries>> {
    exec.map_range(0, n_max as i64 + 1, |k| {
        LaurentSeries::one(lat).div_to(&poch(lat, a, base, k as u64, prec)?, prec)
    })
    .into_iter()
    .collect()
}

/// Shape of the double sums `sum_{n>=j>=j0} P_n c_j d_{n-j}`.
struct DoubleSum<'a> {
    j0: u64,
    /// `c_j`, which vanishes through `q^prec` beyond the table.
    inner: &'a [LaurentSeries],
    /// `d_k = 1 / (q^s; q^s)_k`.
    tail: &'a [LaurentSeries],
}

impl DoubleSum<'_> {
    fn inner_sum(&self, lat: Lattice, n: u64, prec: Exponent) -> Result<LaurentSeries> {
        let mut acc = LaurentSeries::zero(lat).truncate(prec);
        let top = (n as usize).min(self.inner.len().saturating_sub(1));
        for j in self.j0 as usize..=top {
            if j >= self.inner.len() {
                break;
            }
            let t = self.inner[j].checked_mul(&self.tail[n as usize - j])?.truncate(prec);
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }
}

/// `c_j` tables for the inner sums; `j` stops once `C(j+1,2)*step > prec`.
/// `kind` 0: `(-1; q^s)_j (q^s; q^2s)_{j-1} (-1)^j q^{s C(j+1,2)} / (q^s; q^s)_{2j-1}`;
/// `kind` 1: `(-q; q)_j (q; q^2)_j (-1)^j q^{C(j+1,2)} / (q)_{2j+1}`.
fn inner_coefficients(lat: Lattice, kind: u8, s: i64, prec: Exponent, exec: Execution) -> Result<Vec<LaurentSeries>> {
    let mut j_max = 0i64;
    while e(s * binom2(j_max + 2)) <= prec {
        j_max += 1;
    }
    let q = Monomial::q(1);
    exec.map_range(0, j_max + 1, |j| {
        let ju = j as u64;
        let mono = e(s * binom2(j + 1));
        let inner = prec - mono;
        let (num, den) = match kind {
            0 => {
                if j == 0 {
                    return Ok(LaurentSeries::zero(lat));
                }
                let num = poch(lat, Monomial::MINUS_ONE, s, ju, inner)?
                    .checked_mul(&poch(lat, Monomial::q(s), 2 * s, ju - 1, inner)?)?;
                (num, poch(lat, Monomial::q(s), s, 2 * ju - 1, inner)?)
            }
            _ => {
                let num = poch(lat, Monomial::neg_q(1), 1, ju, inner)?.checked_mul(&poch(lat, q, 2, ju, inner)?)?;
                (num, poch(lat, q, 1, 2 * ju + 1, inner)?)
            }
        };
        let t = num.truncate(inner).div_to(&den, inner)?.shift(mono)?;
        Ok(if j % 2 == 1 { -t } else { t })
    })
    .into_iter()
    .collect()
}

/// `W1 = sum_{n>=j>=1} (-1)_j (q;q^2)_{j-1} (-1)^j q^{n^2+C(j+1,2)} / ((-q)_n (q)_{n-j} (q)_{2j-1})`.
pub fn w1(lat: Lattice, prec: Exponent, exec: Execution) -> Result<LaurentSeries> {
    let bound = ValBound::new(r(1, 1), r(0, 1), r(1, 1));
    let n_max = bound.cutoff(prec).unwrap_or(0);
    let c = inner_coefficients(lat, 0, 1, prec, exec)?;
    let d = inverse_pochs(lat, Monomial::q(1), 1, n_max, prec, exec)?;
    let ds = DoubleSum { j0: 1, inner: &c, tail: &d };
    sum_with_cutoff(lat, &bound, prec, exec, |n| {
        let mono = e((n * n) as i64);
        let inner = prec - mono;
        let t = ds.inner_sum(lat, n, inner)?.div_to(&poch(lat, Monomial::neg_q(1), 1, n, inner)?, inner)?;
        t.shift(mono)
    })
}

/// `W2 = sum_{n>=j>=1} (q;q^2)_n (-1)_j (q;q^2)_{j-1} (-1)^{n+j} q^{C(j+1,2)} / ((-q)_n (q)_{n-j} (q)_{2j-1})`.
///
/// The outer sum does not converge; its even and odd partial sums do, and
/// the value is their average.
pub fn w2(lat: Lattice, prec: Exponent, exec: Execution) -> Result<LaurentSeries> {
    let cap = 4 * prec.ceil().max(0) as u64 + 64;
    let c = inner_coefficients(lat, 0, 1, prec, exec)?;
    let d = inverse_pochs(lat, Monomial::q(1), 1, cap, prec, exec)?;
    let ds = DoubleSum { j0: 1, inner: &c, tail: &d };
    averaged_partial_sums(lat, prec, cap, exec, |n| {
        let num = ds.inner_sum(lat, n, prec)?.checked_mul(&poch(lat, Monomial::q(1), 2, n, prec)?)?;
        let t = num.truncate(prec).div_to(&poch(lat, Monomial::neg_q(1), 1, n, prec)?, prec)?;
        Ok(if n % 2 == 1 { -t } else { t })
    })
}

/// `W3 = sum_{n>=j>=1} (q;q^2)_n (-1;q^2)_j (q^2;q^4)_{j-1} (-1)^{n+j} q^{n^2+j^2+j}
/// / ((-q^2;q^2)_n (q^2;q^2)_{n-j} (q^2;q^2)_{2j-1})`.
pub fn w3(lat: Lattice, prec: Exponent, exec: Execution) -> Result<LaurentSeries> {
    let bound = ValBound::new(r(1, 1), r(0, 1), r(2, 1));
    let n_max = bound.cutoff(prec).unwrap_or(0);
    let c = inner_coefficients(lat, 0, 2, prec, exec)?;
    let d = inverse_pochs(lat, Monomial::q(2), 2, n_max, prec, exec)?;
    let ds = DoubleSum { j0: 1, inner: &c, tail: &d };
    sum_with_cutoff(lat, &bound, prec, exec, |n| {
        let mono = e((n * n) as i64);
        let inner = prec - mono;
        let num = ds.inner_sum(lat, n, inner)?.checked_mul(&poch(lat, Monomial::q(1), 2, n, inner)?)?;
        let t = num.truncate(inner).div_to(&poch(lat, Monomial::neg_q(2), 2, n, inner)?, inner)?;
        let t = t.shift(mono)?;
        Ok(if n % 2 == 1 { -t } else { t })
    })
}

/// `W4 = sum_{n>=j>=0} (-q)_j (q;q^2)_j (-1)^j q^{n^2+n+C(j+1,2)} / ((-q)_n (q)_{n-j} (q)_{2j+1})`.
pub fn w4(lat: Lattice, prec: Exponent, exec: Execution) -> Result<LaurentSeries> {
    let bound = ValBound::new(r(1, 1), r(1, 1), r(0, 1));
    let n_max = bound.cutoff(prec).unwrap_or(0);
    let c = inner_coefficients(lat, 1, 1, prec, exec)?;
    let d = inverse_pochs(lat, Monomial::q(1), 1, n_max, prec, exec)?;
    let ds = DoubleSum { j0: 0, inner: &c, tail: &d };
    sum_with_cutoff(lat, &bound, prec, exec, |n| {
        let mono = e((n * n + n) as i64);
        let inner = prec - mono;
        let t = ds.inner_sum(lat, n, inner)?.div_to(&poch(lat, Monomial::neg_q(1), 1, n, inner)?, inner)?;
        t.shift(mono)
    })
}

/// `Wi` for `i` in `1..=4`.
pub fn w(i: u8, lat: Lattice, prec: Exponent, exec: Execution) -> Result<LaurentSeries> {
    match i {
        1 => w1(lat, prec, exec),
        2 => w2(lat, prec, exec),
        3 => w3(lat, prec, exec),
        4 => w4(lat, prec, exec),
        _ => Err(Error::UnknownName(format!("W{i}"))),
    }
}

/// `sum_n mono(n) * num(n) / den(n)` with a quadratic cutoff `bound`.
fn single_sum<F>(lat: Lattice, bound: ValBound, prec: Exponent, exec: Execution, term: F) -> Result<LaurentSeries>
where
    F: Fn(u64, Exponent) -> Result<(i64, LaurentSeries, LaurentSeries)> + Sync + Send,
{
    sum_with_cutoff(lat, &bound, prec, exec, |n| {
        let v = bound.eval(n).floor().to_integer();
        let inner = prec - e(v);
        let (mono, num, den) = term(n, inner)?;
        num.truncate(inner).div_to(&den, inner)?.shift(e(mono))
    })
}

/// `omega(q) = sum_{n>=0} q^{2n(n+1)} / (q;q^2)_{n+1}^2`.
pub fn omega(lat: Lattice, prec: Exponent, exec: Execution) -> Result<LaurentSeries> {
    let q = Monomial::q(1);
    single_sum(lat, ValBound::new(r(2, 1), r(2, 1), r(0, 1)), prec, exec, |n, p| {
        let d = poch(lat, q, 2, n + 1, p)?;
        Ok(((2 * n * (n + 1)) as i64, LaurentSeries::one(lat), d.checked_mul(&d)?.truncate(p)))
    })
}

/// `S1(q) = sum_{n>=0} q^{n(n+2)} (-q;q^2)_n / (-q^2;q^2)_n`.
pub fn s1(lat: Lattice, prec: Exponent, exec: Execution) -> Result<LaurentSeries> {
    single_sum(lat, ValBound::new(r(1, 1), r(2, 1), r(0, 1)), prec, exec, |n, p| {
        Ok((
            (n * (n + 2)) as i64,
            poch(lat, Monomial::neg_q(1), 2, n, p)?,
            poch(lat, Monomial::neg_q(2), 2, n, p)?,
        ))
    })
}

/// `T1(q) = sum_{n>=0} q^{n(n+1)} (-q^2;q^2)_n / (-q;q^2)_{n+1}`.
pub fn t1(lat: Lattice, prec: Exponent, exec: Execution) -> Result<LaurentSeries> {
    single_sum(lat, ValBound::new(r(1, 1), r(1, 1), r(0, 1)), prec, exec, |n, p| {
        Ok((
            (n * (n + 1)) as i64,
            poch(lat, Monomial::neg_q(2), 2, n, p)?,
            poch(lat, Monomial::neg_q(1), 2, n + 1, p)?,
        ))
    })
}

/// `sum_{n>=1} q^{n^2} (-1)^n (q;q^2)_{n-1} / (q)_{2n-1}`.
pub fn mixed_mock_sum(lat: Lattice, prec: Exponent, exec: Execution) -> Result<LaurentSeries> {
    let q = Monomial::q(1);
    single_sum(lat, ValBound::new(r(1, 1), r(0, 1), r(0, 1)), prec, exec, |n, p| {
        if n == 0 {
            return Ok((0, LaurentSeries::zero(lat), LaurentSeries::one(lat)));
        }
        let num = poch(lat, q, 2, n - 1, p)?;
        let num = if n % 2 == 1 { -num } else { num };
        Ok(((n * n) as i64, num, poch(lat, q, 1, 2 * n - 1, p)?))
    })
}

/// `coeff * mono * Π num / Π den * inner`, through `q^prec`.
pub(crate) fn scaled_quotient<F>(
    lat: Lattice,
    coeff: i64,
    mono: Monomial,
    num: &[(Factor, u32)],
    den: &[(Factor, u32)],
    inner: F,
    prec: Exponent,
) -> Result<LaurentSeries>
where
    F: FnOnce(Exponent) -> Result<LaurentSeries>,
{
    let vnum = num.iter().try_fold(Exponent::ZERO, |acc, (f, k)| -> Result<Exponent> {
        let v = f.valuation()?.ok_or_else(|| Error::InvalidParams(format!("{f} vanishes")))?;
        Ok(acc + v * i64::from(*k))
    })?;
    let q = quotient_to(
        lat,
        |p| {
            let s = inner(p - vnum)?;
            let Some(vs) = s.valuation() else {
                return Ok(LaurentSeries::zero(lat).truncate(p));
            };
            Ok(s.checked_mul(&product_to(lat, num, p - vs)?)?.truncate(p))
        },
        den,
        prec - mono.exp(),
    )?;
    Ok(mono.apply(&q)?.scale(&int(coeff)))
}

/// The Hecke-type double sum behind `Wi`: parameters, `x = y`, and base.
pub fn hecke_instance(i: u8) -> Result<(HeckeParams, Monomial, i64)> {
    Ok(match i {
        1 => (HeckeParams::new(3, 5, 3)?, Monomial::q(5), 1),
        2 => (HeckeParams::new(1, 3, 1)?, Monomial::neg_q(2), 1),
        3 => (HeckeParams::new(1, 2, 1)?, Monomial::neg_q(7), 4),
        4 => (HeckeParams::new(3, 5, 3)?, Monomial::q(3), 1),
        _ => return Err(Error::UnknownName(format!("fform_{i}"))),
    })
}

/// `Wi` as a product prefactor times `f_{a,b,c}(x, x, q^base)`.
pub fn fform(i: u8, lat: Lattice, prec: Exponent) -> Result<LaurentSeries> {
    let (p, x, base) = hecke_instance(i)?;
    let q = Monomial::q(1);
    let pq1 = [(Factor::poch(q, 1), 1)];
    let odd_over_even = ([(Factor::poch(q, 2), 1)], [(Factor::poch(Monomial::q(2), 2), 1)]);
    let f = |pp| f_eval(lat, p, x, x, base, pp);
    match i {
        1 => scaled_quotient(lat, -2, Monomial::q(2), &[], &pq1, f, prec),
        2 => scaled_quotient(lat, 1, q, &odd_over_even.0, &odd_over_even.1, f, prec),
        3 => scaled_quotient(lat, 2, Monomial::q(3), &odd_over_even.0, &odd_over_even.1, f, prec),
        _ => scaled_quotient(lat, 1, Monomial::ONE, &[], &pq1, f, prec),
    }
}

/// One summand of an Appell-Lerch form.
#[derive(Clone, Copy, Debug)]
enum RhsTerm {
    /// `coeff * mono * m(args)`
    Appell { coeff: i64, mono: Monomial, args: (Monomial, i64, Monomial) },
    /// `coeff * mono * θ_{n,p}(x, x, q^base) / den`
    Theta { coeff: i64, mono: Monomial, n: i64, p: i64, x: Monomial, base: i64, den: Factor },
}

fn rhs_terms(i: u8) -> Result<Vec<RhsTerm>> {
    use RhsTerm::*;
    let q = Monomial::q;
    let nq = Monomial::neg_q;
    let m1 = Monomial::MINUS_ONE;
    Ok(match i {
        1 => vec![
            Appell { coeff: 4, mono: Monomial::ONE, args: (nq(17), 48, m1) },
            Appell { coeff: -4, mono: q(-5), args: (nq(1), 48, m1) },
            Theta { coeff: -2, mono: q(2), n: 3, p: 2, x: q(5), base: 1, den: Factor::theta(q(1), 3) },
        ],
        2 => vec![
            Appell { coeff: 4, mono: Monomial::ONE, args: (nq(1), 8, m1) },
            Theta { coeff: 2, mono: q(1), n: 1, p: 2, x: nq(2), base: 1, den: Factor::theta(m1, 1) },
        ],
        3 => vec![
            Appell { coeff: 4, mono: Monomial::ONE, args: (nq(1), 12, m1) },
            Theta { coeff: 2, mono: q(3), n: 1, p: 1, x: nq(7), base: 4, den: Factor::theta(nq(1), 4) },
        ],
        4 => vec![
            Appell { coeff: -2, mono: q(-4), args: (nq(5), 48, m1) },
            Appell { coeff: -2, mono: q(-2), args: (nq(11), 48, m1) },
            Theta { coeff: 1, mono: Monomial::ONE, n: 3, p: 2, x: q(3), base: 1, den: Factor::theta(q(1), 3) },
        ],
        _ => return Err(Error::UnknownName(format!("rhs_{i}"))),
    })
}

/// `Wi` in Appell-Lerch form: `m`-sums plus a theta quotient.
pub fn rhs_theorem_main(i: u8, lat: Lattice, prec: Exponent) -> Result<LaurentSeries> {
    let mut acc = LaurentSeries::zero(lat).truncate(prec);
    for t in rhs_terms(i)? {
        let s = match t {
            RhsTerm::Appell { coeff, mono, args: (x, base, z) } => {
                let args = AppellLerch::new(x, base, z)?;
                let m = m_eval(lat, &args, prec - mono.exp())?;
                mono.apply(&m)?.scale(&int(coeff))
            }
            RhsTerm::Theta { coeff, mono, n, p, x, base, den } => {
                let inner = |pp| theta_np(lat, n, p, x, x, base, pp);
                scaled_quotient(lat, coeff, mono, &[], &[(den, 1)], inner, prec)?
            }
        };
        acc = acc.checked_add(&s)?;
    }
    Ok(acc)
}

/// `J̄_{3,8} J_{2,8}^2 / J_{1,8}^2`.
pub fn eighth_order_quotient(lat: Lattice, prec: Exponent) -> Result<LaurentSeries> {
    let (q, nq) = (Monomial::q, Monomial::neg_q);
    let num = [(Factor::theta(nq(3), 8), 1), (Factor::theta(q(2), 8), 2)];
    let den = [(Factor::theta(q(1), 8), 2)];
    scaled_quotient(lat, 1, Monomial::ONE, &num, &den, |_| Ok(LaurentSeries::one(lat)), prec)
}
