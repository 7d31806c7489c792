//! Bailey pairs, the Bailey lemma with one parameter sent to infinity, and
//! the limiting form of the lemma as a pair of q-series.
//!
//! A pair `(alpha_n, beta_n)` relative to `a` satisfies
//! `beta_n = sum_{k<=n} alpha_k / ((q)_{n-k} (aq)_{n+k})`.

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use num_rational::{BigRational, Rational64};

use crate::error::{Error, Result};
use crate::exponent::{Exponent, Lattice};
use crate::par::Execution;
use crate::qprod::{poch_finite_to, quotient_to, Factor, Monomial};
use crate::report::VerificationReport;
use crate::series::LaurentSeries;
use crate::summation::{averaged_partial_sums, sum_with_cutoff, ValBound};

/// The `n`-th member of a sequence, through `q^prec`.
pub type Generator = Arc<dyn Fn(u64, Lattice, Exponent) -> Result<LaurentSeries> + Send + Sync>;

/// A Bailey pair relative to `rel`, with valuation lower bounds for both
/// sequences.
#[derive(Clone)]
pub struct BaileyPair {
    pub name: String,
    pub rel: Monomial,
    alpha: Generator,
    beta: Generator,
    pub alpha_bound: ValBound,
    pub beta_bound: ValBound,
}

impl fmt::Debug for BaileyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BaileyPair")
            .field("name", &self.name)
            .field("rel", &self.rel)
            .finish_non_exhaustive()
    }
}

impl BaileyPair {
    pub fn new(
        name: impl Into<String>,
        rel: Monomial,
        alpha: Generator,
        beta: Generator,
        alpha_bound: ValBound,
        beta_bound: ValBound,
    ) -> Self {
        BaileyPair { name: name.into(), rel, alpha, beta, alpha_bound, beta_bound }
    }

    pub fn alpha(&self, n: u64, lat: Lattice, prec: Exponent) -> Result<LaurentSeries> {
        (self.alpha)(n, lat, prec)
    }

    pub fn beta(&self, n: u64, lat: Lattice, prec: Exponent) -> Result<LaurentSeries> {
        (self.beta)(n, lat, prec)
    }

    /// Replaces the beta sequence by `f(n, beta_n)`.
    pub fn map_beta<F>(self, f: F) -> Self
    where
        F: Fn(u64, LaurentSeries) -> Result<LaurentSeries> + Send + Sync + 'static,
    {
        let beta = self.beta.clone();
        BaileyPair {
            beta: Arc::new(move |n, lat, prec| f(n, beta(n, lat, prec)?)),
            ..self
        }
    }
}

/// Names accepted by [`builtin_pair`].
pub const BUILTIN_PAIRS: [&str; 4] = ["BK1", "BKq", "L1prime", "L2prime"];

/// Exact Laurent polynomial `sum c q^e` with integer exponents.
fn poly(lat: Lattice, terms: Vec<(i64, i64)>) -> Result<LaurentSeries> {
    LaurentSeries::from_terms(
        lat,
        terms.into_iter().map(|(e, c)| (Exponent::int(e), BigRational::from_integer(c.into()))),
        None,
    )
}

fn one_minus_q(lat: Lattice) -> Result<LaurentSeries> {
    poly(lat, vec![(0, 1), (1, -1)])
}

fn pq(lat: Lattice, a: Monomial, base: i64, n: u64, prec: Exponent) -> Result<LaurentSeries> {
    poch_finite_to(lat, a, Exponent::int(base), n, prec)
}

fn q1() -> Monomial {
    Monomial::q(1)
}

fn sign(n: u64) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// `sign * Π num / Π den` through `q^prec`, for power series with the
/// denominators having nonzero constant term.
fn ratio(lat: Lattice, sgn: i64, num: &[LaurentSeries], den: &[LaurentSeries], prec: Exponent) -> Result<LaurentSeries> {
    let mut n = LaurentSeries::one(lat);
    for f in num {
        n = n.checked_mul(f)?.truncate(prec);
    }
    let mut d = LaurentSeries::one(lat);
    for f in den {
        d = d.checked_mul(f)?.truncate(prec);
    }
    let r = n.div_to(&d, prec)?;
    Ok(if sgn < 0 { -r } else { r })
}

fn bk1_alpha(n: u64, lat: Lattice, prec: Exponent) -> Result<LaurentSeries> {
    let m = (n / 2) as i64;
    let mut t = Vec::new();
    if n % 2 == 0 {
        for j in -m..m {
            let e = 2 * m * m - 2 * m - 2 * j * j - 2 * j;
            t.push((e, 1));
            t.push((e + 4 * m, -1));
        }
    } else {
        for j in -m..=m {
            let e = 2 * m * m - 2 * j * j;
            t.push((e, -1));
            t.push((e + 4 * m + 2, 1));
        }
    }
    Ok(poly(lat, t)?.truncate(prec))
}

fn bk1_beta(n: u64, lat: Lattice, prec: Exponent) -> Result<LaurentSeries> {
    if n == 0 {
        return Ok(LaurentSeries::zero(lat));
    }
    ratio(lat, sign(n), &[pq(lat, q1(), 2, n - 1, prec)?], &[pq(lat, q1(), 1, 2 * n - 1, prec)?], prec)
}

fn bkq_alpha(n: u64, lat: Lattice, prec: Exponent) -> Result<LaurentSeries> {
    let m = (n / 2) as i64;
    let mut t = Vec::new();
    if n % 2 == 0 {
        for j in -m..m {
            t.push((2 * m * m + 2 * m - 2 * j * j - 2 * j, 1));
        }
        for j in -m..=m {
            t.push((2 * m * m - 2 * j * j, 1));
        }
    } else {
        for j in -m..=m {
            t.push((2 * m * m + 4 * m + 2 - 2 * j * j, -1));
        }
        for j in -m - 1..=m {
            t.push((2 * m * m + 2 * m - 2 * j * j - 2 * j, -1));
        }
    }
    poly(lat, t)?.div_to(&one_minus_q(lat)?, prec)
}

fn bkq_beta(n: u64, lat: Lattice, prec: Exponent) -> Result<LaurentSeries> {
    ratio(lat, sign(n), &[pq(lat, q1(), 2, n, prec)?], &[pq(lat, q1(), 1, 2 * n + 1, prec)?], prec)
}

fn l1_alpha(n: u64, lat: Lattice, prec: Exponent) -> Result<LaurentSeries> {
    let m = (n / 2) as i64;
    let mut t = Vec::new();
    if n % 2 == 0 {
        for j in -m..m {
            let e = 4 * m * m - m - 2 * j * j - 2 * j;
            t.push((e, 2));
            t.push((e + 2 * m, -2));
        }
    } else {
        for j in -m..=m {
            let e = 4 * m * m + 3 * m + 1 - 2 * j * j;
            t.push((e, -2));
            t.push((e + 2 * m + 1, 2));
        }
    }
    Ok(poly(lat, t)?.truncate(prec))
}

/// Inner sums of the two pairs obtained from one Bailey step; `shift` is 0
/// for the pair relative to 1 and 1 for the pair relative to q.
fn lprime_beta(n: u64, lat: Lattice, prec: Exponent, shift: u64) -> Result<LaurentSeries> {
    let mut acc = LaurentSeries::zero(lat).truncate(prec);
    let first = 1 - shift;
    for j in first..=n {
        let e = binom2(j as i64 + 1);
        if Exponent::int(e) > prec {
            break;
        }
        let (b, c0) = if shift == 0 { (Monomial::MINUS_ONE, j - 1) } else { (Monomial::neg_q(1), j) };
        let num = [pq(lat, b, 1, j, prec)?, pq(lat, q1(), 2, c0, prec)?];
        let den = [pq(lat, q1(), 1, n - j, prec)?, pq(lat, q1(), 1, 2 * j + 1 - 2 * (1 - shift), prec)?];
        let t = ratio(lat, sign(j), &num, &den, prec - Exponent::int(e))?;
        acc = acc.checked_add(&t.shift(Exponent::int(e))?)?;
    }
    acc.div_to(&pq(lat, Monomial::neg_q(1), 1, n, prec)?, prec)
}

fn l2_alpha(n: u64, lat: Lattice, prec: Exponent) -> Result<LaurentSeries> {
    let m = (n / 2) as i64;
    let mut t = Vec::new();
    if n % 2 == 0 {
        for j in -m..m {
            t.push((4 * m * m + 3 * m - 2 * j * j - 2 * j, 1));
        }
        for j in -m..=m {
            t.push((4 * m * m + m - 2 * j * j, 1));
        }
    } else {
        for j in -m..=m {
            t.push((4 * m * m + 7 * m + 3 - 2 * j * j, -1));
        }
        for j in -m - 1..=m {
            t.push((4 * m * m + 5 * m + 1 - 2 * j * j - 2 * j, -1));
        }
    }
    poly(lat, t)?.div_to(&one_minus_q(lat)?, prec)
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

/// One of the built-in pairs: `BK1`, `BKq`, `L1prime`, `L2prime`.
pub fn builtin_pair(name: &str) -> Result<BaileyPair> {
    let zero = ValBound::constant(0);
    let tri = ValBound::new(r(1, 2), r(1, 2), r(0, 1));
    Ok(match name {
        "BK1" => BaileyPair::new(name, Monomial::ONE, Arc::new(bk1_alpha), Arc::new(bk1_beta), zero, zero),
        "BKq" => BaileyPair::new(name, q1(), Arc::new(bkq_alpha), Arc::new(bkq_beta), zero, zero),
        "L1prime" => BaileyPair::new(
            name,
            Monomial::ONE,
            Arc::new(l1_alpha),
            Arc::new(|n, lat, prec| lprime_beta(n, lat, prec, 0)),
            tri,
            zero,
        ),
        "L2prime" => BaileyPair::new(
            name,
            q1(),
            Arc::new(l2_alpha),
            Arc::new(|n, lat, prec| lprime_beta(n, lat, prec, 1)),
            tri,
            zero,
        ),
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

/// The right side of the pair relation at index `n`.
pub fn pair_relation_rhs(p: &BaileyPair, n: u64, lat: Lattice, prec: Exponent) -> Result<LaurentSeries> {
    let aq = p.rel * q1();
    let mut acc = LaurentSeries::zero(lat).truncate(prec);
    for k in 0..=n {
        let alpha = p.alpha(k, lat, prec)?;
        if alpha.is_zero() {
            continue;
        }
        let den = pq(lat, q1(), 1, n - k, prec)?.checked_mul(&poch_finite_to(lat, aq, Exponent::int(1), n + k, prec)?)?;
        acc = acc.checked_add(&alpha.div_to(&den.truncate(prec), prec)?)?;
    }
    Ok(acc)
}

/// Checks the pair relation for `n = 0..=n_max` through `q^prec`.
pub fn verify_pair(p: &BaileyPair, n_max: u64, lat: Lattice, prec: Exponent) -> Result<VerificationReport> {
    let start = Instant::now();
    let name = format!("pair {}", p.name);
    let results = Execution::default().map_range(0, n_max as i64 + 1, |n| -> Result<_> {
        let n = n as u64;
        let lhs = p.beta(n, lat, prec)?;
        let rhs = pair_relation_rhs(p, n, lat, prec)?;
        lhs.first_mismatch(&rhs, prec)
    });
    for (n, res) in results.into_iter().enumerate() {
        if let Some(m) = res? {
            return Ok(VerificationReport::fail(name, prec, m, Some(format!("n = {n}")), start.elapsed()));
        }
    }
    Ok(VerificationReport::pass(name, prec, start.elapsed()))
}

/// A Bailey lemma parameter: a monomial or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Param {
    Finite(Monomial),
    Infinity,
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Finite(m) => write!(f, "{m}"),
            Param::Infinity => write!(f, "inf"),
        }
    }
}

/// The parameter choices `(b, c)` used with the Bailey lemma.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepSpec {
    /// `(-1, inf)`
    MinusOneInf,
    /// `(-q, inf)`
    MinusQInf,
    /// `(inf, inf)`
    InfInf,
    /// `(-q^{1/2}, q^{1/2})`
    SqrtPair,
    /// `(q, inf)` after `q -> q^2`: the lemma is applied with
    /// `b = q^{1/2}` and the result is read in `q^2`.
    QInfSquared,
}

impl StepSpec {
    pub fn params(&self) -> (Param, Param) {
        let half = Exponent::new(1, 2);
        match self {
            StepSpec::MinusOneInf => (Param::Finite(Monomial::MINUS_ONE), Param::Infinity),
            StepSpec::MinusQInf => (Param::Finite(Monomial::neg_q(1)), Param::Infinity),
            StepSpec::InfInf => (Param::Infinity, Param::Infinity),
            StepSpec::SqrtPair => (Param::Finite(Monomial::neg_q(half)), Param::Finite(Monomial::q(half))),
            StepSpec::QInfSquared => (Param::Finite(Monomial::q(half)), Param::Infinity),
        }
    }
}

impl fmt::Display for StepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepSpec::QInfSquared => write!(f, "(q, inf) with q -> q^2"),
            _ => {
                let (b, c) = self.params();
                write!(f, "({b}, {c})")
            }
        }
    }
}

/// `(p)_n` and the monomial factor, for the weight `(p)_n (aq/(p ...))^n`
/// of one parameter. Infinite parameters contribute `(-1)^n q^{C(n,2)}`.
fn param_weight(p: Param, n: u64, lat: Lattice, prec: Exponent) -> Result<(Option<LaurentSeries>, Monomial)> {
    match p {
        Param::Infinity => {
            let ni = n as i64;
            Ok((None, Monomial::new(sign(n), binom2(ni))))
        }
        Param::Finite(b) => Ok((Some(poch_finite_to(lat, b, Exponent::int(1), n, prec)?), Monomial::ONE)),
    }
}

/// The weight `(b)_n (c)_n (aq/bc)^n`, with infinite parameters in the limit.
fn lemma_weight(a: Monomial, b: Param, c: Param, n: u64, lat: Lattice, prec: Exponent) -> Result<LaurentSeries> {
    let (pb, mb) = param_weight(b, n, lat, prec)?;
    let (pc, mc) = param_weight(c, n, lat, prec)?;
    let mut base = a * q1();
    for p in [b, c] {
        if let Param::Finite(m) = p {
            base = base / m;
        }
    }
    let mono = mb * mc * base.pow(n as i64);
    let inner = prec - mono.exp();
    let mut s = LaurentSeries::one(lat);
    for f in [pb, pc].into_iter().flatten() {
        s = s.checked_mul(&f.truncate(inner))?.truncate(inner);
    }
    mono.apply(&s)
}

/// Lower bound for the valuation of [`lemma_weight`].
fn weight_bound(a: Monomial, b: Param, c: Param) -> ValBound {
    let mut lin = (a * q1()).exp().as_rational();
    let mut quad = r(0, 1);
    for p in [b, c] {
        match p {
            Param::Infinity => {
                quad += r(1, 2);
                lin -= r(1, 2);
            }
            Param::Finite(m) => lin -= m.exp().as_rational(),
        }
    }
    ValBound::new(quad, lin, r(0, 1))
}

fn finite_params(b: Param, c: Param) -> Vec<Monomial> {
    [b, c]
        .into_iter()
        .filter_map(|p| match p {
            Param::Finite(m) => Some(m),
            Param::Infinity => None,
        })
        .collect()
}

fn check_finite_param(a: Monomial, m: Monomial) -> Result<()> {
    let aqb = a * q1() / m;
    if m.exp().is_negative() || !aqb.exp().is_positive() || m.is_one() {
        return Err(Error::InvalidParams(format!("parameter {m} relative to {a}")));
    }
    Ok(())
}

/// One Bailey step with `(b, c) = (b, inf)`, for the two admitted
/// specifications `(-1, inf)` and `(-q, inf)`.
pub fn bailey_step(p: &BaileyPair, spec: StepSpec) -> Result<BaileyPair> {
    let b = match spec {
        StepSpec::MinusOneInf | StepSpec::MinusQInf => match spec.params().0 {
            Param::Finite(m) => m,
            Param::Infinity => unreachable!(),
        },
        _ => return Err(Error::InvalidParams(format!("Bailey step {spec} is not supported"))),
    };
    let a = p.rel;
    check_finite_param(a, b)?;
    let e = a * q1() / b;
    let one = Exponent::int(1);

    let old = p.clone();
    let alpha: Generator = Arc::new(move |n, lat, prec| {
        let ni = n as i64;
        let mono = Monomial::new(sign(n), binom2(ni)) * e.pow(ni);
        if mono.exp() > prec {
            return Ok(LaurentSeries::zero(lat).truncate(prec));
        }
        let inner = prec - mono.exp();
        let num = old.alpha(n, lat, inner)?;
        let w = poch_finite_to(lat, b, one, n, inner)?;
        let d = poch_finite_to(lat, e, one, n, inner)?;
        let t = num.checked_mul(&w)?.truncate(inner).div_to(&d, inner)?;
        mono.apply(&t)
    });

    let old = p.clone();
    let beta: Generator = Arc::new(move |n, lat, prec| {
        let mut acc = LaurentSeries::zero(lat).truncate(prec);
        for k in 0..=n {
            let ki = k as i64;
            let mono = Monomial::new(sign(k), binom2(ki)) * e.pow(ki);
            if mono.exp() > prec {
                continue;
            }
            let inner = prec - mono.exp();
            let bk = old.beta(k, lat, inner)?;
            let w = poch_finite_to(lat, b, one, k, inner)?;
            let d = poch_finite_to(lat, Monomial::q(1), one, n - k, inner)?;
            let t = bk.checked_mul(&w)?.truncate(inner).div_to(&d, inner)?;
            acc = acc.checked_add(&mono.apply(&t)?)?;
        }
        acc.div_to(&poch_finite_to(lat, e, one, n, prec)?, prec)
    });

    let step = ValBound::new(r(1, 2), e.exp().as_rational() - r(1, 2), r(0, 1));
    let beta_floor = step
        .plus(&p.beta_bound)
        .min_over_nonneg()
        .map(|v| v.floor().to_integer())
        .unwrap_or(0)
        .min(0);
    Ok(BaileyPair::new(
        format!("step({}, {spec})", p.name),
        a,
        alpha,
        beta,
        p.alpha_bound.plus(&step),
        ValBound::constant(beta_floor),
    ))
}

/// Both sides of the limiting Bailey lemma through `q^prec`:
/// `sum (b)_n (c)_n (aq/bc)^n beta_n` and
/// `(aq/b)_inf (aq/c)_inf / ((aq)_inf (aq/bc)_inf) * sum (b)_n (c)_n (aq/bc)^n / ((aq/b)_n (aq/c)_n) alpha_n`.
pub fn limit_instance(
    p: &BaileyPair,
    spec: StepSpec,
    lat: Lattice,
    prec: Exponent,
    exec: Execution,
) -> Result<(LaurentSeries, LaurentSeries)> {
    match spec {
        StepSpec::InfInf | StepSpec::SqrtPair => limit_sides(p, spec, lat, prec, exec),
        StepSpec::QInfSquared => {
            let inner = Lattice::new(2 * lat.denom())?;
            let half = prec * Exponent::new(1, 2);
            let (l, r) = limit_sides(p, spec, inner, half, exec)?;
            Ok((l.square_onto(lat)?, r.square_onto(lat)?))
        }
        _ => Err(Error::InvalidParams(format!("limit instance {spec} is not supported"))),
    }
}

/// The product prefactor of the limiting lemma as numerator and denominator factors.
pub fn limit_prefactor(a: Monomial, spec: StepSpec) -> (Vec<(Factor, u32)>, Vec<(Factor, u32)>) {
    let (b, c) = spec.params();
    let aq = a * q1();
    let fin = finite_params(b, c);
    let num = fin.iter().map(|m| (Factor::poch(aq / *m, 1), 1)).collect();
    let mut den = vec![(Factor::poch(aq, 1), 1)];
    if fin.len() == 2 {
        den.push((Factor::poch(aq / (fin[0] * fin[1]), 1), 1));
    }
    (num, den)
}

fn limit_sides(
    p: &BaileyPair,
    spec: StepSpec,
    lat: Lattice,
    prec: Exponent,
    exec: Execution,
) -> Result<(LaurentSeries, LaurentSeries)> {
    let (b, c) = spec.params();
    let a = p.rel;
    let fin = finite_params(b, c);
    for m in &fin {
        check_finite_param(a, *m)?;
    }
    let wb = weight_bound(a, b, c);
    let one = Exponent::int(1);

    let lhs_term = |n: u64| -> Result<LaurentSeries> {
        let w = lemma_weight(a, b, c, n, lat, prec)?;
        let Some(vw) = w.valuation() else {
            return Ok(LaurentSeries::zero(lat).truncate(prec));
        };
        let beta = p.beta(n, lat, prec - vw)?;
        Ok(beta.checked_mul(&w)?.truncate(prec))
    };
    let lhs_bound = wb.plus(&p.beta_bound);
    let lhs = if lhs_bound.cutoff(prec).is_some() {
        sum_with_cutoff(lat, &lhs_bound, prec, exec, lhs_term)?
    } else {
        let cap = 8 * prec.ceil().max(0) as u64 + 200;
        averaged_partial_sums(lat, prec, cap, exec, lhs_term)?
    };

    let (num, den) = limit_prefactor(a, spec);
    let rhs_bound = wb.plus(&p.alpha_bound);
    let rhs = quotient_to(
        lat,
        |pp| {
            let sum = sum_with_cutoff(lat, &rhs_bound, pp, exec, |n| {
                let w = lemma_weight(a, b, c, n, lat, pp)?;
                let Some(vw) = w.valuation() else {
                    return Ok(LaurentSeries::zero(lat).truncate(pp));
                };
                let inner = pp - vw;
                let alpha = p.alpha(n, lat, inner)?;
                let mut d = LaurentSeries::one(lat);
                for m in &fin {
                    d = d.checked_mul(&poch_finite_to(lat, a * q1() / *m, one, n, inner)?)?.truncate(inner);
                }
                Ok(alpha.div_to(&d, inner)?.checked_mul(&w)?.truncate(pp))
            })?;
            let mut s = sum;
            for (f, _) in &num {
                let v = s.valuation().unwrap_or(pp);
                s = s.checked_mul(&f.eval(lat, pp - v)?)?.truncate(pp);
            }
            Ok(s)
        },
        &den,
        prec,
    )?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat() -> Lattice {
        Lattice::default()
    }

    #[test]
    fn builtin_pairs_satisfy_the_pair_relation() {
        for name in BUILTIN_PAIRS {
            let p = builtin_pair(name).unwrap();
            let rep = verify_pair(&p, 6, lat(), Exponent::int(30)).unwrap();
            assert!(rep.passed, "{rep}");
        }
    }

    #[test]
    fn unknown_pair_is_rejected() {
        assert!(matches!(builtin_pair("nope"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn perturbed_beta_fails_at_n_one() {
        let p = builtin_pair("BK1").unwrap().map_beta(|n, b| {
            if n == 1 {
                let bump = LaurentSeries::monomial(b.lattice(), BigRational::from_integer(1.into()), Exponent::int(5))?;
                b.checked_add(&bump)
            } else {
                Ok(b)
            }
        });
        let rep = verify_pair(&p, 4, lat(), Exponent::int(20)).unwrap();
        assert!(!rep.passed);
        assert_eq!(rep.case.as_deref(), Some("n = 1"));
        assert_eq!(rep.mismatch.unwrap().exponent, Exponent::int(5));
    }

    #[test]
    fn steps_reproduce_the_primed_pairs() {
        let prec = Exponent::int(30);
        for (from, spec, to) in [("BK1", StepSpec::MinusOneInf, "L1prime"), ("BKq", StepSpec::MinusQInf, "L2prime")] {
            let stepped = bailey_step(&builtin_pair(from).unwrap(), spec).unwrap();
            let target = builtin_pair(to).unwrap();
            for n in 0..=5 {
                let a = stepped.alpha(n, lat(), prec).unwrap();
                assert!(a.equal_mod(&target.alpha(n, lat(), prec).unwrap(), prec).unwrap(), "{to} alpha {n}");
                let b = stepped.beta(n, lat(), prec).unwrap();
                assert!(b.equal_mod(&target.beta(n, lat(), prec).unwrap(), prec).unwrap(), "{to} beta {n}");
            }
        }
    }

    #[test]
    fn unsupported_specs_are_rejected() {
        let p = builtin_pair("BK1").unwrap();
        assert!(bailey_step(&p, StepSpec::InfInf).is_err());
        assert!(limit_instance(&p, StepSpec::MinusOneInf, lat(), Exponent::int(5), Execution::Sequential).is_err());
    }

    #[test]
    fn limit_instances_balance() {
        let prec = Exponent::int(20);
        for (name, spec) in [
            ("BK1", StepSpec::InfInf),
            ("L1prime", StepSpec::InfInf),
            ("L2prime", StepSpec::InfInf),
            ("L1prime", StepSpec::SqrtPair),
            ("L1prime", StepSpec::QInfSquared),
        ] {
            let p = builtin_pair(name).unwrap();
            let (l, r) = limit_instance(&p, spec, lat(), prec, Execution::default()).unwrap();
            assert_eq!(l.first_mismatch(&r, prec).unwrap(), None, "{name} {spec}");
        }
    }

    #[test]
    fn sqrt_pair_prefactor_matches_the_closed_form() {
        use crate::qprod::ThetaQuotient;
        let prec = Exponent::int(25);
        let (num, den) = limit_prefactor(Monomial::ONE, StepSpec::SqrtPair);
        let generic = quotient_to(lat(), |p| crate::qprod::product_to(lat(), &num, p), &den, prec).unwrap();
        let closed = ThetaQuotient::new(1, Monomial::ONE)
            .times(Factor::poch(Monomial::q(1), 2), 1)
            .over(Factor::poch(Monomial::q(2), 2), 1)
            .eval(lat(), prec)
            .unwrap()
            .scale(&BigRational::new(1.into(), 2.into()));
        assert!(generic.equal_mod(&closed, prec).unwrap());
    }
}
