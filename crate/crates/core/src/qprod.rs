//! q-Pochhammer symbols and the theta function `j(x, q)` at monomial
//! arguments, plus products and quotients of them with exact precision
//! bookkeeping.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exponent::{Exponent, Lattice};
use crate::series::LaurentSeries;

/// A signed power `±q^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    negative: bool,
    exp: Exponent,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { negative: false, exp: Exponent::ZERO };
    pub const MINUS_ONE: Monomial = Monomial { negative: true, exp: Exponent::ZERO };

    /// `+q^e`
    pub fn q(e: impl Into<Exponent>) -> Self {
        Monomial { negative: false, exp: e.into() }
    }

    /// `-q^e`
    pub fn neg_q(e: impl Into<Exponent>) -> Self {
        Monomial { negative: true, exp: e.into() }
    }

    pub fn new(sign: i64, e: impl Into<Exponent>) -> Self {
        assert!(sign == 1 || sign == -1, "monomial sign must be ±1");
        Monomial { negative: sign < 0, exp: e.into() }
    }

    pub fn sign(&self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn exp(&self) -> Exponent {
        self.exp
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }

    pub fn inv(&self) -> Self {
        Monomial { negative: self.negative, exp: -self.exp }
    }

    pub fn pow(&self, n: i64) -> Self {
        Monomial { negative: self.negative && n % 2 != 0, exp: self.exp * n }
    }

    pub fn coeff(&self) -> BigRational {
        BigRational::from_integer(self.sign().into())
    }

    pub fn to_series(&self, lat: Lattice) -> Result<LaurentSeries> {
        LaurentSeries::monomial(lat, self.coeff(), self.exp)
    }

    /// Multiplies a series by this monomial.
    pub fn apply(&self, s: &LaurentSeries) -> Result<LaurentSeries> {
        let shifted = s.shift(self.exp)?;
        Ok(if self.negative { -shifted } else { shifted })
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial { negative: self.negative != rhs.negative, exp: self.exp + rhs.exp }
    }
}

impl Div for Monomial {
    type Output = Monomial;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Monomial) -> Monomial {
        self * rhs.inv()
    }
}

impl Neg for Monomial {
    type Output = Monomial;
    fn neg(self) -> Monomial {
        Monomial { negative: !self.negative, exp: self.exp }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.negative { "-" } else { "" };
        if self.exp.is_zero() {
            write!(f, "{s}1")
        } else if self.exp == Exponent::int(1) {
            write!(f, "{s}q")
        } else if self.exp.is_integer() && !self.exp.is_negative() {
            write!(f, "{s}q^{}", self.exp)
        } else {
            write!(f, "{s}q^({})", self.exp)
        }
    }
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Multiplies a dense coefficient vector (indices `0..=p`) by `1 + c q^s`, in place.
fn mul_binomial(v: &mut [BigInt], s: usize, c: i64) {
    if s == 0 {
        let f = BigInt::from(1 + c);
        v.iter_mut().for_each(|x| *x *= &f);
        return;
    }
    for i in (s..v.len()).rev() {
        if v[i - s].is_zero() {
            continue;
        }
        let t = &v[i - s] * c;
        v[i] += t;
    }
}

fn dense_to_series(lat: Lattice, v: Vec<BigInt>, offset: i64, prec: Option<i64>) -> LaurentSeries {
    let map: BTreeMap<i64, BigInt> = v
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (offset + i as i64, c))
        .collect();
    LaurentSeries::from_int_index_map(lat, map, prec)
}

fn check_base(base: Exponent) -> Result<()> {
    if !base.is_positive() {
        return Err(Error::InvalidParams(format!("base exponent {base} must be positive")));
    }
    Ok(())
}

/// The finite product `(a; q^base)_n`, exact.
pub fn poch_finite(lat: Lattice, a: Monomial, base: Exponent, n: u64) -> Result<LaurentSeries> {
    check_base(base)?;
    let mut poly: BTreeMap<i64, BigInt> = BTreeMap::from([(0, BigInt::one())]);
    for k in 0..n {
        let m = a * Monomial::q(base * k as i64);
        if m.is_one() {
            return Ok(LaurentSeries::zero(lat));
        }
        let s = lat.index(m.exp())?;
        let c = -m.sign();
        let mut next = poly.clone();
        for (e, v) in &poly {
            *next.entry(e + s).or_insert_with(BigInt::zero) += v * c;
        }
        next.retain(|_, v| !v.is_zero());
        poly = next;
    }
    Ok(LaurentSeries::from_int_index_map(lat, poly, None))
}

/// `(a; q^base)_n` through `q^prec`. Requires `exp(a) >= 0` so that the
/// truncation of each partial product is exact.
pub fn poch_finite_to(lat: Lattice, a: Monomial, base: Exponent, n: u64, prec: Exponent) -> Result<LaurentSeries> {
    check_base(base)?;
    if a.exp().is_negative() {
        return Ok(poch_finite(lat, a, base, n)?.truncate(prec));
    }
    let p = lat.floor_index(prec);
    let mut factors = Vec::new();
    let mut constant = 1;
    for k in 0..n {
        let m = a * Monomial::q(base * k as i64);
        if m.is_one() {
            return Ok(LaurentSeries::zero(lat));
        }
        let s = lat.index(m.exp())?;
        if s == 0 {
            constant *= 2;
        } else if s <= p {
            factors.push((s as usize, -m.sign()));
        }
    }
    Ok(binomial_product(lat, constant, &factors, p))
}

/// Appends the factors `1 - a q^{k*base}` (k >= 0) of `(a; q^base)_inf`
/// relevant through index `p` as `(index, coefficient)` pairs, returning the
/// constant multiplier contributed by a factor `1 - a` with `a = -1`.
fn infinite_factors(
    lat: Lattice,
    a: Monomial,
    base: Exponent,
    p: i64,
    out: &mut Vec<(usize, i64)>,
) -> Result<i64> {
    check_base(base)?;
    let mut constant = 1;
    let mut first = a;
    if a.exp().is_zero() && a.sign() == -1 {
        constant = 2;
        first = a * Monomial::q(base);
    } else if !a.exp().is_positive() {
        return Err(Error::NotPowerSeries { factor: a.to_string(), base });
    }
    let step = lat.index(base)?;
    let mut s = lat.index(first.exp())?;
    while s <= p {
        out.push((s as usize, -first.sign()));
        s += step;
    }
    Ok(constant)
}

/// `(a; q^base)_inf` through `q^prec`. Requires `exp(a) > 0`, or `a = -1`
/// (then the product is `2(-q^base; q^base)_inf`).
pub fn poch_infinite(lat: Lattice, a: Monomial, base: Exponent, prec: Exponent) -> Result<LaurentSeries> {
    let p = lat.floor_index(prec);
    let mut factors = Vec::new();
    let constant = infinite_factors(lat, a, base, p, &mut factors)?;
    Ok(binomial_product(lat, constant, &factors, p))
}

fn binomial_product(lat: Lattice, constant: i64, factors: &[(usize, i64)], p: i64) -> LaurentSeries {
    if p < 0 {
        return LaurentSeries::from_int_index_map(lat, BTreeMap::new(), Some(p));
    }
    let mut v = vec![BigInt::zero(); p as usize + 1];
    v[0] = BigInt::from(constant);
    for &(s, c) in factors {
        mul_binomial(&mut v, s, c);
    }
    dense_to_series(lat, v, 0, Some(p))
}

/// Reduction of `j(x, q^base)` by quasi-periodicity: returns the monomial
/// prefactor and the representative `x0` with `0 <= exp(x0) < base`.
pub fn reduce_theta_argument(x: Monomial, base: Exponent) -> (Monomial, Monomial) {
    let n = (x.exp().as_rational() / base.as_rational()).floor().to_integer();
    let x0 = x * Monomial::q(-(base * n));
    // j(q^{n b} x0, q^b) = (-1)^n q^{-b C(n,2)} x0^{-n} j(x0, q^b)
    let pref = Monomial::new(if n % 2 == 0 { 1 } else { -1 }, -(base * binom2(n))) * x0.pow(-n);
    (pref, x0)
}

/// Exact valuation of `j(x, q^base)`, or `None` when it vanishes identically.
pub fn theta_valuation(x: Monomial, base: Exponent) -> Option<Exponent> {
    let (pref, x0) = reduce_theta_argument(x, base);
    if x0.is_one() {
        None
    } else {
        Some(pref.exp())
    }
}

/// `j(x, q^base) = (x)_inf (q^base/x)_inf (q^base)_inf` through `q^prec`,
/// evaluated in product form after reducing `x` into `0 <= exp(x) < base`.
pub fn jacobi_j(lat: Lattice, x: Monomial, base: Exponent, prec: Exponent) -> Result<LaurentSeries> {
    check_base(base)?;
    let (pref, x0) = reduce_theta_argument(x, base);
    if x0.is_one() {
        return Ok(LaurentSeries::zero(lat));
    }
    let p = lat.floor_index(prec - pref.exp());
    let mut factors = Vec::new();
    let mut constant = infinite_factors(lat, x0, base, p, &mut factors)?;
    constant *= infinite_factors(lat, Monomial::q(base) / x0, base, p, &mut factors)?;
    constant *= infinite_factors(lat, Monomial::q(base), base, p, &mut factors)?;
    let core = binomial_product(lat, constant, &factors, p);
    pref.apply(&core)
}

/// `j(x, q^base)` from the bilateral sum `sum_n (-1)^n q^{base C(n,2)} x^n`.
pub fn jacobi_j_sum(lat: Lattice, x: Monomial, base: Exponent, prec: Exponent) -> Result<LaurentSeries> {
    check_base(base)?;
    let p = lat.floor_index(prec);
    let b = lat.index(base)?;
    let e = lat.index(x.exp())?;
    let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
    let mut add = |n: i64| {
        let idx = b * binom2(n) + e * n;
        if idx <= p {
            let neg = (n.rem_euclid(2) == 1) != (x.sign() == -1 && n.rem_euclid(2) == 1);
            *acc.entry(idx).or_insert_with(BigInt::zero) += if neg { -1 } else { 1 };
        }
    };
    // Exponent b*n(n-1)/2 + e*n increases in n once 2*b*n >= b - 2e.
    let mut n = 0i64;
    loop {
        add(n);
        if 2 * b * n >= b - 2 * e && b * binom2(n) + e * n > p {
            break;
        }
        n += 1;
    }
    let mut n = -1i64;
    loop {
        add(n);
        if 2 * b * n <= b - 2 * e && b * binom2(n) + e * n > p {
            break;
        }
        n -= 1;
    }
    acc.retain(|_, c| !c.is_zero());
    Ok(LaurentSeries::from_int_index_map(lat, acc, Some(p)))
}

/// `J_{a,m} = j(q^a, q^m)`.
pub fn j_std(lat: Lattice, a: impl Into<Exponent>, m: impl Into<Exponent>, prec: Exponent) -> Result<LaurentSeries> {
    jacobi_j(lat, Monomial::q(a), m.into(), prec)
}

/// `J̄_{a,m} = j(-q^a, q^m)`.
pub fn j_bar(lat: Lattice, a: impl Into<Exponent>, m: impl Into<Exponent>, prec: Exponent) -> Result<LaurentSeries> {
    jacobi_j(lat, Monomial::neg_q(a), m.into(), prec)
}

/// `J_m = J_{m,3m}`.
pub fn j_cap(lat: Lattice, m: impl Into<Exponent>, prec: Exponent) -> Result<LaurentSeries> {
    let m = m.into();
    jacobi_j(lat, Monomial::q(m), m * 3, prec)
}

/// An infinite-product factor with exactly computable valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `j(x, q^base)`
    Theta { x: Monomial, base: Exponent },
    /// `(a; q^base)_inf`
    Poch { a: Monomial, base: Exponent },
}

impl Factor {
    pub fn theta(x: Monomial, base: impl Into<Exponent>) -> Self {
        Factor::Theta { x, base: base.into() }
    }

    pub fn poch(a: Monomial, base: impl Into<Exponent>) -> Self {
        Factor::Poch { a, base: base.into() }
    }

    /// Exact valuation; `None` if the factor is identically zero.
    pub fn valuation(&self) -> Result<Option<Exponent>> {
        match *self {
            Factor::Theta { x, base } => {
                check_base(base)?;
                Ok(theta_valuation(x, base))
            }
            Factor::Poch { a, base } => {
                check_base(base)?;
                if a.exp().is_positive() || a == Monomial::MINUS_ONE {
                    Ok(Some(Exponent::ZERO))
                } else {
                    Err(Error::NotPowerSeries { factor: a.to_string(), base })
                }
            }
        }
    }

    pub fn eval(&self, lat: Lattice, prec: Exponent) -> Result<LaurentSeries> {
        match *self {
            Factor::Theta { x, base } => jacobi_j(lat, x, base, prec),
            Factor::Poch { a, base } => poch_infinite(lat, a, base, prec),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Theta { x, base } => write!(f, "j({x}, q^{base})"),
            Factor::Poch { a, base } => write!(f, "({a}; q^{base})_inf"),
        }
    }
}

/// The product of `factors` (with multiplicities) known through `q^prec`.
///
/// Each factor is evaluated only as far as the valuations of the others
/// allow, so the result carries exactly the requested precision.
pub fn product_to(lat: Lattice, factors: &[(Factor, u32)], prec: Exponent) -> Result<LaurentSeries> {
    let mut vals = Vec::with_capacity(factors.len());
    for (f, _) in factors {
        match f.valuation()? {
            Some(v) => vals.push(v),
            None => return Ok(LaurentSeries::zero(lat)),
        }
    }
    let total = factors
        .iter()
        .zip(&vals)
        .fold(Exponent::ZERO, |acc, ((_, k), v)| acc + *v * i64::from(*k));
    if prec < total {
        return Ok(LaurentSeries::zero(lat).truncate(prec));
    }
    let mut acc = LaurentSeries::one(lat);
    for ((f, k), v) in factors.iter().zip(&vals) {
        if *k == 0 {
            continue;
        }
        let s = f.eval(lat, prec - total + *v)?;
        for _ in 0..*k {
            acc = acc.checked_mul(&s)?;
        }
    }
    Ok(acc.truncate(prec))
}

/// Sum of the valuations of denominator factors; any vanishing factor is an error.
pub fn denominator_valuation(factors: &[(Factor, u32)]) -> Result<Exponent> {
    let mut total = Exponent::ZERO;
    for (f, k) in factors {
        let v = f.valuation()?.ok_or_else(|| Error::ZeroDenominator(f.to_string()))?;
        total = total + v * i64::from(*k);
    }
    Ok(total)
}

/// `numer / Π den` through `q^prec`, where `numer(p)` yields the numerator
/// through `q^p`. The denominator product is formed once and inverted once.
pub fn quotient_to<F>(lat: Lattice, numer: F, den: &[(Factor, u32)], prec: Exponent) -> Result<LaurentSeries>
where
    F: FnOnce(Exponent) -> Result<LaurentSeries>,
{
    let vd = denominator_valuation(den)?;
    let n = numer(prec + vd)?;
    if n.is_zero() {
        return Ok(n);
    }
    let vn = match n.valuation() {
        Some(v) => v,
        None => return Ok(n.shift(-vd)?.truncate(prec)),
    };
    let d = product_to(lat, den, prec - vn + vd * 2)?;
    n.div_to(&d, prec)
}

/// `numer * factor` through `q^prec`, evaluating the factor only as far as
/// the numerator's valuation requires.
pub fn times_factor<F>(lat: Lattice, numer: F, factor: &Factor, prec: Exponent) -> Result<LaurentSeries>
where
    F: FnOnce(Exponent) -> Result<LaurentSeries>,
{
    let Some(vf) = factor.valuation()? else {
        return Ok(LaurentSeries::zero(lat));
    };
    let n = numer(prec - vf)?;
    if n.is_zero() {
        return Ok(n);
    }
    let vn = match n.valuation() {
        Some(v) => v,
        None => return Ok(n.shift(vf)?.truncate(prec)),
    };
    let f = factor.eval(lat, prec - vn)?;
    Ok(n.checked_mul(&f)?.truncate(prec))
}

/// `coeff * mono * Π num / Π den`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaQuotient {
    pub coeff: BigRational,
    pub mono: Monomial,
    pub num: Vec<(Factor, u32)>,
    pub den: Vec<(Factor, u32)>,
}

impl ThetaQuotient {
    pub fn new(coeff: i64, mono: Monomial) -> Self {
        ThetaQuotient {
            coeff: BigRational::from_integer(coeff.into()),
            mono,
            num: Vec::new(),
            den: Vec::new(),
        }
    }

    pub fn over(mut self, f: Factor, k: u32) -> Self {
        self.den.push((f, k));
        self
    }

    pub fn times(mut self, f: Factor, k: u32) -> Self {
        self.num.push((f, k));
        self
    }

    pub fn eval(&self, lat: Lattice, prec: Exponent) -> Result<LaurentSeries> {
        let inner_prec = prec - self.mono.exp();
        let q = quotient_to(lat, |p| product_to(lat, &self.num, p), &self.den, inner_prec)?;
        Ok(self.mono.apply(&q)?.scale(&self.coeff))
    }
}
