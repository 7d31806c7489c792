//! Exact truncated Laurent series in `q` with rational coefficients.
//!
//! A [`LaurentSeries`] stores a sparse map from lattice index to coefficient
//! together with an inclusive precision: every coefficient at an exponent
//! `<= prec` is known exactly, nothing above it is. Exact polynomials (and
//! the zero series) carry no precision bound at all.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exponent::{Exponent, Lattice};
use crate::par::Execution;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    denom: u32,
    terms: BTreeMap<i64, BigRational>,
    /// Inclusive precision as a lattice index; `None` means exact.
    prec: Option<i64>,
}

/// First exponent at which two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: Exponent,
    pub left: BigRational,
    pub right: BigRational,
}

fn min_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Common denominator of a set of rationals and the scaled integer numerators.
fn to_integers<'a, I>(coeffs: I) -> (Vec<BigInt>, BigInt)
where
    I: Iterator<Item = &'a BigRational> + Clone,
{
    let den = coeffs
        .clone()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = coeffs
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (nums, den)
}

impl LaurentSeries {
    pub fn zero(lat: Lattice) -> Self {
        LaurentSeries { denom: lat.denom(), terms: BTreeMap::new(), prec: None }
    }

    pub fn one(lat: Lattice) -> Self {
        Self::constant(lat, BigRational::one())
    }

    pub fn constant(lat: Lattice, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        LaurentSeries { denom: lat.denom(), terms, prec: None }
    }

    /// The exact monomial `c q^e`.
    pub fn monomial(lat: Lattice, c: BigRational, e: Exponent) -> Result<Self> {
        let idx = lat.index(e)?;
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(idx, c);
        }
        Ok(LaurentSeries { denom: lat.denom(), terms, prec: None })
    }

    /// Builds a series from `(exponent, coefficient)` pairs, summing repeats.
    /// Terms above `prec` are discarded.
    pub fn from_terms<I>(lat: Lattice, terms: I, prec: Option<Exponent>) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, BigRational)>,
    {
        let mut map: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            let idx = lat.index(e)?;
            *map.entry(idx).or_insert_with(BigRational::zero) += c;
        }
        let prec = prec.map(|p| lat.floor_index(p));
        Ok(Self::from_index_map(lat, map, prec))
    }

    /// Canonicalizing constructor over lattice indices.
    pub(crate) fn from_index_map(
        lat: Lattice,
        mut terms: BTreeMap<i64, BigRational>,
        prec: Option<i64>,
    ) -> Self {
        if let Some(p) = prec {
            terms.split_off(&(p + 1));
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentSeries { denom: lat.denom(), terms, prec }
    }

    pub(crate) fn from_int_index_map(
        lat: Lattice,
        terms: BTreeMap<i64, BigInt>,
        prec: Option<i64>,
    ) -> Self {
        let map = terms
            .into_iter()
            .map(|(k, v)| (k, BigRational::from_integer(v)))
            .collect();
        Self::from_index_map(lat, map, prec)
    }

    pub fn lattice(&self) -> Lattice {
        Lattice::new(self.denom).expect("stored lattice is valid")
    }

    /// Inclusive precision; `None` for exact series.
    pub fn prec(&self) -> Option<Exponent> {
        self.prec.map(|p| self.lattice().exponent(p))
    }

    /// True only for the exact zero series (no terms, no precision bound).
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.prec.is_none()
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    /// Least exponent with a nonzero stored coefficient.
    pub fn valuation(&self) -> Option<Exponent> {
        self.val_index().map(|v| self.lattice().exponent(v))
    }

    pub(crate) fn val_index(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// A lower bound for the true valuation: the stored valuation, or one
    /// step above the precision when nothing is known to be nonzero.
    fn val_bound(&self) -> Option<i64> {
        self.val_index().or(self.prec.map(|p| p + 1))
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.terms.values().next()
    }

    /// Coefficient of `q^e`, or `None` if `e` lies above the precision.
    pub fn coeff(&self, e: Exponent) -> Option<BigRational> {
        let lat = self.lattice();
        if let Some(p) = self.prec {
            if lat.floor_index(e) > p {
                return None;
            }
        }
        match lat.index(e) {
            Ok(idx) => Some(self.terms.get(&idx).cloned().unwrap_or_else(BigRational::zero)),
            Err(_) => Some(BigRational::zero()),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &BigRational)> + '_ {
        let lat = self.lattice();
        self.terms.iter().map(move |(&k, c)| (lat.exponent(k), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Lowers the precision to `prec` (never raises it).
    pub fn truncate(&self, prec: Exponent) -> Self {
        self.truncate_index(self.lattice().floor_index(prec))
    }

    pub(crate) fn truncate_index(&self, p: i64) -> Self {
        let prec = min_prec(self.prec, Some(p));
        Self::from_index_map(self.lattice(), self.terms.clone(), prec)
    }

    /// Fails unless every coefficient through `q^order` is known.
    pub fn require_prec(&self, order: Exponent) -> Result<()> {
        let lat = self.lattice();
        match self.prec {
            Some(p) if p < lat.floor_index(order) => Err(Error::InsufficientPrecision {
                needed: order,
                available: lat.exponent(p),
            }),
            _ => Ok(()),
        }
    }

    fn check_lattice(&self, other: &Self) -> Result<()> {
        if self.denom != other.denom {
            return Err(Error::LatticeMismatch { left: self.denom, right: other.denom });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_lattice(other)?;
        let prec = min_prec(self.prec, other.prec);
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            *terms.entry(*k).or_insert_with(BigRational::zero) += c;
        }
        Ok(Self::from_index_map(self.lattice(), terms, prec))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let terms = self.terms.iter().map(|(k, v)| (*k, v * c)).collect();
        Self::from_index_map(self.lattice(), terms, self.prec)
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: Exponent) -> Result<Self> {
        let s = self.lattice().index(e)?;
        Ok(self.shift_index(s))
    }

    pub(crate) fn shift_index(&self, s: i64) -> Self {
        LaurentSeries {
            denom: self.denom,
            terms: self.terms.iter().map(|(k, v)| (k + s, v.clone())).collect(),
            prec: self.prec.map(|p| p + s),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.mul_with(other, Execution::default())
    }

    /// Cauchy product truncated to the propagated precision
    /// `min(prec_a + val_b, prec_b + val_a)`.
    pub fn mul_with(&self, other: &Self, exec: Execution) -> Result<Self> {
        self.check_lattice(other)?;
        let lat = self.lattice();
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(lat));
        }
        let (va, vb) = (self.val_bound().unwrap(), other.val_bound().unwrap());
        let prec = min_prec(self.prec.map(|p| p + vb), other.prec.map(|p| p + va));
        if self.terms.is_empty() || other.terms.is_empty() {
            return Ok(Self::from_index_map(lat, BTreeMap::new(), prec));
        }
        let a_max = *self.terms.keys().next_back().unwrap();
        let b_max = *other.terms.keys().next_back().unwrap();
        let top = prec.unwrap_or(a_max + b_max);
        if top < va + vb {
            return Ok(Self::from_index_map(lat, BTreeMap::new(), prec));
        }
        let a: Vec<(i64, &BigRational)> =
            self.terms.range(..=top - vb).map(|(k, c)| (*k, c)).collect();
        let b: Vec<(i64, &BigRational)> =
            other.terms.range(..=top - va).map(|(k, c)| (*k, c)).collect();

        // Work on the coarsest sublattice that carries both operands.
        let stride = a
            .iter()
            .map(|(k, _)| k - va)
            .chain(b.iter().map(|(k, _)| k - vb))
            .fold(0i64, |g, d| g.gcd(&d))
            .max(1);

        let (a_nums, a_den) = to_integers(a.iter().map(|(_, c)| *c));
        let (b_nums, b_den) = to_integers(b.iter().map(|(_, c)| *c));
        let a_idx: Vec<usize> = a.iter().map(|(k, _)| ((k - va) / stride) as usize).collect();
        let b_idx: Vec<usize> = b.iter().map(|(k, _)| ((k - vb) / stride) as usize).collect();

        // The sparser operand is walked term by term; the other is dense.
        let (sparse_idx, sparse_nums, dense_idx, dense_nums) = if a.len() <= b.len() {
            (a_idx, a_nums, b_idx, b_nums)
        } else {
            (b_idx, b_nums, a_idx, a_nums)
        };
        let dense_len = dense_idx.last().map_or(0, |&i| i + 1);
        let mut dense = vec![BigInt::zero(); dense_len];
        for (i, n) in dense_idx.into_iter().zip(dense_nums) {
            dense[i] = n;
        }

        let n_out = ((top - va - vb) / stride + 1) as usize;
        let out = exec.map_range(0, n_out as i64, |k| {
            let k = k as usize;
            let lo = k.saturating_sub(dense_len - 1);
            let start = sparse_idx.partition_point(|&s| s < lo);
            let mut acc = BigInt::zero();
            for (s, c) in sparse_idx[start..].iter().zip(&sparse_nums[start..]) {
                if *s > k {
                    break;
                }
                let d = &dense[k - s];
                if !d.is_zero() {
                    acc += c * d;
                }
            }
            acc
        });

        let den = a_den * b_den;
        let terms = out
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (va + vb + k as i64 * stride, BigRational::new(c, den.clone())))
            .collect();
        Ok(Self::from_index_map(lat, terms, prec))
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::one(self.lattice());
        for _ in 0..k {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplicative inverse known through `q^target`.
    ///
    /// Requires the valuation `v` to be known exactly and the operand's
    /// precision to reach `target + 2v`.
    pub fn invert(&self, target: Exponent) -> Result<Self> {
        let lat = self.lattice();
        self.invert_index(lat.floor_index(target))
    }

    pub(crate) fn invert_index(&self, t: i64) -> Result<Self> {
        let lat = self.lattice();
        if self.is_zero() {
            return Err(Error::ZeroSeries);
        }
        let Some(v) = self.val_index() else {
            return Err(Error::InsufficientPrecision {
                needed: lat.exponent(t),
                available: lat.exponent(self.prec.unwrap()),
            });
        };
        if let Some(p) = self.prec {
            if p < t + 2 * v {
                return Err(Error::InsufficientPrecision {
                    needed: lat.exponent(t + 2 * v),
                    available: lat.exponent(p),
                });
            }
        }
        let len = t + v + 1;
        if len <= 0 {
            return Ok(Self::from_index_map(lat, BTreeMap::new(), Some(t)));
        }
        let window: Vec<(i64, &BigRational)> =
            self.terms.range(..v + len).map(|(k, c)| (k - v, c)).collect();
        let stride = window.iter().fold(0i64, |g, (d, _)| g.gcd(d)).max(1);
        let n = ((len - 1) / stride + 1) as usize;
        let lead = window[0].1.clone();
        let w: Vec<(usize, BigRational)> = window[1..]
            .iter()
            .map(|(d, c)| ((d / stride) as usize, *c / &lead))
            .collect();

        // Inverse of 1 + w, by peeling off the leading term.
        let inv: Vec<BigRational> = if w.iter().all(|(_, c)| c.is_integer()) {
            let wi: Vec<(usize, BigInt)> = w.iter().map(|(i, c)| (*i, c.to_integer())).collect();
            let mut b: Vec<BigInt> = Vec::with_capacity(n);
            b.push(BigInt::one());
            for k in 1..n {
                let mut acc = BigInt::zero();
                for (i, c) in &wi {
                    if *i > k {
                        break;
                    }
                    let prev = &b[k - i];
                    if !prev.is_zero() {
                        acc -= c * prev;
                    }
                }
                b.push(acc);
            }
            b.into_iter().map(BigRational::from_integer).collect()
        } else {
            let mut b: Vec<BigRational> = Vec::with_capacity(n);
            b.push(BigRational::one());
            for k in 1..n {
                let mut acc = BigRational::zero();
                for (i, c) in &w {
                    if *i > k {
                        break;
                    }
                    acc -= c * &b[k - i];
                }
                b.push(acc);
            }
            b
        };
        let inv_lead = lead.recip();
        let terms = inv
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (-v + k as i64 * stride, c * &inv_lead))
            .collect();
        Ok(Self::from_index_map(lat, terms, Some(t)))
    }

    /// `self / den`, known through `q^prec`.
    pub fn div_to(&self, den: &Self, prec: Exponent) -> Result<Self> {
        let lat = self.lattice();
        let out = self.div_to_index(den, lat.floor_index(prec))?;
        out.require_prec(prec)?;
        Ok(out)
    }

    pub(crate) fn div_to_index(&self, den: &Self, p: i64) -> Result<Self> {
        self.check_lattice(den)?;
        let lat = self.lattice();
        if self.is_zero() {
            return Ok(Self::zero(lat));
        }
        if den.is_zero() {
            return Err(Error::ZeroSeries);
        }
        let Some(vn) = self.val_index() else {
            // Numerator unknown beyond its precision: so is the quotient.
            let vd = den.val_index().ok_or(Error::ZeroSeries)?;
            return Ok(Self::from_index_map(lat, BTreeMap::new(), self.prec.map(|q| q - vd)));
        };
        let inv = den.invert_index(p - vn)?;
        Ok(self.checked_mul(&inv)?.truncate_index(p))
    }

    /// The substitution `q -> q^m`.
    pub fn substitute_power(&self, m: u32) -> Self {
        let m = i64::from(m);
        LaurentSeries {
            denom: self.denom,
            terms: self.terms.iter().map(|(k, v)| (k * m, v.clone())).collect(),
            prec: self.prec.map(|p| p * m),
        }
    }

    /// The substitution `q -> q^2` followed by a move onto the lattice with
    /// half the denominator; lattice indices are unchanged.
    pub(crate) fn square_onto(&self, lat: Lattice) -> Result<Self> {
        if self.denom != 2 * lat.denom() {
            return Err(Error::LatticeMismatch { left: self.denom, right: 2 * lat.denom() });
        }
        Ok(LaurentSeries { denom: lat.denom(), terms: self.terms.clone(), prec: self.prec })
    }

    /// Smallest exponent `<= order` at which the two series differ, if any.
    pub fn first_mismatch(&self, other: &Self, order: Exponent) -> Result<Option<Mismatch>> {
        self.check_lattice(other)?;
        self.require_prec(order)?;
        other.require_prec(order)?;
        let lat = self.lattice();
        let o = lat.floor_index(order);
        let keys: std::collections::BTreeSet<i64> = self
            .terms
            .range(..=o)
            .chain(other.terms.range(..=o))
            .map(|(k, _)| *k)
            .collect();
        let zero = BigRational::zero();
        for k in keys {
            let l = self.terms.get(&k).unwrap_or(&zero);
            let r = other.terms.get(&k).unwrap_or(&zero);
            if l != r {
                return Ok(Some(Mismatch {
                    exponent: lat.exponent(k),
                    left: l.clone(),
                    right: r.clone(),
                }));
            }
        }
        Ok(None)
    }

    pub fn equal_mod(&self, other: &Self, order: Exponent) -> Result<bool> {
        Ok(self.first_mismatch(other, order)?.is_none())
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries {
            denom: self.denom,
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
            prec: self.prec,
        }
    }
}

impl Neg for LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&LaurentSeries> for &LaurentSeries {
            type Output = LaurentSeries;
            /// Panics on a lattice mismatch; use the `checked_` form to recover.
            fn $method(self, rhs: &LaurentSeries) -> LaurentSeries {
                self.$checked(rhs).expect("series on different lattices")
            }
        }
        impl $trait<LaurentSeries> for LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: LaurentSeries) -> LaurentSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lat = self.lattice();
        let mut first = true;
        for (k, c) in &self.terms {
            let e = lat.exponent(*k);
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (e.is_zero(), unit) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "q^{e}")?,
                (false, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        if let Some(p) = self.prec {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "O(q^{})", lat.exponent(p + 1))?;
        } else if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
