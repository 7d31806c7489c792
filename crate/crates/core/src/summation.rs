//! Outer-summation cutoffs and averaged partial sums.

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::par::Execution;
use crate::series::LaurentSeries;

/// A quadratic lower bound `quad*n^2 + lin*n + constant` on the valuation of
/// the `n`-th term of a sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValBound {
    pub quad: Rational64,
    pub lin: Rational64,
    pub constant: Rational64,
}

impl ValBound {
    pub fn new(quad: Rational64, lin: Rational64, constant: Rational64) -> Self {
        ValBound { quad, lin, constant }
    }

    pub fn constant(c: i64) -> Self {
        ValBound::new(Rational64::zero(), Rational64::zero(), Rational64::from_integer(c))
    }

    pub fn eval(&self, n: u64) -> Rational64 {
        let n = Rational64::from_integer(n as i64);
        self.quad * n * n + self.lin * n + self.constant
    }

    pub fn plus(&self, other: &ValBound) -> ValBound {
        ValBound::new(
            self.quad + other.quad,
            self.lin + other.lin,
            self.constant + other.constant,
        )
    }

    /// Smallest `N` such that every term with index `n >= N` has valuation
    /// above `prec`. `None` when the bound does not grow.
    pub fn cutoff(&self, prec: Exponent) -> Option<u64> {
        let prec = prec.as_rational();
        let start = if self.quad.is_positive() {
            let vertex = -self.lin / (self.quad * 2);
            vertex.ceil().to_integer().max(0) as u64
        } else if self.quad.is_zero() && self.lin.is_positive() {
            0
        } else {
            return None;
        };
        (start..).find(|&n| self.eval(n) > prec)
    }

    /// Minimum of the bound over `n >= 0`, if it is bounded below.
    pub fn min_over_nonneg(&self) -> Option<Rational64> {
        if self.quad.is_positive() {
            let vertex = -self.lin / (self.quad * 2);
            let lo = vertex.floor().to_integer().max(0) as u64;
            Some(self.eval(lo).min(self.eval(lo + 1)).min(self.eval(0)))
        } else if self.quad.is_zero() && !self.lin.is_negative() {
            Some(self.eval(0))
        } else {
            None
        }
    }
}

/// Sums `term(0) + term(1) + ...` through `q^prec`, stopping at the first
/// index where `bound` guarantees the remaining terms vanish to that order.
pub fn sum_with_cutoff<F>(
    lat: crate::exponent::Lattice,
    bound: &ValBound,
    prec: Exponent,
    exec: Execution,
    term: F,
) -> Result<LaurentSeries>
where
    F: Fn(u64) -> Result<LaurentSeries> + Sync + Send,
{
    let n_max = bound
        .cutoff(prec)
        .ok_or_else(|| Error::Divergent(format!("valuation bound {bound:?} does not grow")))?;
    let terms = exec.map_range(0, n_max as i64, |n| term(n as u64));
    let mut acc = LaurentSeries::zero(lat).truncate(prec);
    for t in terms {
        acc = acc.checked_add(&t?)?;
    }
    acc.require_prec(prec)?;
    Ok(acc)
}

/// Value of a series whose even and odd partial sums converge separately:
/// the average `A_K = (S_{2K} + S_{2K+1}) / 2` at the first `K >= prec/2 + 2`
/// with `A_K = A_{K+1} = A_{K+2}` through `q^prec`.
pub fn averaged_partial_sums<F>(
    lat: crate::exponent::Lattice,
    prec: Exponent,
    cap: u64,
    exec: Execution,
    term: F,
) -> Result<LaurentSeries>
where
    F: Fn(u64) -> Result<LaurentSeries> + Sync + Send,
{
    const BATCH: u64 = 16;
    let k_min = (prec.as_rational() / 2).ceil().to_integer().max(0) as u64 + 2;
    let half = num_rational::BigRational::new(1.into(), 2.into());
    let mut partial: Vec<LaurentSeries> = Vec::new();
    let mut running = LaurentSeries::zero(lat).truncate(prec);
    let mut averages: Vec<LaurentSeries> = Vec::new();
    loop {
        let k = averages.len() as u64;
        // A_k needs S_{2k+1}.
        while (partial.len() as u64) < 2 * k + 2 {
            let lo = partial.len() as u64;
            if lo >= cap {
                return Err(Error::NoStabilization { order: prec, cap });
            }
            let hi = (lo + BATCH).min(cap);
            let batch = exec.map_range(lo as i64, hi as i64, |n| term(n as u64));
            for t in batch {
                let t = t?;
                t.require_prec(prec)?;
                running = running.checked_add(&t)?;
                partial.push(running.clone());
            }
        }
        let kk = k as usize;
        let avg = partial[2 * kk].checked_add(&partial[2 * kk + 1])?.scale(&half);
        averages.push(avg);
        if k >= k_min + 2 {
            let base = (k - 2) as usize;
            let a0 = &averages[base];
            if a0.equal_mod(&averages[base + 1], prec)? && a0.equal_mod(&averages[base + 2], prec)? {
                return Ok(a0.truncate(prec));
            }
        }
    }
}
