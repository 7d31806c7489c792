//! Lossless JSON form of a truncated series: every number is a decimal
//! string, exponents as exact fractions.

use std::str::FromStr;

use mocktheta::{Error, Exponent, Lattice, LaurentSeries};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientDump {
    pub expr: String,
    /// Inclusive order as `"n"` or `"n/d"`.
    pub order: String,
    pub lattice_denom: u32,
    /// `[exp_num, exp_den, coeff_num, coeff_den]`, ascending exponent.
    pub coeffs: Vec<[String; 4]>,
}

#[derive(Debug, thiserror::Error)]
pub enum DumpError {
    #[error("malformed number {0:?}")]
    Number(String),
    #[error(transparent)]
    Series(#[from] Error),
}

fn fraction(s: &str) -> Result<(i64, i64), DumpError> {
    let bad = || DumpError::Number(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => Ok((n.parse().map_err(|_| bad())?, d.parse().map_err(|_| bad())?)),
        None => Ok((s.parse().map_err(|_| bad())?, 1)),
    }
}

fn exponent(num: &str, den: &str) -> Result<Exponent, DumpError> {
    let n: i64 = num.parse().map_err(|_| DumpError::Number(num.to_string()))?;
    let d: i64 = den.parse().map_err(|_| DumpError::Number(den.to_string()))?;
    if d == 0 {
        return Err(DumpError::Number(den.to_string()));
    }
    Ok(Exponent::new(n, d))
}

fn big(s: &str) -> Result<BigInt, DumpError> {
    BigInt::from_str(s).map_err(|_| DumpError::Number(s.to_string()))
}

impl CoefficientDump {
    pub fn from_series(expr: &str, order: Exponent, s: &LaurentSeries) -> Self {
        let coeffs = s
            .terms()
            .filter(|(e, _)| *e <= order)
            .map(|(e, c)| [e.numer().to_string(), e.denom().to_string(), c.numer().to_string(), c.denom().to_string()])
            .collect();
        CoefficientDump {
            expr: expr.to_string(),
            order: order.to_string(),
            lattice_denom: s.lattice().denom(),
            coeffs,
        }
    }

    /// The series known through `order` that this dump describes.
    pub fn to_series(&self) -> Result<LaurentSeries, DumpError> {
        let lat = Lattice::new(self.lattice_denom)?;
        let (on, od) = fraction(&self.order)?;
        if od == 0 {
            return Err(DumpError::Number(self.order.clone()));
        }
        let terms = self
            .coeffs
            .iter()
            .map(|[en, ed, cn, cd]| {
                let d = big(cd)?;
                if d == BigInt::from(0) {
                    return Err(DumpError::Number(cd.clone()));
                }
                Ok((exponent(en, ed)?, BigRational::new(big(cn)?, d)))
            })
            .collect::<Result<Vec<_>, DumpError>>()?;
        Ok(LaurentSeries::from_terms(lat, terms, Some(Exponent::new(on, od)))?)
    }
}
