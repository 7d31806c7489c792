//! Exact exponents of `q` and the global exponent lattice `(1/D)Z`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational exponent of `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponent(Rational64);

impl Exponent {
    pub const ZERO: Exponent = Exponent(Rational64::new_raw(0, 1));

    pub fn new(numer: i64, denom: i64) -> Self {
        Exponent(Rational64::new(numer, denom))
    }

    pub fn int(n: i64) -> Self {
        Exponent(Rational64::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn floor(&self) -> i64 {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> i64 {
        self.0.ceil().to_integer()
    }

    /// Fractional part in `[0, 1)`.
    pub fn fract(&self) -> Exponent {
        *self - Exponent::int(self.floor())
    }

    pub fn as_rational(&self) -> Rational64 {
        self.0
    }
}

impl From<i64> for Exponent {
    fn from(n: i64) -> Self {
        Exponent::int(n)
    }
}

impl From<i32> for Exponent {
    fn from(n: i32) -> Self {
        Exponent::int(n as i64)
    }
}

impl From<Rational64> for Exponent {
    fn from(r: Rational64) -> Self {
        Exponent(r)
    }
}

impl Add for Exponent {
    type Output = Exponent;
    fn add(self, rhs: Exponent) -> Exponent {
        Exponent(self.0 + rhs.0)
    }
}

impl Sub for Exponent {
    type Output = Exponent;
    fn sub(self, rhs: Exponent) -> Exponent {
        Exponent(self.0 - rhs.0)
    }
}

impl Neg for Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        Exponent(-self.0)
    }
}

impl Mul for Exponent {
    type Output = Exponent;
    fn mul(self, rhs: Exponent) -> Exponent {
        Exponent(self.0 * rhs.0)
    }
}

impl Mul<i64> for Exponent {
    type Output = Exponent;
    fn mul(self, rhs: i64) -> Exponent {
        Exponent(self.0 * rhs)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// The exponent lattice `(1/D)Z` shared by every series in one computation.
///
/// Series store exponents as integer indices `e * D`; mixing series built on
/// different lattices is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Lattice(u32);

impl Default for Lattice {
    fn default() -> Self {
        Lattice(2)
    }
}

impl Lattice {
    pub fn new(denom: u32) -> Result<Self> {
        if denom == 0 {
            return Err(Error::BadLattice);
        }
        Ok(Lattice(denom))
    }

    pub fn denom(&self) -> u32 {
        self.0
    }

    /// Lattice index of an exponent that must lie on the lattice.
    pub fn index(&self, e: Exponent) -> Result<i64> {
        let scaled = e.as_rational() * i64::from(self.0);
        if !scaled.is_integer() {
            return Err(Error::OffLattice { exponent: e, denom: self.0 });
        }
        Ok(scaled.to_integer())
    }

    /// Largest lattice index whose exponent is `<= e`.
    pub fn floor_index(&self, e: Exponent) -> i64 {
        (e.as_rational() * i64::from(self.0)).floor().to_integer()
    }

    pub fn exponent(&self, index: i64) -> Exponent {
        Exponent::new(index, i64::from(self.0))
    }
}
