use thiserror::Error;

use crate::exponent::Exponent;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lattice mismatch: exponent denominators {left} and {right}")]
    LatticeMismatch { left: u32, right: u32 },

    #[error("exponent {exponent} is not on the lattice (1/{denom})Z")]
    OffLattice { exponent: Exponent, denom: u32 },

    #[error("lattice denominator must be positive")]
    BadLattice,

    #[error("cannot invert the zero series")]
    ZeroSeries,

    #[error("insufficient precision: need coefficients through q^{needed}, have through q^{available}")]
    InsufficientPrecision { needed: Exponent, available: Exponent },

    #[error("infinite product ({factor}; q^{base})_inf is not a power series")]
    NotPowerSeries { factor: String, base: Exponent },

    #[error("non-generic arguments: {0}")]
    NonGeneric(String),

    #[error("zero denominator: {0}")]
    ZeroDenominator(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("partial-sum averages did not stabilize through q^{order} within {cap} terms")]
    NoStabilization { order: Exponent, cap: u64 },

    #[error("series has no valuation-based cutoff and does not converge: {0}")]
    Divergent(String),
}
