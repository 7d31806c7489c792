//! Exact truncated q-series: Pochhammer products, theta functions,
//! Hecke-type double sums, Appell-Lerch sums and Bailey pairs, together with
//! a catalog of mechanically checked mock theta function identities.
//!
//! All arithmetic is exact. A [`LaurentSeries`] knows its own precision, and
//! every builder takes the exponent through which its result must be exact.

pub mod bailey;
pub mod error;
pub mod exponent;
pub mod hecke;
pub mod mock;
pub mod par;
pub mod qprod;
pub mod report;
pub mod series;
pub mod summation;

pub use error::{Error, Result};
pub use exponent::{Exponent, Lattice};
pub use par::Execution;
pub use qprod::Monomial;
pub use report::VerificationReport;
pub use series::{LaurentSeries, Mismatch};
