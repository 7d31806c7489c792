use std::fmt;
use std::time::Duration;

use crate::exponent::Exponent;
use crate::series::Mismatch;

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub name: String,
    pub order: Exponent,
    pub passed: bool,
    /// First disagreement; present iff the check failed.
    pub mismatch: Option<Mismatch>,
    /// Which instance of a multi-case check failed, if any.
    pub case: Option<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn pass(name: impl Into<String>, order: Exponent, elapsed: Duration) -> Self {
        VerificationReport { name: name.into(), order, passed: true, mismatch: None, case: None, elapsed }
    }

    pub fn fail(
        name: impl Into<String>,
        order: Exponent,
        mismatch: Mismatch,
        case: Option<String>,
        elapsed: Duration,
    ) -> Self {
        VerificationReport {
            name: name.into(),
            order,
            passed: false,
            mismatch: Some(mismatch),
            case,
            elapsed,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "PASS {} (through q^{})", self.name, self.order)
        } else {
            write!(f, "FAIL {} (through q^{})", self.name, self.order)?;
            if let Some(case) = &self.case {
                write!(f, " [{case}]")?;
            }
            if let Some(m) = &self.mismatch {
                write!(f, ": q^{} lhs {} rhs {}", m.exponent, m.left, m.right)?;
            }
            Ok(())
        }
    }
}
