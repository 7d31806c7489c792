//! Command implementations and the JSON coefficient dump format behind the
//! `mocktheta` binary.

pub mod dump;

use std::io::Write;

use mocktheta::mock::{self, CHECKS, SERIES};
use mocktheta::{Error, Execution, Exponent, Lattice, VerificationReport};
use serde::Serialize;

pub use dump::CoefficientDump;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const EVAL: i32 = 3;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::UnknownName(_) | Error::BadLattice => exit::USAGE,
        _ => exit::EVAL,
    }
}

/// `expand <name>`: prints the coefficients of a named series through `q^order`.
pub fn cmd_expand(name: &str, order: i64, format: Format, denom: u32, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let lat = match Lattice::new(denom) {
        Ok(l) => l,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit::USAGE;
        }
    };
    let order = Exponent::int(order);
    let series = match mock::expand(name, lat, order, Execution::default()) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return error_code(&e);
        }
    };
    let res = match format {
        Format::Text => series.terms().try_for_each(|(e, c)| writeln!(out, "q^{e}: {c}")),
        Format::Json => {
            let d = CoefficientDump::from_series(name, order, &series);
            writeln!(out, "{}", serde_json::to_string(&d).expect("dump serializes"))
        }
    };
    match res {
        Ok(()) => exit::OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit::EVAL
        }
    }
}

#[derive(Serialize)]
struct MismatchJson {
    exponent: String,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct ReportJson {
    name: String,
    order: String,
    passed: bool,
    case: Option<String>,
    mismatch: Option<MismatchJson>,
    elapsed_ms: f64,
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        ReportJson {
            name: r.name.clone(),
            order: r.order.to_string(),
            passed: r.passed,
            case: r.case.clone(),
            mismatch: r.mismatch.as_ref().map(|m| MismatchJson {
                exponent: m.exponent.to_string(),
                lhs: m.left.to_string(),
                rhs: m.right.to_string(),
            }),
            elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
        }
    }
}

/// `verify <name|all>`: runs checks and prints one report per check.
pub fn cmd_verify(name: &str, order: i64, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let lat = Lattice::default();
    let order = Exponent::int(order);
    let exec = Execution::default();
    let results = if name == "all" {
        mock::run_all(lat, order, exec)
    } else {
        vec![mock::check(name, lat, order, exec)]
    };
    let mut reports = Vec::new();
    let mut code = exit::OK;
    for r in results {
        match r {
            Ok(r) => {
                if !r.passed {
                    code = code.max(exit::VERIFY_FAILED);
                }
                reports.push(r);
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                let c = error_code(&e);
                if c == exit::USAGE {
                    return c;
                }
                code = code.max(c);
            }
        }
    }
    let res = match format {
        Format::Text => reports.iter().try_for_each(|r| writeln!(out, "{r}")),
        Format::Json => {
            let v: Vec<ReportJson> = reports.iter().map(ReportJson::from).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("reports serialize"))
        }
    };
    if let Err(e) = res {
        let _ = writeln!(err, "error: {e}");
        return exit::EVAL;
    }
    code
}

#[derive(Serialize)]
struct ListEntry {
    name: &'static str,
    description: &'static str,
    anchor: &'static str,
}

/// `list`: the verifiable checks with descriptions and anchors, or with
/// `series` the names accepted by `expand`.
pub fn cmd_list(format: Format, series: bool, out: &mut dyn Write) -> i32 {
    let entries: Vec<ListEntry> = if series {
        SERIES.iter().map(|s| ListEntry { name: s.name, description: s.description, anchor: "" }).collect()
    } else {
        CHECKS
            .iter()
            .map(|c| ListEntry { name: c.name, description: c.description, anchor: c.anchor })
            .collect()
    };
    let res = match format {
        Format::Text => {
            let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
            entries.iter().try_for_each(|e| {
                if e.anchor.is_empty() {
                    writeln!(out, "{:width$}  {}", e.name, e.description)
                } else {
                    writeln!(out, "{:width$}  {}  [{}]", e.name, e.description, e.anchor)
                }
            })
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&entries).expect("list serializes")),
    };
    match res {
        Ok(()) => exit::OK,
        Err(_) => exit::EVAL,
    }
}
