//! Frozen coefficient files under `tests/golden/`.

use std::path::PathBuf;

use mocktheta::{Exponent, LaurentSeries};
use num_rational::BigRational;
use serde_json::{json, Value};

use super::oracle::Dense;

pub fn path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

/// Nonzero coefficients `(exponent, rational as string)` through `order`.
pub struct Golden {
    pub name: String,
    pub order: i64,
    pub coeffs: Vec<(i64, String)>,
}

/// Writes `dense / divisor` as a golden file.
pub fn save(name: &str, dense: &Dense, divisor: i128) {
    let coeffs: Vec<Value> = dense
        .0
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(e, c)| {
            let r = BigRational::new((*c).into(), divisor.into());
            json!([e, r.to_string()])
        })
        .collect();
    let v = json!({ "name": name, "order": dense.order(), "coeffs": coeffs });
    std::fs::write(path(name), serde_json::to_string_pretty(&v).unwrap() + "\n").unwrap();
}

pub fn load(name: &str) -> Golden {
    let text = std::fs::read_to_string(path(name)).unwrap_or_else(|e| panic!("golden {name}: {e}"));
    let v: Value = serde_json::from_str(&text).unwrap();
    let coeffs = v["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p[0].as_i64().unwrap(), p[1].as_str().unwrap().to_string()))
        .collect();
    Golden { name: v["name"].as_str().unwrap().to_string(), order: v["order"].as_i64().unwrap(), coeffs }
}

impl Golden {
    /// `Ok` iff `s` has exactly these coefficients through `self.order`.
    pub fn compare(&self, s: &LaurentSeries) -> Result<(), String> {
        let order = Exponent::int(self.order);
        s.require_prec(order).map_err(|e| format!("{}: {e}", self.name))?;
        let got: Vec<(i64, String)> = s
            .terms()
            .filter(|(e, _)| *e <= order)
            .map(|(e, c)| {
                assert!(e.is_integer(), "{}: fractional exponent {e}", self.name);
                (e.numer(), c.to_string())
            })
            .collect();
        if got == self.coeffs {
            return Ok(());
        }
        let first = got
            .iter()
            .zip(&self.coeffs)
            .find(|(a, b)| a != b)
            .map(|(a, b)| format!("got q^{} {}, golden q^{} {}", a.0, a.1, b.0, b.1))
            .unwrap_or_else(|| format!("{} terms vs {} golden terms", got.len(), self.coeffs.len()));
        Err(format!("{}: {first}", self.name))
    }
}
