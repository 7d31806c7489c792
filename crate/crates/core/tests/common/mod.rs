#![allow(dead_code)]

pub mod golden;
pub mod oracle;

use mocktheta::hecke::HeckeParams;
use mocktheta::Monomial;

/// `(golden name, sign, exponent, base)` of the theta function instances.
pub const J_INSTANCES: [(&str, i128, usize, usize); 6] = [
    ("j_q_q3", 1, 1, 3),
    ("j_m1_q", -1, 0, 1),
    ("j_mq_q4", -1, 1, 4),
    ("j_q2_q5", 1, 2, 5),
    ("j_mq3_q8", -1, 3, 8),
    ("j_q5_q48", 1, 5, 48),
];

/// `(golden name, (a, b, c), sign of x, exponent of x, base)` with `y = x`.
pub const F_INSTANCES: [(&str, (i64, i64, i64), i128, i64, i64); 4] = [
    ("f353_q5", (3, 5, 3), 1, 5, 1),
    ("f131", (1, 3, 1), -1, 2, 1),
    ("f121", (1, 2, 1), -1, 7, 4),
    ("f353_q3", (3, 5, 3), 1, 3, 1),
];

pub fn f_args(i: usize) -> (HeckeParams, Monomial, i64) {
    let (_, (a, b, c), sx, ex, base) = F_INSTANCES[i];
    (HeckeParams::new(a, b, c).unwrap(), Monomial::new(sx as i64, ex), base)
}

pub fn j_arg(i: usize) -> (Monomial, i64) {
    let (_, s, e, base) = J_INSTANCES[i];
    (Monomial::new(s as i64, e as i64), base as i64)
}

/// Orders of the frozen files.
pub const SERIES_ORDER: usize = 100;
pub const PARTITION_ORDER: usize = 30;
