//! Named identity checks and named series.
//!
//! Every check evaluates one or more `(lhs, rhs)` cases through a common
//! order and reports the first coefficient where a case disagrees.

use std::time::Instant;

use crate::bailey::{bailey_step, builtin_pair, limit_instance, pair_relation_rhs, StepSpec, BUILTIN_PAIRS};
use crate::error::{Error, Result};
use crate::exponent::{Exponent, Lattice};
use crate::hecke::{f_eval, f_via_quad_split, f_via_reflection, g_eval, m_eval, theta_np, AppellLerch, HeckeParams};
use crate::par::Execution;
use crate::qprod::{jacobi_j_sum, poch_infinite, Factor, Monomial, ThetaQuotient};
use crate::report::VerificationReport;
use crate::series::LaurentSeries;

use super::*;

/// One side-by-side comparison inside a check.
pub struct Case {
    pub label: String,
    pub lhs: LaurentSeries,
    pub rhs: LaurentSeries,
}

impl Case {
    fn new(label: impl Into<String>, lhs: LaurentSeries, rhs: LaurentSeries) -> Self {
        Case { label: label.into(), lhs, rhs }
    }
}

type CaseFn = fn(Lattice, Exponent, Execution) -> Result<Vec<Case>>;

/// A registered identity check.
pub struct CheckEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub anchor: &'static str,
    cases: CaseFn,
}

impl CheckEntry {
    pub fn cases(&self, lat: Lattice, order: Exponent, exec: Execution) -> Result<Vec<Case>> {
        (self.cases)(lat, order, exec)
    }
}

macro_rules! entry {
    ($name:expr, $desc:expr, $anchor:expr, $f:expr) => {
        CheckEntry { name: $name, description: $desc, anchor: $anchor, cases: $f }
    };
}

/// All checks, in reporting order.
pub static CHECKS: &[CheckEntry] = &[
    entry!("thm_main_1", "W1 equals its Appell-Lerch form", "main theorem, W1", |l, o, x| thm_main(1, l, o, x)),
    entry!("thm_main_2", "W2 equals its Appell-Lerch form", "main theorem, W2", |l, o, x| thm_main(2, l, o, x)),
    entry!("thm_main_3", "W3 equals its Appell-Lerch form", "main theorem, W3", |l, o, x| thm_main(3, l, o, x)),
    entry!("thm_main_4", "W4 equals its Appell-Lerch form", "main theorem, W4", |l, o, x| thm_main(4, l, o, x)),
    entry!("fform_1", "W1 = -2q^2/(q)_inf f_{3,5,3}(q^5,q^5,q)", "proof of the main theorem, W1", |l, o, x| fform_case(1, l, o, x)),
    entry!("fform_2", "W2 = q(q;q^2)_inf/(q^2;q^2)_inf f_{1,3,1}(-q^2,-q^2,q)", "proof of the main theorem, W2", |l, o, x| fform_case(2, l, o, x)),
    entry!("fform_3", "W3 = 2q^3(q;q^2)_inf/(q^2;q^2)_inf f_{1,2,1}(-q^7,-q^7,q^4)", "proof of the main theorem, W3", |l, o, x| fform_case(3, l, o, x)),
    entry!("fform_4", "W4 = f_{3,5,3}(q^3,q^3,q)/(q)_inf", "proof of the main theorem, W4", |l, o, x| fform_case(4, l, o, x)),
    entry!("hm_decomp_1", "f_{3,5,3}(q^5,q^5,q) = g + theta_{3,2}", "Hecke-type double sum decomposition", |l, o, _| hm_decomp(1, l, o)),
    entry!("hm_decomp_2", "f_{1,3,1}(-q^2,-q^2,q) = g + theta_{1,2}", "Hecke-type double sum decomposition", |l, o, _| hm_decomp(2, l, o)),
    entry!("hm_decomp_3", "f_{1,2,1}(-q^7,-q^7,q^4) = g + theta_{1,1}", "Hecke-type double sum decomposition", |l, o, _| hm_decomp(3, l, o)),
    entry!("hm_decomp_4", "f_{3,5,3}(q^3,q^3,q) = g + theta_{3,2}", "Hecke-type double sum decomposition", |l, o, _| hm_decomp(4, l, o)),
    entry!("corollary", "W2 = 2q T1 - q S1", "corollary", corollary),
    entry!("mixed_mock", "sum_{n>=1} q^{n^2} b_n = -q omega(q)/(-q)_inf", "mixed mock theta function", mixed_mock),
    entry!("garvan", "theta identity equivalent to the corollary", "proof of the corollary", garvan),
    entry!("appell_props", "m(x,q,z) inversion and change of z", "Appell-Lerch sum properties", appell_props),
    entry!("j_props", "quasi-periodicity and reflection of j(x,q)", "theta function properties", j_props),
    entry!("fprops", "four-term dissection and reflection of f_{a,b,c}", "Hecke-type double sum properties", fprops),
    entry!("bailey_pairs", "the four built-in Bailey pairs, n <= 8", "Bailey pairs", bailey_pairs),
    entry!("bailey_lemma", "Bailey steps (-1,inf) and (-q,inf) produce the primed pairs, n <= 6", "Bailey lemma", bailey_lemma),
    entry!("limit_instances", "both sides of the limiting Bailey lemma", "limiting Bailey lemma", limit_instances),
];

fn find(name: &str) -> Result<&'static CheckEntry> {
    CHECKS
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Runs the named check through `q^order`.
pub fn check(name: &str, lat: Lattice, order: Exponent, exec: Execution) -> Result<VerificationReport> {
    check_with(name, lat, order, exec, &|s| Ok(s))
}

/// Runs the named check with `perturb` applied to every right side.
pub fn check_with(
    name: &str,
    lat: Lattice,
    order: Exponent,
    exec: Execution,
    perturb: &(dyn Fn(LaurentSeries) -> Result<LaurentSeries> + Sync),
) -> Result<VerificationReport> {
    let entry = find(name)?;
    let start = Instant::now();
    for case in entry.cases(lat, order, exec)? {
        let rhs = perturb(case.rhs)?;
        if let Some(m) = case.lhs.first_mismatch(&rhs, order)? {
            return Ok(VerificationReport::fail(name, order, m, Some(case.label), start.elapsed()));
        }
    }
    Ok(VerificationReport::pass(name, order, start.elapsed()))
}

/// Runs every check concurrently; results come back in catalog order.
pub fn run_all(lat: Lattice, order: Exponent, exec: Execution) -> Vec<Result<VerificationReport>> {
    let names: Vec<&str> = CHECKS.iter().map(|c| c.name).collect();
    exec.map(names, |n| check(n, lat, order, exec))
}

fn thm_main(i: u8, lat: Lattice, order: Exponent, exec: Execution) -> Result<Vec<Case>> {
    Ok(vec![Case::new(format!("W{i}"), w(i, lat, order, exec)?, rhs_theorem_main(i, lat, order)?)])
}

fn fform_case(i: u8, lat: Lattice, order: Exponent, exec: Execution) -> Result<Vec<Case>> {
    Ok(vec![Case::new(format!("W{i}"), w(i, lat, order, exec)?, fform(i, lat, order)?)])
}

/// `(n, p)` of the theta correction for each Hecke instance.
fn theta_indices(i: u8) -> (i64, i64) {
    match i {
        1 | 4 => (3, 2),
        2 => (1, 2),
        _ => (1, 1),
    }
}

fn hm_decomp(i: u8, lat: Lattice, order: Exponent) -> Result<Vec<Case>> {
    let (p, x, base) = hecke_instance(i)?;
    let (n, pp) = theta_indices(i);
    let m1 = Monomial::MINUS_ONE;
    let f = f_eval(lat, p, x, x, base, order)?;
    let g = g_eval(lat, p, x, x, base, m1, m1, order)?;
    let t = theta_np(lat, n, pp, x, x, base, order)?;
    Ok(vec![Case::new(format!("f_{{{},{},{}}}({x},{x},q^{base})", p.a, p.b, p.c), f, g.checked_add(&t)?)])
}

fn corollary(lat: Lattice, order: Exponent, exec: Execution) -> Result<Vec<Case>> {
    let q = Exponent::int(1);
    let t = t1(lat, order - q, exec)?.shift(q)?.scale(&int(2));
    let s = s1(lat, order - q, exec)?.shift(q)?;
    Ok(vec![Case::new("W2", w2(lat, order, exec)?, t.checked_sub(&s)?)])
}

fn mixed_mock(lat: Lattice, order: Exponent, exec: Execution) -> Result<Vec<Case>> {
    let den = [(Factor::poch(Monomial::neg_q(1), 1), 1)];
    let rhs = scaled_quotient(lat, -1, Monomial::q(1), &[], &den, |p| omega(lat, p, exec), order)?;
    Ok(vec![Case::new("sum q^{n^2} b_n", mixed_mock_sum(lat, order, exec)?, rhs)])
}

fn garvan(lat: Lattice, order: Exponent, _: Execution) -> Result<Vec<Case>> {
    let (q, nq, m1) = (Monomial::q, Monomial::neg_q, Monomial::MINUS_ONE);
    let theta = |p| theta_np(lat, 1, 2, nq(2), nq(2), 1, p);
    let corr = scaled_quotient(lat, 2, q(1), &[], &[(Factor::theta(m1, 1), 1)], theta, order)?;
    let lhs = eighth_order_quotient(lat, order)?.checked_add(&corr)?;
    let rhs = ThetaQuotient::new(-2, Monomial::ONE)
        .times(Factor::theta(q(8), 24), 3)
        .times(Factor::theta(nq(6), 8), 1)
        .over(Factor::theta(q(6), 8), 1)
        .over(Factor::theta(m1, 8), 1)
        .over(Factor::theta(nq(7), 8), 1)
        .eval(lat, order)?;
    Ok(vec![Case::new("theta identity", lhs, rhs)])
}

/// `(x, base, z, z0)` for the Appell-Lerch property checks.
pub fn appell_instances() -> Vec<(Monomial, i64, Monomial, Monomial)> {
    let (q, nq) = (Monomial::q, Monomial::neg_q);
    let h = |n| Exponent::new(n, 2);
    let m1 = Monomial::MINUS_ONE;
    vec![
        (nq(17), 48, m1, nq(5)),
        (nq(1), 48, m1, q(7)),
        (nq(1), 8, m1, nq(3)),
        (nq(1), 12, m1, q(5)),
        (nq(5), 48, nq(2), m1),
        (Monomial::q(h(1)), 2, Monomial::neg_q(h(1)), Monomial::neg_q(h(3))),
    ]
}

fn appell_props(lat: Lattice, order: Exponent, _: Execution) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for (x, base, z, z0) in appell_instances() {
        let b = Exponent::int(base);
        let lhs = m_eval(lat, &AppellLerch::new(x, base, z)?, order)?;
        let inv = x.inv();
        let flipped = inv.apply(&m_eval(lat, &AppellLerch::new(inv, base, z.inv())?, order - inv.exp())?)?;
        cases.push(Case::new(format!("inversion m({x},q^{base},{z})"), lhs.clone(), flipped.truncate(order)));
        let moved = m_eval(lat, &AppellLerch::new(x, base, z0)?, order)?;
        let correction = ThetaQuotient::new(1, z0)
            .times(Factor::theta(Monomial::q(b), b * 3), 3)
            .times(Factor::theta(z / z0, b), 1)
            .times(Factor::theta(x * z * z0, b), 1)
            .over(Factor::theta(z0, b), 1)
            .over(Factor::theta(z, b), 1)
            .over(Factor::theta(x * z0, b), 1)
            .over(Factor::theta(x * z, b), 1)
            .eval(lat, order)?;
        cases.push(Case::new(format!("change of z m({x},q^{base},{z}) to z0 = {z0}"), lhs, moved.checked_add(&correction)?));
    }
    Ok(cases)
}

/// `(x, base, n)` grid for the theta function property checks.
pub fn j_instances() -> Vec<(Monomial, Exponent, i64)> {
    let h = |n| Exponent::new(n, 2);
    let xs = [
        Monomial::q(h(1)),
        Monomial::neg_q(h(3)),
        Monomial::neg_q(h(-5)),
        Monomial::q(h(7)),
        Monomial::MINUS_ONE,
    ];
    let mut out = Vec::new();
    for x in xs {
        for base in [Exponent::int(1), Exponent::int(2)] {
            for n in [1, -2] {
                out.push((x, base, n));
            }
        }
    }
    out
}

fn j_props(lat: Lattice, order: Exponent, _: Execution) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for (x, base, n) in j_instances() {
        let lhs = jacobi_j_sum(lat, Monomial::q(base * n) * x, base, order)?;
        let mono = Monomial::new(if n % 2 == 0 { 1 } else { -1 }, base * (-(n * (n - 1) / 2))) * x.pow(-n);
        let rhs = mono.apply(&jacobi_j_sum(lat, x, base, order - mono.exp())?)?.truncate(order);
        cases.push(Case::new(format!("j(q^{}*{x}, q^{base})", base * n), lhs, rhs));
        if n == 1 {
            let j = jacobi_j_sum(lat, x, base, order)?;
            let refl = jacobi_j_sum(lat, Monomial::q(base) / x, base, order)?;
            let mono = -x;
            let inv = mono.apply(&jacobi_j_sum(lat, x.inv(), base, order - mono.exp())?)?.truncate(order);
            cases.push(Case::new(format!("j({x}, q^{base}) = j(q^{base}/x)"), j.clone(), refl));
            cases.push(Case::new(format!("j({x}, q^{base}) = -x j(1/x)"), j, inv));
        }
    }
    Ok(cases)
}

fn fprops(lat: Lattice, order: Exponent, _: Execution) -> Result<Vec<Case>> {
    let p = HeckeParams::new(3, 5, 3)?;
    let mut cases = Vec::new();
    for x in [Monomial::q(5), Monomial::q(3)] {
        let f = f_eval(lat, p, x, x, 1, order)?;
        cases.push(Case::new(format!("dissection f_{{3,5,3}}({x},{x},q)"), f.clone(), f_via_quad_split(lat, p, x, x, 1, order)?));
        cases.push(Case::new(format!("reflection f_{{3,5,3}}({x},{x},q)"), f, f_via_reflection(lat, p, x, x, 1, order)?));
    }
    Ok(cases)
}

fn bailey_pairs(lat: Lattice, order: Exponent, exec: Execution) -> Result<Vec<Case>> {
    let mut jobs = Vec::new();
    for name in BUILTIN_PAIRS {
        for n in 0..=8u64 {
            jobs.push((name, n));
        }
    }
    exec.map(jobs, |(name, n)| {
        let p = builtin_pair(name)?;
        Ok(Case::new(format!("{name} n = {n}"), p.beta(n, lat, order)?, pair_relation_rhs(&p, n, lat, order)?))
    })
    .into_iter()
    .collect()
}

fn bailey_lemma(lat: Lattice, order: Exponent, exec: Execution) -> Result<Vec<Case>> {
    let mut jobs = Vec::new();
    for (from, spec, to) in [("BK1", StepSpec::MinusOneInf, "L1prime"), ("BKq", StepSpec::MinusQInf, "L2prime")] {
        for n in 0..=6u64 {
            jobs.push((from, spec, to, n));
        }
    }
    let nested: Vec<Result<Vec<Case>>> = exec.map(jobs, |(from, spec, to, n)| {
        let stepped = bailey_step(&builtin_pair(from)?, spec)?;
        let target = builtin_pair(to)?;
        Ok(vec![
            Case::new(format!("alpha {to} n = {n}"), stepped.alpha(n, lat, order)?, target.alpha(n, lat, order)?),
            Case::new(format!("beta {to} n = {n}"), stepped.beta(n, lat, order)?, target.beta(n, lat, order)?),
        ])
    });
    let mut out = Vec::new();
    for v in nested {
        out.extend(v?);
    }
    Ok(out)
}

/// The `(pair, spec)` combinations with a convergent right side.
pub const LIMIT_INSTANCES: [(&str, StepSpec); 5] = [
    ("BK1", StepSpec::InfInf),
    ("L1prime", StepSpec::InfInf),
    ("L2prime", StepSpec::InfInf),
    ("L1prime", StepSpec::SqrtPair),
    ("L1prime", StepSpec::QInfSquared),
];

fn limit_instances(lat: Lattice, order: Exponent, exec: Execution) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for (name, spec) in LIMIT_INSTANCES {
        let (l, r) = limit_instance(&builtin_pair(name)?, spec, lat, order, exec)?;
        out.push(Case::new(format!("{name} {spec}"), l, r));
    }
    Ok(out)
}

type SeriesFn = fn(Lattice, Exponent, Execution) -> Result<LaurentSeries>;

/// A named series available to `expand`.
pub struct SeriesEntry {
    pub name: &'static str,
    pub description: &'static str,
    eval: SeriesFn,
}

impl SeriesEntry {
    pub fn eval(&self, lat: Lattice, order: Exponent, exec: Execution) -> Result<LaurentSeries> {
        (self.eval)(lat, order, exec)
    }
}

fn appell_minus_one(lat: Lattice, a: i64, base: i64, order: Exponent) -> Result<LaurentSeries> {
    m_eval(lat, &AppellLerch::new(Monomial::neg_q(a), base, Monomial::MINUS_ONE)?, order)
}

fn hecke_series(i: u8, lat: Lattice, order: Exponent) -> Result<LaurentSeries> {
    let (p, x, base) = hecke_instance(i)?;
    f_eval(lat, p, x, x, base, order)
}

macro_rules! series {
    ($name:expr, $desc:expr, $f:expr) => {
        SeriesEntry { name: $name, description: $desc, eval: $f }
    };
}

/// All named series.
pub static SERIES: &[SeriesEntry] = &[
    series!("W1", "W1 by direct summation", w1),
    series!("W2", "W2 by averaged partial sums", w2),
    series!("W3", "W3 by direct summation", w3),
    series!("W4", "W4 by direct summation", w4),
    series!("omega", "third-order omega(q)", omega),
    series!("S1", "eighth-order S1(q)", s1),
    series!("T1", "eighth-order T1(q)", t1),
    series!("fform_1", "-2q^2/(q)_inf f_{3,5,3}(q^5,q^5,q)", |l, o, _| fform(1, l, o)),
    series!("fform_2", "q(q;q^2)_inf/(q^2;q^2)_inf f_{1,3,1}(-q^2,-q^2,q)", |l, o, _| fform(2, l, o)),
    series!("fform_3", "2q^3(q;q^2)_inf/(q^2;q^2)_inf f_{1,2,1}(-q^7,-q^7,q^4)", |l, o, _| fform(3, l, o)),
    series!("fform_4", "f_{3,5,3}(q^3,q^3,q)/(q)_inf", |l, o, _| fform(4, l, o)),
    series!("rhs_1", "Appell-Lerch form of W1", |l, o, _| rhs_theorem_main(1, l, o)),
    series!("rhs_2", "Appell-Lerch form of W2", |l, o, _| rhs_theorem_main(2, l, o)),
    series!("rhs_3", "Appell-Lerch form of W3", |l, o, _| rhs_theorem_main(3, l, o)),
    series!("rhs_4", "Appell-Lerch form of W4", |l, o, _| rhs_theorem_main(4, l, o)),
    series!("f353_q5", "f_{3,5,3}(q^5,q^5,q)", |l, o, _| hecke_series(1, l, o)),
    series!("f131", "f_{1,3,1}(-q^2,-q^2,q)", |l, o, _| hecke_series(2, l, o)),
    series!("f121", "f_{1,2,1}(-q^7,-q^7,q^4)", |l, o, _| hecke_series(3, l, o)),
    series!("f353_q3", "f_{3,5,3}(q^3,q^3,q)", |l, o, _| hecke_series(4, l, o)),
    series!("m_17_48", "m(-q^17, q^48, -1)", |l, o, _| appell_minus_one(l, 17, 48, o)),
    series!("m_1_48", "m(-q, q^48, -1)", |l, o, _| appell_minus_one(l, 1, 48, o)),
    series!("m_5_48", "m(-q^5, q^48, -1)", |l, o, _| appell_minus_one(l, 5, 48, o)),
    series!("m_11_48", "m(-q^11, q^48, -1)", |l, o, _| appell_minus_one(l, 11, 48, o)),
    series!("m_1_8", "m(-q, q^8, -1)", |l, o, _| appell_minus_one(l, 1, 8, o)),
    series!("m_1_12", "m(-q, q^12, -1)", |l, o, _| appell_minus_one(l, 1, 12, o)),
    series!("j_1_3", "j(q, q^3) = (q)_inf", |l, o, _| crate::qprod::jacobi_j(l, Monomial::q(1), Exponent::int(3), o)),
    series!("jbar_0_1", "j(-1, q)", |l, o, _| crate::qprod::jacobi_j(l, Monomial::MINUS_ONE, Exponent::int(1), o)),
    series!("jbar_1_4", "j(-q, q^4)", |l, o, _| crate::qprod::jacobi_j(l, Monomial::neg_q(1), Exponent::int(4), o)),
    series!("j_half_1", "j(q^(1/2), q)", |l, o, _| {
        crate::qprod::jacobi_j(l, Monomial::q(Exponent::new(1, 2)), Exponent::int(1), o)
    }),
    series!("partitions", "1/(q)_inf", |l, o, _| {
        LaurentSeries::one(l).div_to(&poch_infinite(l, Monomial::q(1), Exponent::int(1), o)?, o)
    }),
    series!("eighth_quotient", "J-bar_{3,8} J_{2,8}^2 / J_{1,8}^2", |l, o, _| eighth_order_quotient(l, o)),
];

/// Evaluates the named series through `q^order`.
pub fn expand(name: &str, lat: Lattice, order: Exponent, exec: Execution) -> Result<LaurentSeries> {
    let entry = SERIES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?;
    Ok(entry.eval(lat, order, exec)?.truncate(order))
}
