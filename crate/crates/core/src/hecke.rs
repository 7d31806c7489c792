//! Hecke-type double sums `f_{a,b,c}`, Appell-Lerch sums `m(x, q, z)`, the
//! Appell-Lerch expansion `g_{a,b,c}` and the theta quotient `θ_{n,p}`.
//!
//! Every function takes a `base`: the series is evaluated with `q` replaced
//! by `q^base`, so `f_{1,2,1}(-q^7, -q^7, q^4)` is
//! `f_eval(.., Monomial::neg_q(7), Monomial::neg_q(7), 4, ..)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exponent::{Exponent, Lattice};
use crate::qprod::{product_to, quotient_to, times_factor, Factor, Monomial};
use crate::series::LaurentSeries;

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Coefficients `(a, b, c)` of the indefinite form `a C(r,2) + b rs + c C(s,2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HeckeParams {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl HeckeParams {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if a <= 0 || b <= 0 || c <= 0 {
            return Err(Error::InvalidParams(format!("f_{{{a},{b},{c}}} needs positive a, b, c")));
        }
        if b * b - a * c <= 0 {
            return Err(Error::InvalidParams(format!(
                "f_{{{a},{b},{c}}} needs b^2 - ac > 0, got {}",
                b * b - a * c
            )));
        }
        Ok(HeckeParams { a, b, c })
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - self.a * self.c
    }
}

fn q_scaled(base: Exponent) -> impl Fn(Exponent) -> Monomial {
    move |e| Monomial::q(e * base)
}

fn sign_pow(sign: i64, r: i64) -> i64 {
    if sign < 0 && r.rem_euclid(2) == 1 {
        -1
    } else {
        1
    }
}

/// `f_{a,b,c}(x, y, q^base)` through `q^prec`:
/// `sum_{sg(r)=sg(s)} sg(r) (-1)^{r+s} x^r y^s q^{base(a C(r,2) + b rs + c C(s,2))}`.
///
/// Diagonals `d = r' + s'` of each quadrant are enumerated until a lower
/// bound `base*d^2/4 - L*d + K` on every exponent of the diagonal exceeds
/// `prec` past its vertex, so no contributing lattice point is missed.
pub fn f_eval(
    lat: Lattice,
    p: HeckeParams,
    x: Monomial,
    y: Monomial,
    base: impl Into<Exponent>,
    prec: Exponent,
) -> Result<LaurentSeries> {
    let base = base.into();
    if !base.is_positive() {
        return Err(Error::InvalidParams(format!("base {base} must be positive")));
    }
    let bi = lat.index(base)?;
    let ex = lat.index(x.exp())?;
    let ey = lat.index(y.exp())?;
    let top = lat.floor_index(prec);
    let HeckeParams { a, b, c } = p;
    let exponent = |r: i64, s: i64| bi * (a * binom2(r) + b * r * s + c * binom2(s)) + ex * r + ey * s;

    let mut acc: BTreeMap<i64, i64> = BTreeMap::new();
    // (quadrant sign, 4L, K); r = r', s = s' or r = -r'-1, s = -s'-1.
    let quadrants = [
        (1i64, 2 * bi + 4 * 0i64.max(-ex).max(-ey), 0i64),
        (-1i64, 4 * 0i64.max(ex).max(ey), -(ex + ey)),
    ];
    for (sg, four_l, k) in quadrants {
        let mut d = 0i64;
        loop {
            let past_vertex = 2 * bi * d >= four_l;
            if past_vertex && bi * d * d - four_l * d + 4 * k > 4 * top {
                break;
            }
            for rp in 0..=d {
                let sp = d - rp;
                let (r, s) = if sg > 0 { (rp, sp) } else { (-rp - 1, -sp - 1) };
                let e = exponent(r, s);
                if e <= top {
                    let sign = sg
                        * sign_pow(-1, r + s)
                        * sign_pow(x.sign(), r)
                        * sign_pow(y.sign(), s);
                    *acc.entry(e).or_insert(0) += sign;
                }
            }
            d += 1;
        }
    }
    let map = acc
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(e, c)| (e, BigInt::from(c)))
        .collect();
    Ok(LaurentSeries::from_int_index_map(lat, map, Some(top)))
}

/// Arguments of `m(x, q^base, z)`, checked for genericity on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AppellLerch {
    pub x: Monomial,
    pub base: Exponent,
    pub z: Monomial,
}

impl AppellLerch {
    /// Rejects `z` or `xz` equal to an integral power of `q^base` (a pole of
    /// some `1/(1 - q^{base(r-1)} x z)` or a zero of `j(z, q^base)`).
    pub fn new(x: Monomial, base: impl Into<Exponent>, z: Monomial) -> Result<Self> {
        let base = base.into();
        if !base.is_positive() {
            return Err(Error::InvalidParams(format!("base {base} must be positive")));
        }
        let is_power = |m: Monomial| m.sign() == 1 && (m.exp().as_rational() / base.as_rational()).is_integer();
        if is_power(z) {
            return Err(Error::NonGeneric(format!("j({z}, q^{base}) vanishes in m({x}, q^{base}, {z})")));
        }
        if is_power(x * z) {
            return Err(Error::NonGeneric(format!("xz = {} is a power of q^{base} in m({x}, q^{base}, {z})", x * z)));
        }
        Ok(AppellLerch { x, base, z })
    }

    pub fn eval(&self, lat: Lattice, prec: Exponent) -> Result<LaurentSeries> {
        m_eval(lat, self, prec)
    }
}

/// The bilateral sum `sum_r (-1)^r q^{base C(r,2)} z^r / (1 - q^{base(r-1)} x z)`
/// through index `top`.
fn appell_sum(lat: Lattice, args: &AppellLerch, top: i64) -> Result<LaurentSeries> {
    let bi = lat.index(args.base)?;
    let ez = lat.index(args.z.exp())?;
    let eu0 = lat.index(args.x.exp() + args.z.exp())? - bi;
    let su = args.x.sign() * args.z.sign();
    // Twice each coefficient, so the 1/(1 - (-1)) = 1/2 terms stay integral.
    let mut twice: BTreeMap<i64, i64> = BTreeMap::new();
    let mut add_term = |r: i64| {
        let t = bi * binom2(r) + ez * r;
        let sign = sign_pow(-1, r) * sign_pow(args.z.sign(), r);
        let eu = bi * r + eu0;
        if eu > 0 {
            // sum_{k>=0} u^k
            let mut k = 0i64;
            while t + k * eu <= top {
                *twice.entry(t + k * eu).or_insert(0) += 2 * sign * sign_pow(su, k);
                k += 1;
            }
        } else if eu < 0 {
            // -sum_{k>=1} u^{-k}
            let mut k = 1i64;
            while t - k * eu <= top {
                *twice.entry(t - k * eu).or_insert(0) -= 2 * sign * sign_pow(su, k);
                k += 1;
            }
        } else if t <= top {
            // u = -1 by genericity
            *twice.entry(t).or_insert(0) += sign;
        }
    };
    // Each term has valuation >= t(r) = bi*r(r-1)/2 + ez*r, which increases
    // for 2*bi*r >= bi - 2*ez and decreases for 2*bi*r <= bi - 2*ez; stop on
    // each tail once t(r) is past that vertex and above `top`.
    let t = |r: i64| bi * binom2(r) + ez * r;
    let mut r = 0i64;
    loop {
        add_term(r);
        if 2 * bi * r >= bi - 2 * ez && t(r) > top {
            break;
        }
        r += 1;
    }
    let mut r = -1i64;
    loop {
        add_term(r);
        if 2 * bi * r <= bi - 2 * ez && t(r) > top {
            break;
        }
        r -= 1;
    }
    let map = twice
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(e, c)| (e, BigRational::new(c.into(), 2.into())))
        .collect();
    Ok(LaurentSeries::from_index_map(lat, map, Some(top)))
}

/// `m(x, q^base, z) = (1/j(z, q^base)) sum_r (-1)^r q^{base C(r,2)} z^r / (1 - q^{base(r-1)} x z)`
/// through `q^prec`. The result may have negative valuation.
pub fn m_eval(lat: Lattice, args: &AppellLerch, prec: Exponent) -> Result<LaurentSeries> {
    let den = [(Factor::theta(args.z, args.base), 1)];
    quotient_to(lat, |p| appell_sum(lat, args, lat.floor_index(p)), &den, prec)
}

/// `mono * j(jx, q^jbase) * m(args)` through `q^prec`.
fn mono_theta_appell(
    lat: Lattice,
    mono: Monomial,
    jx: Monomial,
    jbase: Exponent,
    args: &AppellLerch,
    prec: Exponent,
) -> Result<LaurentSeries> {
    let inner = times_factor(lat, |p| m_eval(lat, args, p), &Factor::theta(jx, jbase), prec - mono.exp())?;
    mono.apply(&inner)
}

/// `g_{a,b,c}(x, y, q^base, z1, z0)`: the two finite sums of theta functions
/// times Appell-Lerch sums that convert `f_{a,b,c}` to Appell-Lerch form.
#[allow(clippy::too_many_arguments)]
pub fn g_eval(
    lat: Lattice,
    p: HeckeParams,
    x: Monomial,
    y: Monomial,
    base: impl Into<Exponent>,
    z1: Monomial,
    z0: Monomial,
    prec: Exponent,
) -> Result<LaurentSeries> {
    let base = base.into();
    let q = q_scaled(base);
    let HeckeParams { a, b, c } = p;
    let disc = p.discriminant();
    let (mx, my) = (-x, -y);
    let mut acc = LaurentSeries::zero(lat);
    for t in 0..a {
        let mono = my.pow(t) * q(Exponent::int(c * binom2(t)));
        let jx = q(Exponent::int(b * t)) * x;
        let mx_arg = -q(Exponent::int(a * binom2(b + 1) - c * binom2(a + 1) - t * disc)) * my.pow(a) / mx.pow(b);
        let args = AppellLerch::new(mx_arg, base * (a * disc), z0)?;
        let term = mono_theta_appell(lat, mono, jx, base * a, &args, prec)?;
        acc = acc.checked_add(&term)?;
    }
    for t in 0..c {
        let mono = mx.pow(t) * q(Exponent::int(a * binom2(t)));
        let jx = q(Exponent::int(b * t)) * y;
        let mx_arg = -q(Exponent::int(c * binom2(b + 1) - a * binom2(c + 1) - t * disc)) * mx.pow(c) / my.pow(b);
        let args = AppellLerch::new(mx_arg, base * (c * disc), z1)?;
        let term = mono_theta_appell(lat, mono, jx, base * c, &args, prec)?;
        acc = acc.checked_add(&term)?;
    }
    Ok(acc.truncate(prec))
}

/// `θ_{n,p}(x, y, q^base)`, the theta-quotient correction in
/// `f_{n,n+p,n} = g_{n,n+p,n}(x, y, q, -1, -1) + θ_{n,p}`.
///
/// The double sum over `r*, s* ∈ 0..p` is put over the common denominator
/// `J̄_{0,np(2n+p)} Π_r j(..) Π_s j(..)`, which is inverted once.
#[allow(clippy::too_many_arguments)]
pub fn theta_np(
    lat: Lattice,
    n: i64,
    p: i64,
    x: Monomial,
    y: Monomial,
    base: impl Into<Exponent>,
    prec: Exponent,
) -> Result<LaurentSeries> {
    let base = base.into();
    if n <= 0 || p <= 0 || num_integer::gcd(n, p) != 1 {
        return Err(Error::InvalidParams(format!("θ_{{{n},{p}}} needs coprime positive n, p")));
    }
    let q = q_scaled(base);
    let (mx, my) = (-x, -y);
    let ne = Exponent::int(n);
    let pe = Exponent::int(p);
    let two_n_p = 2 * n + p;
    let big_m = p * p * two_n_p;
    let shift = Exponent::new(n - 1, 2);
    let frac = shift.fract();
    let half_term = pe * Exponent::new(n + p, 2);

    let r_vals: Vec<Exponent> = (0..p).map(|k| frac + Exponent::int(k)).collect();

    let a_factor = |r: Exponent| {
        let arg = q(pe * Exponent::int(two_n_p) * r + half_term) * my.pow(n + p) / mx.pow(n);
        Factor::theta(arg, base * big_m)
    };
    let b_factor = |s: Exponent| {
        let arg = q(pe * Exponent::int(two_n_p) * s + half_term) * mx.pow(n + p) / my.pow(n);
        Factor::theta(arg, base * big_m)
    };
    let a_factors: Vec<Factor> = r_vals.iter().map(|&r| a_factor(r)).collect();
    let b_factors: Vec<Factor> = r_vals.iter().map(|&s| b_factor(s)).collect();

    let mut den = vec![(Factor::theta(Monomial::MINUS_ONE, base * (n * p * two_n_p)), 1u32)];
    den.extend(a_factors.iter().map(|f| (*f, 1u32)));
    den.extend(b_factors.iter().map(|f| (*f, 1u32)));

    let j_cube = Factor::theta(q(Exponent::int(big_m)), base * (3 * big_m));

    let numerator = |pn: Exponent| -> Result<LaurentSeries> {
        let mut acc = LaurentSeries::zero(lat);
        for (ri, &r) in r_vals.iter().enumerate() {
            for (si, &s) in r_vals.iter().enumerate() {
                let big_r = r - shift;
                let big_s = s + Exponent::new(n + 1, 2);
                if !big_r.is_integer() || !big_s.is_integer() {
                    return Err(Error::InvalidParams("θ summation indices must be integral".into()));
                }
                let (ri_, si_) = (big_r.numer(), big_s.numer());
                let mono = q(ne * Exponent::int(binom2(ri_))
                    + Exponent::int((n + p) * ri_ * si_)
                    + ne * Exponent::int(binom2(si_)))
                    * mx.pow(ri_)
                    * my.pow(si_);
                let j1 = Factor::theta(
                    -q(ne * pe * (s - r)) * x.pow(n) / y.pow(n),
                    base * (n * p * p),
                );
                let j2 = Factor::theta(
                    q(pe * Exponent::int(two_n_p) * (r + s) + pe * Exponent::int(n + p)) * x.pow(p) * y.pow(p),
                    base * big_m,
                );
                let mut factors = vec![(j_cube, 3u32), (j1, 1), (j2, 1)];
                factors.extend(a_factors.iter().enumerate().filter(|(k, _)| *k != ri).map(|(_, f)| (*f, 1)));
                factors.extend(b_factors.iter().enumerate().filter(|(k, _)| *k != si).map(|(_, f)| (*f, 1)));
                let prod = product_to(lat, &factors, pn - mono.exp())?;
                acc = acc.checked_add(&mono.apply(&prod)?)?;
            }
        }
        Ok(acc.truncate(pn))
    };
    quotient_to(lat, numerator, &den, prec)
}

/// The right side of the four-term dissection
/// `f(x, y, q) = f(-x^2 q^a, -y^2 q^c, q^4) - x f(..) - y f(..) + xy q^b f(..)`.
pub fn f_via_quad_split(
    lat: Lattice,
    p: HeckeParams,
    x: Monomial,
    y: Monomial,
    base: impl Into<Exponent>,
    prec: Exponent,
) -> Result<LaurentSeries> {
    let base = base.into();
    let q = q_scaled(base);
    let HeckeParams { a, b, c } = p;
    let e = Exponent::int;
    let (x2, y2) = (-x.pow(2), -y.pow(2));
    let pieces = [
        (Monomial::ONE, x2 * q(e(a)), y2 * q(e(c))),
        (-x, x2 * q(e(3 * a)), y2 * q(e(c + 2 * b))),
        (-y, x2 * q(e(a + 2 * b)), y2 * q(e(3 * c))),
        (x * y * q(e(b)), x2 * q(e(3 * a + 2 * b)), y2 * q(e(3 * c + 2 * b))),
    ];
    let mut acc = LaurentSeries::zero(lat);
    for (mono, xx, yy) in pieces {
        let f = f_eval(lat, p, xx, yy, base * 4, prec - mono.exp())?;
        acc = acc.checked_add(&mono.apply(&f)?)?;
    }
    Ok(acc.truncate(prec))
}

/// The right side of the reflection
/// `f(x, y, q) = -(q^{a+b+c}/xy) f(q^{2a+b}/x, q^{2c+b}/y, q)`.
pub fn f_via_reflection(
    lat: Lattice,
    p: HeckeParams,
    x: Monomial,
    y: Monomial,
    base: impl Into<Exponent>,
    prec: Exponent,
) -> Result<LaurentSeries> {
    let base = base.into();
    let q = q_scaled(base);
    let HeckeParams { a, b, c } = p;
    let e = Exponent::int;
    let mono = -(q(e(a + b + c)) / (x * y));
    let f = f_eval(lat, p, q(e(2 * a + b)) / x, q(e(2 * c + b)) / y, base, prec - mono.exp())?;
    Ok(mono.apply(&f)?.truncate(prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qprod::jacobi_j;

    fn lat() -> Lattice {
        Lattice::default()
    }

    fn e(n: i64) -> Exponent {
        Exponent::int(n)
    }

    fn ints(terms: &[(i64, i64)], prec: i64) -> LaurentSeries {
        LaurentSeries::from_terms(
            lat(),
            terms.iter().map(|&(x, c)| (e(x), BigRational::from_integer(c.into()))),
            Some(e(prec)),
        )
        .unwrap()
    }

    /// Brute-force lattice enumeration over a fixed box.
    fn f_box(p: HeckeParams, x: (i64, i64), y: (i64, i64), base: i64, order: i64, radius: i64) -> BTreeMap<i64, i64> {
        let mut out = BTreeMap::new();
        for r in -radius..=radius {
            for s in -radius..=radius {
                if (r >= 0) != (s >= 0) {
                    continue;
                }
                let sg = if r >= 0 { 1 } else { -1 };
                let ex = base * (p.a * r * (r - 1) / 2 + p.b * r * s + p.c * s * (s - 1) / 2) + x.1 * r + y.1 * s;
                if ex > order {
                    continue;
                }
                let sign = sg * (-1i64).pow(((r + s).rem_euclid(2)) as u32)
                    * if x.0 < 0 && r.rem_euclid(2) == 1 { -1 } else { 1 }
                    * if y.0 < 0 && s.rem_euclid(2) == 1 { -1 } else { 1 };
                *out.entry(ex).or_insert(0) += sign;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    fn as_map(s: &LaurentSeries) -> BTreeMap<i64, i64> {
        s.terms()
            .map(|(k, c)| (k.numer(), i64::try_from(c.to_integer()).unwrap()))
            .collect()
    }

    #[test]
    fn params_validation() {
        assert!(HeckeParams::new(3, 5, 3).is_ok());
        assert_eq!(HeckeParams::new(1, 3, 1).unwrap().discriminant(), 8);
        assert!(HeckeParams::new(1, 1, 1).is_err());
        assert!(HeckeParams::new(0, 2, 1).is_err());
    }

    #[test]
    fn f_small_orders() {
        let p = HeckeParams::new(3, 5, 3).unwrap();
        let f = f_eval(lat(), p, Monomial::q(5), Monomial::q(5), 1, e(4)).unwrap();
        assert_eq!(f, ints(&[(0, 1), (1, -1)], 4));
        let p = HeckeParams::new(1, 3, 1).unwrap();
        let f = f_eval(lat(), p, Monomial::neg_q(2), Monomial::neg_q(2), 1, e(2)).unwrap();
        assert_eq!(f, ints(&[(0, 1), (1, -1), (2, 2)], 2));
    }

    #[test]
    fn f_matches_box_enumeration() {
        let cases = [
            ((3, 5, 3), (1, 5), (1, 5), 1),
            ((3, 5, 3), (1, 3), (1, 3), 1),
            ((1, 3, 1), (-1, 2), (-1, 2), 1),
            ((1, 2, 1), (-1, 7), (-1, 7), 4),
            ((3, 5, 3), (-1, 23), (-1, 19), 4),
            ((1, 2, 1), (1, -3), (-1, 2), 2),
        ];
        for ((a, b, c), x, y, base) in cases {
            let p = HeckeParams::new(a, b, c).unwrap();
            let f = f_eval(lat(), p, Monomial::new(x.0, x.1), Monomial::new(y.0, y.1), base, e(40)).unwrap();
            // exponents are integral here, so lattice index = 2 * exponent
            let got = as_map(&f);
            let want = f_box(p, x, y, base, 40, 60);
            assert_eq!(got, want, "f_{{{a},{b},{c}}}");
        }
    }

    #[test]
    fn appell_genericity() {
        assert!(AppellLerch::new(Monomial::neg_q(17), 48, Monomial::MINUS_ONE).is_ok());
        assert!(matches!(
            AppellLerch::new(Monomial::q(1), 8, Monomial::q(16)),
            Err(Error::NonGeneric(_))
        ));
        assert!(matches!(
            AppellLerch::new(Monomial::q(3), 8, Monomial::q(5)),
            Err(Error::NonGeneric(_))
        ));
        // xz = -1 is allowed: the r = 1 term is 1/2.
        assert!(AppellLerch::new(Monomial::q(8), 8, Monomial::neg_q(-8)).is_ok());
    }

    #[test]
    fn appell_times_theta_is_the_bilateral_sum() {
        let args = AppellLerch::new(Monomial::neg_q(3), 10, Monomial::q(2)).unwrap();
        let m = m_eval(lat(), &args, e(30)).unwrap();
        let j = jacobi_j(lat(), Monomial::q(2), e(10), e(60)).unwrap();
        let s = appell_sum(lat(), &args, 60).unwrap();
        assert!((&m * &j).equal_mod(&s, e(30)).unwrap());
    }

    #[test]
    fn g_matches_reduced_forms() {
        let order = e(30);
        let m = |x: Monomial, b: i64| AppellLerch::new(x, b, Monomial::MINUS_ONE).unwrap();
        let jq = |x: Monomial, b: i64| jacobi_j(lat(), x, e(b), e(80)).unwrap();
        let mono = |c: i64, ex: i64| LaurentSeries::monomial(lat(), BigRational::from_integer(c.into()), e(ex)).unwrap();

        let p = HeckeParams::new(3, 5, 3).unwrap();
        let g = g_eval(lat(), p, Monomial::q(5), Monomial::q(5), 1, Monomial::MINUS_ONE, Monomial::MINUS_ONE, order).unwrap();
        let j = jq(Monomial::q(1), 3);
        let want = &(&(&mono(-2, -2) * &j) * &m_eval(lat(), &m(Monomial::neg_q(17), 48), e(40)).unwrap())
            + &(&(&mono(2, -7) * &j) * &m_eval(lat(), &m(Monomial::neg_q(1), 48), e(45)).unwrap());
        assert!(g.equal_mod(&want, order).unwrap());

        let p = HeckeParams::new(1, 3, 1).unwrap();
        let g = g_eval(lat(), p, Monomial::neg_q(2), Monomial::neg_q(2), 1, Monomial::MINUS_ONE, Monomial::MINUS_ONE, order).unwrap();
        let want = &(&mono(2, -1) * &jq(Monomial::MINUS_ONE, 1)) * &m_eval(lat(), &m(Monomial::neg_q(1), 8), e(40)).unwrap();
        assert!(g.equal_mod(&want, order).unwrap());

        let p = HeckeParams::new(1, 2, 1).unwrap();
        let g = g_eval(lat(), p, Monomial::neg_q(7), Monomial::neg_q(7), 4, Monomial::MINUS_ONE, Monomial::MINUS_ONE, order).unwrap();
        let want = &(&mono(2, -3) * &jq(Monomial::neg_q(1), 4)) * &m_eval(lat(), &m(Monomial::neg_q(1), 12), e(40)).unwrap();
        assert!(g.equal_mod(&want, order).unwrap());
    }

    #[test]
    fn theta_rejects_non_coprime() {
        assert!(theta_np(lat(), 2, 4, Monomial::q(1), Monomial::q(1), 1, e(5)).is_err());
    }

    #[test]
    fn decomposition_w1_instance() {
        let order = e(30);
        let p = HeckeParams::new(3, 5, 3).unwrap();
        let (x, y) = (Monomial::q(5), Monomial::q(5));
        let f = f_eval(lat(), p, x, y, 1, order).unwrap();
        let g = g_eval(lat(), p, x, y, 1, Monomial::MINUS_ONE, Monomial::MINUS_ONE, order).unwrap();
        let t = theta_np(lat(), 3, 2, x, y, 1, order).unwrap();
        assert_eq!(f.first_mismatch(&(&g + &t), order).unwrap(), None);
    }

    #[test]
    fn dissection_and_reflection() {
        let order = e(30);
        let p = HeckeParams::new(3, 5, 3).unwrap();
        for x in [Monomial::q(5), Monomial::q(3)] {
            let f = f_eval(lat(), p, x, x, 1, order).unwrap();
            assert!(f.equal_mod(&f_via_quad_split(lat(), p, x, x, 1, order).unwrap(), order).unwrap());
            assert!(f.equal_mod(&f_via_reflection(lat(), p, x, x, 1, order).unwrap(), order).unwrap());
        }
    }
}
