//! Dense `i128` power series through a fixed order, written without any
//! library code, used to freeze golden coefficient files.

use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients of `q^0..=q^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dense(pub Vec<i128>);

impl Dense {
    pub fn zero(n: usize) -> Self {
        Dense(vec![0; n + 1])
    }

    pub fn one(n: usize) -> Self {
        let mut v = vec![0; n + 1];
        v[0] = 1;
        Dense(v)
    }

    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    /// `c q^e`, dropped if `e > N`.
    pub fn mono(n: usize, c: i128, e: usize) -> Self {
        let mut d = Dense::zero(n);
        if e <= n {
            d.0[e] = c;
        }
        d
    }

    pub fn shift(&self, e: usize) -> Self {
        let n = self.order();
        let mut d = Dense::zero(n);
        for i in 0..=n {
            if i + e <= n {
                d.0[i + e] = self.0[i];
            }
        }
        d
    }

    pub fn scale(&self, c: i128) -> Self {
        Dense(self.0.iter().map(|x| x * c).collect())
    }

    /// Inverse of a series with constant term `±1`.
    pub fn inv(&self) -> Self {
        let c0 = self.0[0];
        assert!(c0 == 1 || c0 == -1, "constant term must be a unit");
        let n = self.order();
        let mut b = vec![0i128; n + 1];
        b[0] = c0;
        for k in 1..=n {
            let mut acc = 0i128;
            for i in 1..=k {
                acc += self.0[i] * b[k - i];
            }
            b[k] = -acc * c0;
        }
        Dense(b)
    }

    pub fn div(&self, d: &Dense) -> Self {
        self * &d.inv()
    }
}

impl Add for &Dense {
    type Output = Dense;
    fn add(self, o: &Dense) -> Dense {
        Dense(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Dense {
    type Output = Dense;
    fn sub(self, o: &Dense) -> Dense {
        Dense(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Dense {
    type Output = Dense;
    fn neg(self) -> Dense {
        self.scale(-1)
    }
}

impl Mul for &Dense {
    type Output = Dense;
    fn mul(self, o: &Dense) -> Dense {
        let n = self.order();
        let mut v = vec![0i128; n + 1];
        for (i, a) in self.0.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in o.0.iter().enumerate().take(n + 1 - i) {
                v[i + j] += a * b;
            }
        }
        Dense(v)
    }
}

/// `prod_{k<count} (1 - sign q^{e + k*step})`, with `e + k*step >= 0`.
pub fn poch(n: usize, sign: i128, e: usize, step: usize, count: usize) -> Dense {
    let mut acc = Dense::one(n);
    for k in 0..count {
        let f = &Dense::one(n) - &Dense::mono(n, sign, e + k * step);
        acc = &acc * &f;
    }
    acc
}

/// The infinite version of [`poch`] through `q^N`; needs `e > 0` unless
/// `sign = -1`.
pub fn poch_inf(n: usize, sign: i128, e: usize, step: usize) -> Dense {
    let count = if e > n { 0 } else { (n - e) / step + 1 };
    poch(n, sign, e, step, count)
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn alt(k: usize) -> i128 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `W1` by the defining double sum, every term formed from scratch.
pub fn w1(n: usize) -> Dense {
    let mut acc = Dense::zero(n);
    let mut k = 1;
    while k * k <= n {
        for j in 1..=k {
            let e = k * k + (j * (j + 1)) / 2;
            if e > n {
                break;
            }
            let num = &(&poch(n, -1, 0, 1, j) * &poch(n, 1, 1, 2, j - 1)).shift(e).scale(alt(j));
            let den = &(&poch(n, -1, 1, 1, k) * &poch(n, 1, 1, 1, k - j)) * &poch(n, 1, 1, 1, 2 * j - 1);
            acc = &acc + &num.div(&den);
        }
        k += 1;
    }
    acc
}

/// The `n`-th term of the `W2` outer sum.
fn w2_term(n: usize, k: usize) -> Dense {
    let mut acc = Dense::zero(n);
    for j in 1..=k {
        let e = (j * (j + 1)) / 2;
        if e > n {
            break;
        }
        let num = (&(&poch(n, -1, 0, 1, j) * &poch(n, 1, 1, 2, j - 1)) * &poch(n, 1, 1, 2, k))
            .shift(e)
            .scale(alt(j) * alt(k));
        let den = &(&poch(n, -1, 1, 1, k) * &poch(n, 1, 1, 1, k - j)) * &poch(n, 1, 1, 1, 2 * j - 1);
        acc = &acc + &num.div(&den);
    }
    acc
}

/// Twice `W2`: the doubled average `S_{2K} + S_{2K+1}` of its partial sums
/// at `K = N + 10`, after checking that it no longer moves.
pub fn w2_doubled(n: usize) -> Dense {
    let kk = n + 10;
    let mut partial = Vec::new();
    let mut s = Dense::zero(n);
    for k in 0..=2 * kk + 5 {
        s = &s + &w2_term(n, k);
        partial.push(s.clone());
    }
    let avg = |k: usize| &partial[2 * k] + &partial[2 * k + 1];
    let a = avg(kk);
    assert_eq!(a, avg(kk + 1), "averages still moving");
    assert_eq!(a, avg(kk + 2), "averages still moving");
    a
}

/// `W3` by the defining double sum.
pub fn w3(n: usize) -> Dense {
    let mut acc = Dense::zero(n);
    let mut k = 1;
    while k * k <= n {
        for j in 1..=k {
            let e = k * k + j * j + j;
            if e > n {
                break;
            }
            let num = (&(&poch(n, -1, 0, 2, j) * &poch(n, 1, 2, 4, j - 1)) * &poch(n, 1, 1, 2, k))
                .shift(e)
                .scale(alt(j) * alt(k));
            let den = &(&poch(n, -1, 2, 2, k) * &poch(n, 1, 2, 2, k - j)) * &poch(n, 1, 2, 2, 2 * j - 1);
            acc = &acc + &num.div(&den);
        }
        k += 1;
    }
    acc
}

/// `W4` by the defining double sum.
pub fn w4(n: usize) -> Dense {
    let mut acc = Dense::zero(n);
    let mut k = 0;
    while k * k + k <= n {
        for j in 0..=k {
            let e = k * k + k + (j * (j + 1)) / 2;
            if e > n {
                break;
            }
            let num = (&poch(n, -1, 1, 1, j) * &poch(n, 1, 1, 2, j)).shift(e).scale(alt(j));
            let den = &(&poch(n, -1, 1, 1, k) * &poch(n, 1, 1, 1, k - j)) * &poch(n, 1, 1, 1, 2 * j + 1);
            acc = &acc + &num.div(&den);
        }
        k += 1;
    }
    acc
}

/// `sum q^{n(n+2)} (-q;q^2)_n / (-q^2;q^2)_n`.
pub fn s1(n: usize) -> Dense {
    let mut acc = Dense::zero(n);
    let mut k = 0;
    while k * (k + 2) <= n {
        acc = &acc + &poch(n, -1, 1, 2, k).div(&poch(n, -1, 2, 2, k)).shift(k * (k + 2));
        k += 1;
    }
    acc
}

/// `sum q^{n(n+1)} (-q^2;q^2)_n / (-q;q^2)_{n+1}`.
pub fn t1(n: usize) -> Dense {
    let mut acc = Dense::zero(n);
    let mut k = 0;
    while k * (k + 1) <= n {
        acc = &acc + &poch(n, -1, 2, 2, k).div(&poch(n, -1, 1, 2, k + 1)).shift(k * (k + 1));
        k += 1;
    }
    acc
}

/// `sum q^{2n(n+1)} / (q;q^2)_{n+1}^2`.
pub fn omega(n: usize) -> Dense {
    let mut acc = Dense::zero(n);
    let mut k = 0;
    while 2 * k * (k + 1) <= n {
        let d = poch(n, 1, 1, 2, k + 1);
        acc = &acc + &Dense::one(n).div(&(&d * &d)).shift(2 * k * (k + 1));
        k += 1;
    }
    acc
}

/// Partition numbers by Euler's pentagonal recurrence.
pub fn partitions(n: usize) -> Vec<i128> {
    let mut p = vec![0i128; n + 1];
    p[0] = 1;
    for m in 1..=n as i64 {
        let mut total = 0i128;
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let s = if k % 2 == 1 { 1 } else { -1 };
            total += s * p[(m - g1) as usize];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                total += s * p[(m - g2) as usize];
            }
            k += 1;
        }
        p[m as usize] = total;
    }
    p
}

/// `j(sign q^e, q^base) = (x)_inf (q^base/x)_inf (q^base)_inf` for
/// `0 <= e < base` (with `e = 0` only for `sign = -1`).
pub fn j_product(n: usize, sign: i128, e: usize, base: usize) -> Dense {
    let a = poch_inf(n, sign, e, base);
    let b = poch_inf(n, sign, base - e, base);
    let c = poch_inf(n, 1, base, base);
    &(&a * &b) * &c
}

/// `f_{a,b,c}(x, y, q^base)` with `x = sx q^ex`, `y = sy q^ey`, summed over
/// the box `|r|, |s| <= R`, which contains every contributing point.
#[allow(clippy::too_many_arguments)]
pub fn f_box(n: usize, a: i64, b: i64, c: i64, sx: i128, ex: i64, sy: i128, ey: i64, base: i64) -> Dense {
    let r_max = 4 * n as i64 + 40;
    let mut v = vec![0i128; n + 1];
    for r in -r_max..=r_max {
        for s in -r_max..=r_max {
            let sg = if r >= 0 && s >= 0 {
                1
            } else if r < 0 && s < 0 {
                -1
            } else {
                continue;
            };
            let e = base * (a * binom2(r) + b * r * s + c * binom2(s)) + ex * r + ey * s;
            if e < 0 {
                panic!("negative exponent {e} at ({r}, {s})");
            }
            if e as usize > n {
                continue;
            }
            let sign = sg * alt((r + s).rem_euclid(2) as usize) * sx.pow(r.rem_euclid(2) as u32) * sy.pow(s.rem_euclid(2) as u32);
            v[e as usize] += sign;
        }
    }
    Dense(v)
}
