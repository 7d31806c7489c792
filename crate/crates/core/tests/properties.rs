//! Randomized invariants: ring axioms, honest precision propagation,
//! inversion, execution-mode independence and structural identities of
//! the q-series builders.

use mocktheta::hecke::{f_eval, f_via_reflection, HeckeParams};
use mocktheta::qprod::{jacobi_j, jacobi_j_sum, poch_finite};
use mocktheta::{Execution, Exponent, Lattice, LaurentSeries, Monomial};
use num_rational::BigRational;
use proptest::prelude::*;

fn lat() -> Lattice {
    Lattice::default()
}

fn half(k: i64) -> Exponent {
    Exponent::new(k, 2)
}

fn build(terms: &[(i64, i64, i64)], prec: Option<i64>) -> LaurentSeries {
    LaurentSeries::from_terms(
        lat(),
        terms.iter().map(|&(k, n, d)| (half(k), BigRational::new(n.into(), d.into()))),
        prec.map(half),
    )
    .unwrap()
}

prop_compose! {
    fn series()(terms in prop::collection::vec((-4i64..24, -5i64..6, 1i64..4), 1..10),
                prec in prop::option::of(16i64..40)) -> LaurentSeries {
        build(&terms, prec)
    }
}

prop_compose! {
    fn unit_series()(terms in prop::collection::vec((1i64..24, -5i64..6, 1i64..4), 0..8),
                     lead in prop::sample::select(vec![-2i64, -1, 1, 3]),
                     shift in -3i64..4) -> LaurentSeries {
        let mut t = terms;
        t.push((0, lead, 1));
        build(&t, None).shift(half(shift)).unwrap()
    }
}

/// Precision of a result, or a fixed order for exact results.
fn order_of(s: &LaurentSeries) -> Exponent {
    s.prec().unwrap_or(Exponent::int(30))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_commutative(a in series(), b in series()) {
        let ab = a.checked_mul(&b).unwrap();
        let ba = b.checked_mul(&a).unwrap();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn multiplication_is_associative(a in series(), b in series(), c in series()) {
        let l = a.checked_mul(&b).unwrap().checked_mul(&c).unwrap();
        let r = a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(l.prec(), r.prec());
        prop_assert!(l.equal_mod(&r, order_of(&l)).unwrap());
    }

    #[test]
    fn multiplication_distributes(a in series(), b in series(), c in series()) {
        let l = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
        let r = a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap();
        let o = order_of(&l).min(order_of(&r));
        prop_assert!(l.equal_mod(&r, o).unwrap());
    }

    #[test]
    fn subtraction_undoes_addition(a in series(), b in series()) {
        let s = a.checked_add(&b).unwrap().checked_sub(&b).unwrap();
        prop_assert!(s.equal_mod(&a, order_of(&s)).unwrap());
    }

    #[test]
    fn product_precision_is_honest(a in unit_series(), b in unit_series(), cut in 0i64..30) {
        let exact = a.checked_mul(&b).unwrap();
        let truncated = a.truncate(half(cut)).checked_mul(&b).unwrap();
        let p = truncated.prec().unwrap();
        prop_assert!(truncated.equal_mod(&exact, p).unwrap());
        // The claimed precision is the documented bound.
        let va = a.valuation().unwrap();
        let vb = b.valuation().unwrap();
        prop_assert_eq!(p, half(cut).max(va - half(1)) + vb);
    }

    #[test]
    fn inverse_is_inverse(a in unit_series(), t in 0i64..40) {
        let target = half(t);
        let inv = a.invert(target).unwrap();
        let one = a.checked_mul(&inv).unwrap();
        prop_assert!(one.equal_mod(&LaurentSeries::one(lat()), target + a.valuation().unwrap()).unwrap());
    }

    #[test]
    fn inverse_of_truncation_is_honest(a in unit_series(), cut in 4i64..40) {
        let v = a.valuation().unwrap();
        let t = a.truncate(half(cut) + v);
        let target = half(cut) - v;
        let from_truncated = t.invert(target).unwrap();
        let from_exact = a.invert(target).unwrap();
        prop_assert!(from_truncated.equal_mod(&from_exact, target).unwrap());
        // Asking for more than the truncation supports is refused.
        prop_assert!(t.invert(target + half(1)).is_err());
    }

    #[test]
    fn execution_modes_agree(a in series(), b in series()) {
        prop_assert_eq!(
            a.mul_with(&b, Execution::Sequential).unwrap(),
            a.mul_with(&b, Execution::Parallel).unwrap()
        );
    }

    #[test]
    fn lattice_index_round_trips(k in -1000i64..1000, d in 1u32..7) {
        let l = Lattice::new(d).unwrap();
        let e = Exponent::new(k, i64::from(d));
        prop_assert_eq!(l.exponent(l.index(e).unwrap()), e);
    }

    #[test]
    fn theta_product_matches_bilateral_sum(k in -20i64..20, neg in any::<bool>(), b in 1i64..7) {
        let base = half(b);
        let x = if neg { Monomial::neg_q(half(k)) } else { Monomial::q(half(k)) };
        let order = Exponent::int(20);
        let p = jacobi_j(lat(), x, base, order).unwrap();
        let s = jacobi_j_sum(lat(), x, base, order).unwrap();
        prop_assert!(p.equal_mod(&s, order).unwrap());
    }

    #[test]
    fn finite_products_split(e in 0i64..8, neg in any::<bool>(), b in 1i64..5, n in 0u64..6, m in 0u64..6) {
        let base = half(b);
        let a = if neg { Monomial::neg_q(half(e)) } else { Monomial::q(half(e)) };
        let whole = poch_finite(lat(), a, base, n + m).unwrap();
        let left = poch_finite(lat(), a, base, n).unwrap();
        let right = poch_finite(lat(), a * Monomial::q(base * n as i64), base, m).unwrap();
        prop_assert_eq!(whole, left.checked_mul(&right).unwrap());
    }

    #[test]
    fn hecke_sum_reflection(a in 1i64..4, c in 1i64..4, extra in 1i64..3,
                            ex in -3i64..8, ey in -3i64..8, sx in any::<bool>(), sy in any::<bool>()) {
        let b = ((a * c) as f64).sqrt().floor() as i64 + extra;
        let p = HeckeParams::new(a, b, c).unwrap();
        let x = Monomial::new(if sx { -1 } else { 1 }, ex);
        let y = Monomial::new(if sy { -1 } else { 1 }, ey);
        let order = Exponent::int(25);
        let f = f_eval(lat(), p, x, y, 1, order).unwrap();
        let g = f_via_reflection(lat(), p, x, y, 1, order).unwrap();
        prop_assert!(f.equal_mod(&g, order).unwrap());
    }
}
