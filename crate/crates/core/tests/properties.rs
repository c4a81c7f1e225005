use proptest::prelude::*;

use sptforge_core::qseries::{AnySeries, Mode, Term, TruncatedSeries};
use sptforge_core::rings::{
    cyc_from_root_power, cyc_mul, laurent_eval_at_root, CyclotomicInteger, Cyclotomic, Int, Integers, LaurentPolynomial,
    Ring,
};

fn prime() -> impl Strategy<Value = u32> {
    prop_oneof![Just(3u32), Just(5), Just(7)]
}

fn cyc(t: u32, raw: &[i64]) -> CyclotomicInteger {
    CyclotomicInteger::from_powers(t, &raw.iter().map(|&c| Int::from(c)).collect::<Vec<_>>())
}

fn laurent(raw: &[(i64, i64)]) -> LaurentPolynomial {
    LaurentPolynomial::from_i64_terms(raw)
}

fn int_series(raw: &[i64]) -> TruncatedSeries<Integers> {
    TruncatedSeries::from_coeffs(Integers, raw.iter().map(|&c| Int::from(c)).collect())
}

proptest! {
    #[test]
    fn int_matches_i128(a in any::<i64>(), b in any::<i64>()) {
        let (x, y) = (Int::from(a), Int::from(b));
        prop_assert_eq!((&x + &y).to_string(), (a as i128 + b as i128).to_string());
        prop_assert_eq!((&x * &y).to_string(), (a as i128 * b as i128).to_string());
        prop_assert_eq!((&x - &y).to_string(), (a as i128 - b as i128).to_string());
    }

    #[test]
    fn big_products_divide_back(a in any::<i64>(), b in 1i64..i64::MAX, e in 1u32..6) {
        let x = Int::from(a).pow(e);
        let d = Int::from(b);
        prop_assert_eq!((&x * &d).div_exact(&d), Some(x));
    }

    #[test]
    fn cyclotomic_ring_axioms(
        t in prime(),
        a in prop::collection::vec(-20i64..20, 0..9),
        b in prop::collection::vec(-20i64..20, 0..9),
        c in prop::collection::vec(-20i64..20, 0..9),
    ) {
        let r = Cyclotomic::new(t as i64).unwrap();
        let (a, b, c) = (cyc(t, &a), cyc(t, &b), cyc(t, &c));
        prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        prop_assert!(r.is_zero(&r.sub(&a, &a)));
        prop_assert_eq!(r.mul(&a, &r.one()), a);
    }

    #[test]
    fn root_powers_multiply_by_adding_exponents(t in prime(), j in -30i64..30, k in -30i64..30) {
        let (t, zj, zk) = (t as i64, cyc_from_root_power(t as i64, j).unwrap(), cyc_from_root_power(t as i64, k).unwrap());
        prop_assert_eq!(cyc_mul(&zj, &zk).unwrap(), cyc_from_root_power(t, j + k).unwrap());
        prop_assert_eq!(cyc_from_root_power(t, j + t).unwrap(), zj);
    }

    #[test]
    fn evaluation_at_a_root_is_a_homomorphism(
        t in prime(),
        a in prop::collection::vec((-8i64..8, -5i64..5), 0..6),
        b in prop::collection::vec((-8i64..8, -5i64..5), 0..6),
    ) {
        let (p, q) = (laurent(&a), laurent(&b));
        let ev = |x: &LaurentPolynomial| laurent_eval_at_root(x, t as i64).unwrap();
        prop_assert_eq!(ev(&p.mul(&q)), cyc_mul(&ev(&p), &ev(&q)).unwrap());
        prop_assert_eq!(ev(&p.add(&q)), ev(&p).try_add(&ev(&q)).unwrap());
    }

    #[test]
    fn laurent_multiplication_is_commutative_and_distributive(
        a in prop::collection::vec((-8i64..8, -5i64..5), 0..6),
        b in prop::collection::vec((-8i64..8, -5i64..5), 0..6),
        c in prop::collection::vec((-8i64..8, -5i64..5), 0..6),
    ) {
        let (a, b, c) = (laurent(&a), laurent(&b), laurent(&c));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn unit_series_invert(sign in prop_oneof![Just(1i64), Just(-1)], tail in prop::collection::vec(-9i64..9, 0..40)) {
        let mut raw = vec![sign];
        raw.extend(tail);
        let a = int_series(&raw);
        let inv = a.invert().unwrap();
        prop_assert_eq!(a.mul(&inv).unwrap(), TruncatedSeries::one(Integers, a.order()));
    }

    #[test]
    fn series_multiplication_commutes_and_truncates(
        a in prop::collection::vec(-9i64..9, 1..30),
        b in prop::collection::vec(-9i64..9, 1..30),
    ) {
        let n = a.len().min(b.len());
        let (a, b) = (int_series(&a).truncate(n), int_series(&b).truncate(n));
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(&ab, &b.mul(&a).unwrap());
        let m = n.div_ceil(2);
        prop_assert_eq!(ab.truncate(m), a.truncate(m).mul(&b.truncate(m)).unwrap());
    }

    #[test]
    fn dissections_reassemble(raw in prop::collection::vec(-9i64..9, 1..60), p in 1usize..8) {
        let a = int_series(&raw);
        let mut total = TruncatedSeries::zero(Integers, a.order());
        for r in 0..p {
            let piece = a.dissect(p, r).substitute(p, false, usize::MAX).shift(r);
            let mut padded = piece.into_coeffs();
            padded.resize(a.order(), Int::ZERO);
            total.add_assign(&TruncatedSeries::from_coeffs(Integers, padded));
        }
        prop_assert_eq!(total, a);
    }

    #[test]
    fn substitution_composes(raw in prop::collection::vec(-9i64..9, 1..20), j in 1usize..4, k in 1usize..4) {
        let a = int_series(&raw);
        let cap = usize::MAX;
        prop_assert_eq!(a.substitute(j, false, cap).substitute(k, false, cap), a.substitute(j * k, false, cap));
        prop_assert_eq!(a.substitute(1, true, cap).substitute(1, true, cap), a);
    }

    #[test]
    fn modes_commute_with_specialization(e in 1i64..6, zexp in -3i64..4, t in prime()) {
        // 1/(1 - z^a q^e) expanded symbolically then evaluated at ζ_t equals the
        // direct expansion over ℤ[ζ_t].
        use sptforge_core::qseries::MonomialSpec;
        let term = Term::one().over(MonomialSpec::zq(zexp, e));
        let order = 30;
        let sym = AnySeries::evaluate(Mode::Symbolic, &[term.clone()], order, 0).unwrap();
        let cyc = AnySeries::evaluate(Mode::Root(t), &[term], order, 0).unwrap();
        let sym = sym.as_two_variable().unwrap();
        let cyc = cyc.as_cyclotomic().unwrap();
        for n in 0..order {
            prop_assert_eq!(&laurent_eval_at_root(sym.coeff(n), t as i64).unwrap(), cyc.coeff(n));
        }
    }
}
