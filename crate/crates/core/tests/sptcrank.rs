use sptforge_core::qseries::{AnySeries, Mode};
use sptforge_core::rings::{laurent_eval_at_root, Int};
use sptforge_core::sptcrank::*;

fn ints(s: &AnySeries) -> Vec<Int> {
    s.as_integer().unwrap().coeffs().to_vec()
}

fn small(v: &[Int]) -> Vec<i64> {
    v.iter().map(|c| c.to_i64().unwrap()).collect()
}

#[test]
fn mode_one_matches_one_variable_display() {
    for f in SptFamily::ALL {
        let built = build_spt_crank(f, Mode::One, 120).unwrap();
        let display = AnySeries::evaluate(Mode::One, &one_variable_terms(f, 120).unwrap(), 120, 0).unwrap();
        assert_eq!(built.first_mismatch(&display), None, "{f}");
    }
}

#[test]
fn symbolic_build_specializes_to_one_and_roots() {
    for f in SptFamily::ALL {
        let sym = build_spt_crank(f, Mode::Symbolic, 120).unwrap();
        let sym = sym.as_two_variable().unwrap();
        let one = ints(&build_spt_crank(f, Mode::One, 120).unwrap());
        let at_one: Vec<Int> = sym.coeffs().iter().map(|c| c.eval_at_one()).collect();
        assert_eq!(at_one, one, "{f}");
        for t in [3u32, 5, 7] {
            let root = build_spt_crank(f, Mode::Root(t), 120).unwrap();
            let root = root.as_cyclotomic().unwrap();
            for (i, c) in sym.coeffs().iter().enumerate() {
                assert_eq!(&laurent_eval_at_root(c, t as i64).unwrap(), root.coeff(i), "{f} at ζ_{t}, q^{i}");
            }
        }
    }
}

#[test]
fn j1_is_j2_plus_j3() {
    let get = |f| build_spt_crank(f, Mode::Symbolic, 120).unwrap().as_two_variable().unwrap().clone();
    let sum = get(SptFamily::J2).add(&get(SptFamily::J3)).unwrap();
    assert_eq!(get(SptFamily::J1), sum);
}

#[test]
fn q0_coefficient_vanishes() {
    for f in SptFamily::ALL {
        assert!(build_spt_crank(f, Mode::Symbolic, 2).unwrap().coeff_is_zero(0));
    }
}

#[test]
fn b2_low_values() {
    let s = build_spt_crank(SptFamily::B2, Mode::One, 5).unwrap();
    assert_eq!(small(&ints(&s)[1..]), vec![0, 1, 2, 5]);
}

#[test]
fn spt_table_values() {
    assert_eq!(small(&spt_table(SptFamily::J1, 3).unwrap()), vec![1, 3, 4]);
    assert_eq!(small(&spt_table(SptFamily::J2, 3).unwrap())[2], 3);
    assert_eq!(small(&spt_table(SptFamily::J3, 3).unwrap()), vec![0, 1, 1]);
    assert_eq!(small(&spt_table(SptFamily::J2, 1).unwrap()), vec![1]);
}

#[test]
fn table_row_sums_are_spt_values() {
    for f in SptFamily::ALL {
        let t = crank_table(f, 121).unwrap();
        let spt = spt_table(f, 120).unwrap();
        for n in 1..=120 {
            assert_eq!(t.spt(n), spt[n - 1], "{f} n={n}");
        }
        assert_eq!(t.row(0).terms().len(), 0);
        assert!(t.band_excess().unwrap() <= 0, "{f}");
    }
}

#[test]
fn b2_class_counts() {
    let t = crank_table(SptFamily::B2, 10).unwrap();
    assert_eq!(t.spt(2).to_i64(), Some(1));
    let c: Vec<Int> = (0..5).map(|k| t.class_count(k, 5, 6)).collect();
    assert!(c.iter().all(|x| x == &c[0]));
}

#[test]
fn all_fifteen_congruences_to_300() {
    for (f, p, b) in CONGRUENCES {
        let r = check_congruence(f, p, b, 300).unwrap();
        assert!(r.is_verified(), "{}: {:?}", r.id(), r.failure);
    }
}

#[test]
fn non_congruence_is_reported() {
    let r = check_congruence(SptFamily::B2, 5, 2, 100).unwrap();
    let f = r.failure.expect("B2 has no mod 5 congruence at residue 2");
    assert_eq!(f.check, CongruenceCheck::Divisibility);
    assert_eq!(f.argument % 5, 2);
}

#[test]
fn congruence_input_checks() {
    assert!(check_congruence(SptFamily::B2, 4, 1, 50).is_err());
    assert!(check_congruence(SptFamily::B2, 5, 5, 50).is_err());
}

#[test]
fn vanishing_progressions() {
    for (f, p, b) in CONGRUENCES {
        let order = if p == 3 { 240 } else { 250 };
        let r = check_vanishing(f, p, b, order).unwrap();
        assert!(r.is_verified(), "{}: {:?}", r.id, r.first_mismatch);
    }
    let r = check_vanishing(SptFamily::J2, 3, 1, 240).unwrap();
    assert!(!r.is_verified());
    assert_eq!(r.first_mismatch.unwrap().power % 3, 1);
}
