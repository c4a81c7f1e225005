use sptforge_core::qseries::{Bilateral, MonomialSpec, Mode};
use sptforge_core::registry::{catalog, lookup, negative_control, select, verify_all, verify_case, Side};
use sptforge_core::report::Status;
use sptforge_core::rings::{Integers, RingKind};
use sptforge_core::Error;

#[test]
fn catalog_is_large_sorted_and_unique() {
    let c = catalog();
    assert!(c.len() >= 40, "only {} cases", c.len());
    for w in c.windows(2) {
        assert!(w[0].id < w[1].id);
    }
    assert!(c.iter().all(|x| !x.statement.is_empty() && !x.equalities.is_empty()));
}

#[test]
fn every_mandatory_id_is_present() {
    let ids = [
        "series_J1", "series_J2", "series_J3", "series_F3", "series_G4", "series_AG4",
        "product_F3", "product_G4", "product_AG4",
        "dissect_B2_5", "dissect_B2_7", "dissect_F3_3", "dissect_F3_5", "dissect_F3_7", "dissect_G4_5", "dissect_AG4_5",
        "rank_zeta5", "rank_zeta7", "crank_zeta5", "crank_zeta7", "lemma_B2_rank", "b2_rank_crank",
        "f3_crank_mod3", "f3_crank_mod5", "f3_crank_mod7", "f3_rank_mod3", "f3_rank_mod5", "f3_rank_mod7",
        "lambert_berndt", "lambert_ALL", "theta_quotient", "one_psi_one", "gauss_half", "mod7_rank_pieces",
        "heine", "UV_lemma", "UV_symmetries", "lewis_T", "h_combination", "h25", "g4_crank_5", "g4_ag4_parts_5",
        "relabel_gstar", "relabel_gstarstar",
    ];
    for id in ids {
        assert!(lookup(id).is_some(), "missing {id}");
    }
}

#[test]
fn lookup_reports_ring() {
    assert_eq!(lookup("dissect_F3_3").unwrap().ring(), RingKind::Cyclotomic(3));
    assert_eq!(lookup("series_F3").unwrap().ring(), RingKind::TwoVariable);
    assert!(lookup("nonexistent").is_none());
    assert!(matches!(verify_case("nonexistent", None), Err(Error::UnknownCase(_))));
}

#[test]
fn dissection_filter_selects_seven() {
    assert_eq!(select(Some("dissect_*")).unwrap().len(), 7);
    let r = verify_all(Some("no_such_case_*"), None, 2).unwrap();
    assert!(r.is_empty());
}

#[test]
fn dissect_f3_3_verifies() {
    let r = verify_case("dissect_F3_3", Some(240)).unwrap();
    assert_eq!(r.status, Status::Verified);
    assert_eq!(r.order, 240);
}

#[test]
fn order_override_only_raises() {
    let r = verify_case("gauss_half", Some(10)).unwrap();
    assert_eq!(r.order, lookup("gauss_half").unwrap().default_order);
}

#[test]
fn negative_control_reports_minimal_witness() {
    let r = negative_control().verify(40);
    assert_eq!(r.status, Status::Mismatch);
    let m = r.first_mismatch.unwrap();
    assert_eq!(m.power, 5);
    assert_eq!((m.lhs.as_str(), m.rhs.as_str()), ("1", "-1"));
}

#[test]
fn larger_order_keeps_verdicts() {
    for id in ["lewis_T", "UV_symmetries", "rank_zeta7", "lemma_B2_rank"] {
        let case = lookup(id).unwrap();
        for order in [case.default_order, case.default_order + 37] {
            assert!(case.verify(order).is_verified(), "{id} at {order}");
        }
    }
}

#[test]
fn reports_do_not_depend_on_parallelism() {
    let strip = |v: Vec<sptforge_core::report::VerificationReport>| -> Vec<_> {
        v.into_iter().map(|r| r.without_timing()).collect()
    };
    let a = strip(verify_all(Some("[fl]*"), None, 1).unwrap());
    let b = strip(verify_all(Some("[fl]*"), None, 4).unwrap());
    assert_eq!(a, b);
    assert!(a.iter().all(|r| r.is_verified()));
}

#[test]
fn h_at_minus_q25_is_not_an_eta_quotient() {
    // The product (q^25;q^25)^4/(q^100;q^100)^2 starts 1 - 4q^25; h starts -q^25.
    let h = Bilateral::H { z: MonomialSpec::neg_q(25), base: 100 }.series(&Integers, 60).unwrap();
    let c: Vec<i64> = h.coeffs().iter().map(|x| x.to_i64().unwrap()).collect();
    assert_eq!((c[0], c[25], c[50]), (0, -1, 1));
}

#[test]
fn sides_expand_in_the_case_ring() {
    let case = lookup("dissect_B2_5").unwrap();
    let e = &case.equalities[0];
    assert!(matches!(e.lhs, Side::Series(_)));
    let s = e.lhs.expand(case.mode, 30).unwrap();
    assert_eq!(s.ring_kind(), RingKind::Cyclotomic(5));
    assert_eq!(case.mode, Mode::Root(5));
}
