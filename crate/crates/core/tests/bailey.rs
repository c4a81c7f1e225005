use sptforge_core::bailey::{
    check_conjugate_pair, check_lemma_variant, check_limiting_lemma, check_pair_relation, BaileyPair, PairName, Rho,
    RESCALE_EXPONENTS,
};
use sptforge_core::qseries::MonomialSpec;
use sptforge_core::report::VerificationReport;
use sptforge_core::Error;

fn assert_ok(r: VerificationReport) {
    assert!(r.is_verified(), "{} failed: {:?}", r.id, r.first_mismatch.as_ref().map(|m| format!("{m:?}")).or(r.error.clone()));
}

#[test]
fn catalog_pairs_satisfy_defining_relation() {
    for &name in PairName::CATALOG.iter() {
        let p = BaileyPair::catalog(name).unwrap();
        assert_ok(check_pair_relation(&p, 25, 200).unwrap());
    }
}

#[test]
fn generic_pairs_satisfy_defining_relation() {
    for s in RESCALE_EXPONENTS {
        for name in [PairName::GenericStar, PairName::GenericStarStar] {
            let p = BaileyPair::generic(name, MonomialSpec::q(s), 1).unwrap();
            assert_ok(check_pair_relation(&p, 12, 120).unwrap());
        }
    }
}

#[test]
fn limiting_lemma() {
    let b2 = BaileyPair::catalog(PairName::B2).unwrap();
    let z = MonomialSpec::zq(1, 0);
    assert_ok(check_limiting_lemma(&b2, Rho::Finite(z), Rho::Finite(z.inv()), 40).unwrap());
    let g = BaileyPair::generic(PairName::GenericStar, MonomialSpec::q(1), 1).unwrap();
    assert_ok(check_limiting_lemma(&g, Rho::Infinite, Rho::Infinite, 150).unwrap());
}

#[test]
fn summation_lemma_variants_on_generic_pairs() {
    for k in 1..=7u8 {
        for s in RESCALE_EXPONENTS {
            for name in [PairName::GenericStar, PairName::GenericStarStar] {
                let p = BaileyPair::generic(name, MonomialSpec::q(s), 1).unwrap();
                assert_ok(check_lemma_variant(k, &p, 120).unwrap());
            }
        }
    }
}

#[test]
fn variant_seven_with_stretched_generic_pair() {
    // a = q^{4j-2} relative to q², as in the coefficient extraction for S_F3.
    for j in 1..=3 {
        let p = BaileyPair::generic(PairName::GenericStar, MonomialSpec::q(4 * j - 2), 2).unwrap();
        assert_ok(check_lemma_variant(7, &p, 120).unwrap());
    }
}

#[test]
fn variant_seven_diverges_on_f3() {
    // Every summand has constant term 2, so the β-side is not q-adically convergent.
    let f3 = BaileyPair::catalog(PairName::F3).unwrap();
    assert!(matches!(check_lemma_variant(7, &f3, 60), Err(Error::Divergent(_))));
}

#[test]
fn variant_one_on_g4() {
    let g4 = BaileyPair::catalog(PairName::G4).unwrap();
    assert_ok(check_lemma_variant(1, &g4, 120).unwrap());
}

#[test]
fn variants_five_and_six_reject_r_equal_h() {
    let p = BaileyPair::generic(PairName::GenericStar, MonomialSpec::q(1), 1).unwrap();
    assert!(check_lemma_variant(5, &p, 30).is_err());
    assert!(check_lemma_variant(6, &p, 30).is_err());
}

#[test]
fn conjugate_pair() {
    assert_ok(check_conjugate_pair(MonomialSpec::ONE, MonomialSpec::ONE, 8, 60).unwrap());
    assert_ok(check_conjugate_pair(MonomialSpec::zq(1, 0), MonomialSpec::q(2), 5, 30).unwrap());
}
