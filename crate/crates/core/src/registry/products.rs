//! Rank, crank and F3 rank/crank generating functions at roots of unity.

use crate::error::Result;
use crate::qseries::{poch_inf, qpoch_inf, rank_terms, crank_terms, MonomialSpec, Mode, Term};

use super::build::{k, pt, theta_lambert, zc, F};
use super::spt::rank_type_sum;
use super::{IdentityCase, Side};

fn neg(c: &[(i64, i64)]) -> Vec<(i64, i64)> {
    c.iter().map(|&(a, e)| (-a, e)).collect()
}

fn rank_cases(v: &mut Vec<IdentityCase>) {
    use F::*;
    v.push(
        IdentityCase::new("rank_zeta5", Mode::Root(5), 250, "5-dissection of the rank generating function R(ζ_5,q)").eq(
            Side::terms(rank_terms),
            Side::terms(|c| {
                let z14 = zc(&[0, 1, 0, 0, 1]);
                let mut t = vec![
                    pt(&k(1), 0, &[E(25), J(10, 25)], &[J(5, 25), J(5, 25)], c)?,
                    pt(&k(1), 1, &[E(25)], &[J(5, 25)], c)?,
                    pt(&z14, 2, &[E(25)], &[J(10, 25)], c)?,
                    pt(&neg(&z14), 3, &[E(25), J(5, 25)], &[J(10, 25), J(10, 25)], c)?,
                ];
                t.extend(theta_lambert(&zc(&[-2, 1, 0, 0, 1]), 5, &[], &[E(25)], (75, 25, 5), c)?);
                t.extend(theta_lambert(&zc(&[-1, -2, 0, 0, -2]), 8, &[], &[E(25)], (75, 25, 10), c)?);
                Ok(t)
            }),
        ),
    );
    v.push(
        IdentityCase::new("rank_zeta7", Mode::Root(7), 250, "7-dissection of the rank generating function R(ζ_7,q)").eq(
            Side::terms(rank_terms),
            Side::terms(|c| {
                // (1 − ζ)(1 − ζ^6) = 2 − ζ − ζ^6.
                let mut t = vec![
                    pt(&zc(&[2, -1, 0, 0, 0, 0, -1]), 0, &[], &[], c)?,
                    pt(&zc(&[-1, 1, 0, 0, 0, 0, 1]), 0, &[E(49), J(21, 49)], &[J(7, 49), J(14, 49)], c)?,
                    pt(&k(1), 1, &[E(49)], &[J(7, 49)], c)?,
                    pt(&zc(&[0, 1, 0, 0, 0, 0, 1]), 2, &[E(49), J(14, 49)], &[J(7, 49), J(21, 49)], c)?,
                    pt(&zc(&[1, 0, 1, 0, 0, 1]), 3, &[E(49)], &[J(14, 49)], c)?,
                    pt(&zc(&[0, 0, -1, 0, 0, -1]), 4, &[E(49)], &[J(21, 49)], c)?,
                    pt(&zc(&[0, 1, 1, 0, 0, 1, 1]), 6, &[E(49), J(7, 49)], &[J(14, 49), J(21, 49)], c)?,
                ];
                t.extend(theta_lambert(&zc(&[2, -1, 0, 0, 0, 0, -1]), 7, &[], &[E(49)], (147, 49, 7), c)?);
                t.extend(theta_lambert(&zc(&[0, 1, -1, 0, 0, -1, 1]), 16, &[], &[E(49)], (147, 49, 21), c)?);
                t.extend(theta_lambert(&zc(&[1, 1, 2, 0, 0, 2, 1]), 13, &[], &[E(49)], (147, 49, 14), c)?);
                Ok(t)
            }),
        ),
    );
}

fn crank_cases(v: &mut Vec<IdentityCase>) {
    use F::*;
    v.push(
        IdentityCase::new("crank_zeta5", Mode::Root(5), 250, "5-dissection of the crank generating function C(ζ_5,q)").eq(
            Side::terms(|c| Ok(crank_terms(c))),
            Side::terms(|c| {
                Ok(vec![
                    pt(&k(1), 0, &[E(25), J(10, 25)], &[J(5, 25), J(5, 25)], c)?,
                    pt(&zc(&[-1, 1, 0, 0, 1]), 1, &[E(25)], &[J(5, 25)], c)?,
                    pt(&zc(&[-1, -1, 0, 0, -1]), 2, &[E(25)], &[J(10, 25)], c)?,
                    pt(&zc(&[0, -1, 0, 0, -1]), 3, &[E(25), J(5, 25)], &[J(10, 25), J(10, 25)], c)?,
                ])
            }),
        ),
    );
    v.push(
        IdentityCase::new("crank_zeta7", Mode::Root(7), 250, "7-dissection of the crank generating function C(ζ_7,q)").eq(
            Side::terms(|c| Ok(crank_terms(c))),
            Side::terms(|c| {
                Ok(vec![
                    pt(&k(1), 0, &[E(49), J(21, 49)], &[J(7, 49), J(14, 49)], c)?,
                    pt(&zc(&[-1, 1, 0, 0, 0, 0, 1]), 1, &[E(49)], &[J(7, 49)], c)?,
                    pt(&zc(&[0, 0, 1, 0, 0, 1]), 2, &[E(49), J(14, 49)], &[J(7, 49), J(21, 49)], c)?,
                    pt(&zc(&[0, -1, -1, 0, 0, -1, -1]), 3, &[E(49)], &[J(14, 49)], c)?,
                    pt(&zc(&[0, -1, 0, 0, 0, 0, -1]), 4, &[E(49)], &[J(21, 49)], c)?,
                    pt(&zc(&[-1, 0, -1, 0, 0, -1]), 6, &[E(49), J(7, 49)], &[J(14, 49), J(21, 49)], c)?,
                ])
            }),
        ),
    );
}

/// (q, q^2; q^2)_∞ / (zq^2, z^{-1}q^2; q^2)_∞: the F3 crank-type product.
fn f3_crank(c: usize) -> Result<Vec<Term>> {
    let q2 = MonomialSpec::q(2);
    Ok(vec![Term::one()
        .times_all(&qpoch_inf(1, 2, c))
        .times_all(&qpoch_inf(2, 2, c))
        .over_all(&poch_inf(MonomialSpec::zq(1, 2), q2, c)?)
        .over_all(&poch_inf(MonomialSpec::zq(-1, 2), q2, c)?)])
}

/// (q;q^2)/(q^2;q^2) (1 + Σ (1−z)(1−1/z) q^n (1+q^{2n})/((1−zq^{2n})(1−q^{2n}/z))).
fn f3_rank(c: usize) -> Result<Vec<Term>> {
    let pre = Term::one().times_all(&qpoch_inf(1, 2, c)).over_all(&qpoch_inf(2, 2, c));
    rank_type_sum(&pre, false, |n| n, |n| 2 * n, 2, c)
}

fn f3_cases(v: &mut Vec<IdentityCase>) {
    use F::*;
    let z14 = zc(&[0, 1, 0, 0, 1]);
    let z25 = zc(&[0, 0, 1, 0, 0, 1]);
    let z16 = zc(&[0, 1, 0, 0, 0, 0, 1]);

    v.push(
        IdentityCase::new("f3_crank_mod3", Mode::Root(3), 240, "3-dissection of the F3 crank product at ζ_3").eq(
            Side::terms(f3_crank),
            Side::terms(|c| {
                Ok(vec![
                    pt(&k(1), 0, &[E(9), E(9), E(9), E(9)], &[E(18), E(18), E(3)], c)?,
                    pt(&k(-1), 1, &[E(18), E(9)], &[E(6)], c)?,
                    pt(&k(-2), 2, &[E(18), E(18), E(18), E(18), E(3)], &[E(9), E(9), E(6), E(6)], c)?,
                ])
            }),
        ),
    );
    v.push(
        IdentityCase::new("f3_crank_mod5", Mode::Root(5), 250, "5-dissection of the F3 crank product at ζ_5").eq(
            Side::terms(f3_crank),
            Side::terms({
                let z14 = z14.clone();
                move |c| {
                    Ok(vec![
                        pt(&k(1), 0, &[E(25), J(15, 50)], &[J(5, 25)], c)?,
                        pt(&k(-1), 1, &[E(25)], &[J(10, 50)], c)?,
                        pt(&z14, 2, &[E(25), J(10, 25)], &[J(5, 25), J(20, 50)], c)?,
                        pt(&k(-1), 2, &[E(25), J(5, 25)], &[J(10, 25), J(10, 50)], c)?,
                        pt(&neg(&z14), 3, &[E(25)], &[J(20, 50)], c)?,
                        pt(&neg(&z14), 4, &[E(25), J(5, 50)], &[J(10, 25)], c)?,
                    ])
                }
            }),
        ),
    );
    v.push(
        IdentityCase::new("f3_crank_mod7", Mode::Root(7), 250, "7-dissection of the F3 crank product at ζ_7").eq(
            Side::terms(f3_crank),
            Side::terms({
                let (z16, z25) = (z16.clone(), z25.clone());
                move |c| {
                    let one25 = zc(&[1, 0, 1, 0, 0, 1]);
                    Ok(vec![
                        pt(&k(1), 0, &[E(49)], &[J(14, 98)], c)?,
                        pt(&neg(&z25), 1, &[E(49), J(35, 98)], &[J(21, 49)], c)?,
                        pt(&one25, 1, &[E(49), J(21, 98)], &[J(7, 49)], c)?,
                        pt(&k(-2), 1, &[E(98), J(35, 98)], &[P(49, 98), J(14, 98)], c)?,
                        pt(&zc(&[-1, 1, 0, 0, 0, 0, 1]), 2, &[E(49), J(14, 49)], &[J(7, 49), J(28, 98)], c)?,
                        pt(&neg(&z16), 3, &[E(49), J(7, 49)], &[J(21, 49), J(14, 98)], c)?,
                        pt(&one25, 4, &[E(49)], &[J(28, 98)], c)?,
                        pt(&zc(&[0, -1, -1, 0, 0, -1, -1]), 5, &[E(49), J(21, 49)], &[J(14, 49), J(42, 98)], c)?,
                        pt(&neg(&z25), 6, &[E(49)], &[J(42, 98)], c)?,
                    ])
                }
            }),
        ),
    );
    v.push(
        IdentityCase::new("f3_rank_mod3", Mode::Root(3), 240, "3-dissection of the F3 rank-type series at ζ_3").eq(
            Side::terms(f3_rank),
            Side::terms(|c| {
                Ok(vec![
                    pt(&k(1), 0, &[E(9), E(9), E(9), E(9)], &[E(3), E(18), E(18)], c)?,
                    pt(&k(2), 1, &[E(9), E(18)], &[E(6)], c)?,
                    pt(&k(1), 2, &[E(3), E(18), E(18), E(18), E(18)], &[E(6), E(6), E(9), E(9)], c)?,
                ])
            }),
        ),
    );
    v.push(
        IdentityCase::new("f3_rank_mod5", Mode::Root(5), 250, "5-dissection of the F3 rank-type series at ζ_5").eq(
            Side::terms(f3_rank),
            Side::terms({
                let z14 = z14.clone();
                move |c| {
                    Ok(vec![
                        pt(&k(1), 0, &[E(25), J(15, 50)], &[J(5, 25)], c)?,
                        pt(&zc(&[1, -1, 0, 0, -1]), 1, &[E(25)], &[J(10, 50)], c)?,
                        pt(&k(1), 2, &[E(50), J(15, 50)], &[P(25, 50), J(10, 50)], c)?,
                        pt(&neg(&z14), 7, &[E(50), J(5, 50)], &[P(25, 50), J(20, 50)], c)?,
                        pt(&zc(&[1, 1, 0, 0, 1]), 3, &[E(25)], &[J(20, 50)], c)?,
                        pt(&neg(&z14), 4, &[E(25), J(5, 50)], &[J(10, 25)], c)?,
                    ])
                }
            }),
        ),
    );
    v.push(
        IdentityCase::new("f3_rank_mod7", Mode::Root(7), 250, "7-dissection of the F3 rank-type series at ζ_7").eq(
            Side::terms(f3_rank),
            Side::terms(move |c| {
                let one25 = zc(&[1, 0, 1, 0, 0, 1]);
                Ok(vec![
                    pt(&k(1), 0, &[E(49)], &[J(14, 98)], c)?,
                    pt(&k(1), 1, &[E(98), J(35, 98)], &[P(49, 98), J(14, 98)], c)?,
                    pt(&neg(&z16), 1, &[E(14)], &[P(7, 14)], c)?,
                    pt(&neg(&z25), 8, &[E(98), J(21, 98)], &[P(49, 98), J(28, 98)], c)?,
                    pt(&k(1), 2, &[E(49), J(14, 49)], &[J(7, 49), J(28, 98)], c)?,
                    pt(&neg(&z25), 3, &[E(49), J(7, 49)], &[J(21, 49), J(14, 98)], c)?,
                    pt(&one25, 4, &[E(49)], &[J(28, 98)], c)?,
                    pt(&one25, 5, &[E(49), J(21, 49)], &[J(14, 49), J(42, 98)], c)?,
                    pt(&neg(&z25), 6, &[E(49)], &[J(42, 98)], c)?,
                ])
            }),
        ),
    );
}

pub(super) fn register(v: &mut Vec<IdentityCase>) {
    rank_cases(v);
    crank_cases(v);
    f3_cases(v);
}
