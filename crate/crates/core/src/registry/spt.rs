//! Identities whose sides involve the spt-crank-type series S_X(z, q).

use crate::bailey::PairName;
use crate::error::Result;
use crate::qseries::{
    collect_bilateral, collect_terms, evaluate_shifted, poch_inf, poly_mul, qpoch_inf, rank_terms, crank_terms, AnySeries, Monomial,
    MonomialSpec, Mode, Term,
};
use crate::sptcrank::{build_pair_series, build_spt_crank, SptFamily};

use super::build::{k, pt, theta_lambert, zc, F};
use super::{IdentityCase, Side};

const TWO_VARIABLE_ORDER: usize = 120;

fn zq(a: i64, e: i64) -> MonomialSpec {
    MonomialSpec::zq(a, e)
}

fn s_x(family: SptFamily) -> Side {
    Side::series(move |mode, order| build_spt_crank(family, mode, order))
}

/// c · S_X.
fn scaled_s_x(family: SptFamily, c: i64) -> Side {
    Side::series(move |mode, order| Ok(build_spt_crank(family, mode, order)?.scale_int(c)))
}

/// P · (S_X + c) for a product prefactor P.
fn prefactor_times(
    family: SptFamily,
    c: i64,
    pre: impl Fn(usize) -> Result<Term> + Send + Sync + 'static,
) -> Side {
    Side::series(move |mode, order| {
        let (p, k) = evaluate_shifted(mode, &|cut| Ok(vec![pre(cut)?]), order)?;
        let p = p.unshift(k as usize)?;
        let s = build_spt_crank(family, mode, order)?;
        let s = if c == 0 { s } else { s.add(&AnySeries::evaluate(mode, &[Term::monomial(c, 0, 0)], order, 0)?)? };
        p.mul(&s)
    })
}

/// (1 − z)(1 − z^{-1}) as a term.
fn pole_pair() -> Term {
    Term::one().times(zq(1, 0)).times(zq(-1, 0))
}

/// (1 − z^{j−1})(1 − z^j) z^{1−j} = z^{1−j} − 1 − z + z^j.
fn z_weight(j: i64) -> Vec<Monomial> {
    vec![Monomial::new(1, 1 - j, 0), Monomial::new(-1, 0, 0), Monomial::new(-1, 1, 0), Monomial::new(1, j, 0)]
}

/// Right-hand sides of the single-series identities for the J family.
fn j_series_rhs(family: SptFamily, cutoff: usize) -> Result<Vec<Term>> {
    collect_terms(cutoff, |j| {
        if j < 2 {
            return None;
        }
        let q: &[(i64, i64)] = match family {
            SptFamily::J1 => &[(1, 0), (-1, j), (-1, 2 * j - 2), (1, 4 * j - 3), (1, 5 * j - 2), (-1, 6 * j - 3)],
            SptFamily::J2 => &[(1, 0), (-1, j - 1), (-1, 2 * j), (1, 4 * j - 1), (1, 5 * j - 3), (-1, 6 * j - 3)],
            _ => &[
                (1, j - 1),
                (-1, j),
                (-1, 2 * j - 2),
                (1, 2 * j),
                (1, 4 * j - 3),
                (-1, 4 * j - 1),
                (-1, 5 * j - 3),
                (1, 5 * j - 2),
            ],
        };
        let sign = if (j + 1) % 2 == 0 { 1 } else { -1 };
        let qpoly: Vec<Monomial> = q.iter().map(|&(c, e)| Monomial::new(sign * c, 0, e + j * (j - 1) / 2)).collect();
        Some(
            Term::from_poly(poly_mul(&z_weight(j), &qpoly))
                .over(MonomialSpec::q(3 * j - 3))
                .over(MonomialSpec::q(3 * j)),
        )
    })
}

/// Σ_j (1 − z^{j−1})(1 − z^j) z^{1−j} s_j q^{e(j)} over all integers j.
fn bilateral_rhs(cutoff: usize, alternating: bool, e: fn(i64) -> i64) -> Result<Vec<Term>> {
    collect_bilateral(cutoff, |j| {
        let sign = if alternating && j % 2 == 0 { -1 } else { 1 };
        let w: Vec<Monomial> = z_weight(j).into_iter().map(|m| Monomial::new(sign * m.c, m.z, e(j))).collect();
        Some(Term::from_poly(w))
    })
}

/// (1 + z) as a polynomial.
fn one_plus_z() -> Vec<Monomial> {
    vec![Monomial::new(1, 0, 0), Monomial::new(1, 1, 0)]
}

fn series_cases(v: &mut Vec<IdentityCase>) {
    for family in [SptFamily::J1, SptFamily::J2, SptFamily::J3] {
        let id = format!("series_{family}");
        v.push(
            IdentityCase::new(&id, Mode::Symbolic, TWO_VARIABLE_ORDER, "(1+z)(z,1/z,q;q) S_X(z,q) as a single j-sum")
                .eq(
                    prefactor_times(family, 0, |c| {
                        Ok(Term::from_poly(one_plus_z())
                            .times_all(&poch_inf(zq(1, 0), MonomialSpec::q(1), c)?)
                            .times_all(&poch_inf(zq(-1, 0), MonomialSpec::q(1), c)?)
                            .times_all(&qpoch_inf(1, 1, c)))
                    }),
                    Side::terms(move |c| j_series_rhs(family, c)),
                ),
        );
    }
    v.push(
        IdentityCase::new("series_F3", Mode::Symbolic, TWO_VARIABLE_ORDER, "(1+z)(z,1/z,q;q^2) S_F3(z,q) as a theta-type sum")
            .eq(
                prefactor_times(SptFamily::F3, 0, |c| {
                    Ok(Term::from_poly(one_plus_z())
                        .times_all(&poch_inf(zq(1, 0), MonomialSpec::q(2), c)?)
                        .times_all(&poch_inf(zq(-1, 0), MonomialSpec::q(2), c)?)
                        .times_all(&qpoch_inf(1, 2, c)))
                }),
                Side::terms(|c| bilateral_rhs(c, true, |j| (j - 1) * (j - 1))),
            ),
    );
    for (family, e) in [(SptFamily::G4, (|j| 2 * j * j - j) as fn(i64) -> i64), (SptFamily::AG4, |j| 2 * j * j + j)] {
        let id = format!("series_{family}");
        v.push(
            IdentityCase::new(&id, Mode::Symbolic, TWO_VARIABLE_ORDER, "(1+z)(z,1/z;q^2) S_X(z,q) as a theta-type sum").eq(
                prefactor_times(family, 0, |c| {
                    Ok(Term::from_poly(one_plus_z())
                        .times_all(&poch_inf(zq(1, 0), MonomialSpec::q(2), c)?)
                        .times_all(&poch_inf(zq(-1, 0), MonomialSpec::q(2), c)?))
                }),
                Side::terms(move |c| bilateral_rhs(c, false, e)),
            ),
        );
    }
    v.push(
        IdentityCase::new("series_J_additivity", Mode::Symbolic, TWO_VARIABLE_ORDER, "J1 j-sum equals the J2 and J3 j-sums combined")
            .eq(
                Side::terms(|c| j_series_rhs(SptFamily::J1, c)),
                Side::terms(|c| {
                    let mut t = j_series_rhs(SptFamily::J2, c)?;
                    t.extend(j_series_rhs(SptFamily::J3, c)?);
                    Ok(t)
                }),
            ),
    );
}

fn product_cases(v: &mut Vec<IdentityCase>) {
    let q2 = MonomialSpec::q(2);
    let q4 = MonomialSpec::q(4);
    // Both sides are multiplied by (1 − z)(1 − z^{-1}), and by (1 + z) for G4/AG4,
    // so that no factor vanishing at q = 0 sits in a denominator.
    v.push(
        IdentityCase::new("product_F3", Mode::Symbolic, 150, "S_F3(z,q) as a difference of two products").eq(
            prefactor_times(SptFamily::F3, 0, |_| Ok(pole_pair())),
            Side::terms(move |c| {
                let a = Term::one()
                    .times_all(&poch_inf(zq(1, 1), q2, c)?)
                    .times_all(&poch_inf(zq(-1, 1), q2, c)?)
                    .times_all(&qpoch_inf(2, 2, c))
                    .over_all(&poch_inf(zq(1, 2), q2, c)?)
                    .over_all(&poch_inf(zq(-1, 2), q2, c)?)
                    .over_all(&qpoch_inf(1, 2, c));
                let b = Term::monomial(-1, 0, 0)
                    .times_all(&qpoch_inf(1, 1, c))
                    .over_all(&poch_inf(zq(1, 2), q2, c)?)
                    .over_all(&poch_inf(zq(-1, 2), q2, c)?);
                Ok(vec![a, b])
            }),
        ),
    );
    for family in [SptFamily::G4, SptFamily::AG4] {
        // G4: z(−q/z, −zq^3; q^4) + (−zq, −q^3/z; q^4); AG4 swaps z ↔ 1/z inside.
        let s = if family == SptFamily::G4 { 1 } else { -1 };
        let id = format!("product_{family}");
        v.push(
            IdentityCase::new(&id, Mode::Symbolic, 150, "S_X(z,q) as a combination of three products").eq(
                prefactor_times(family, 0, |_| Ok(pole_pair().times_poly(&one_plus_z()))),
                Side::terms(move |c| {
                    let neg = |a: i64, e: i64| MonomialSpec::new(-1, a, e);
                    let tail = |t: Term| -> Result<Term> {
                        Ok(t.times_all(&qpoch_inf(4, 4, c))
                            .over_all(&poch_inf(zq(1, 2), q2, c)?)
                            .over_all(&poch_inf(zq(-1, 2), q2, c)?))
                    };
                    let a = tail(
                        Term::monomial(1, 1, 0)
                            .times_all(&poch_inf(neg(-s, 1), q4, c)?)
                            .times_all(&poch_inf(neg(s, 3), q4, c)?),
                    )?;
                    let b = tail(
                        Term::one().times_all(&poch_inf(neg(s, 1), q4, c)?).times_all(&poch_inf(neg(-s, 3), q4, c)?),
                    )?;
                    let d = Term::from_poly(one_plus_z())
                        .scale(-1)
                        .times_all(&qpoch_inf(2, 2, c))
                        .over_all(&qpoch_inf(1, 2, c))
                        .over_all(&poch_inf(zq(1, 2), q2, c)?)
                        .over_all(&poch_inf(zq(-1, 2), q2, c)?);
                    Ok(vec![a, b, d])
                }),
            ),
        );
    }
}

fn dissection_cases(v: &mut Vec<IdentityCase>) {
    use F::*;
    let z14 = zc(&[0, 1, 0, 0, 1]);
    let z16 = zc(&[0, 1, 0, 0, 0, 0, 1]);
    let z25 = zc(&[0, 0, 1, 0, 0, 1]);

    v.push(
        IdentityCase::new("dissect_B2_5", Mode::Root(5), 250, "5-dissection of S_B2(ζ_5,q)").eq(
            s_x(SptFamily::B2),
            Side::terms({
                let z14 = z14.clone();
                move |c| {
                    let mut t = vec![
                        pt(&k(1), 0, &[], &[], c)?,
                        pt(&k(-1), 0, &[E(25), J(10, 25)], &[J(5, 25), J(5, 25)], c)?,
                        pt(&k(1), 2, &[E(25)], &[J(10, 25)], c)?,
                        pt(&z14, 3, &[E(25), J(5, 25)], &[J(10, 25), J(10, 25)], c)?,
                    ];
                    t.extend(theta_lambert(&zc(&[1, -1, 0, 0, -1]), 5, &[], &[E(25)], (75, 25, 5), c)?);
                    t.extend(theta_lambert(&z14, 8, &[], &[E(25)], (75, 25, 10), c)?);
                    Ok(t)
                }
            }),
        ),
    );
    v.push(
        IdentityCase::new("dissect_B2_7", Mode::Root(7), 250, "7-dissection of S_B2(ζ_7,q)").eq(
            s_x(SptFamily::B2),
            Side::terms({
                let (z16, z25) = (z16.clone(), z25.clone());
                move |c| {
                    let neg16: Vec<(i64, i64)> = z16.iter().map(|&(a, e)| (-a, e)).collect();
                    let neg25: Vec<(i64, i64)> = z25.iter().map(|&(a, e)| (-a, e)).collect();
                    let mut t = vec![
                        pt(&z16, 0, &[], &[], c)?,
                        pt(&neg16, 0, &[E(49), J(21, 49)], &[J(7, 49), J(14, 49)], c)?,
                        pt(&k(1), 2, &[E(49), J(14, 49)], &[J(7, 49), J(21, 49)], c)?,
                        pt(&z16, 3, &[E(49)], &[J(14, 49)], c)?,
                        pt(&zc(&[1, 1, 1, 0, 0, 1, 1]), 4, &[E(49)], &[J(21, 49)], c)?,
                        pt(&k(1), 6, &[E(49), J(7, 49)], &[J(14, 49), J(21, 49)], c)?,
                    ];
                    t.extend(theta_lambert(&zc(&[-1, 1, 0, 0, 0, 0, 1]), 7, &[], &[E(49)], (147, 49, 7), c)?);
                    t.extend(theta_lambert(&zc(&[1, 0, 1, 0, 0, 1]), 16, &[], &[E(49)], (147, 49, 21), c)?);
                    t.extend(theta_lambert(&neg25, 13, &[], &[E(49)], (147, 49, 14), c)?);
                    Ok(t)
                }
            }),
        ),
    );
    v.push(
        IdentityCase::new("dissect_F3_3", Mode::Root(3), 240, "3-dissection of S_F3(ζ_3,q)").eq(
            s_x(SptFamily::F3),
            Side::terms(|c| {
                Ok(vec![
                    pt(&k(1), 1, &[E(18), E(9)], &[E(6)], c)?,
                    pt(&k(1), 2, &[E(18), E(18), E(18), E(18), E(3)], &[E(9), E(9), E(6), E(6)], c)?,
                ])
            }),
        ),
    );
    // The ζ_5 and ζ_7 dissections of S_F3 have coefficients in (1/t)ℤ[ζ_t];
    // both sides are multiplied by t.
    v.push(
        IdentityCase::new("dissect_F3_5", Mode::Root(5), 250, "5-dissection of S_F3(ζ_5,q), scaled by 5").eq(
            scaled_s_x(SptFamily::F3, 5),
            Side::terms(|c| {
                let a = zc(&[3, 1, 0, 0, 1]);
                let b = zc(&[-1, -2, 0, 0, -2]);
                Ok(vec![
                    pt(&k(5), 1, &[E(25)], &[J(10, 50)], c)?,
                    pt(&a, 2, &[E(50), J(15, 50)], &[P(25, 50), J(10, 50)], c)?,
                    pt(&b, 2, &[E(25), J(10, 25)], &[J(5, 25), J(20, 50)], c)?,
                    pt(&a, 2, &[E(25), J(5, 25)], &[J(10, 25), J(10, 50)], c)?,
                    pt(&b, 7, &[E(50), J(5, 50)], &[P(25, 50), J(20, 50)], c)?,
                    pt(&zc(&[5, 5, 0, 0, 5]), 3, &[E(25)], &[J(20, 50)], c)?,
                ])
            }),
        ),
    );
    v.push(
        IdentityCase::new("dissect_F3_7", Mode::Root(7), 250, "7-dissection of S_F3(ζ_7,q), scaled by 7").eq(
            scaled_s_x(SptFamily::F3, 7),
            Side::terms(|c| {
                let c3 = zc(&[2, 1, -2, 0, 0, -2, 1]);
                let c3n: Vec<(i64, i64)> = c3.iter().map(|&(a, e)| (-a, e)).collect();
                Ok(vec![
                    pt(&zc(&[18, 9, 3, 0, 0, 3, 9]), 1, &[E(98), J(35, 98)], &[P(49, 98), J(14, 98)], c)?,
                    pt(&zc(&[-5, -6, -2, 0, 0, -2, -6]), 1, &[E(14)], &[P(7, 14)], c)?,
                    pt(&c3, 8, &[E(98), J(21, 98)], &[P(49, 98), J(28, 98)], c)?,
                    pt(&c3n, 1, &[E(49), J(35, 98)], &[J(21, 49)], c)?,
                    pt(&zc(&[-4, -2, -3, 0, 0, -3, -2]), 1, &[E(49), J(21, 98)], &[J(7, 49)], c)?,
                    pt(&k(7), 2, &[E(49), J(14, 49)], &[J(7, 49), J(28, 98)], c)?,
                    pt(&zc(&[7, 7, 0, 0, 0, 0, 7]), 3, &[E(49), J(7, 49)], &[J(21, 49), J(14, 98)], c)?,
                    pt(&zc(&[7, 7, 7, 0, 0, 7, 7]), 5, &[E(49), J(21, 49)], &[J(14, 49), J(42, 98)], c)?,
                ])
            }),
        ),
    );
    v.push(
        IdentityCase::new("dissect_G4_5", Mode::Root(5), 250, "5-dissection of S_G4(ζ_5,q)").eq(
            s_x(SptFamily::G4),
            Side::terms({
                let z14 = z14.clone();
                move |c| {
                    let m14: Vec<(i64, i64)> = z14.iter().map(|&(a, e)| (-a, e)).collect();
                    Ok(vec![
                        pt(&zc(&[-1, -1, 0, 0, -1]), 10, &[E(100), J(10, 200)], &[J(10, 50), J(5, 100)], c)?,
                        pt(&m14, 5, &[E(50)], &[P(25, 50), J(20, 50)], c)?,
                        pt(&k(-1), 6, &[E(100), J(30, 200)], &[J(10, 50), J(15, 100)], c)?,
                        pt(&k(-1), 12, &[E(100), J(10, 200)], &[J(20, 50), J(5, 100)], c)?,
                        pt(&k(-1), 3, &[E(50)], &[P(25, 50), J(10, 50)], c)?,
                        pt(&m14, 8, &[E(100), J(30, 200)], &[J(20, 50), J(15, 100)], c)?,
                    ])
                }
            }),
        ),
    );
    v.push(
        IdentityCase::new("dissect_AG4_5", Mode::Root(5), 250, "5-dissection of S_AG4(ζ_5,q)").eq(
            s_x(SptFamily::AG4),
            Side::terms(move |c| {
                let m14: Vec<(i64, i64)> = z14.iter().map(|&(a, e)| (-a, e)).collect();
                Ok(vec![
                    pt(&k(-1), 10, &[E(100), J(10, 200)], &[J(10, 50), J(5, 100)], c)?,
                    pt(&k(-1), 1, &[E(100), J(70, 200)], &[J(10, 50), J(35, 100)], c)?,
                    pt(&zc(&[-1, -1, 0, 0, -1]), 6, &[E(100), J(30, 200)], &[J(10, 50), J(15, 100)], c)?,
                    pt(&m14, 12, &[E(100), J(10, 200)], &[J(20, 50), J(5, 100)], c)?,
                    pt(&m14, 3, &[E(100), J(70, 200)], &[J(20, 50), J(35, 100)], c)?,
                    pt(&k(-1), 8, &[E(100), J(30, 200)], &[J(20, 50), J(15, 100)], c)?,
                ])
            }),
        ),
    );
}

/// prefactor · (1 + Σ_{n≥1} (1−z)(1−z^{-1}) s_n q^{e(n)}(1 + q^{f(n)})
/// / ((1 − zq^{gn})(1 − z^{-1}q^{gn}))), with s_n = (−1)^n when `alternating`.
pub(crate) fn rank_type_sum(
    prefactor: &Term,
    alternating: bool,
    e: fn(i64) -> i64,
    f: fn(i64) -> i64,
    g: i64,
    cutoff: usize,
) -> Result<Vec<Term>> {
    let mut out = vec![prefactor.clone()];
    out.extend(collect_terms(cutoff, |n| {
        (n >= 1).then(|| {
            let s = if alternating && n % 2 == 1 { -1 } else { 1 };
            prefactor
                .mul(&Term::from_poly(vec![Monomial::new(s, 0, e(n)), Monomial::new(s, 0, e(n) + f(n))]))
                .times(zq(1, 0))
                .times(zq(-1, 0))
                .over(zq(1, g * n))
                .over(zq(-1, g * n))
        })
    })?);
    Ok(out)
}

fn eta_inv(c: usize) -> Term {
    Term::one().over_all(&qpoch_inf(1, 1, c))
}

fn bailey_form_cases(v: &mut Vec<IdentityCase>) {
    let q1 = MonomialSpec::q(1);
    let q2 = MonomialSpec::q(2);
    v.push(
        IdentityCase::new("bailey_form_B2", Mode::Symbolic, TWO_VARIABLE_ORDER, "(1-z)(1-1/z) S_B2 as a rank-type sum minus the crank product")
            .eq(
                prefactor_times(SptFamily::B2, 0, |_| Ok(pole_pair())),
                Side::terms(move |c| {
                    let mut t = rank_type_sum(&eta_inv(c), true, |n| (3 * n * n - n) / 2, |n| 3 * n, 1, c)?;
                    t.push(
                        Term::monomial(-1, 0, 0)
                            .times_all(&qpoch_inf(1, 1, c))
                            .over_all(&poch_inf(zq(1, 1), q1, c)?)
                            .over_all(&poch_inf(zq(-1, 1), q1, c)?),
                    );
                    Ok(t)
                }),
            ),
    );
    v.push(
        IdentityCase::new("bailey_form_F3", Mode::Symbolic, TWO_VARIABLE_ORDER, "(1-z)(1-1/z) S_F3 as a rank-type sum minus a crank-type product")
            .eq(
                prefactor_times(SptFamily::F3, 0, |_| Ok(pole_pair())),
                Side::terms(move |c| {
                    let pre = Term::one().times_all(&qpoch_inf(1, 2, c)).over_all(&qpoch_inf(2, 2, c));
                    let mut t = rank_type_sum(&pre, false, |n| n, |n| 2 * n, 2, c)?;
                    t.push(
                        Term::monomial(-1, 0, 0)
                            .times_all(&qpoch_inf(1, 1, c))
                            .over_all(&poch_inf(zq(1, 2), q2, c)?)
                            .over_all(&poch_inf(zq(-1, 2), q2, c)?),
                    );
                    Ok(t)
                }),
            ),
    );
    for (family, e, f) in [
        (SptFamily::G4, (|n| (n * n + 3 * n) / 2) as fn(i64) -> i64, (|n| n) as fn(i64) -> i64),
        (SptFamily::AG4, |n| (n * n + n) / 2, |n| 3 * n),
    ] {
        let id = format!("bailey_form_{family}");
        v.push(
            IdentityCase::new(&id, Mode::Symbolic, TWO_VARIABLE_ORDER, "(1-z)(1-1/z) S_X as a rank-type sum minus a product").eq(
                prefactor_times(family, 0, |_| Ok(pole_pair())),
                Side::terms(move |c| {
                    let mut t = rank_type_sum(&eta_inv(c), true, e, f, 2, c)?;
                    t.push(
                        Term::monomial(-1, 0, 0)
                            .times_all(&qpoch_inf(2, 2, c))
                            .over_all(&qpoch_inf(1, 2, c))
                            .over_all(&poch_inf(zq(1, 2), q2, c)?)
                            .over_all(&poch_inf(zq(-1, 2), q2, c)?),
                    );
                    Ok(t)
                }),
            ),
        );
    }
}

fn rank_crank_cases(v: &mut Vec<IdentityCase>) {
    v.push(
        IdentityCase::new("lemma_B2_rank", Mode::Symbolic, TWO_VARIABLE_ORDER, "B2 rank-type sum equals (z+1/z-1)R(z,q) + (1-z)(1-1/z)")
            .eq(
                Side::terms(|c| rank_type_sum(&eta_inv(c), true, |n| (3 * n * n - n) / 2, |n| 3 * n, 1, c)),
                Side::terms(|c| {
                    let w = [Monomial::new(1, 1, 0), Monomial::new(1, -1, 0), Monomial::new(-1, 0, 0)];
                    let mut t: Vec<Term> = rank_terms(c)?.into_iter().map(|x| x.times_poly(&w)).collect();
                    t.push(pole_pair());
                    Ok(t)
                }),
            ),
    );
    v.push(
        IdentityCase::new("b2_rank_crank", Mode::Symbolic, TWO_VARIABLE_ORDER, "S_B2 = ((z+1/z-1)R - C)/((1-z)(1-1/z)) + 1, cleared of the denominator")
            .eq(
                prefactor_times(SptFamily::B2, -1, |_| Ok(pole_pair())),
                Side::terms(|c| {
                    let w = [Monomial::new(1, 1, 0), Monomial::new(1, -1, 0), Monomial::new(-1, 0, 0)];
                    let mut t: Vec<Term> = rank_terms(c)?.into_iter().map(|x| x.times_poly(&w)).collect();
                    t.extend(crank_terms(c).into_iter().map(|x| x.scale(-1)));
                    Ok(t)
                }),
            ),
    );
}

fn relabel_cases(v: &mut Vec<IdentityCase>) {
    for (id, pair, family) in [
        ("relabel_gstar", PairName::Gstar, SptFamily::AG4),
        ("relabel_gstarstar", PairName::Gstarstar, SptFamily::G4),
    ] {
        v.push(
            IdentityCase::new(id, Mode::Symbolic, TWO_VARIABLE_ORDER, "q -> -q relabels a Slater-pair series as a known family").eq(
                Side::series(move |mode, order| Ok(build_pair_series(pair, mode, order)?.negate_q())),
                s_x(family),
            ),
        );
    }
}

pub(super) fn register(v: &mut Vec<IdentityCase>) {
    series_cases(v);
    product_cases(v);
    dissection_cases(v);
    bailey_form_cases(v);
    rank_crank_cases(v);
    relabel_cases(v);
}
