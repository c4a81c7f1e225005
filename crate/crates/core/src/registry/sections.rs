//! Auxiliary integer-coefficient identities: Lambert series, theta quotients,
//! the bilateral sums V, U, T and h, and the G4/AG4 pieces at ζ_5.

use crate::error::Result;
use crate::qseries::{collect_bilateral, collect_terms, jac, poch, qpoch_inf, Bilateral, Monomial, MonomialSpec, Mode, Term};

use super::build::{k, lambert, pt, zc, F};
use super::spt::rank_type_sum;
use super::{IdentityCase, Side};

/// x/(1 − x) for x = q^e.
fn geometric(c: i64, e: i64) -> Term {
    Term::monomial(c, 0, e).over(MonomialSpec::q(e))
}

fn bilateral(b: Bilateral, c: i64, e: i64, cutoff: usize) -> Result<Vec<Term>> {
    let cutoff = cutoff + (-e).max(0) as usize;
    Ok(b.terms(cutoff)?.into_iter().map(|t| t.times_monomial(c, 0, e)).collect())
}

fn scaled(terms: Vec<Term>, coef: &[(i64, i64)]) -> Vec<Term> {
    let p: Vec<Monomial> = coef.iter().map(|&(c, z)| Monomial::new(c, z, 0)).collect();
    terms.into_iter().map(|t| t.times_poly(&p)).collect()
}

fn lambert_cases(v: &mut Vec<IdentityCase>) {
    use F::*;
    let mut divisor_case = IdentityCase::new(
        "lambert_berndt",
        Mode::One,
        250,
        "theta quotient in a, b equals a Lambert series in a^n, b^n (q -> q^m, a = q^α, b = q^β)",
    );
    for (m, a, b) in [(5, 2, 2), (7, 2, 2)] {
        divisor_case = divisor_case.eq(
            Side::terms(move |c| {
                Ok(vec![pt(
                    &k(1),
                    m - a - b,
                    &[E(2 * m), E(2 * m), E(2 * m), E(2 * m), J(a, 2 * m), J(b, 2 * m), J(a + b, 2 * m)],
                    &[E(m), E(m), J(a + m, 2 * m), J(b + m, 2 * m), J(a + b + m, 2 * m)],
                    c,
                )?])
            }),
            Side::terms(move |c| {
                let mut t = Vec::new();
                for (s, d) in [(1, -(a + b)), (-1, -a), (-1, -b), (1, a), (1, b), (-1, a + b)] {
                    t.extend(collect_terms(c, |n| {
                        (n >= 1).then(|| Term::monomial(s, 0, m * n + d * n).over(MonomialSpec::q(2 * m * n)))
                    })?);
                }
                Ok(t)
            }),
        );
    }
    v.push(divisor_case);

    let mut all = IdentityCase::new(
        "lambert_ALL",
        Mode::One,
        250,
        "theta quotient in a equals four geometric Lambert sums (q -> q^{2h}, a = q^e)",
    );
    for (h, e) in [(5, 1), (7, 1)] {
        all = all.eq(
            Side::terms(move |c| {
                Ok(vec![pt(
                    &k(1),
                    0,
                    &[E(2 * h), E(2 * h), J(2 * e, 2 * h), J(e + h, 2 * h), J(e + h, 2 * h)],
                    &[J(e, 2 * h), J(e, 2 * h), J(h, 2 * h), J(2 * e + h, 2 * h)],
                    c,
                )?])
            }),
            Side::terms(move |c| {
                let mut t = vec![Term::one()];
                let n_max = c as i64 / (2 * h) + 2;
                for j in 0..=n_max {
                    t.push(geometric(2, 2 * h * j + e));
                    t.push(geometric(-1, 2 * h * j + h + 2 * e));
                    if j >= 1 {
                        t.push(geometric(-2, 2 * h * j - e));
                        t.push(geometric(1, 2 * h * j - h - 2 * e));
                    }
                }
                Ok(t)
            }),
        );
    }
    v.push(all);
}

fn theta_cases(v: &mut Vec<IdentityCase>) {
    use F::*;
    let mut tq = IdentityCase::new(
        "theta_quotient",
        Mode::One,
        250,
        "M-dissection of (q^{2M};q^{2M})^2 j(zq^M;q^{2M})/((q^M;q^{2M})^2 j(z;q^{2M})) at z = q^s",
    );
    for (m, s) in [(5i64, 1i64), (5, 3)] {
        tq = tq.eq(
            Side::terms(move |c| {
                Ok(vec![pt(&k(1), 0, &[E(2 * m), E(2 * m), J(s + m, 2 * m)], &[P(m, 2 * m), P(m, 2 * m), J(s, 2 * m)], c)?])
            }),
            Side::terms(move |c| {
                let big = 2 * m * m;
                (0..m)
                    .map(|kk| {
                        let r = m * (2 * kk + 1);
                        pt(&k(1), s * kk, &[E(big), E(big), J(s * m + r, big)], &[J(s * m, big), J(r, big)], c)
                    })
                    .collect()
            }),
        );
    }
    v.push(tq);

    let mut psi = IdentityCase::new(
        "one_psi_one",
        Mode::One,
        250,
        "(q^{2M};q^{2M})^2 j(q^{a+M};q^{2M})/j(q^a,q^M;q^{2M}) = Σ_n q^{an}/(1-q^{2Mn+M})",
    );
    for (m, a) in [(5i64, 1i64), (5, 3), (7, 1)] {
        psi = psi.eq(
            Side::terms(move |c| Ok(vec![pt(&k(1), 0, &[E(2 * m), E(2 * m), J(a + m, 2 * m)], &[J(a, 2 * m), J(m, 2 * m)], c)?])),
            Side::terms(move |c| {
                collect_bilateral(c, |n| Some(Term::monomial(1, 0, a * n).over(MonomialSpec::q(2 * m * n + m))))
            }),
        );
    }
    v.push(psi);

    v.push(
        IdentityCase::new("gauss_half", Mode::One, 400, "Gauss's product formulas for triangular and square theta series")
            .eq(
                Side::terms(|c| Ok(vec![pt(&k(2), 0, &[E(2)], &[P(1, 2)], c)?])),
                Side::terms(|c| collect_bilateral(c, |n| Some(Term::monomial(1, 0, n * (n + 1) / 2)))),
            )
            .eq(
                Side::terms(|c| Ok(vec![pt(&k(1), 0, &[E(2)], &[P(1, 2)], c)?])),
                Side::terms(|c| collect_bilateral(c, |n| Some(Term::monomial(1, 0, 2 * n * n - n)))),
            )
            .eq(
                Side::terms(|c| Ok(vec![pt(&k(1), 0, &[E(1), P(1, 2)], &[], c)?])),
                Side::terms(|c| {
                    collect_bilateral(c, |n| Some(Term::monomial(if n % 2 == 0 { 1 } else { -1 }, 0, n * n)))
                }),
            ),
    );
}

/// (q;q^2)_∞/(q^2;q^2)_∞ times a Lambert combination Σ c_i q^{a_i n}/(1 − q^{bn}).
fn f3_lambert(constant: i64, parts: &[(i64, i64)], b: i64, cutoff: usize) -> Result<Vec<Term>> {
    let pre = pt(&k(1), 0, &[F::P(1, 2)], &[F::E(2)], cutoff)?;
    let mut t = Vec::new();
    if constant != 0 {
        t.push(pre.clone().scale(constant));
    }
    for &(c, a) in parts {
        t.extend(lambert(c, a, b, cutoff).into_iter().map(|x| x.mul(&pre)));
    }
    Ok(t)
}

type Spec = (i64, i64, &'static [F], &'static [F]);

fn products(items: &'static [Spec], cutoff: usize) -> Result<Vec<Term>> {
    items.iter().map(|&(c, e, num, den)| pt(&k(c), e, num, den, cutoff)).collect()
}

fn rank_piece_cases(v: &mut Vec<IdentityCase>) {
    use F::*;
    // Each chain: Lambert form = single quotient = dissected sum.
    let chain = |case: IdentityCase, lam: fn(usize) -> Result<Vec<Term>>, q: &'static [Spec], d: &'static [Spec]| {
        case.eq(Side::terms(lam), Side::terms(move |c| products(q, c)))
            .eq(Side::terms(move |c| products(q, c)), Side::terms(move |c| products(d, c)))
    };

    let mut m5 = IdentityCase::new("mod5_rank_pieces", Mode::One, 250, "Lambert pieces of the F3 rank-type series at ζ_5 as products");
    m5 = chain(
        m5,
        |c| f3_lambert(1, &[(2, 1), (-2, 9), (1, 3), (-1, 7)], 10, c),
        &[(1, 0, &[E(10), J(4, 10)], &[P(5, 10), J(1, 10)])],
        &[
            (1, 0, &[E(25), J(15, 50)], &[J(5, 25)]),
            (1, 1, &[E(25)], &[J(10, 50)]),
            (1, 2, &[E(50), J(15, 50)], &[P(25, 50), J(10, 50)]),
            (1, 3, &[E(25)], &[J(20, 50)]),
        ],
    );
    m5 = chain(
        m5,
        |c| f3_lambert(0, &[(-1, 1), (1, 9), (2, 3), (-2, 7)], 10, c),
        &[(-1, 1, &[E(10), J(2, 10)], &[P(5, 10), J(3, 10)])],
        &[
            (-1, 1, &[E(25)], &[J(10, 50)]),
            (-1, 7, &[E(50), J(5, 50)], &[P(25, 50), J(20, 50)]),
            (1, 3, &[E(25)], &[J(20, 50)]),
            (-1, 4, &[E(25), J(5, 50)], &[J(10, 25)]),
        ],
    );
    v.push(m5);

    let mut m7 = IdentityCase::new("mod7_rank_pieces", Mode::One, 250, "Lambert pieces of the F3 rank-type series at ζ_7 as products");
    m7 = chain(
        m7,
        |c| f3_lambert(1, &[(2, 1), (1, 5), (-1, 9), (-2, 13)], 14, c),
        &[(1, 0, &[E(14), J(3, 14), J(6, 14)], &[P(7, 14), J(1, 14), J(4, 14)])],
        &[
            (1, 0, &[E(49)], &[J(14, 98)]),
            (1, 1, &[E(98), J(35, 98)], &[P(49, 98), J(14, 98)]),
            (1, 2, &[E(49), J(14, 49)], &[J(7, 49), J(28, 98)]),
            (1, 4, &[E(49)], &[J(28, 98)]),
            (1, 5, &[E(49), J(21, 49)], &[J(14, 49), J(42, 98)]),
        ],
    );
    m7 = m7.eq(
        Side::terms(|c| f3_lambert(0, &[(-1, 1), (1, 3), (1, 5), (-1, 9), (-1, 11), (1, 13)], 14, c)),
        Side::terms(|c| products(&[(-1, 1, &[E(14)], &[P(7, 14)])], c)),
    );
    m7 = chain(
        m7,
        |c| f3_lambert(0, &[(-1, 3), (2, 5), (-2, 9), (1, 11)], 14, c),
        &[(-1, 3, &[E(14), J(1, 14), J(2, 14)], &[P(7, 14), J(5, 14), J(6, 14)])],
        &[
            (-1, 8, &[E(98), J(21, 98)], &[P(49, 98), J(28, 98)]),
            (-1, 3, &[E(49), J(7, 49)], &[J(21, 49), J(14, 98)]),
            (1, 4, &[E(49)], &[J(28, 98)]),
            (1, 5, &[E(49), J(21, 49)], &[J(14, 49), J(42, 98)]),
            (-1, 6, &[E(49)], &[J(42, 98)]),
        ],
    );
    v.push(m7);
}

/// Σ_n (a;q)_n (b;q)_n / ((q;q)_n (c;q)_n) x^n.
fn two_phi_one(a: MonomialSpec, b: MonomialSpec, c: MonomialSpec, x: MonomialSpec, pre: Term, cutoff: usize) -> Result<Vec<Term>> {
    let q = MonomialSpec::q(1);
    collect_terms(cutoff, |n| {
        let n = n as usize;
        Some(
            pre.clone()
                .times_all(&poch(a, q, n))
                .times_all(&poch(b, q, n))
                .over_all(&poch(q, q, n))
                .over_all(&poch(c, q, n))
                .times_spec(x.pow(n as i64)),
        )
    })
}

fn heine_case(v: &mut Vec<IdentityCase>) {
    let mut case = IdentityCase::new(
        "heine",
        Mode::Symbolic,
        150,
        "2phi1(a,b;c;q,x) = (c/b,bx;q)/(c,x;q) 2phi1(abx/c,b;bx;q,c/b) at monomial parameters",
    );
    let m = MonomialSpec::new;
    for (a, b, c, x) in [
        (m(1, 0, 1), m(1, 0, 2), m(1, 0, 5), m(1, 0, 1)),
        (m(-1, 0, 1), m(1, 0, 2), m(1, 0, 5), m(1, 0, 1)),
        (m(1, 1, 0), m(1, 0, 1), m(1, 0, 3), m(1, 0, 1)),
    ] {
        case = case.eq(
            Side::terms(move |cut| two_phi_one(a, b, c, x, Term::one(), cut)),
            Side::terms(move |cut| {
                let q = MonomialSpec::q(1);
                let (cb, bx) = (c.mul(b.inv()), b.mul(x));
                let pre = Term::one()
                    .times_all(&crate::qseries::poch_inf(cb, q, cut)?)
                    .times_all(&crate::qseries::poch_inf(bx, q, cut)?)
                    .over_all(&crate::qseries::poch_inf(c, q, cut)?)
                    .over_all(&crate::qseries::poch_inf(x, q, cut)?);
                two_phi_one(a.mul(b).mul(x).mul(c.inv()), b, bx, cb, pre, cut)
            }),
        );
    }
    v.push(case);
}

const L: i64 = 5;

fn uv_cases(v: &mut Vec<IdentityCase>) {
    use F::*;
    let big = 4 * L * L;
    let half = 2 * L * L;
    let mut lemma = IdentityCase::new(
        "UV_lemma",
        Mode::One,
        600,
        "V_l(b) - q^{(b+1)/2} U_l(b+2) as h(-q^{2l^2-bl}, q^{4l^2}) plus theta quotients, l = 5",
    );
    for b in [1i64, 3, 5, 7, 9] {
        lemma = lemma.eq(
            Side::terms(move |c| {
                let mut t = Bilateral::V { l: L, b }.terms(c)?;
                t.extend(bilateral(Bilateral::U { l: L, b: b + 2 }, -1, (b + 1) / 2, c)?);
                Ok(t)
            }),
            Side::terms(move |c| {
                let mut t = Bilateral::H { z: MonomialSpec::neg_q(half - b * L), base: big }.terms(c)?;
                for kk in 1..L {
                    t.push(pt(
                        &k(1),
                        2 * kk * kk + b * kk,
                        &[E(big), E(big), Jn(half - b * L, big), J(2 * b * L + 8 * kk * L, big)],
                        &[J(4 * kk * L, big), J(2 * b * L + 4 * kk * L, big), Jn(half + b * L + 4 * kk * L, big)],
                        c,
                    )?);
                }
                Ok(t)
            }),
        );
    }
    v.push(lemma);

    let mut sym = IdentityCase::new(
        "UV_symmetries",
        Mode::One,
        300,
        "V_l(b) = -V_l(4l-b) and U_l(b) = -q^{2l-b+2} U_l(4l+4-b)",
    );
    for l in [3i64, 5, 7] {
        for b in 1..=9i64 {
            sym = sym
                .eq(
                    Side::terms(move |c| Bilateral::V { l, b }.terms(c)),
                    Side::terms(move |c| bilateral(Bilateral::V { l, b: 4 * l - b }, -1, 0, c)),
                )
                .eq(
                    Side::terms(move |c| Bilateral::U { l, b }.terms(c)),
                    Side::terms(move |c| bilateral(Bilateral::U { l, b: 4 * l + 4 - b }, -1, 2 * l - b + 2, c)),
                );
        }
    }
    v.push(sym);

    let mut lewis = IdentityCase::new(
        "lewis_T",
        Mode::One,
        400,
        "wT(zw,w,Q) + T(z/w,1/w,Q) = (Q;Q)^2 j(z,w^2;Q)/j(z/w,zw,w;Q) at Q = q^{4l^2}, w = -q^{2l^2-bl-4kl}, z = -q^{2l^2-bl}",
    );
    for b in [1i64, 3, 5, 7, 9] {
        for kk in 1..L {
            let z = MonomialSpec::neg_q(half - b * L);
            let w = MonomialSpec::neg_q(half - b * L - 4 * kk * L);
            lewis = lewis.eq(
                Side::terms(move |c| {
                    let wm = w.as_monomial();
                    // The factor w lowers exponents, so collect further out.
                    let mut t: Vec<Term> = Bilateral::T { z: z.mul(w), w, base: big }
                        .terms(c + (-wm.q).max(0) as usize)?
                        .into_iter()
                        .map(|x| x.times_monomial(wm.c, wm.z, wm.q))
                        .collect();
                    t.extend(Bilateral::T { z: z.mul(w.inv()), w: w.inv(), base: big }.terms(c)?);
                    Ok(t)
                }),
                Side::terms(move |c| {
                    Ok(vec![Term::one()
                        .times_all(&qpoch_inf(big, big, c))
                        .times_all(&qpoch_inf(big, big, c))
                        .times_all(&jac(z, big, c)?)
                        .times_all(&jac(w.pow(2), big, c)?)
                        .over_all(&jac(z.mul(w.inv()), big, c)?)
                        .over_all(&jac(z.mul(w), big, c)?)
                        .over_all(&jac(w, big, c)?)])
                }),
            );
        }
    }
    v.push(lewis);
}

fn h(e: i64, c: i64, cutoff: usize) -> Result<Vec<Term>> {
    Ok(Bilateral::H { z: MonomialSpec::neg_q(e), base: 100 }.terms(cutoff)?.into_iter().map(|t| t.scale(c)).collect())
}

fn h_cases(v: &mut Vec<IdentityCase>) {
    use F::*;
    let mut comb = IdentityCase::new(
        "h_combination",
        Mode::One,
        600,
        "linear combinations of h(-q^r, q^100), r = 5, 15, 45, 35, as theta quotients",
    );
    for (a, b, c, d) in [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)] {
        comb = comb.eq(
            Side::terms(move |cut| {
                let mut t = Vec::new();
                for (e, x) in [(5, 3 * a - d), (15, 3 * b - a), (45, 3 * c - b), (35, 3 * d - c)] {
                    if x != 0 {
                        t.extend(h(e, x, cut)?);
                    }
                }
                if c + d != 0 {
                    t.push(Term::monomial(c + d, 0, 0));
                }
                Ok(t)
            }),
            Side::terms(move |cut| {
                let e2 = [E(100), E(100)];
                let cube = |f: F| [f, f, f];
                let mut t = Vec::new();
                let mut add = |coef: i64, e: i64, num: F, den3: F, den: F| -> Result<()> {
                    if coef != 0 {
                        let n: Vec<F> = e2.iter().copied().chain(cube(num)).collect();
                        let d: Vec<F> = cube(den3).into_iter().chain([den]).collect();
                        t.push(pt(&k(coef), e, &n, &d, cut)?);
                    }
                    Ok(())
                };
                add(a, 0, J(10, 100), Jn(5, 100), Jn(15, 100))?;
                add(c - a, 0, J(20, 100), J(10, 100), J(30, 100))?;
                add(b, 0, J(30, 100), Jn(15, 100), Jn(45, 100))?;
                add(d - b, 0, J(40, 100), J(30, 100), J(10, 100))?;
                add(c, 35, J(10, 100), Jn(45, 100), Jn(35, 100))?;
                add(d, 5, J(30, 100), Jn(35, 100), Jn(5, 100))?;
                Ok(t)
            }),
        );
    }
    v.push(comb);

    // h(-q^25, q^100) itself is not a product: 1 + 4h is the square of the
    // alternating theta series in q^25. The theta quotient below is a product
    // identity in its own right and is checked separately.
    v.push(
        IdentityCase::new(
            "h25",
            Mode::One,
            600,
            "1 + 4h(-q^25, q^100) = (q^25;q^25)^4/(q^50;q^50)^2, and a theta quotient at q^100 equal to (q^25;q^25)^4/(q^100;q^100)^2",
        )
        .eq(
            Side::terms(|c| {
                let mut t = h(25, 4, c)?;
                t.push(Term::one());
                Ok(t)
            }),
            Side::terms(|c| Ok(vec![pt(&k(1), 0, &[E(25), E(25), E(25), E(25)], &[E(50), E(50)], c)?])),
        )
        .eq(
            Side::terms(|c| {
                Ok(vec![pt(
                    &k(1),
                    0,
                    &[E(100), E(100), J(50, 100), J(50, 100), J(50, 100), J(50, 100)],
                    &[Jn(25, 100), Jn(25, 100), Jn(25, 100), Jn(25, 100)],
                    c,
                )?])
            }),
            Side::terms(|c| Ok(vec![pt(&k(1), 0, &[E(25), E(25), E(25), E(25)], &[E(100), E(100)], c)?])),
        ),
    );
}

fn eta_inv(c: usize) -> Term {
    Term::one().over_all(&qpoch_inf(1, 1, c))
}

fn g4_cases(v: &mut Vec<IdentityCase>) {
    use F::*;
    let z14 = || zc(&[0, 1, 0, 0, 1]);
    v.push(
        IdentityCase::new("g4_crank_5", Mode::Root(5), 250, "5-dissection of (q^2;q^2)/(q,ζq^2,q^2/ζ;q^2) and its two factors")
            .eq(
                Side::terms(|c| {
                    let q2 = MonomialSpec::q(2);
                    Ok(vec![pt(&k(1), 0, &[E(2)], &[P(1, 2)], c)?
                        .over_all(&crate::qseries::poch_inf(MonomialSpec::zq(1, 2), q2, c)?)
                        .over_all(&crate::qseries::poch_inf(MonomialSpec::zq(-1, 2), q2, c)?)])
                }),
                Side::terms(move |c| {
                    Ok(vec![
                        pt(&k(1), 0, &[E(25), J(20, 50)], &[J(10, 25), J(10, 50)], c)?,
                        pt(&z14(), 5, &[E(50)], &[P(25, 50), J(20, 50)], c)?,
                        pt(&k(1), 1, &[E(25)], &[J(5, 25)], c)?,
                        pt(&z14(), 2, &[E(25)], &[J(10, 25)], c)?,
                        pt(&z14(), 3, &[E(25), J(10, 50)], &[J(5, 25), J(20, 50)], c)?,
                        pt(&k(1), 3, &[E(50)], &[P(25, 50), J(10, 50)], c)?,
                    ])
                }),
            )
            .eq(
                Side::terms(|c| Ok(vec![pt(&k(1), 0, &[E(2)], &[P(1, 2)], c)?])),
                Side::terms(|c| {
                    Ok(vec![
                        pt(&k(1), 0, &[E(25), J(20, 50)], &[J(10, 25)], c)?,
                        pt(&k(1), 1, &[E(25), J(10, 50)], &[J(5, 25)], c)?,
                        pt(&k(1), 3, &[E(50)], &[P(25, 50)], c)?,
                    ])
                }),
            )
            .eq(
                Side::terms(|c| {
                    let q2 = MonomialSpec::q(2);
                    Ok(vec![Term::one()
                        .over_all(&crate::qseries::poch_inf(MonomialSpec::zq(1, 2), q2, c)?)
                        .over_all(&crate::qseries::poch_inf(MonomialSpec::zq(-1, 2), q2, c)?)])
                }),
                Side::terms(move |c| Ok(vec![pt(&k(1), 0, &[], &[J(10, 50)], c)?, pt(&z14(), 2, &[], &[J(20, 50)], c)?])),
            ),
    );

    // c1 = 2 − ζ − ζ^4 and c2 = −1 + 3ζ + 3ζ^4 weight the V/U pieces.
    let c1 = || zc(&[2, -1, 0, 0, -1]);
    let c2 = || zc(&[-1, 3, 0, 0, 3]);
    let vu = |parts: &'static [(i64, i64, i64, bool)], coef: Vec<(i64, i64)>, c: usize| -> Result<Vec<Term>> {
        // Each part: sign, q-shift, b, is_v.
        let mut t = Vec::new();
        for &(s, e, b, is_v) in parts {
            let x = if is_v { Bilateral::V { l: 5, b } } else { Bilateral::U { l: 5, b } };
            t.extend(scaled(bilateral(x, s, e, c)?, &coef));
        }
        Ok(t)
    };
    const G4_C1: &[(i64, i64, i64, bool)] = &[(1, 0, 3, true), (-1, 2, 5, false), (1, 0, 5, true), (-1, 3, 7, false)];
    const G4_C2: &[(i64, i64, i64, bool)] = &[(1, 0, 7, true), (-1, 4, 9, false), (1, 0, 9, true), (-1, 5, 11, false)];
    const AG4_C1: &[(i64, i64, i64, bool)] = &[(1, 0, 1, true), (-1, 1, 3, false), (1, 0, 7, true), (-1, 4, 9, false)];
    const AG4_C2: &[(i64, i64, i64, bool)] = &[(1, 0, 5, true), (-1, 3, 7, false), (-1, 0, 9, true), (1, 5, 11, false)];

    let g4_rhs = [
        (zc(&[1]), 0, vec![E(25), J(20, 50)], vec![J(10, 25), J(10, 50)]),
        (zc(&[1, -2, 0, 0, -2]), 5, vec![E(50)], vec![P(25, 50), J(20, 50)]),
        (zc(&[-1, -2, 0, 0, -2]), 10, vec![E(100), J(10, 200)], vec![J(10, 50), J(5, 100)]),
        (zc(&[1]), 1, vec![E(25)], vec![J(5, 25)]),
        (zc(&[-2, 1, 0, 0, 1]), 6, vec![E(100), J(30, 200)], vec![J(10, 50), J(15, 100)]),
        (z14(), 2, vec![E(25)], vec![J(10, 25)]),
        (zc(&[-2, 1, 0, 0, 1]), 12, vec![E(100), J(10, 200)], vec![J(20, 50), J(5, 100)]),
        (zc(&[-1, 1, 0, 0, 1]), 3, vec![E(50)], vec![P(25, 50), J(10, 50)]),
        (z14(), 3, vec![E(25), J(10, 50)], vec![J(5, 25), J(20, 50)]),
        (zc(&[1, -3, 0, 0, -3]), 8, vec![E(100), J(30, 200)], vec![J(20, 50), J(15, 100)]),
    ];
    let ag4_rhs = [
        (zc(&[1]), 0, vec![E(25), J(20, 50)], vec![J(10, 25), J(10, 50)]),
        (z14(), 5, vec![E(50)], vec![P(25, 50), J(20, 50)]),
        (zc(&[-2, 1, 0, 0, 1]), 10, vec![E(100), J(10, 200)], vec![J(10, 50), J(5, 100)]),
        (zc(&[-2, 1, 0, 0, 1]), 1, vec![E(100), J(70, 200)], vec![J(10, 50), J(35, 100)]),
        (zc(&[1]), 1, vec![E(25)], vec![J(5, 25)]),
        (zc(&[-1, -2, 0, 0, -2]), 6, vec![E(100), J(30, 200)], vec![J(10, 50), J(15, 100)]),
        (z14(), 2, vec![E(25)], vec![J(10, 25)]),
        (zc(&[1, -3, 0, 0, -3]), 12, vec![E(100), J(10, 200)], vec![J(20, 50), J(5, 100)]),
        (zc(&[1, -3, 0, 0, -3]), 3, vec![E(100), J(70, 200)], vec![J(20, 50), J(35, 100)]),
        (z14(), 3, vec![E(25), J(10, 50)], vec![J(5, 25), J(20, 50)]),
        (zc(&[1]), 3, vec![E(50)], vec![P(25, 50), J(10, 50)]),
        (zc(&[-2, 1, 0, 0, 1]), 8, vec![E(100), J(30, 200)], vec![J(20, 50), J(15, 100)]),
    ];
    let as_side = |rows: Vec<(Vec<(i64, i64)>, i64, Vec<F>, Vec<F>)>| {
        Side::terms(move |c| rows.iter().map(|(coef, e, n, d)| pt(coef, *e, n, d, c)).collect())
    };

    let g4_sum = |pre: fn(usize) -> Term| {
        Side::terms(move |c| rank_type_sum(&pre(c), true, |n| (n * n + 3 * n) / 2, |n| n, 2, c))
    };
    let ag4_sum = |pre: fn(usize) -> Term| {
        Side::terms(move |c| rank_type_sum(&pre(c), true, |n| (n * n + n) / 2, |n| 3 * n, 2, c))
    };
    let unit: fn(usize) -> Term = |_| Term::one();
    let vu_side = move |a: &'static [(i64, i64, i64, bool)], b: &'static [(i64, i64, i64, bool)]| {
        Side::terms(move |c| {
            let mut t = vec![Term::one()];
            t.extend(vu(a, c1(), c)?);
            t.extend(vu(b, c2(), c)?);
            Ok(t)
        })
    };

    v.push(
        IdentityCase::new(
            "g4_ag4_parts_5",
            Mode::Root(5),
            250,
            "5-dissections of the G4 and AG4 rank-type sums at ζ_5 and their V/U decompositions",
        )
        .eq(g4_sum(eta_inv), as_side(g4_rhs.to_vec()))
        .eq(ag4_sum(eta_inv), as_side(ag4_rhs.to_vec()))
        .eq(g4_sum(unit), vu_side(G4_C1, G4_C2))
        .eq(ag4_sum(unit), vu_side(AG4_C1, AG4_C2)),
    );
}

pub(super) fn register(v: &mut Vec<IdentityCase>) {
    lambert_cases(v);
    theta_cases(v);
    rank_piece_cases(v);
    heine_case(v);
    uv_cases(v);
    h_cases(v);
    g4_cases(v);
}
