//! Truncated-series checks of the Bailey machinery: the defining relation,
//! the limiting form of Bailey's lemma, seven derived summation lemmas and a
//! conjugate Bailey pair.
//!
//! Statements involving √a or q^{1/2} are checked after q ↦ q². A pair
//! relative to (a, Q) then has Q = q^B and a = q^A with A, B even, and
//! √a = q^r, Q^{1/2} = q^h where r = A/2, h = B/2.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qseries::{collect_terms, compare_sides, poch, poch_inf, Monomial, MonomialSpec, Mode, Term};
use crate::report::{combine, VerificationReport};

use super::pairs::BaileyPair;

fn mode_for(specs: &[MonomialSpec]) -> Mode {
    if specs.iter().any(|m| m.z_exp != 0) {
        Mode::Symbolic
    } else {
        Mode::One
    }
}

/// Checks β_n against Σ_k α_k/((Q;Q)_{n−k}(aQ;Q)_{n+k}) for n ≤ n_max.
pub fn check_pair_relation(pair: &BaileyPair, n_max: usize, order: usize) -> Result<VerificationReport> {
    let id = format!("pair_relation_{}", pair.name);
    let mode = mode_for(&[pair.a]);
    let mut parts = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max as i64 {
        let lhs = |_: usize| Ok(vec![pair.beta(n)]);
        let rhs = |_: usize| Ok(pair.relation_terms(n));
        let c = compare_sides(mode, &lhs, &rhs, order)?;
        parts.push(VerificationReport::from_comparison(format!("{id}[n={n}]"), order, c));
    }
    Ok(combine(id, order, parts))
}

/// A parameter of Bailey's lemma, or its limit at infinity.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Rho {
    Finite(MonomialSpec),
    Infinite,
}

/// Σ (ρ₁,ρ₂;Q)_n (aQ/ρ₁ρ₂)^n β_n = (aQ/ρ₁, aQ/ρ₂;Q)_∞/(aQ, aQ/ρ₁ρ₂;Q)_∞
/// · Σ (ρ₁,ρ₂;Q)_n (aQ/ρ₁ρ₂)^n α_n/(aQ/ρ₁, aQ/ρ₂;Q)_n.
///
/// An infinite ρ uses the precomputed limits (ρ;Q)_n ρ^{-n} → (−1)^n Q^{n(n−1)/2}
/// and (aQ/ρ;Q) → 1.
pub fn check_limiting_lemma(pair: &BaileyPair, rho1: Rho, rho2: Rho, order: usize) -> Result<VerificationReport> {
    let (rho1, rho2) = match (rho1, rho2) {
        (Rho::Infinite, r @ Rho::Finite(_)) => (r, Rho::Infinite),
        x => x,
    };
    let qb = MonomialSpec::q(pair.base);
    let aq = pair.a.mul(qb);
    let finite: Vec<MonomialSpec> = [rho1, rho2]
        .iter()
        .filter_map(|r| match r {
            Rho::Finite(m) => Some(*m),
            Rho::Infinite => None,
        })
        .collect();
    let mut specs = finite.clone();
    specs.push(pair.a);
    let mode = mode_for(&specs);
    // Weight of term n, shared by both sides: (ρ₁,ρ₂)_n (aQ/ρ₁ρ₂)^n with limits.
    let ratio = finite.iter().fold(aq, |x, r| x.mul(r.inv()));
    let infinite = 2 - finite.len() as i64;
    let weight = |n: i64| -> Term {
        let mut t = Term::one().times_spec(ratio.pow(n));
        for r in &finite {
            t = t.times_all(&poch(*r, qb, n as usize));
        }
        for _ in 0..infinite {
            let sign = if n % 2 == 1 { -1 } else { 1 };
            t = t.times_monomial(sign, 0, pair.base * n * (n - 1) / 2);
        }
        t
    };
    let f1 = &finite;
    let lhs = |cutoff: usize| collect_terms(cutoff, |n| Some(weight(n).mul(&pair.beta(n))));
    let rhs = |cutoff: usize| -> Result<Vec<Term>> {
        let mut pre = Term::one().over_all(&poch_inf(aq, qb, cutoff)?);
        for r in f1 {
            pre = pre.times_all(&poch_inf(aq.mul(r.inv()), qb, cutoff)?);
        }
        if f1.len() == 2 {
            pre = pre.over_all(&poch_inf(ratio, qb, cutoff)?);
        }
        alpha_sum(pair, cutoff, |n| {
            let mut t = weight(n).mul(&pair.alpha(n)).mul(&pre);
            for r in f1 {
                t = t.over_all(&poch(aq.mul(r.inv()), qb, n as usize));
            }
            Some(t)
        })
    };
    let c = compare_sides(mode, &lhs, &rhs, order)?;
    Ok(VerificationReport::from_comparison(format!("limiting_lemma_{}", pair.name), order, c))
}

/// Exponents of a pair after q ↦ q²: (A, B, r, h).
fn rescaled_exponents(pair: &BaileyPair) -> Result<(BaileyPair, i64, i64, i64, i64)> {
    if pair.a.z_exp != 0 || pair.a.sign != 1 {
        return Err(Error::Precondition("the summation lemmas need a = q^s".into()));
    }
    let p = pair.rescaled(2);
    let (a, b) = (p.a.q_exp, p.base);
    Ok((p, a, b, a / 2, b / 2))
}

/// Collects the α-side of a sum; finitely supported α are summed exactly.
fn alpha_sum(pair: &BaileyPair, cutoff: usize, f: impl FnMut(i64) -> Option<Term>) -> Result<Vec<Term>> {
    match pair.alpha_support() {
        Some(last) => Ok((0..=last).filter_map(f).collect()),
        None => collect_terms(cutoff, f),
    }
}

fn sgn(n: i64) -> i64 {
    if n.rem_euclid(2) == 1 {
        -1
    } else {
        1
    }
}

/// Checks one of the seven summation lemmas derived from Bailey's lemma for
/// `pair`, after the substitution q ↦ q².
///
/// Variants 3 and 4 carry a free variable z and are checked in ℤ[z, z^{-1}];
/// variants 5 and 6 are their specializations at a primitive cube root of
/// unity and are checked over ℤ[ζ_3]. Variants 5 and 6 are undefined when
/// a equals the pair's base.
pub fn check_lemma_variant(k: u8, pair: &BaileyPair, order: usize) -> Result<VerificationReport> {
    let (p, a_exp, b, r, h) = rescaled_exponents(pair)?;
    let id = format!("lemma_variant_{k}_{}_a{}", pair.name, pair.a.q_exp);
    let q = MonomialSpec::q;
    let qb = q(b);
    let z = MonomialSpec::zq(1, 0);
    let zi = MonomialSpec::zq(-1, 0);
    let pre_aq = move |cutoff| poch_inf(q(a_exp + b), qb, cutoff);
    type Side<'a> = Box<dyn Fn(usize) -> Result<Vec<Term>> + Sync + 'a>;
    let (mode, lhs, rhs): (Mode, Side<'_>, Side<'_>) = match k {
        1 => (
            Mode::One,
            Box::new(move |c| {
                collect_terms(c, |n| {
                    Some(p.beta(n).times_all(&poch(q(r), qb, n as usize)).times_monomial(sgn(n), 0, r * n + h * n * (n + 1)))
                })
            }),
            Box::new(move |c| {
                let pre = Term::one().times_all(&poch_inf(q(r + b), qb, c)?).over_all(&pre_aq(c)?);
                alpha_sum(&p, c, |n| {
                    Some(
                        p.alpha(n)
                            .mul(&pre)
                            .times(q(r))
                            .over(q(r + b * n))
                            .times_monomial(sgn(n), 0, r * n + h * n * (n + 1)),
                    )
                })
            }),
        ),
        2 => (
            Mode::One,
            Box::new(move |c| {
                collect_terms(c, |n| {
                    Some(p.beta(n).times_all(&poch(q(r + h), qb, n as usize)).times_monomial(sgn(n), 0, r * n + h * n * n))
                })
            }),
            Box::new(move |c| {
                let pre = Term::one().times_all(&poch_inf(q(r + h), qb, c)?).over_all(&pre_aq(c)?);
                alpha_sum(&p, c, |n| Some(p.alpha(n).mul(&pre).times_monomial(sgn(n), 0, r * n + h * n * n)))
            }),
        ),
        3 | 4 => {
            let w = if k == 3 { 1 } else { 2 };
            (
                Mode::Symbolic,
                Box::new(move |c| {
                    collect_terms(c, |n| {
                        Some(
                            p.beta(n)
                                .times_all(&poch(z.mul(q(r - h)), qb, n as usize))
                                .times_all(&poch(zi.mul(q(r - h)), qb, n as usize))
                                .times_monomial(1, 0, w * b * n),
                        )
                    })
                }),
                Box::new(move |c| {
                    let pre = Term::one()
                        .times_all(&poch_inf(z.mul(q(r - h)), qb, c)?)
                        .times_all(&poch_inf(zi.mul(q(r - h)), qb, c)?)
                        .over_all(&poch_inf(qb, qb, c)?)
                        .over_all(&pre_aq(c)?);
                    alpha_sum(&p, c, |n| {
                        let bn = b * n;
                        let t = if k == 3 {
                            Term::from_poly(vec![
                                Monomial::new(1, 0, 0),
                                Monomial::new(-1, 1, r + h + bn),
                                Monomial::new(-1, -1, r + h + bn),
                                Monomial::new(1, 0, a_exp + 2 * bn),
                            ])
                        } else {
                            Term::one().times(qb)
                        };
                        Some(
                            t.times_monomial(1, 0, w * bn)
                                .mul(&p.alpha(n))
                                .mul(&pre)
                                .over_all(&[
                                    z.mul(q(r - h + bn)),
                                    z.mul(q(r + h + bn)),
                                    zi.mul(q(r - h + bn)),
                                    zi.mul(q(r + h + bn)),
                                ]),
                        )
                    })
                }),
            )
        }
        5 | 6 => {
            if r == h {
                return Err(Error::Precondition("this summation lemma requires a different from the base".into()));
            }
            let w = if k == 5 { 1 } else { 2 };
            let b3 = q(3 * b);
            (
                Mode::Root(3),
                Box::new(move |c| {
                    collect_terms(c, |n| {
                        Some(
                            p.beta(n)
                                .times_all(&poch(q(3 * (r - h)), b3, n as usize))
                                .over_all(&poch(q(r - h), qb, n as usize))
                                .times_monomial(1, 0, w * b * n),
                        )
                    })
                }),
                Box::new(move |c| {
                    let pre = Term::one()
                        .times_all(&poch_inf(q(3 * (r - h)), b3, c)?)
                        .over_all(&poch_inf(qb, qb, c)?)
                        .over_all(&pre_aq(c)?)
                        .over_all(&poch_inf(q(r - h), qb, c)?);
                    alpha_sum(&p, c, |n| {
                        let bn = b * n;
                        let t = if k == 5 {
                            Term::from_poly(vec![
                                Monomial::new(1, 0, 0),
                                Monomial::new(1, 0, r + h + bn),
                                Monomial::new(1, 0, a_exp + 2 * bn),
                            ])
                        } else {
                            Term::one().times(qb)
                        };
                        Some(
                            t.times_all(&[q(r - h + bn), q(r + h + bn)])
                                .times_monomial(1, 0, w * bn)
                                .mul(&p.alpha(n))
                                .mul(&pre)
                                .over_all(&[q(3 * (r - h) + 3 * bn), q(3 * (r + h) + 3 * bn)]),
                        )
                    })
                }),
            )
        }
        7 => {
            let neg = |e| MonomialSpec::neg_q(e);
            (
                Mode::One,
                Box::new(move |c| {
                    collect_terms(c, |n| {
                        Some(p.beta(n).times_all(&poch(neg(r), q(h), 2 * n as usize)).times_monomial(1, 0, h * n))
                    })
                }),
                Box::new(move |c| {
                    let pre = Term::one()
                        .times_all(&poch_inf(neg(r + h), q(h), c)?)
                        .over_all(&pre_aq(c)?)
                        .over_all(&poch_inf(q(h), qb, c)?);
                    alpha_sum(&p, c, |n| {
                        Some(p.alpha(n).mul(&pre).times(neg(r)).over(neg(r + b * n)).times_monomial(1, 0, h * n))
                    })
                }),
            )
        }
        _ => return Err(Error::Precondition(format!("no summation lemma numbered {k}"))),
    };
    let c = compare_sides(mode, lhs.as_ref(), rhs.as_ref(), order)?;
    Ok(VerificationReport::from_comparison(id, order, c))
}

/// The conjugate pair (δ, γ) relative to (a, Q) with a = q^A, Q = q^B (after
/// q ↦ q²) and a free parameter z:
/// δ_j = (zq^{r−h}, z^{-1}q^{r−h}; Q)_j Q^j and γ_n the closed form.
struct Conjugate {
    z: MonomialSpec,
    a: i64,
    b: i64,
    r: i64,
    h: i64,
}

impl Conjugate {
    fn new(z: MonomialSpec, a: MonomialSpec) -> Result<Conjugate> {
        if a.z_exp != 0 || a.sign != 1 || a.q_exp < 0 {
            return Err(Error::Precondition("the conjugate pair needs a = q^s with s ≥ 0".into()));
        }
        // q ↦ q²: Q = q², a = q^{2s}.
        let z = MonomialSpec { q_exp: 2 * z.q_exp, ..z };
        Ok(Conjugate { z, a: 2 * a.q_exp, b: 2, r: a.q_exp, h: 1 })
    }

    fn zm(&self) -> MonomialSpec {
        self.z.mul(MonomialSpec::q(self.r - self.h))
    }

    fn zim(&self) -> MonomialSpec {
        self.z.inv().mul(MonomialSpec::q(self.r - self.h))
    }

    fn delta1(&self, j: i64) -> Term {
        let qb = MonomialSpec::q(self.b);
        Term::monomial(1, 0, self.b * j)
            .times_all(&poch(self.zm(), qb, j as usize))
            .times_all(&poch(self.zim(), qb, j as usize))
    }

    fn gamma1(&self, n: i64, cutoff: usize) -> Result<Term> {
        let qb = MonomialSpec::q(self.b);
        let q = MonomialSpec::q;
        let (r, h, bn) = (self.r, self.h, self.b * n);
        let z = self.z.as_monomial();
        let poly = vec![
            Monomial::new(1, 0, 0),
            Monomial::new(-z.c, z.z, z.q + r + h + bn),
            Monomial::new(-z.c, -z.z, -z.q + r + h + bn),
            Monomial::new(1, 0, self.a + 2 * bn),
        ];
        Ok(Term::from_poly(poly)
            .times_monomial(1, 0, bn)
            .times_all(&poch_inf(self.zm(), qb, cutoff)?)
            .times_all(&poch_inf(self.zim(), qb, cutoff)?)
            .over_all(&poch_inf(qb, qb, cutoff)?)
            .over_all(&poch_inf(q(self.a + self.b), qb, cutoff)?)
            .over_all(&[
                self.zm().mul(q(bn)),
                self.z.mul(q(r + h + bn)),
                self.zim().mul(q(bn)),
                self.z.inv().mul(q(r + h + bn)),
            ]))
    }

    fn delta2(&self, j: i64) -> Term {
        let q = MonomialSpec::q;
        let d = self.r - self.h;
        Term::monomial(1, 0, self.b * j)
            .times_all(&poch(q(3 * d), q(3 * self.b), j as usize))
            .over_all(&poch(q(d), q(self.b), j as usize))
    }

    fn gamma2(&self, n: i64, cutoff: usize) -> Result<Term> {
        let q = MonomialSpec::q;
        let qb = q(self.b);
        let (r, h, bn) = (self.r, self.h, self.b * n);
        let d = r - h;
        Ok(Term::from_poly(vec![
            Monomial::new(1, 0, 0),
            Monomial::new(1, 0, r + h + bn),
            Monomial::new(1, 0, self.a + 2 * bn),
        ])
        .times_monomial(1, 0, bn)
        .times_all(&[q(d + bn), q(r + h + bn)])
        .times_all(&poch_inf(q(3 * d), q(3 * self.b), cutoff)?)
        .over_all(&poch_inf(qb, qb, cutoff)?)
        .over_all(&poch_inf(q(self.a + self.b), qb, cutoff)?)
        .over_all(&poch_inf(q(d), qb, cutoff)?)
        .over_all(&[q(3 * d + 3 * bn), q(3 * (r + h) + 3 * bn)]))
    }

    /// Σ_{j≥n} δ_j/((Q;Q)_{j−n}(aQ;Q)_{j+n}).
    fn dual_sum(&self, n: i64, cutoff: usize, delta: impl Fn(i64) -> Term) -> Result<Vec<Term>> {
        let qb = MonomialSpec::q(self.b);
        let aq = MonomialSpec::q(self.a + self.b);
        collect_terms(cutoff, |i| {
            let j = n + i;
            Some(delta(j).over_all(&poch(qb, qb, i as usize)).over_all(&poch(aq, qb, (j + n) as usize)))
        })
    }
}

/// Checks γ_n = Σ_{j≥n} δ_j/((Q;Q)_{j−n}(aQ;Q)_{j+n}) for n ≤ n_max, with
/// a = q^s given before the substitution q ↦ q². When a ≠ q the cube-root
/// specialization (δ², γ²) is also checked, against both the relation and
/// the general pair evaluated at z = ζ_3.
pub fn check_conjugate_pair(z: MonomialSpec, a: MonomialSpec, n_max: usize, order: usize) -> Result<VerificationReport> {
    let cj = Conjugate::new(z, a)?;
    let id = format!("conjugate_pair_z{}_a{}", z.z_exp, a.q_exp);
    let mode = mode_for(&[z]);
    let mut parts = Vec::new();
    for n in 0..=n_max as i64 {
        let lhs = |c: usize| Ok(vec![cj.gamma1(n, c)?]);
        let rhs = |c: usize| cj.dual_sum(n, c, |j| cj.delta1(j));
        parts.push(VerificationReport::from_comparison(format!("{id}[n={n}]"), order, compare_sides(mode, &lhs, &rhs, order)?));
    }
    if cj.r != cj.h && z.z_exp != 0 {
        let omega = Conjugate::new(MonomialSpec::zq(1, 0), a)?;
        let m3 = Mode::Root(3);
        for n in 0..=n_max as i64 {
            let g2 = |c: usize| Ok(vec![omega.gamma2(n, c)?]);
            let g1 = |c: usize| Ok(vec![omega.gamma1(n, c)?]);
            let d2 = |_: usize| Ok(vec![omega.delta2(n)]);
            let d1 = |_: usize| Ok(vec![omega.delta1(n)]);
            let sum2 = |c: usize| omega.dual_sum(n, c, |j| omega.delta2(j));
            for (tag, l, r) in [
                ("gamma2", &g2 as &(dyn Fn(usize) -> Result<Vec<Term>> + Sync), &g1 as &(dyn Fn(usize) -> Result<Vec<Term>> + Sync)),
                ("delta2", &d2, &d1),
                ("relation2", &g2, &sum2),
            ] {
                let c = compare_sides(m3, l, r, order)?;
                parts.push(VerificationReport::from_comparison(format!("{id}[{tag},n={n}]"), order, c));
            }
        }
    }
    Ok(combine(id, order, parts))
}
