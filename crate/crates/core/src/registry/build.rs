//! Small vocabulary for writing identity sides as product terms.

use crate::error::Result;
use crate::qseries::{collect_bilateral, jac, poch_inf, qpoch_inf, Monomial, MonomialSpec, Term};

/// A product factor with integer exponents of q.
#[derive(Clone, Copy, Debug)]
pub(crate) enum F {
    /// (q^b; q^b)_∞
    E(i64),
    /// (q^a; q^b)_∞
    P(i64, i64),
    /// j(q^a; q^b)
    J(i64, i64),
    /// j(−q^a; q^b)
    Jn(i64, i64),
}

impl F {
    pub(crate) fn factors(self, cutoff: usize) -> Result<Vec<MonomialSpec>> {
        Ok(match self {
            F::E(b) => qpoch_inf(b, b, cutoff),
            F::P(a, b) => poch_inf(MonomialSpec::q(a), MonomialSpec::q(b), cutoff)?,
            F::J(a, b) => jac(MonomialSpec::q(a), b, cutoff)?,
            F::Jn(a, b) => jac(MonomialSpec::neg_q(a), b, cutoff)?,
        })
    }
}

/// Coefficient polynomial in z (or ζ) given densely: `zc(&[1, -1, 0, 0, -1])`
/// is 1 − z − z⁴.
pub(crate) fn zc(c: &[i64]) -> Vec<(i64, i64)> {
    c.iter().enumerate().filter(|(_, &x)| x != 0).map(|(e, &x)| (x, e as i64)).collect()
}

/// The constant coefficient c.
pub(crate) fn k(c: i64) -> Vec<(i64, i64)> {
    vec![(c, 0)]
}

/// coef · q^e · Π num / Π den.
pub(crate) fn pt(coef: &[(i64, i64)], e: i64, num: &[F], den: &[F], cutoff: usize) -> Result<Term> {
    let poly = coef.iter().map(|&(c, z)| Monomial::new(c, z, e)).collect();
    let mut t = Term::from_poly(poly);
    for f in num {
        t = t.times_all(&f.factors(cutoff)?);
    }
    for f in den {
        t = t.over_all(&f.factors(cutoff)?);
    }
    Ok(t)
}

/// coef · q^e · (Π num / Π den) · Σ_n (−1)^n q^{m n(n+1)/2}/(1 − q^{bn+c}).
pub(crate) fn theta_lambert(
    coef: &[(i64, i64)],
    e: i64,
    num: &[F],
    den: &[F],
    (m, b, c): (i64, i64, i64),
    cutoff: usize,
) -> Result<Vec<Term>> {
    let head = pt(coef, e, num, den, cutoff)?;
    collect_bilateral(cutoff, |n| {
        let sign = if n.rem_euclid(2) == 1 { -1 } else { 1 };
        Some(head.mul(&Term::monomial(sign, 0, m * n * (n + 1) / 2).over(MonomialSpec::q(b * n + c))))
    })
}

/// Σ_{n≥1} q^{an}/(1 − q^{bn}) scaled by `coef`.
pub(crate) fn lambert(coef: i64, a: i64, b: i64, cutoff: usize) -> Vec<Term> {
    (1..=cutoff as i64 / a.max(1) + 1).map(|n| Term::monomial(coef, 0, a * n).over(MonomialSpec::q(b * n))).collect()
}
