//! Lambert series, divisor sums and the bilateral sums V, U, T, T*, h.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{Int, Integers, Ring};

use super::monomial::MonomialSpec;
use super::series::TruncatedSeries;
use super::terms::{collect_bilateral, evaluate, Term};

/// Σ_{n≥1} q^{an}/(1 − q^{bn}), counted directly: the coefficient of q^N is
/// the number of n ≥ 1, k ≥ 0 with n(a + bk) = N.
pub fn lambert_sum(a: usize, b: usize, order: usize) -> TruncatedSeries<Integers> {
    assert!(a > 0 && b > 0, "Lambert exponents must be positive");
    let mut c = vec![0i64; order];
    for n in 1..order {
        let mut e = a * n;
        while e < order {
            c[e] += 1;
            e += b * n;
        }
    }
    TruncatedSeries::from_coeffs(Integers, c.into_iter().map(Int::from).collect())
}

/// Σ_{N≥1} E_r(N; m) q^N where E_r(N; m) counts divisors d ≡ r minus divisors
/// d ≡ −r (mod m).
pub fn divisor_series(r: i64, m: i64, order: usize) -> TruncatedSeries<Integers> {
    assert!(0 < r && r < m, "divisor residue must satisfy 0 < r < m");
    let coeffs = (0..order as i64)
        .map(|n| {
            let e: i64 = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| {
                    let x = d.rem_euclid(m);
                    (x == r) as i64 - (x == (m - r) % m) as i64
                })
                .sum();
            Int::from(e)
        })
        .collect();
    TruncatedSeries::from_coeffs(Integers, coeffs)
}

/// Embeds an integer series into another ring.
pub fn embed<R: Ring>(s: &TruncatedSeries<Integers>, ring: &R) -> TruncatedSeries<R> {
    s.map(ring.clone(), |c| ring.from_int(c))
}

/// The bilateral sums built from theta-type numerators over Lambert-type
/// denominators.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Bilateral {
    /// V_ℓ(b) = Σ_{n≠0} q^{2n²+bn}/(1 − q^{4ℓn}).
    V { l: i64, b: i64 },
    /// U_ℓ(b) = Σ_n q^{2n²+bn}/(1 − q^{4ℓn+2ℓ}).
    U { l: i64, b: i64 },
    /// T(z, w, Q) = Σ_n (−1)^n Q^{n(n+1)/2} w^n/(1 − zQ^n), Q = q^base.
    T { z: MonomialSpec, w: MonomialSpec, base: i64 },
    /// T*(w, Q) = Σ_{n≠0} (−1)^n Q^{n(n+1)/2} w^n/(1 − Q^n).
    TStar { w: MonomialSpec, base: i64 },
    /// h(z, Q) = T*(z^{-1}, Q) + z·T(z², z, Q).
    H { z: MonomialSpec, base: i64 },
}

fn theta_numerator(base: i64, w: MonomialSpec, n: i64) -> Term {
    let m = w.pow(n);
    let sign = if n.rem_euclid(2) == 1 { -m.sign as i64 } else { m.sign as i64 };
    Term::monomial(sign, m.z_exp, m.q_exp + base * n * (n + 1) / 2)
}

impl Bilateral {
    pub fn terms(&self, cutoff: usize) -> Result<Vec<Term>> {
        match *self {
            Bilateral::V { l, b } => {
                positive(l, "V")?;
                collect_bilateral(cutoff, |n| {
                    (n != 0).then(|| Term::monomial(1, 0, 2 * n * n + b * n).over(MonomialSpec::q(4 * l * n)))
                })
            }
            Bilateral::U { l, b } => {
                positive(l, "U")?;
                collect_bilateral(cutoff, |n| {
                    Some(Term::monomial(1, 0, 2 * n * n + b * n).over(MonomialSpec::q(4 * l * n + 2 * l)))
                })
            }
            Bilateral::T { z, w, base } => {
                positive(base, "T")?;
                collect_bilateral(cutoff, |n| {
                    Some(theta_numerator(base, w, n).over(z.mul(MonomialSpec::q(base * n))))
                })
            }
            Bilateral::TStar { w, base } => {
                positive(base, "T*")?;
                collect_bilateral(cutoff, |n| (n != 0).then(|| theta_numerator(base, w, n).over(MonomialSpec::q(base * n))))
            }
            Bilateral::H { z, base } => {
                let mut out = Bilateral::TStar { w: z.inv(), base }.terms(cutoff)?;
                let zm = z.as_monomial();
                let t = Bilateral::T { z: z.pow(2), w: z, base }.terms(cutoff + (-zm.q).max(0) as usize)?;
                out.extend(t.into_iter().map(|x| x.times_monomial(zm.c, zm.z, zm.q)));
                Ok(out)
            }
        }
    }

    pub fn series<R: Ring>(&self, ring: &R, order: usize) -> Result<TruncatedSeries<R>> {
        evaluate(ring, &self.terms(order)?, order, 0)
    }
}

fn positive(x: i64, what: &str) -> Result<()> {
    if x > 0 {
        Ok(())
    } else {
        Err(Error::Divergent(format!("{what} needs a positive modulus, got {x}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambert_counts_divisors() {
        let s = lambert_sum(1, 2, 10);
        let v: Vec<i64> = s.coeffs().iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(&v[1..4], &[1, 1, 2]);
        assert_eq!(lambert_sum(1, 1, 5).coeff(4).to_i64(), Some(3));
        assert!(lambert_sum(1, 1, 1).is_zero());
    }

    #[test]
    fn lambert_matches_term_expansion() {
        let terms: Vec<Term> = (1..60).map(|n| Term::monomial(1, 0, 3 * n).over(MonomialSpec::q(5 * n))).collect();
        assert_eq!(evaluate(&Integers, &terms, 60, 0).unwrap(), lambert_sum(3, 5, 60));
    }

    #[test]
    fn e1_mod_6_values() {
        let e = divisor_series(1, 6, 10);
        // 1 ≡ 1 and 5 ≡ −1 cancel.
        assert_eq!(e.coeff(5).to_i64(), Some(0));
        assert_eq!(e.coeff(1).to_i64(), Some(1));
        assert_eq!(e.coeff(7).to_i64(), Some(2));
    }

    #[test]
    fn v_antisymmetry() {
        let a = Bilateral::V { l: 5, b: 3 }.series(&Integers, 80).unwrap();
        let b = Bilateral::V { l: 5, b: 17 }.series(&Integers, 80).unwrap();
        assert!(a.add(&b).unwrap().is_zero());
    }

    #[test]
    fn t_pole_detected() {
        let t = Bilateral::T { z: MonomialSpec::ONE, w: MonomialSpec::q(1), base: 4 };
        assert!(matches!(t.series(&Integers, 10), Err(Error::Pole(_))));
    }
}
