//! Pochhammer symbols, Jacobi products, eta quotients and theta sums.

use crate::error::{Error, Result};
use crate::rings::{Integers, Ring};

use super::monomial::MonomialSpec;
use super::series::TruncatedSeries;
use super::terms::{collect_bilateral, evaluate, jac, poch, poch_inf, qpoch_inf, Term};

/// (arg; base)_n for finite `n`, or (arg; base)_∞ when `n` is `None`.
pub fn pochhammer<R: Ring>(
    ring: &R,
    arg: MonomialSpec,
    n: Option<usize>,
    base: MonomialSpec,
    order: usize,
) -> Result<TruncatedSeries<R>> {
    let factors = match n {
        Some(n) => poch(arg, base, n),
        None => {
            if arg.q_exp < 0 {
                return Err(Error::Divergent(format!("infinite product starting at q^{}", arg.q_exp)));
            }
            poch_inf(arg, base, order)?
        }
    };
    evaluate(ring, &[Term::one().times_all(&factors)], order, 0)
}

/// j(q^a; q^b) = (q^a, q^{b−a}; q^b)_∞ for 0 < a < b.
pub fn jacobi_product(a: i64, b: i64, order: usize) -> Result<TruncatedSeries<Integers>> {
    if !(0 < a && a < b) {
        return Err(Error::Precondition(format!("j(q^{a}; q^{b}) needs 0 < a < b")));
    }
    evaluate(&Integers, &[Term::one().times_all(&jac(MonomialSpec::q(a), b, order)?)], order, 0)
}

/// Π (q^b; q^b)_∞^{e} over the `(b, e)` pairs, as a single term.
pub fn eta_quotient(factors: &[(i64, i32)], cutoff: usize) -> Term {
    factors.iter().fold(Term::one(), |t, &(b, e)| t.pow_all(&qpoch_inf(b, b, cutoff), e))
}

/// Terms of Σ_{j∈ℤ} (−1)^j z^j Q^{j(j−1)/2} with Q = q^{base}.
pub fn theta_terms(z: MonomialSpec, base: i64, cutoff: usize) -> Result<Vec<Term>> {
    if base <= 0 {
        return Err(Error::Divergent(format!("theta sum with base q^{base}")));
    }
    collect_bilateral(cutoff, |j| {
        let m = z.pow(j);
        let sign = if j.rem_euclid(2) == 1 { -m.sign as i64 } else { m.sign as i64 };
        Some(Term::monomial(sign, m.z_exp, m.q_exp + base * j * (j - 1) / 2))
    })
}

/// Σ_{j∈ℤ} (−1)^j z^j Q^{j(j−1)/2}, which the triple product identity equates
/// with (z, Q/z, Q; Q)_∞.
pub fn theta_sum<R: Ring>(ring: &R, z: MonomialSpec, base: i64, order: usize) -> Result<TruncatedSeries<R>> {
    evaluate(ring, &theta_terms(z, base, order)?, order, 0)
}

/// The product side (z, Q/z, Q; Q)_∞ of [`theta_sum`].
pub fn theta_product<R: Ring>(ring: &R, z: MonomialSpec, base: i64, order: usize) -> Result<TruncatedSeries<R>> {
    let t = Term::one().times_all(&jac(z, base, order)?).times_all(&qpoch_inf(base, base, order));
    evaluate(ring, &[t], order, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Laurent;

    fn ints(s: &TruncatedSeries<Integers>) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn finite_pochhammer() {
        let s = pochhammer(&Integers, MonomialSpec::q(1), Some(3), MonomialSpec::q(1), 8).unwrap();
        assert_eq!(ints(&s), vec![1, -1, -1, 0, 1, 1, -1, 0]);
        let z = pochhammer(&Laurent, MonomialSpec::zq(1, 0), Some(1), MonomialSpec::q(1), 3).unwrap();
        assert_eq!(z.coeff(0).render(), "[0:1,1:-1]");
    }

    #[test]
    fn infinite_pochhammer_rejects_nonpositive_base() {
        let r = pochhammer(&Integers, MonomialSpec::q(1), None, MonomialSpec::q(0), 5);
        assert!(matches!(r, Err(Error::Divergent(_))));
    }

    #[test]
    fn jacobi_range_checked() {
        assert!(jacobi_product(3, 3, 10).is_err());
        assert_eq!(jacobi_product(1, 2, 10).unwrap().coeff(0).to_i64(), Some(1));
    }

    #[test]
    fn theta_sums_match_triple_product() {
        for (z, b) in [(MonomialSpec::q(1), 2), (MonomialSpec::neg_q(1), 4), (MonomialSpec::q(2), 5), (MonomialSpec::neg_q(3), 7)] {
            assert_eq!(theta_sum(&Integers, z, b, 200).unwrap(), theta_product(&Integers, z, b, 200).unwrap());
        }
        let z = MonomialSpec::zq(1, 0);
        assert_eq!(theta_sum(&Laurent, z, 1, 30).unwrap(), theta_product(&Laurent, z, 1, 30).unwrap());
    }
}
