//! Rank and crank generating functions.

use crate::error::Result;

use super::any::{AnySeries, Mode};
use super::monomial::{Monomial, MonomialSpec};
use super::terms::{collect_terms, qpoch_inf, Term};

/// R(z, q) = (1/(q;q)_∞)(1 + Σ_{n≥1} (1−z)(1−z^{-1})(−1)^n q^{n(3n+1)/2}(1+q^n)
/// / ((1−zq^n)(1−z^{-1}q^n))).
pub fn rank_terms(cutoff: usize) -> Result<Vec<Term>> {
    let eta = qpoch_inf(1, 1, cutoff);
    let mut out = vec![Term::one().over_all(&eta)];
    out.extend(collect_terms(cutoff, |n| {
        (n >= 1).then(|| {
            let sign = if n % 2 == 1 { -1 } else { 1 };
            let e = n * (3 * n + 1) / 2;
            Term::from_poly(vec![Monomial::new(sign, 0, e), Monomial::new(sign, 0, e + n)])
                .times(MonomialSpec::zq(1, 0))
                .times(MonomialSpec::zq(-1, 0))
                .over(MonomialSpec::zq(1, n))
                .over(MonomialSpec::zq(-1, n))
                .over_all(&eta)
        })
    })?);
    Ok(out)
}

/// C(z, q) = (q;q)_∞ / ((zq;q)_∞ (z^{-1}q;q)_∞).
pub fn crank_terms(cutoff: usize) -> Vec<Term> {
    let mut t = Term::one().times_all(&qpoch_inf(1, 1, cutoff));
    for k in 1..cutoff.max(1) as i64 {
        t = t.over(MonomialSpec::zq(1, k)).over(MonomialSpec::zq(-1, k));
    }
    vec![t]
}

pub fn rank_series(mode: Mode, order: usize) -> Result<AnySeries> {
    AnySeries::evaluate(mode, &rank_terms(order)?, order, 0)
}

pub fn crank_series(mode: Mode, order: usize) -> Result<AnySeries> {
    AnySeries::evaluate(mode, &crank_terms(order), order, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Int;

    const PARTITIONS: [i64; 10] = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30];

    #[test]
    fn rank_at_one_counts_partitions() {
        let r = rank_series(Mode::One, 10).unwrap();
        let v: Vec<i64> = r.as_integer().unwrap().coeffs().iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(v, PARTITIONS);
    }

    #[test]
    fn crank_at_one_counts_partitions() {
        let c = crank_series(Mode::One, 10).unwrap();
        let v: Vec<i64> = c.as_integer().unwrap().coeffs().iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(v, PARTITIONS);
    }

    #[test]
    fn symbolic_low_coefficients() {
        let r = rank_series(Mode::Symbolic, 4).unwrap();
        assert_eq!(r.render_coeff(0), "[0:1]");
        assert_eq!(r.render_coeff(2), "[-1:1,1:1]");
        let c = crank_series(Mode::Symbolic, 3).unwrap();
        assert_eq!(c.render_coeff(1), "[-1:1,0:-1,1:1]");
        assert_eq!(c.as_two_variable().unwrap().coeff(0).eval_at_one(), Int::ONE);
    }
}
