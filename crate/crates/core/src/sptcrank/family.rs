//! The spt-crank-type families S_X(z, q) and their builders.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bailey::{BaileyPair, PairName};
use crate::error::{Error, Result};
use crate::qseries::{
    embed, eta_quotient, evaluate, poch, poch_inf, AnySeries, Monomial, MonomialSpec, Mode, Term, TruncatedSeries,
};
use crate::rings::{Cyclotomic, Integers, Laurent, Ring};

/// The seven families with a congruence theory.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SptFamily {
    B2,
    F3,
    G4,
    AG4,
    J1,
    J2,
    J3,
}

impl SptFamily {
    pub const ALL: [SptFamily; 7] =
        [SptFamily::B2, SptFamily::F3, SptFamily::G4, SptFamily::AG4, SptFamily::J1, SptFamily::J2, SptFamily::J3];

    pub fn as_str(self) -> &'static str {
        self.pair().as_str()
    }

    pub fn pair(self) -> PairName {
        match self {
            SptFamily::B2 => PairName::B2,
            SptFamily::F3 => PairName::F3,
            SptFamily::G4 => PairName::G4,
            SptFamily::AG4 => PairName::AG4,
            SptFamily::J1 => PairName::J1,
            SptFamily::J2 => PairName::J2,
            SptFamily::J3 => PairName::J3,
        }
    }

    /// Exponent of Q = q^base in the (z, z^{-1}; Q)_n factors.
    pub fn base(self) -> i64 {
        self.pair().natural_base()
    }
}

impl fmt::Display for SptFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SptFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SptFamily::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// P_X(q) for the pairs that carry a two-variable series.
fn prefactor(pair: PairName, cutoff: usize) -> Result<Term> {
    let c = cutoff;
    Ok(match pair {
        PairName::B2 | PairName::F3 => eta_quotient(&[(1, 1)], c),
        PairName::J1 | PairName::J2 | PairName::J3 => eta_quotient(&[(1, 2), (3, -1)], c),
        PairName::G4 | PairName::AG4 => {
            eta_quotient(&[(4, 1)], c).times_all(&poch_inf(MonomialSpec::neg_q(1), MonomialSpec::q(2), c)?)
        }
        PairName::Gstar | PairName::Gstarstar => {
            eta_quotient(&[(4, 1)], c).times_all(&poch_inf(MonomialSpec::q(1), MonomialSpec::q(2), c)?)
        }
        PairName::F1 => Term::one().times_all(&poch_inf(MonomialSpec::q(1), MonomialSpec::q(2), c)?),
        PairName::GenericStar | PairName::GenericStarStar => {
            return Err(Error::UnknownFamily(format!("{pair} has no spt-crank series")))
        }
    })
}

/// Builds P_X(q) Σ_{n≥1} Q^n β_n / ((zQ^n; Q)_∞ (z^{-1}Q^n; Q)_∞) in `ring`.
///
/// With d_k = (1 − zQ^k)(1 − z^{-1}Q^k), the sum is the limit of
/// W_n = (W_{n−1} + Q^n β_n)/d_n, so only q-binomials are ever divided out.
pub fn build_for_pair<R: Ring>(ring: &R, pair: PairName, order: usize) -> Result<TruncatedSeries<R>> {
    let p = BaileyPair::catalog(pair)?;
    let base = p.base;
    let mut w = TruncatedSeries::zero(ring.clone(), order);
    for n in 1..=order as i64 {
        let a = p.beta(n).times_monomial(1, 0, base * n);
        if a.min_q().is_some_and(|m| m < order as i64) {
            w.add_assign(&embed(&evaluate(&Integers, &[a], order, 0)?, ring));
        }
        if base * n < order as i64 {
            w.div_poly_in_place(&[Monomial::new(1, 0, 0), Monomial::new(-1, 1, base * n)])?;
            w.div_poly_in_place(&[Monomial::new(1, 0, 0), Monomial::new(-1, -1, base * n)])?;
        }
    }
    let pre = evaluate(&Integers, &[prefactor(pair, order)?], order, 0)?;
    Ok(mul_by_integer_series(&w, &pre))
}

fn mul_by_integer_series<R: Ring>(w: &TruncatedSeries<R>, p: &TruncatedSeries<Integers>) -> TruncatedSeries<R> {
    let ring = w.ring();
    let n = w.order();
    let mut out = TruncatedSeries::zero(ring.clone(), n);
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let coeffs = out.coeffs_mut();
        for j in 0..n - i {
            if !ring.is_zero(w.coeff(j)) {
                let x = ring.mul_int(w.coeff(j), c);
                ring.add_assign(&mut coeffs[i + j], &x);
            }
        }
    }
    out
}

/// S_pair(z, q) in the ring selected by `mode`.
pub fn build_pair_series(pair: PairName, mode: Mode, order: usize) -> Result<AnySeries> {
    Ok(match mode {
        Mode::One => AnySeries::Integer(build_for_pair(&Integers, pair, order)?),
        Mode::Root(t) => AnySeries::Cyclotomic(build_for_pair(&Cyclotomic::new(t as i64)?, pair, order)?),
        Mode::Symbolic => AnySeries::TwoVariable(build_for_pair(&Laurent, pair, order)?),
    })
}

/// The one-variable series S_X(q) = S_X(1, q), written as in the family
/// definitions after setting z = 1 and simplifying the products.
pub fn one_variable_terms(family: SptFamily, cutoff: usize) -> Result<Vec<Term>> {
    let q = MonomialSpec::q;
    let nq = MonomialSpec::neg_q;
    let c = cutoff;
    let mut out = Vec::new();
    for n in 1..=c as i64 {
        let t = match family {
            SptFamily::B2 => Term::monomial(1, 0, 2 * n)
                .over(q(n))
                .over(q(n))
                .over_all(&poch_inf(q(n + 1), q(1), c)?),
            SptFamily::J1 => Term::monomial(1, 0, n)
                .over(q(n))
                .over(q(n))
                .over_all(&poch(q(n + 1), q(1), n as usize - 1))
                .over_all(&poch_inf(q(3 * n), q(3), c)?),
            SptFamily::J2 | SptFamily::J3 => {
                let e = if family == SptFamily::J2 { n } else { 2 * n };
                Term::monomial(1, 0, e)
                    .over_all(&poch(q(n), q(1), n as usize + 1))
                    .over_all(&poch_inf(q(3 * n), q(3), c)?)
            }
            SptFamily::F3 => Term::monomial(1, 0, n)
                .times_all(&poch_inf(q(2 * n + 1), q(2), c)?)
                .over(q(2 * n))
                .over(q(2 * n))
                .over_all(&poch_inf(q(2 * n + 2), q(2), c)?),
            SptFamily::G4 | SptFamily::AG4 => {
                let e = if family == SptFamily::G4 { n * n + 2 * n } else { n * n };
                let sign = if n % 2 == 1 { -1 } else { 1 };
                Term::monomial(sign, 0, e)
                    .times_all(&poch_inf(nq(2 * n + 1), q(2), c)?)
                    .over(q(2 * n))
                    .over(q(2 * n))
                    .over_all(&poch(q(2 * n + 2), q(2), n as usize + 1))
                    .over_all(&poch_inf(q(2 * n + 2), q(2), c)?)
                    .over_all(&poch_inf(q(4 * n + 6), q(4), c)?)
            }
        };
        if t.min_q().is_some_and(|m| m < c as i64) {
            out.push(t);
        } else if n as usize * family.base() as usize >= c {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &AnySeries) -> Vec<i64> {
        s.as_integer().unwrap().coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn b2_low_coefficients() {
        let s = build_pair_series(PairName::B2, Mode::One, 5).unwrap();
        assert_eq!(ints(&s), vec![0, 0, 1, 2, 5]);
    }

    #[test]
    fn j2_first_coefficient() {
        let s = build_pair_series(PairName::J2, Mode::One, 3).unwrap();
        assert_eq!(ints(&s)[1], 1);
    }

    #[test]
    fn parse_family() {
        assert_eq!("ag4".parse::<SptFamily>().unwrap(), SptFamily::AG4);
        assert!("Gstar".parse::<SptFamily>().is_err());
    }
}
