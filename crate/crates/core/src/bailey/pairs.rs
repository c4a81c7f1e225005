//! The Bailey pairs: the seven spt-generating pairs, three auxiliary pairs
//! and the two generic pairs with a free relative parameter.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qseries::{poch, Monomial, MonomialSpec, Term};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PairName {
    B2,
    F3,
    G4,
    AG4,
    J1,
    J2,
    J3,
    F1,
    Gstar,
    Gstarstar,
    GenericStar,
    GenericStarStar,
}

impl PairName {
    pub const ALL: [PairName; 12] = [
        PairName::B2,
        PairName::F3,
        PairName::G4,
        PairName::AG4,
        PairName::J1,
        PairName::J2,
        PairName::J3,
        PairName::F1,
        PairName::Gstar,
        PairName::Gstarstar,
        PairName::GenericStar,
        PairName::GenericStarStar,
    ];

    /// Pairs with a fixed relative parameter a = 1.
    pub const CATALOG: [PairName; 10] = [
        PairName::B2,
        PairName::F3,
        PairName::G4,
        PairName::AG4,
        PairName::J1,
        PairName::J2,
        PairName::J3,
        PairName::F1,
        PairName::Gstar,
        PairName::Gstarstar,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PairName::B2 => "B2",
            PairName::F3 => "F3",
            PairName::G4 => "G4",
            PairName::AG4 => "AG4",
            PairName::J1 => "J1",
            PairName::J2 => "J2",
            PairName::J3 => "J3",
            PairName::F1 => "F1",
            PairName::Gstar => "Gstar",
            PairName::Gstarstar => "Gstarstar",
            PairName::GenericStar => "GenericStar",
            PairName::GenericStarStar => "GenericStarStar",
        }
    }

    /// Exponent e such that the pair is relative to (a, q^e).
    pub fn natural_base(self) -> i64 {
        match self {
            PairName::F3 | PairName::G4 | PairName::AG4 | PairName::F1 | PairName::Gstar | PairName::Gstarstar => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for PairName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for PairName {
    type Err = Error;
    fn from_str(s: &str) -> Result<PairName> {
        PairName::ALL
            .into_iter()
            .find(|p| p.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A Bailey pair relative to (a, Q) with Q = q^base. The α and β rules are
/// kept in product form and expanded on demand.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BaileyPair {
    pub name: PairName,
    /// Q = q^base.
    pub base: i64,
    /// Relative parameter, in powers of q.
    pub a: MonomialSpec,
    /// q ↦ q^stretch applied to the printed rules.
    stretch: i64,
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 1 {
        -1
    } else {
        1
    }
}

impl BaileyPair {
    /// A pair with a = 1 in its printed normalization.
    pub fn catalog(name: PairName) -> Result<BaileyPair> {
        if matches!(name, PairName::GenericStar | PairName::GenericStarStar) {
            return Err(Error::Precondition(format!("{name} needs a relative parameter; use BaileyPair::generic")));
        }
        Ok(BaileyPair { name, base: name.natural_base(), a: MonomialSpec::ONE, stretch: 1 })
    }

    /// β*_n = 1/(aQ, Q; Q)_n or β**_n = 1/(aQ², Q; Q)_n relative to (a, q^base).
    pub fn generic(name: PairName, a: MonomialSpec, base: i64) -> Result<BaileyPair> {
        if !matches!(name, PairName::GenericStar | PairName::GenericStarStar) {
            return Err(Error::Precondition(format!("{name} is not a generic pair")));
        }
        if base <= 0 {
            return Err(Error::Divergent(format!("pair base q^{base}")));
        }
        Ok(BaileyPair { name, base, a, stretch: 1 })
    }

    /// The same pair after q ↦ q^k.
    pub fn rescaled(&self, k: i64) -> BaileyPair {
        assert!(k > 0, "rescale factor must be positive");
        let a = MonomialSpec { q_exp: self.a.q_exp * k, ..self.a };
        BaileyPair { name: self.name, base: self.base * k, a, stretch: self.stretch * k }
    }

    fn q_base(&self) -> MonomialSpec {
        MonomialSpec::q(self.base)
    }

    /// Last index with α_n ≠ 0 when α has finite support.
    pub fn alpha_support(&self) -> Option<i64> {
        match self.name {
            PairName::GenericStar => Some(0),
            PairName::GenericStarStar => Some(1),
            _ => None,
        }
    }

    /// α_n as a polynomial term.
    pub fn alpha(&self, n: i64) -> Term {
        let t = match self.name {
            PairName::GenericStar => {
                return if n == 0 { Term::one() } else { Term::from_poly(vec![]) };
            }
            PairName::GenericStarStar => {
                return match n {
                    0 => Term::one(),
                    1 => {
                        let m = self.a.mul(self.q_base()).as_monomial();
                        Term::monomial(-m.c, m.z, m.q)
                    }
                    _ => Term::from_poly(vec![]),
                };
            }
            _ if n == 0 => return Term::one(),
            PairName::B2 => {
                let e = 3 * (n * n - n) / 2;
                Term::from_poly(vec![Monomial::new(sign(n), 0, e), Monomial::new(sign(n), 0, e + 3 * n)])
            }
            PairName::J1 | PairName::J2 | PairName::J3 => {
                let k = (n + 1).div_euclid(3);
                match n.rem_euclid(3) {
                    0 => {
                        let e = (9 * k * k - 3 * k) / 2;
                        Term::from_poly(vec![Monomial::new(sign(k), 0, e), Monomial::new(sign(k), 0, e + 3 * k)])
                    }
                    2 => match self.name {
                        PairName::J1 => Term::from_poly(vec![]),
                        PairName::J2 => Term::monomial(sign(k - 1), 0, (9 * k * k - 9 * k + 2) / 2),
                        _ => Term::monomial(sign(k - 1), 0, (9 * k * k - 3 * k) / 2),
                    },
                    _ => {
                        let k = (n - 1) / 3;
                        match self.name {
                            PairName::J1 => Term::from_poly(vec![]),
                            PairName::J2 => Term::monomial(sign(k + 1), 0, (9 * k * k + 9 * k + 2) / 2),
                            _ => Term::monomial(sign(k + 1), 0, (9 * k * k + 3 * k) / 2),
                        }
                    }
                }
            }
            PairName::F3 => Term::from_poly(vec![Monomial::new(1, 0, n), Monomial::new(1, 0, -n)]),
            PairName::G4 => {
                let e = n * (n - 1) / 2;
                Term::from_poly(vec![Monomial::new(sign(n), 0, e), Monomial::new(sign(n), 0, e + n)])
            }
            PairName::AG4 => {
                let e = n * (n - 3) / 2;
                Term::from_poly(vec![Monomial::new(sign(n), 0, e), Monomial::new(sign(n), 0, e + 3 * n)])
            }
            PairName::F1 => {
                let e = 2 * n * n - n;
                Term::from_poly(vec![Monomial::new(1, 0, e), Monomial::new(1, 0, e + 2 * n)])
            }
            PairName::Gstar => {
                let e = n * (n - 3) / 2;
                let s = sign(n * (n - 1) / 2);
                Term::from_poly(vec![Monomial::new(s, 0, e), Monomial::new(s * sign(n), 0, e + 3 * n)])
            }
            PairName::Gstarstar => {
                let e = n * (n - 1) / 2;
                let s = sign(n * (n + 1) / 2);
                Term::from_poly(vec![Monomial::new(s, 0, e), Monomial::new(s * sign(n), 0, e + n)])
            }
        };
        t.stretch_q(self.stretch)
    }

    /// β_n in product form.
    pub fn beta(&self, n: i64) -> Term {
        let nu = n.max(0) as usize;
        let q = MonomialSpec::q;
        let t = match self.name {
            PairName::GenericStar => {
                let qb = self.q_base();
                return Term::one().over_all(&poch(self.a.mul(qb), qb, nu)).over_all(&poch(qb, qb, nu));
            }
            PairName::GenericStarStar => {
                let qb = self.q_base();
                return Term::one().over_all(&poch(self.a.mul(qb.pow(2)), qb, nu)).over_all(&poch(qb, qb, nu));
            }
            _ if n == 0 => return Term::one(),
            PairName::B2 => Term::monomial(1, 0, n).over_all(&poch(q(1), q(1), nu)),
            PairName::J1 => Term::one()
                .times_all(&poch(q(3), q(3), nu - 1))
                .over_all(&poch(q(1), q(1), 2 * nu - 1))
                .over_all(&poch(q(1), q(1), nu)),
            PairName::J2 | PairName::J3 => {
                let e = if self.name == PairName::J3 { n } else { 0 };
                Term::monomial(1, 0, e)
                    .times_all(&poch(q(3), q(3), nu - 1))
                    .over_all(&poch(q(1), q(1), 2 * nu))
                    .over_all(&poch(q(1), q(1), nu - 1))
            }
            PairName::F3 => Term::monomial(1, 0, -n).over_all(&poch(q(1), q(1), 2 * nu)),
            PairName::F1 => Term::one().over_all(&poch(q(1), q(1), 2 * nu)),
            PairName::G4 | PairName::AG4 => {
                let e = if self.name == PairName::G4 { n * n } else { n * n - 2 * n };
                Term::monomial(sign(n), 0, e)
                    .over_all(&poch(q(4), q(4), nu))
                    .over_all(&poch(MonomialSpec::neg_q(1), q(2), nu))
            }
            PairName::Gstar | PairName::Gstarstar => {
                let e = if self.name == PairName::Gstarstar { n * n } else { n * n - 2 * n };
                Term::monomial(1, 0, e).over_all(&poch(q(4), q(4), nu)).over_all(&poch(q(1), q(2), nu))
            }
        };
        t.stretch_q(self.stretch)
    }

    /// Σ_{k=0}^{n} α_k / ((Q;Q)_{n−k} (aQ;Q)_{n+k}), the right side of the
    /// defining relation.
    pub fn relation_terms(&self, n: i64) -> Vec<Term> {
        let qb = self.q_base();
        (0..=n)
            .map(|k| {
                self.alpha(k)
                    .over_all(&poch(qb, qb, (n - k) as usize))
                    .over_all(&poch(self.a.mul(qb), qb, (n + k) as usize))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{compare_sides, Mode};

    #[test]
    fn j1_beta_is_sum_of_j2_and_j3() {
        let p = |n: PairName| BaileyPair::catalog(n).unwrap();
        for n in 1..12 {
            let lhs = |_: usize| Ok(vec![p(PairName::J1).beta(n)]);
            let rhs = |_: usize| Ok(vec![p(PairName::J2).beta(n), p(PairName::J3).beta(n)]);
            assert!(compare_sides(Mode::One, &lhs, &rhs, 80).unwrap().mismatch.is_none());
        }
    }

    #[test]
    fn b2_first_relation_by_hand() {
        // 1/(1−q)² − (1+q³)/((1−q)(1−q²)) = q/(1−q).
        let p = BaileyPair::catalog(PairName::B2).unwrap();
        let lhs = |_: usize| Ok(vec![p.beta(1)]);
        let rhs = |_: usize| Ok(p.relation_terms(1));
        assert!(compare_sides(Mode::One, &lhs, &rhs, 30).unwrap().mismatch.is_none());
    }

    #[test]
    fn alpha_zero_is_one() {
        for name in PairName::CATALOG {
            assert_eq!(BaileyPair::catalog(name).unwrap().alpha(0), Term::one());
            assert_eq!(BaileyPair::catalog(name).unwrap().beta(0), Term::one());
        }
    }
}
