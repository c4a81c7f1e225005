//! Congruence and coefficient-vanishing checks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qseries::{Mismatch, Mode};
use crate::report::{Status, VerificationReport};
use crate::rings::{is_prime, Int};

use super::{build_spt_crank, crank_table, spt_table, SptFamily};

/// The fifteen progressions (family, p, b) with spt_X(pn + b) ≡ 0 (mod p).
pub const CONGRUENCES: [(SptFamily, u32, u32); 15] = [
    (SptFamily::F3, 3, 0),
    (SptFamily::J1, 3, 2),
    (SptFamily::J2, 3, 0),
    (SptFamily::J3, 3, 1),
    (SptFamily::B2, 5, 1),
    (SptFamily::B2, 5, 4),
    (SptFamily::F3, 5, 0),
    (SptFamily::F3, 5, 4),
    (SptFamily::G4, 5, 4),
    (SptFamily::AG4, 5, 4),
    (SptFamily::B2, 7, 1),
    (SptFamily::B2, 7, 5),
    (SptFamily::F3, 7, 0),
    (SptFamily::F3, 7, 4),
    (SptFamily::F3, 7, 6),
];

/// Which of the stacked congruence checks failed.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CongruenceCheck {
    /// p ∤ spt_X(pn + b).
    Divisibility,
    /// The coefficient of q^{pn+b} in S_X(ζ_p, q) is nonzero.
    CyclotomicCoefficient,
    /// The p class counts M_X(k, p, pn + b) are not all equal.
    EqualClasses,
}

impl fmt::Display for CongruenceCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CongruenceCheck::Divisibility => "divisibility",
            CongruenceCheck::CyclotomicCoefficient => "cyclotomic_coefficient",
            CongruenceCheck::EqualClasses => "equal_classes",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceFailure {
    pub check: CongruenceCheck,
    /// The argument pn + b at which the check failed.
    pub argument: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceReport {
    pub family: SptFamily,
    pub p: u32,
    pub b: u32,
    pub n_max: usize,
    pub status: Status,
    pub failure: Option<CongruenceFailure>,
}

impl CongruenceReport {
    pub fn id(&self) -> String {
        format!("congruence_{}_{}n+{}", self.family, self.p, self.b)
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

/// Checks spt_X(pn + b) ≡ 0 (mod p) for every argument pn + b ≤ n_max with
/// three increasingly fine tests; the first failing test is reported at its
/// smallest argument.
pub fn check_congruence(family: SptFamily, p: u32, b: u32, n_max: usize) -> Result<CongruenceReport> {
    if !is_prime(p as i64) || !(3..=7).contains(&p) {
        return Err(Error::NotPrime(p as i64));
    }
    if b >= p {
        return Err(Error::Precondition(format!("residue {b} is not below {p}")));
    }
    let order = n_max + 1;
    let args: Vec<usize> = (b as usize..order).step_by(p as usize).collect();
    let report = |failure: Option<CongruenceFailure>| CongruenceReport {
        family,
        p,
        b,
        n_max,
        status: if failure.is_some() { Status::Mismatch } else { Status::Verified },
        failure,
    };

    let spt = spt_table(family, n_max)?;
    for &n in &args {
        let v = if n == 0 { Int::ZERO } else { spt[n - 1].clone() };
        if v.rem_euclid_i64(p as i64) != 0 {
            return Ok(report(Some(CongruenceFailure {
                check: CongruenceCheck::Divisibility,
                argument: n,
                detail: format!("spt_{family}({n}) = {v}"),
            })));
        }
    }

    let cyc = build_spt_crank(family, Mode::Root(p), order)?;
    for &n in &args {
        if !cyc.coeff_is_zero(n) {
            return Ok(report(Some(CongruenceFailure {
                check: CongruenceCheck::CyclotomicCoefficient,
                argument: n,
                detail: format!("coefficient {}", cyc.render_coeff(n)),
            })));
        }
    }

    let table = crank_table(family, order)?;
    for &n in &args {
        let counts: Vec<Int> = (0..p as i64).map(|k| table.class_count(k, p as i64, n)).collect();
        if counts.iter().any(|c| c != &counts[0]) {
            let shown: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
            return Ok(report(Some(CongruenceFailure {
                check: CongruenceCheck::EqualClasses,
                argument: n,
                detail: format!("class counts [{}]", shown.join(", ")),
            })));
        }
    }
    Ok(report(None))
}

/// Checks that the coefficients of q^{tn + residue} in S_X(ζ_t, q) vanish
/// below `order`.
pub fn check_vanishing(family: SptFamily, t: u32, residue: u32, order: usize) -> Result<VerificationReport> {
    if residue >= t {
        return Err(Error::Precondition(format!("residue {residue} is not below {t}")));
    }
    let id = format!("vanishing_{family}_{t}n+{residue}");
    let s = build_spt_crank(family, Mode::Root(t), order)?;
    let hit = (residue as usize..order).step_by(t as usize).find(|&n| !s.coeff_is_zero(n));
    Ok(match hit {
        None => VerificationReport::verified(id, order),
        Some(n) => VerificationReport::mismatch(
            id,
            order,
            Mismatch { power: n as i64, lhs: s.render_coeff(n), rhs: "0".into() },
        ),
    })
}
