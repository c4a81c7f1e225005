//! Tables of M_X(m, n), M_X(k, t, n) and spt_X(n).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qseries::Mode;
use crate::rings::{Int, LaurentPolynomial};

use super::{build_spt_crank, SptFamily};

/// M_X(m, n) for 0 ≤ n < order.
#[derive(Clone, Debug, PartialEq)]
pub struct CrankTable {
    pub family: SptFamily,
    rows: Vec<LaurentPolynomial>,
}

impl CrankTable {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, n: usize) -> &LaurentPolynomial {
        &self.rows[n]
    }

    /// M_X(m, n); zero outside the table.
    pub fn m(&self, m: i64, n: usize) -> Int {
        self.rows.get(n).map_or(Int::ZERO, |r| r.coeff(m))
    }

    /// M_X(k, t, n) = Σ_{m ≡ k (mod t)} M_X(m, n).
    pub fn class_count(&self, k: i64, t: i64, n: usize) -> Int {
        let mut s = Int::ZERO;
        if let Some(r) = self.rows.get(n) {
            for (m, c) in r.terms() {
                if (m - k).rem_euclid(t) == 0 {
                    s += c;
                }
            }
        }
        s
    }

    /// spt_X(n) = Σ_m M_X(m, n).
    pub fn spt(&self, n: usize) -> Int {
        self.class_count(0, 1, n)
    }

    /// max over rows of (max |m| with M_X(m, n) ≠ 0) − n; `None` for an
    /// all-zero table.
    pub fn band_excess(&self) -> Option<i64> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(n, r)| {
                let lo = r.min_exp()?;
                let hi = r.max_exp()?;
                Some(lo.abs().max(hi.abs()) - n as i64)
            })
            .max()
    }

    pub fn entries(&self) -> Vec<CrankEntry> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, r)| r.terms().iter().map(move |(m, c)| CrankEntry { n, m: *m, count: c.to_string() }))
            .collect()
    }
}

/// One nonzero M_X(m, n), serialized with an exact decimal count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrankEntry {
    pub n: usize,
    pub m: i64,
    pub count: String,
}

/// Builds the table from the symbolic series and checks the band |m| ≤ n.
pub fn crank_table(family: SptFamily, order: usize) -> Result<CrankTable> {
    let s = build_spt_crank(family, Mode::Symbolic, order)?;
    let s = s.as_two_variable().expect("symbolic build yields a two-variable series");
    let table = CrankTable { family, rows: s.coeffs().to_vec() };
    if let Some(e) = table.band_excess() {
        if e > 0 {
            return Err(Error::Precondition(format!("{family}: M(m, n) nonzero with |m| = n + {e}")));
        }
    }
    Ok(table)
}

/// spt_X(n) for 1 ≤ n ≤ n_max.
pub fn spt_table(family: SptFamily, n_max: usize) -> Result<Vec<Int>> {
    let s = build_spt_crank(family, Mode::One, n_max + 1)?;
    Ok(s.as_integer().expect("mode one yields integers").coeffs()[1..].to_vec())
}

/// The classic spt(n) for 1 ≤ n ≤ n_max from Σ_{s≥1} q^s/((1 − q^s)^2 (q^{s+1}; q)_∞),
/// one term per smallest part s.
pub fn classic_spt_table(n_max: usize) -> Result<Vec<Int>> {
    use crate::qseries::{poch_inf, AnySeries, MonomialSpec, Term};
    let order = n_max + 1;
    let terms = (1..=n_max as i64)
        .map(|s| {
            Ok(Term::monomial(1, 0, s)
                .over(MonomialSpec::q(s))
                .over(MonomialSpec::q(s))
                .over_all(&poch_inf(MonomialSpec::q(s + 1), MonomialSpec::q(1), order)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let s = AnySeries::evaluate(Mode::One, &terms, order, 0)?;
    Ok(s.as_integer().expect("mode one yields integers").coeffs()[1..].to_vec())
}
