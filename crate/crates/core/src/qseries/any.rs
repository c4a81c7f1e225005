//! Runtime selection of the coefficient ring.
//!
//! Identities and families are written once as term lists; [`Mode`] picks
//! the image of z (symbolic, 1 or ζ_t) and [`AnySeries`] carries the result.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{Cyclotomic, Integers, Laurent, Ring, RingKind};

use super::series::TruncatedSeries;
use super::terms::{evaluate, Term};

/// Image of the variable z.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Mode {
    Symbolic,
    One,
    Root(u32),
}

impl Mode {
    pub fn ring_kind(self) -> RingKind {
        match self {
            Mode::Symbolic => RingKind::TwoVariable,
            Mode::One => RingKind::Integer,
            Mode::Root(t) => RingKind::Cyclotomic(t),
        }
    }

    pub fn from_ring_kind(kind: RingKind) -> Mode {
        match kind {
            RingKind::TwoVariable => Mode::Symbolic,
            RingKind::Integer => Mode::One,
            RingKind::Cyclotomic(t) => Mode::Root(t),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Symbolic => write!(f, "symbolic"),
            Mode::One => write!(f, "one"),
            Mode::Root(t) => write!(f, "root({t})"),
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    /// Accepts `symbolic`, `one` and `root(t)` / `root:t`.
    fn from_str(s: &str) -> Result<Mode> {
        let s = s.trim();
        match s {
            "symbolic" | "z" => return Ok(Mode::Symbolic),
            "one" | "1" => return Ok(Mode::One),
            _ => {}
        }
        let inner = s
            .strip_prefix("root(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix("root:"))
            .ok_or_else(|| Error::Precondition(format!("unrecognised mode `{s}`")))?;
        let t: i64 = inner.parse().map_err(|_| Error::Precondition(format!("unrecognised mode `{s}`")))?;
        Cyclotomic::new(t)?;
        Ok(Mode::Root(t as u32))
    }
}

/// A truncated series in whichever ring a [`Mode`] selected.
#[derive(Clone, Debug, PartialEq)]
pub enum AnySeries {
    Integer(TruncatedSeries<Integers>),
    Cyclotomic(TruncatedSeries<Cyclotomic>),
    TwoVariable(TruncatedSeries<Laurent>),
}

macro_rules! dispatch {
    ($s:expr, $x:ident => $e:expr) => {
        match $s {
            AnySeries::Integer($x) => $e,
            AnySeries::Cyclotomic($x) => $e,
            AnySeries::TwoVariable($x) => $e,
        }
    };
}

macro_rules! unary {
    ($s:expr, $x:ident => $e:expr) => {
        match $s {
            AnySeries::Integer($x) => AnySeries::Integer($e),
            AnySeries::Cyclotomic($x) => AnySeries::Cyclotomic($e),
            AnySeries::TwoVariable($x) => AnySeries::TwoVariable($e),
        }
    };
}

macro_rules! binary {
    ($s:expr, $o:expr, $a:ident, $b:ident => $e:expr) => {
        match ($s, $o) {
            (AnySeries::Integer($a), AnySeries::Integer($b)) => $e.map(AnySeries::Integer),
            (AnySeries::Cyclotomic($a), AnySeries::Cyclotomic($b)) => $e.map(AnySeries::Cyclotomic),
            (AnySeries::TwoVariable($a), AnySeries::TwoVariable($b)) => $e.map(AnySeries::TwoVariable),
            (x, y) => Err(Error::RingMismatch(x.ring_kind().to_string(), y.ring_kind().to_string())),
        }
    };
}

impl AnySeries {
    /// Expands `terms` in the ring chosen by `mode`; index i is the
    /// coefficient of q^{i − offset}.
    pub fn evaluate(mode: Mode, terms: &[Term], order: usize, offset: i64) -> Result<AnySeries> {
        Ok(match mode {
            Mode::One => AnySeries::Integer(evaluate(&Integers, terms, order, offset)?),
            Mode::Root(t) => AnySeries::Cyclotomic(evaluate(&Cyclotomic::new(t as i64)?, terms, order, offset)?),
            Mode::Symbolic => AnySeries::TwoVariable(evaluate(&Laurent, terms, order, offset)?),
        })
    }

    pub fn ring_kind(&self) -> RingKind {
        match self {
            AnySeries::Integer(_) => RingKind::Integer,
            AnySeries::Cyclotomic(s) => RingKind::Cyclotomic(s.ring().modulus()),
            AnySeries::TwoVariable(_) => RingKind::TwoVariable,
        }
    }

    pub fn order(&self) -> usize {
        dispatch!(self, s => s.order())
    }

    /// Canonical rendering of the coefficient at index i.
    pub fn render_coeff(&self, i: usize) -> String {
        dispatch!(self, s => s.ring().render(s.coeff(i)))
    }

    pub fn coeff_is_zero(&self, i: usize) -> bool {
        dispatch!(self, s => s.ring().is_zero(s.coeff(i)))
    }

    pub fn is_zero(&self) -> bool {
        dispatch!(self, s => s.is_zero())
    }

    pub fn truncate(&self, order: usize) -> AnySeries {
        match self {
            AnySeries::Integer(s) => AnySeries::Integer(s.truncate(order)),
            AnySeries::Cyclotomic(s) => AnySeries::Cyclotomic(s.truncate(order)),
            AnySeries::TwoVariable(s) => AnySeries::TwoVariable(s.truncate(order)),
        }
    }

    pub fn dissect(&self, p: usize, r: usize) -> AnySeries {
        match self {
            AnySeries::Integer(s) => AnySeries::Integer(s.dissect(p, r)),
            AnySeries::Cyclotomic(s) => AnySeries::Cyclotomic(s.dissect(p, r)),
            AnySeries::TwoVariable(s) => AnySeries::TwoVariable(s.dissect(p, r)),
        }
    }

    /// First differing index; series in different rings differ at 0.
    pub fn first_mismatch(&self, other: &AnySeries) -> Option<usize> {
        match (self, other) {
            (AnySeries::Integer(a), AnySeries::Integer(b)) => a.first_mismatch(b),
            (AnySeries::Cyclotomic(a), AnySeries::Cyclotomic(b)) if a.ring() == b.ring() => a.first_mismatch(b),
            (AnySeries::TwoVariable(a), AnySeries::TwoVariable(b)) => a.first_mismatch(b),
            _ => Some(0),
        }
    }

    pub fn add(&self, other: &AnySeries) -> Result<AnySeries> {
        binary!(self, other, a, b => a.add(b))
    }

    pub fn sub(&self, other: &AnySeries) -> Result<AnySeries> {
        binary!(self, other, a, b => a.sub(b))
    }

    pub fn mul(&self, other: &AnySeries) -> Result<AnySeries> {
        binary!(self, other, a, b => a.mul(b))
    }

    pub fn scale_int(&self, n: i64) -> AnySeries {
        let n = crate::rings::Int::from(n);
        unary!(self, s => s.scale_int(&n))
    }

    /// The substitution q ↦ −q.
    pub fn negate_q(&self) -> AnySeries {
        unary!(self, s => s.substitute(1, true, s.order()))
    }

    /// Drops the first `k` coefficients, which must vanish: the inverse of a
    /// shift by q^k.
    pub fn unshift(&self, k: usize) -> Result<AnySeries> {
        if let Some(i) = (0..k.min(self.order())).find(|&i| !self.coeff_is_zero(i)) {
            return Err(Error::NegativeExponent { needed: (k - i) as i64 });
        }
        Ok(unary!(self, s => TruncatedSeries::from_coeffs(s.ring().clone(), s.coeffs()[k.min(s.order())..].to_vec())))
    }

    pub fn as_integer(&self) -> Option<&TruncatedSeries<Integers>> {
        match self {
            AnySeries::Integer(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_cyclotomic(&self) -> Option<&TruncatedSeries<Cyclotomic>> {
        match self {
            AnySeries::Cyclotomic(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_two_variable(&self) -> Option<&TruncatedSeries<Laurent>> {
        match self {
            AnySeries::TwoVariable(s) => Some(s),
            _ => None,
        }
    }
}

/// A side of an identity: builds its term list for a given cutoff (the
/// largest index, after shifting, whose coefficient is needed).
pub type SideBuilder<'a> = dyn Fn(usize) -> Result<Vec<Term>> + Sync + 'a;

/// A coefficient at which two expansions disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub power: i64,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of comparing two term lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    /// Shift applied so that both sides were representable.
    pub offset: i64,
    pub mismatch: Option<Mismatch>,
}

/// Expands both sides through q^{order−1} and compares them coefficientwise.
/// Sides reaching below q^0 are shifted by the smallest sufficient power.
pub fn compare_sides(mode: Mode, lhs: &SideBuilder<'_>, rhs: &SideBuilder<'_>, order: usize) -> Result<Comparison> {
    let mut offset: i64 = 0;
    for _ in 0..8 {
        let n = order + offset as usize;
        let l = lhs(n).and_then(|t| AnySeries::evaluate(mode, &t, n, offset));
        let r = rhs(n).and_then(|t| AnySeries::evaluate(mode, &t, n, offset));
        let needed = [&l, &r]
            .iter()
            .filter_map(|x| match x {
                Err(Error::NegativeExponent { needed }) => Some(*needed),
                _ => None,
            })
            .max();
        if let Some(k) = needed {
            offset = offset.max(k);
            continue;
        }
        let (l, r) = (l?, r?);
        let mismatch = l.first_mismatch(&r).map(|i| Mismatch {
            power: i as i64 - offset,
            lhs: l.render_coeff(i),
            rhs: r.render_coeff(i),
        });
        return Ok(Comparison { offset, mismatch });
    }
    Err(Error::Divergent("no finite shift makes both sides representable".into()))
}

/// Evaluates one side with the smallest shift that makes it representable.
pub fn evaluate_shifted(mode: Mode, side: &SideBuilder<'_>, order: usize) -> Result<(AnySeries, i64)> {
    let mut offset: i64 = 0;
    for _ in 0..8 {
        let n = order + offset as usize;
        match side(n).and_then(|t| AnySeries::evaluate(mode, &t, n, offset)) {
            Err(Error::NegativeExponent { needed }) => offset = offset.max(needed),
            other => return other.map(|s| (s, offset)),
        }
    }
    Err(Error::Divergent("no finite shift makes the expression representable".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::MonomialSpec;

    #[test]
    fn mode_parsing() {
        assert_eq!("root(5)".parse::<Mode>().unwrap(), Mode::Root(5));
        assert_eq!("one".parse::<Mode>().unwrap(), Mode::One);
        assert!("root(4)".parse::<Mode>().is_err());
    }

    #[test]
    fn shifted_comparison_reports_true_power() {
        // q^{-1}(1 − q) against q^{-1} − 1 + q^2: differ at q^2.
        let lhs = |_: usize| Ok(vec![Term::monomial(1, 0, -1).times(MonomialSpec::q(1))]);
        let rhs = |_: usize| Ok(vec![Term::monomial(1, 0, -1), Term::monomial(-1, 0, 0), Term::monomial(1, 0, 2)]);
        let c = compare_sides(Mode::One, &lhs, &rhs, 5).unwrap();
        assert_eq!(c.offset, 1);
        assert_eq!(c.mismatch.unwrap().power, 2);
    }
}
