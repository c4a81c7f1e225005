//! Catalog of verifiable identities and the runner that checks them.
//!
//! Every case is a list of equalities `lhs = rhs` over one coefficient ring.
//! A side is either a term list (expanded with whatever shift makes it a
//! power series) or a ready-made series such as S_X(z, q).

mod build;
mod products;
mod sections;
mod spt;

use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::qseries::{compare_sides, evaluate_shifted, AnySeries, Mismatch, Mode, Term};
use crate::report::{combine, VerificationReport};
use crate::rings::RingKind;

pub type TermsFn = Box<dyn Fn(usize) -> Result<Vec<Term>> + Send + Sync>;
pub type SeriesFn = Box<dyn Fn(Mode, usize) -> Result<AnySeries> + Send + Sync>;

/// One side of an equality.
pub enum Side {
    /// Term list for a given cutoff.
    Terms(TermsFn),
    /// Series through q^{order−1} in the ring selected by the mode.
    Series(SeriesFn),
}

impl Side {
    pub fn terms(f: impl Fn(usize) -> Result<Vec<Term>> + Send + Sync + 'static) -> Side {
        Side::Terms(Box::new(f))
    }

    pub fn series(f: impl Fn(Mode, usize) -> Result<AnySeries> + Send + Sync + 'static) -> Side {
        Side::Series(Box::new(f))
    }

    /// Expands the side at offset zero.
    pub fn expand(&self, mode: Mode, order: usize) -> Result<AnySeries> {
        match self {
            Side::Series(f) => f(mode, order),
            Side::Terms(f) => {
                let (s, k) = evaluate_shifted(mode, f.as_ref(), order)?;
                s.unshift(k as usize)
            }
        }
    }
}

/// A single equality inside a case.
pub struct Equality {
    pub label: String,
    pub lhs: Side,
    pub rhs: Side,
}

impl Equality {
    pub fn new(label: impl Into<String>, lhs: Side, rhs: Side) -> Self {
        Equality { label: label.into(), lhs, rhs }
    }

    fn check(&self, mode: Mode, order: usize) -> Result<Option<Mismatch>> {
        if let (Side::Terms(l), Side::Terms(r)) = (&self.lhs, &self.rhs) {
            return Ok(compare_sides(mode, l.as_ref(), r.as_ref(), order)?.mismatch);
        }
        let l = self.lhs.expand(mode, order)?;
        let r = self.rhs.expand(mode, order)?;
        Ok(l.first_mismatch(&r).map(|i| Mismatch { power: i as i64, lhs: l.render_coeff(i), rhs: r.render_coeff(i) }))
    }
}

/// A catalog entry.
pub struct IdentityCase {
    pub id: String,
    pub mode: Mode,
    pub default_order: usize,
    /// One-line statement of what is being checked.
    pub statement: String,
    pub equalities: Vec<Equality>,
}

impl IdentityCase {
    pub fn new(id: &str, mode: Mode, default_order: usize, statement: &str) -> Self {
        IdentityCase { id: id.into(), mode, default_order, statement: statement.into(), equalities: Vec::new() }
    }

    pub fn eq(mut self, lhs: Side, rhs: Side) -> Self {
        let label = format!("{}", self.equalities.len() + 1);
        self.equalities.push(Equality::new(label, lhs, rhs));
        self
    }

    pub fn ring(&self) -> RingKind {
        self.mode.ring_kind()
    }

    /// Checks every equality through q^{order−1}.
    pub fn verify(&self, order: usize) -> VerificationReport {
        let start = Instant::now();
        let parts = self.equalities.iter().map(|e| match e.check(self.mode, order) {
            Ok(None) => VerificationReport::verified(&self.id, order),
            Ok(Some(m)) => VerificationReport::mismatch(&self.id, order, m),
            Err(err) => VerificationReport::from_error(&self.id, order, &err),
        });
        let mut r = combine(self.id.clone(), order, parts);
        r.millis = Some(start.elapsed().as_millis() as u64);
        r
    }
}

/// Every identity, sorted by id.
pub fn catalog() -> &'static [IdentityCase] {
    static CATALOG: OnceLock<Vec<IdentityCase>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut v = Vec::new();
        spt::register(&mut v);
        products::register(&mut v);
        sections::register(&mut v);
        v.sort_by(|a, b| a.id.cmp(&b.id));
        for w in v.windows(2) {
            assert_ne!(w[0].id, w[1].id, "duplicate catalog id");
        }
        v
    })
}

pub fn lookup(id: &str) -> Option<&'static IdentityCase> {
    let c = catalog();
    c.binary_search_by(|x| x.id.as_str().cmp(id)).ok().map(|i| &c[i])
}

/// Order actually used for a case: the larger of the default and the override.
pub fn effective_order(case: &IdentityCase, order_override: Option<usize>) -> usize {
    case.default_order.max(order_override.unwrap_or(0))
}

/// Verifies one case at max(default order, override).
pub fn verify_case(id: &str, order_override: Option<usize>) -> Result<VerificationReport> {
    let case = lookup(id).ok_or_else(|| Error::UnknownCase(id.to_string()))?;
    let order = effective_order(case, order_override);
    let cap = crate::order_cap();
    if order > cap {
        return Err(Error::OrderCap { requested: order, cap });
    }
    Ok(case.verify(order))
}

/// Ids matching a glob pattern (`None` selects everything).
pub fn select(filter: Option<&str>) -> Result<Vec<&'static IdentityCase>> {
    let pattern = match filter {
        Some(f) => Some(glob::Pattern::new(f).map_err(|e| Error::Precondition(format!("bad pattern `{f}`: {e}")))?),
        None => None,
    };
    Ok(catalog().iter().filter(|c| pattern.as_ref().map_or(true, |p| p.matches(&c.id))).collect())
}

/// Verifies every case matching `filter` on a pool of `parallelism` threads.
/// Reports come back sorted by id whatever the execution order.
pub fn verify_all(filter: Option<&str>, order_override: Option<usize>, parallelism: usize) -> Result<Vec<VerificationReport>> {
    verify_cases(&select(filter)?, |c| effective_order(c, order_override), parallelism)
}

/// Verifies `cases`, each at the order chosen by `order_of`, in parallel.
/// Reports are sorted by id.
pub fn verify_cases(
    cases: &[&IdentityCase],
    order_of: impl Fn(&IdentityCase) -> usize + Sync,
    parallelism: usize,
) -> Result<Vec<VerificationReport>> {
    let cap = crate::order_cap();
    if let Some(c) = cases.iter().find(|c| order_of(c) > cap) {
        return Err(Error::OrderCap { requested: order_of(c), cap });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    let mut out: Vec<VerificationReport> = pool.install(|| cases.par_iter().map(|c| c.verify(order_of(c))).collect());
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

/// Orders at which the modular-function arguments certify the mod 7 F3
/// identities: past q^210 for the crank side and past q^147 for the rank
/// side. Other cases have no such bound.
pub fn certified_order(id: &str) -> Option<usize> {
    match id {
        "f3_crank_mod7" | "dissect_F3_7" => Some(211),
        "f3_rank_mod7" | "mod7_rank_pieces" => Some(148),
        _ => None,
    }
}

/// A deliberately wrong identity: Euler's pentagonal theorem with the sign of
/// the q^5 term flipped. Verification must report a mismatch at q^5.
pub fn negative_control() -> IdentityCase {
    use crate::qseries::{qpoch_inf, theta_terms, MonomialSpec};
    IdentityCase::new("negative_control", Mode::One, 40, "pentagonal theorem with one sign flipped")
        .eq(
            Side::terms(|c| Ok(vec![Term::one().times_all(&qpoch_inf(1, 1, c))])),
            Side::terms(|c| {
                // Σ (−1)^j q^{j(3j−1)/2} = j(q; q^3)(q^3; q^3) as a theta sum in q^3.
                let mut t = theta_terms(MonomialSpec::q(1), 3, c)?;
                t.push(Term::monomial(-2, 0, 5));
                Ok(t)
            }),
        )
}
