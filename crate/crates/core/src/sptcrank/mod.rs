//! Spt-crank-type series S_X(z, q), their crank tables and congruences.

mod congruence;
mod family;
mod table;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

pub use congruence::{
    check_congruence, check_vanishing, CongruenceCheck, CongruenceFailure, CongruenceReport, CONGRUENCES,
};
pub use family::{build_for_pair, build_pair_series, one_variable_terms, SptFamily};
pub use table::{classic_spt_table, crank_table, spt_table, CrankEntry, CrankTable};

use crate::error::{Error, Result};
use crate::qseries::{AnySeries, Mode};

type Cache = RwLock<HashMap<(SptFamily, Mode), Arc<AnySeries>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// S_X(z, q) through q^{order−1}: symbolic in z, at z = 1, or at z = ζ_t.
/// Builds are memoized per (family, mode) and reused for smaller orders.
pub fn build_spt_crank(family: SptFamily, mode: Mode, order: usize) -> Result<AnySeries> {
    if order < 2 {
        return Err(Error::Precondition(format!("order {order} is below 2")));
    }
    // Tables run to n = N_MAX_CAP, past the identity order cap.
    let cap = crate::order_cap().max(crate::N_MAX_CAP + 1);
    if order > cap {
        return Err(Error::OrderCap { requested: order, cap });
    }
    if let Some(s) = cache().read().expect("cache lock").get(&(family, mode)) {
        if s.order() >= order {
            return Ok(s.truncate(order));
        }
    }
    let s = Arc::new(build_pair_series(family.pair(), mode, order)?);
    let mut w = cache().write().expect("cache lock");
    let keep = w.get(&(family, mode)).is_some_and(|old| old.order() >= order);
    if !keep {
        w.insert((family, mode), Arc::clone(&s));
    }
    Ok((*s).clone())
}
