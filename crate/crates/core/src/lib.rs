//! Exact q-series engine for spt-crank-type functions.
//!
//! The crate builds truncated power series in q over three coefficient rings
//! (ℤ, ℤ[ζ_t] and ℤ[z, z^{-1}]), constructs spt-crank-type generating
//! functions from Bailey pairs, and checks identities and congruences between
//! them coefficient by coefficient.

pub mod bailey;
pub mod combinatorics;
pub mod error;
pub mod qseries;
pub mod registry;
pub mod report;
pub mod rings;
pub mod sptcrank;

pub use error::{Error, Result};

/// Default cap on truncation orders.
pub const DEFAULT_ORDER_CAP: usize = 1200;

/// Largest n accepted by spt and crank tables and congruence checks.
pub const N_MAX_CAP: usize = 2000;

/// Largest truncation order any builder will produce. The environment
/// variable `SPTFORGE_MAX_ORDER` overrides the default.
pub fn order_cap() -> usize {
    std::env::var("SPTFORGE_MAX_ORDER")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or(DEFAULT_ORDER_CAP)
}
