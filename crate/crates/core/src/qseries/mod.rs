//! Truncated power series in q and the builders for products, theta sums,
//! Lambert series and bilateral sums.

pub mod any;
pub mod monomial;
pub mod products;
pub mod rankcrank;
pub mod series;
pub mod sums;
pub mod terms;

pub use any::{compare_sides, evaluate_shifted, AnySeries, Comparison, Mismatch, Mode, SideBuilder};
pub use monomial::{normalize_poly, poly_mul, z_poly, Monomial, MonomialSpec};
pub use products::{eta_quotient, jacobi_product, pochhammer, theta_product, theta_sum, theta_terms};
pub use rankcrank::{crank_series, crank_terms, rank_series, rank_terms};
pub use series::{series_dissect, series_invert, series_mul, series_substitute, TruncatedSeries};
pub use sums::{divisor_series, embed, lambert_sum, Bilateral};
pub use terms::{collect_bilateral, collect_terms, evaluate, jac, jnq, jq, poch, poch_inf, qpoch_inf, Binomial, Term};
