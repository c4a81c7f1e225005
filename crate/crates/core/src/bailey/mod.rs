//! Bailey pairs and the summation identities built on them.

pub mod checks;
pub mod pairs;

pub use checks::{check_conjugate_pair, check_lemma_variant, check_limiting_lemma, check_pair_relation, Rho};
pub use pairs::{BaileyPair, PairName};

/// Relative parameters a = q^s used for the generic pairs in the summation
/// lemma checks.
pub const RESCALE_EXPONENTS: [i64; 3] = [0, 2, 3];
