//! Brute-force ground truth for any number of denominations.
//!
//! [`RepTable`] holds exact representation counts from a coin-by-coin
//! dynamic program; [`enumerate_exact_k`] and [`enumerate_at_most_k`] extract
//! the sets `R_k` and `{j : r(j) <= k}` from it. Unbounded enumeration is
//! self-certifying: once `a_1` consecutive integers all have more than `k`
//! representations, adding copies of `a_1` keeps every larger integer above
//! `k` as well, so nothing past that window can belong to either set.

mod gaps;
mod params;
mod table;

pub use gaps::{enumerate_at_most_k, enumerate_exact_k, oracle_stats, GapSet, GapStats};
pub use params::{validate_params, Params};
pub use table::{rep_table, RepTable};

/// Name of the environment variable overriding [`Limits::max_bound`].
pub const MAX_BOUND_ENV: &str = "FROBENIUS_MAX_BOUND";

/// Resource ceiling for representation tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest table index the oracle may allocate.
    pub max_bound: u64,
}

impl Limits {
    pub const DEFAULT_MAX_BOUND: u64 = 20_000_000;

    pub fn new(max_bound: u64) -> Self {
        Limits { max_bound }
    }

    /// Reads [`MAX_BOUND_ENV`], falling back to the default when it is unset
    /// or unparsable.
    pub fn from_env() -> Self {
        std::env::var(MAX_BOUND_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Limits::new)
            .unwrap_or_default()
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::new(Self::DEFAULT_MAX_BOUND)
    }
}
