//! Exact invariants of the Frobenius coin-exchange problem.
//!
//! For positive denominations `a_1, ..., a_n` with overall gcd 1, the crate
//! counts representations `j = m_1 a_1 + ... + m_n a_n` and studies the sets
//! `R_k` of integers with exactly `k` representations:
//!
//! - [`exact`]: arbitrary-precision sparse polynomials, Bernoulli and
//!   cyclotomic polynomials.
//! - [`oracle`]: brute-force denumerant tables and self-certifying
//!   enumeration of `R_k` for any number of denominations.
//! - [`closed_form`]: exact formulas for two denominations.
//! - [`genfun`]: the generating-function polynomials tying both together.

pub mod closed_form;
pub mod error;
pub mod exact;
pub mod genfun;
pub mod oracle;
pub mod report;

pub use closed_form::PairParams;
pub use error::{Error, Result};
pub use exact::{IntPoly, Rat, RatPoly};
pub use oracle::{GapSet, Limits, Params, RepTable};
pub use report::{Provenance, Stat, StatReport};
