//! Exact arithmetic: sparse integer polynomials, dense rational polynomials,
//! and the cyclotomic and Bernoulli families built on them.

mod bernoulli;
mod cyclotomic;
mod int_poly;
mod rat_poly;

pub use bernoulli::{bernoulli_number, bernoulli_poly, beta_poly};
pub use cyclotomic::{cyclotomic, divisors};
pub use int_poly::IntPoly;
pub use rat_poly::RatPoly;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rat = num_rational::BigRational;
