//! Exact arithmetic: rationals, Bernoulli-family numbers and symbolic
//! special values.

mod numbers;
pub mod pretty;
pub(crate) mod symbolic;

pub use numbers::{
    bernoulli, beta_odd_ratio, euler_even, staudt_clausen_denominator, zeta_even_ratio,
};
pub(crate) use numbers::{factorial, is_prime_u64};
pub use symbolic::{symbolic_beta, symbolic_zeta, SymbolicValue};

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds `n/d` from machine integers. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
