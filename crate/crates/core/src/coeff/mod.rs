//! Exact coefficient ring: bivariate polynomials in `q`, `h` over the
//! rationals, plus the scalar combinatorics the closed forms need.

mod combinatorics;
mod poly;

pub use combinatorics::{
    binomial, elem_sym, factorial, falling, gauss_binomial, multinomial, q_falling,
    q_falling_signed, q_integer,
};
pub use poly::{PolyQH, Rational};

use num_bigint::BigInt;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
