//! Exact arithmetic: big rationals, univariate polynomials in `n` over the
//! rationals, and Laurent polynomials in `t` over the integers.

mod laurent;
mod poly;
mod rational;

pub use laurent::LaurentPoly;
pub use poly::{Poly, SignSet};
pub use rational::{format_rational, int, is_integer, rat, round_half_even, Rational};

pub use num_bigint::BigInt;
