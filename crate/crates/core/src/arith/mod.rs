//! Exact rational arithmetic, polynomials over `Q`, truncated power series
//! and the memoized number sequences (Bernoulli, Stirling, factorials).

mod poly;
mod rational;
pub mod sequences;
pub mod series;

pub use poly::QPolynomial;
pub use rational::{format_rational, int, parse_rational, rat, serde_rational, Rational};
pub use sequences::{
    bernoulli_number, bernoulli_poly, binomial, binomial_signed, factorial, higher_bernoulli,
    mobius, power_sum, power_sum_poly, ramanujan_sum, restricted_power_sum, stirling1, stirling2,
    totient,
};
