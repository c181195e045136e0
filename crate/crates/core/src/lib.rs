//! Exact partial fraction coefficients of the restricted partition
//! generating function
//!
//! ```text
//!   prod_{j=1}^{N} 1/(1 - q^j) = sum_{h,k,l} C_{hkl}(N) / (q - e^{2 pi i h/k})^l
//! ```
//!
//! The crate computes `C_{hkl}(N)` by four independent exact algorithms
//! (a Bernoulli/Apostol-Bernoulli convolution, a rational recursion, the
//! `Q`-recursion and its explicit tuple expansion), Sylvester waves,
//! restricted partition counts and the polynomials `P_{01r}`. A floating
//! point layer locates the dilogarithm zero governing the growth of
//! `C_{011}(N)` and evaluates the conjectured main terms.
//!
//! All exact values live in [`Rational`] or, for `k >= 3`, in the cyclotomic
//! field `Q(zeta_k)` ([`CycloElement`]). The convention throughout is that
//! `zeta_k = e^{2 pi i / k}`, so the root `rho = e^{2 pi i h/k}` is `zeta_k^h`.

pub mod arith;
pub mod asymptotics;
pub mod coeffs;
pub mod cyclotomic;
mod error;

pub use arith::{QPolynomial, Rational};
pub use coeffs::CoeffKey;
pub use cyclotomic::{CycloElement, GroupRingElement};
pub use error::{Error, Result};
