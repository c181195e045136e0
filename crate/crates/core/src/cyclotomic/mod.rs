//! Exact arithmetic in the cyclotomic fields `Q(zeta_k)` and the
//! Apostol-Bernoulli coefficients at roots of unity.

mod beta;
mod element;
mod hurwitz;

pub use beta::{
    apostol_beta, apostol_beta_glaisher2, apostol_beta_glaisher4, apostol_beta_stirling,
    apostol_beta_variant, BetaVariant,
};
pub use element::{cyclotomic_polynomial, CycloElement, GroupRingElement};
pub use hurwitz::{hurwitz_beta_numeric, hurwitz_zeta};
