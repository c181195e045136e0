//! The partial fraction coefficients `C_{hkl}(N)` and everything built on
//! them: partition counts, Sylvester waves and the polynomials `P_{01r}`.

mod andrews;
mod direct;
mod key;
mod oracle;
mod polys;
mod qrec;
mod recursion;
mod table;
mod waves;

pub use andrews::{andrews_tuple_count, c_andrews, c_andrews_with_budget, DEFAULT_ANDREWS_BUDGET};
pub use direct::{
    c01_ra, c01_r, c01_rd, c01_rf, c_direct, c_direct_row, c_exp_form, c_log_series, c_residue,
};
pub use key::CoeffKey;
pub use oracle::{p_oracle, p_oracle_row};
pub use polys::{
    hockey_stick_check, m_polynomial, m_second_derivative_half, sz_coeff_x, sz_coeff_x2,
    sz_polynomial, sz_top_coefficients,
};
pub use qrec::{c_sz, g_value, QRecursion};
pub use recursion::{c_recursive, e_diagonal, e_recursion, ERecursion, ETable};
pub use table::{
    c_sum_over_h, c_sum_over_h_direct, decompose, p_from_decomposition, Algorithm,
    DecompositionTable, TableEntry,
};
pub use waves::{
    c01_from_waves, c12_from_waves, wave, wave1_glaisher_half, wave1_sylvester,
    wave_via_coefficients,
};

use crate::cyclotomic::CycloElement;

/// `(-1)^s rho^l / (k^{2s} s! prod_{d=1}^{N-ks} (1 - rho^d))`, the common
/// prefactor of the `Q`-recursion and the log-series form.
pub(crate) fn sz_prefactor(key: &CoeffKey) -> CycloElement {
    let k = key.k;
    let s = key.s();
    let mut inv = CycloElement::one(k);
    for d in 1..=(key.n - k * s) {
        let f = CycloElement::inv_one_minus_zeta_pow(k, key.h as i64 * d as i64)
            .expect("1 - rho^d is nonzero for d < k");
        inv = &inv * &f;
    }
    let scalar = crate::arith::sequences::sign_pow(s as u64)
        / crate::arith::int(
            num_bigint::BigInt::from(k).pow(2 * s) * crate::arith::factorial(s as u64),
        );
    (&CycloElement::zeta_pow(k, key.h as i64 * key.l as i64) * &inv).scale(&scalar)
}
