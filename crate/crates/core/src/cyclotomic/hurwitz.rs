use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::arith;
use crate::{Error, Result};

/// Hurwitz zeta `zeta(s, a)` for integer `s >= 2` and `a > 0`, by
/// Euler-Maclaurin summation.
pub fn hurwitz_zeta(s: u32, a: f64) -> f64 {
    assert!(s >= 2 && a > 0.0);
    const N: usize = 24;
    const J: usize = 12;
    let s_f = s as f64;
    let mut sum: f64 = (0..N).map(|n| (n as f64 + a).powf(-s_f)).sum();
    let x = N as f64 + a;
    sum += x.powf(1.0 - s_f) / (s_f - 1.0) + 0.5 * x.powf(-s_f);
    // rising factorial s (s+1) ... (s+2j-2) / (2j)!
    let mut rising = s_f;
    let mut fact = 2.0;
    for j in 1..=J {
        let b = arith::bernoulli_number(2 * j).to_f64().unwrap();
        sum += b / fact * rising * x.powf(-s_f - 2.0 * j as f64 + 1.0);
        rising *= (s_f + 2.0 * j as f64 - 1.0) * (s_f + 2.0 * j as f64);
        fact *= (2.0 * j as f64 + 1.0) * (2.0 * j as f64 + 2.0);
    }
    sum
}

/// Floating-point `beta_m(e^{2 pi i a/b})` for `m >= 2` and `0 < a < b`,
/// from Hurwitz zeta values.
pub fn hurwitz_beta_numeric(m: u32, a: u32, b: u32) -> Result<Complex64> {
    if m < 2 || a == 0 || a >= b {
        return Err(Error::OutOfRange(format!("need m >= 2 and 0 < a < b, got m = {m}, a = {a}, b = {b}")));
    }
    let x = a as f64 / b as f64;
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let z = hurwitz_zeta(m, 1.0 - x) + sign * hurwitz_zeta(m, x);
    let mfact: f64 = (1..=m).map(f64::from).product();
    let denom = Complex64::new(0.0, 2.0 * PI).powu(m);
    Ok(-(mfact * z) / denom)
}
