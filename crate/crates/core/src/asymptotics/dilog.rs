use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::arith;

const TERMS: usize = 30;

/// `B_n/(n+1)!` for `n < TERMS`.
fn coefficients() -> &'static [f64] {
    static C: OnceLock<Vec<f64>> = OnceLock::new();
    C.get_or_init(|| {
        (0..TERMS)
            .map(|n| {
                let v = arith::bernoulli_number(n) / arith::int(arith::factorial(n as u64 + 1));
                v.to_f64().unwrap_or(0.0)
            })
            .collect()
    })
}

/// `Li_2(z) = sum_n B_n u^{n+1}/(n+1)!` with `u = -log(1-z)`, for `|u| < 2 pi`.
fn bernoulli_series(z: Complex64) -> Complex64 {
    let u = -(Complex64::new(1.0, 0.0) - z).ln();
    let u2 = u * u;
    let c = coefficients();
    // B_1 is the only nonzero odd-index term
    let mut acc = Complex64::new(c[TERMS - 2], 0.0);
    let mut n = TERMS - 2;
    while n >= 2 {
        n -= 2;
        acc = acc * u2 + c[n];
    }
    u * acc + u2 * c[1]
}

/// Principal branch of the dilogarithm, cut along `[1, inf)`.
pub fn dilog(z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let zeta2 = PI * PI / 6.0;
    if z == Complex64::new(0.0, 0.0) {
        return z;
    }
    if z == one {
        return Complex64::new(zeta2, 0.0);
    }
    if z.norm_sqr() > 1.0 {
        let l = (-z).ln();
        return -dilog(one / z) - zeta2 - 0.5 * l * l;
    }
    if z.re > 0.5 {
        return -bernoulli_series(one - z) + zeta2 - z.ln() * (one - z).ln();
    }
    bernoulli_series(z)
}
