use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{sz_prefactor, CoeffKey};
use crate::arith::series::{exp_trunc, mul_trunc, pow_trunc};
use crate::arith::sequences::sign_pow;
use crate::arith::{self, int, Rational};
use crate::cyclotomic::{apostol_beta, CycloElement};
use crate::Result;

fn inv_factorial(n: u64) -> Rational {
    Rational::new(BigInt::one(), arith::factorial(n))
}

fn stirling2_int(n: usize, m: usize) -> Rational {
    int(BigInt::from(arith::stirling2(n, m)))
}

/// `(-1)^N rho^l (l-1)! / N!`.
fn outer_factor(k: u32, h: u32, l: u32, n: u32) -> CycloElement {
    let scalar = sign_pow(n as u64) * int(arith::factorial(l as u64 - 1)) * inv_factorial(n as u64);
    CycloElement::zeta_pow(k, h as i64 * l as i64).scale(&scalar)
}

/// `z^{-d} w z / (rho^w e^{wz} - 1)` to `len` terms, where `d = 1` when the
/// constant term vanishes (`k` does not divide `w`) and `d = 0` otherwise.
fn beta_factor(h: u32, k: u32, w: u32, len: usize) -> Vec<CycloElement> {
    let shift = usize::from(w % k != 0);
    let j = h as i64 * w as i64;
    (0..len)
        .map(|a| {
            let m = a + shift;
            let scale = int(BigInt::from(w).pow(m as u32)) * inv_factorial(m as u64);
            apostol_beta(m, j, k).scale(&scale)
        })
        .collect()
}

/// `e^z ((e^z - 1)/z)^{l-1} / (l-1)!`, whose coefficients are
/// `S(l+j, l)/(l-1+j)!`.
fn stirling_series(k: u32, l: u32, len: usize) -> Vec<CycloElement> {
    (0..len)
        .map(|j| {
            let c = stirling2_int(l as usize + j, l as usize) * inv_factorial(l as u64 - 1 + j as u64);
            CycloElement::from_rational(k, c)
        })
        .collect()
}

/// `prod_w` of the (shifted) Apostol-Bernoulli factors, truncated to `len`.
fn beta_product(h: u32, k: u32, n: u32, len: usize) -> Vec<CycloElement> {
    let mut acc = vec![CycloElement::zero(k); len.max(1)];
    acc[0] = CycloElement::one(k);
    acc.truncate(len);
    for w in 1..=n {
        if len == 0 {
            break;
        }
        acc = mul_trunc(&acc, &beta_factor(h, k, w, len), len);
    }
    acc
}

/// `C_{hkl}(N)` from the convolution of Stirling numbers with
/// Apostol-Bernoulli coefficients `beta_j(rho^w)`.
pub fn c_direct(key: &CoeffKey) -> Result<CycloElement> {
    key.validate()?;
    if key.is_beyond_pole() {
        return Ok(CycloElement::zero(key.k));
    }
    let row = c_direct_row(key.h, key.k, key.n)?;
    Ok(row[key.l as usize - 1].clone())
}

/// `C_{hkl}(N)` for `l = 1, ..., floor(N/k)`, sharing the `l`-independent
/// product.
pub fn c_direct_row(h: u32, k: u32, n: u32) -> Result<Vec<CycloElement>> {
    CoeffKey::new(h, k, 1, n)?;
    let s = (n / k) as usize;
    let prod = beta_product(h, k, n, s);
    Ok((1..=s as u32)
        .map(|l| {
            let target = s - l as usize;
            let g = stirling_series(k, l, target + 1);
            let mut acc = CycloElement::zero(k);
            for j in 0..=target {
                acc.add_assign(&(&g[j] * &prod[target - j]));
            }
            &outer_factor(k, h, l, n) * &acc
        })
        .collect())
}

/// `C_{hkl}(N)` as the residue at `z = 0` of
/// `(-1)^N rho^l e^z (e^z - 1)^{l-1} / prod_w (rho^w e^{wz} - 1)`.
/// Defined for every `l >= 1`; it vanishes past the pole order.
pub fn c_residue(key: &CoeffKey) -> Result<CycloElement> {
    key.validate()?;
    let (h, k, l, n) = (key.h, key.k, key.l, key.n);
    let len = n as usize;
    let one = CycloElement::one(k);
    let exp: Vec<CycloElement> = (0..len)
        .map(|j| CycloElement::from_rational(k, inv_factorial(j as u64)))
        .collect();
    let mut em1 = exp.clone();
    em1[0] = CycloElement::zero(k);
    let mut acc = mul_trunc(&exp, &pow_trunc(&em1, l as u64 - 1, len, &one), len);
    for w in 1..=n {
        let f: Vec<CycloElement> = (0..len)
            .map(|a| {
                let scale = int(BigInt::from(w).pow(a as u32)) * inv_factorial(a as u64);
                apostol_beta(a, h as i64 * w as i64, k).scale(&scale)
            })
            .collect();
        acc = mul_trunc(&acc, &f, len);
    }
    let scalar = sign_pow(n as u64) * inv_factorial(n as u64);
    Ok((&CycloElement::zeta_pow(k, h as i64 * l as i64) * &acc[len - 1]).scale(&scalar))
}

fn bernoulli_factor(w: u32, len: usize, alternate: bool) -> Vec<Rational> {
    (0..len)
        .map(|j| {
            let mut c = arith::bernoulli_number(j) * int(BigInt::from(w).pow(j as u32)) * inv_factorial(j as u64);
            if alternate && j % 2 == 1 {
                c = -c;
            }
            c
        })
        .collect()
}

fn k1_product(n: u32, len: usize, alternate_first: bool) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); len];
    acc[0] = Rational::one();
    for w in 1..=n {
        acc = mul_trunc(&acc, &bernoulli_factor(w, len, alternate_first && w == 1), len);
    }
    acc
}

fn k1_finish(l: u32, n: u32, series: &[Rational], with_factorial: bool) -> Rational {
    let mut c = sign_pow(n as u64) * inv_factorial(n as u64) * &series[(n - l) as usize];
    if with_factorial {
        c *= int(arith::factorial(l as u64 - 1));
    }
    c
}

/// `C_{01l}(N)` from `e^z`, `((e^z - 1)/z)^{l-1}` and the Bernoulli products.
pub fn c01_ra(l: u32, n: u32) -> Rational {
    if l > n {
        return Rational::zero();
    }
    let len = (n - l + 1) as usize;
    let exp: Vec<Rational> = (0..len).map(|i| inv_factorial(i as u64)).collect();
    let a: Vec<Rational> = (0..len)
        .map(|j| {
            let top = l as usize - 1 + j;
            stirling2_int(top, l as usize - 1) * inv_factorial(top as u64)
        })
        .collect();
    let s = mul_trunc(&mul_trunc(&exp, &a, len), &k1_product(n, len, false), len);
    k1_finish(l, n, &s, true)
}

/// As [`c01_ra`] with `e^z` absorbed into the `w = 1` factor.
pub fn c01_r(l: u32, n: u32) -> Rational {
    if l > n {
        return Rational::zero();
    }
    let len = (n - l + 1) as usize;
    let a: Vec<Rational> = (0..len)
        .map(|j| {
            let top = l as usize - 1 + j;
            stirling2_int(top, l as usize - 1) * inv_factorial(top as u64)
        })
        .collect();
    let s = mul_trunc(&a, &k1_product(n, len, true), len);
    k1_finish(l, n, &s, true)
}

/// `C_{01l}(N)` with the Norlund values `B_j^{(1-l)}(1)`.
pub fn c01_rd(l: u32, n: u32) -> Rational {
    if l > n {
        return Rational::zero();
    }
    let len = (n - l + 1) as usize;
    let one = int(1);
    let d: Vec<Rational> = (0..len)
        .map(|j| arith::higher_bernoulli(j, 1 - l as i64, &one) * inv_factorial(j as u64))
        .collect();
    let s = mul_trunc(&d, &k1_product(n, len, false), len);
    k1_finish(l, n, &s, false)
}

/// `C_{01l}(N)` with the Stirling numbers `S(l+j, l)`.
pub fn c01_rf(l: u32, n: u32) -> Rational {
    if l > n {
        return Rational::zero();
    }
    let len = (n - l + 1) as usize;
    let g: Vec<Rational> = (0..len)
        .map(|j| stirling2_int(l as usize + j, l as usize) * inv_factorial(l as u64 - 1 + j as u64))
        .collect();
    let s = mul_trunc(&g, &k1_product(n, len, false), len);
    k1_finish(l, n, &s, true)
}

/// `C_{01l}(N) = (-1)^N/N! [z^{N-l}] exp(z + sum_m (-1)^{m-1} B_m (s_m(N) + 1 - l) z^m / (m m!))`.
pub fn c_exp_form(l: u32, n: u32) -> Rational {
    if l > n || l == 0 {
        return Rational::zero();
    }
    let len = (n - l + 1) as usize;
    let mut f = vec![Rational::zero(); len];
    for (m, c) in f.iter_mut().enumerate().skip(1) {
        let weight = arith::power_sum(m as u32, n as u64) + int(1) - int(l);
        *c = sign_pow(m as u64 - 1) * arith::bernoulli_number(m) * weight
            / int(BigInt::from(m) * arith::factorial(m as u64));
    }
    if len > 1 {
        f[1] += int(1);
    }
    let e = exp_trunc(&f, len, &int(1));
    sign_pow(n as u64) * inv_factorial(n as u64) * &e[len - 1]
}

/// `C_{hkl}(N)` for any `k` from the exponential of the logarithmic series
/// of the residue integrand. The prefactor is the one of the `Q`-recursion,
/// so only `floor(N/k) - l + 1` series terms are needed; this is the fastest
/// route for large `N`.
pub fn c_log_series(key: &CoeffKey) -> Result<CycloElement> {
    key.validate()?;
    if key.is_beyond_pole() {
        return Ok(CycloElement::zero(key.k));
    }
    let (h, k, l, n) = (key.h, key.k, key.l, key.n);
    let len = (key.s() - l + 1) as usize;
    let mut f = vec![CycloElement::zero(k); len];
    for (m, c) in f.iter_mut().enumerate().skip(1) {
        let denom = int(BigInt::from(m) * arith::factorial(m as u64));
        let s0 = arith::restricted_power_sum(m as u32, 0, k as u64, n as u64);
        let mut acc = CycloElement::from_rational(
            k,
            sign_pow(m as u64 - 1) * arith::bernoulli_number(m) * (s0 - int(l - 1)) / &denom,
        );
        for r in 1..k {
            let srm = arith::restricted_power_sum(m as u32, r as u64, k as u64, n as u64);
            if srm.is_zero() {
                continue;
            }
            let b = apostol_beta(m, h as i64 * r as i64, k);
            acc = &acc - &b.scale(&(srm / &denom));
        }
        if m == 1 {
            let lin: Rational = (1..k)
                .map(|r| arith::restricted_power_sum(1, r as u64, k as u64, n as u64))
                .sum();
            acc = &acc + &CycloElement::from_rational(k, int(1) - lin);
        }
        *c = acc;
    }
    let e = exp_trunc(&f, len, &CycloElement::one(k));
    Ok(&sz_prefactor(key) * &e[len - 1])
}
